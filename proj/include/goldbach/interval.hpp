#pragma once

// Interval arithmetic over binary64 with outward rounding.
//
// Every operation keeps the containment contract: for inputs enclosing real
// numbers, the output encloses the exact real result.  Rounding is handled by
// padding each floating-point operation outward with nextafter (IEEE ops are
// correctly rounded, so one ulp of padding per op is always enough).
// Elementary functions run a double-double kernel after argument reduction
// and pad the collapsed result outward; the error budgets are in the comments
// next to each kernel.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace goldbach {

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double dn(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Exact transforms; require plain binary64 ops (no contraction, see CMake).
struct ddouble {
  double hi = 0, lo = 0;
};

inline ddouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline ddouble quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}
inline ddouble two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline ddouble dd_add(ddouble a, ddouble b) {
  ddouble s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return two_sum(s.hi, lo);
}
inline ddouble dd_add(ddouble a, double b) {
  ddouble s = two_sum(a.hi, b);
  double lo = s.lo + a.lo;
  return two_sum(s.hi, lo);
}
inline ddouble dd_mul(ddouble a, ddouble b) {
  ddouble p = two_prod(a.hi, b.hi);
  double lo = p.lo + (a.hi * b.lo + a.lo * b.hi);
  return two_sum(p.hi, lo);
}
inline ddouble dd_mul(ddouble a, double b) {
  ddouble p = two_prod(a.hi, b);
  double lo = p.lo + a.lo * b;
  return two_sum(p.hi, lo);
}
inline ddouble dd_div(ddouble a, ddouble b) {
  double q1 = a.hi / b.hi;
  ddouble r = dd_add(a, dd_mul(b, -q1));
  double q2 = r.hi / b.hi;
  r = dd_add(r, dd_mul(b, -q2));
  double q3 = r.hi / b.hi;
  ddouble q = two_sum(q1, q2);
  return dd_add(q, q3);
}

// Constants as (hi, lo) pairs; |constant - hi - lo| < 1e-31 in every case.
inline constexpr double kLn2Hi = 0x1.62e42fefa39efp-1;
inline constexpr double kLn2Lo = 0x1.abc9e3b39803fp-56;
// Cody-Waite split of ln 2 with 32 trailing zero bits in the leading part.
inline constexpr double kLn2CwHi = 0x1.62e4200000000p-1;
inline constexpr double kLn2CwMid = 0x1.fdf473de6af28p-22;
inline constexpr double kLn2CwLo = -0x1.c4c67fc0d0951p-76;
inline constexpr double kPiHi = 0x1.921fb54442d18p+1;
inline constexpr double kPiLo = 0x1.1a62633145c07p-53;
// Cody-Waite split of pi/2, 32 trailing zero bits in the leading part.
inline constexpr double kPi2CwHi = 0x1.921fb00000000p+0;
inline constexpr double kPi2CwMid = 0x1.5110b4611a626p-22;
inline constexpr double kPi2CwLo = 0x1.98a2e03707345p-77;
inline constexpr double kInvLn2 = 0x1.71547652b82fep+0;
inline constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;
inline constexpr double kGammaHi = 0x1.2788cfc6fb619p-1;
inline constexpr double kGammaLo = -0x1.6cb90701fbfabp-58;
inline constexpr double kEHi = 0x1.5bf0a8b145769p+1;
inline constexpr double kELo = 0x1.4d57ee2b1013ap-53;
inline constexpr double kSqrt2PiHi = 0x1.40d931ff62706p+1;
inline constexpr double kSqrt2PiLo = -0x1.a6a0d6f814637p-53;

}  // namespace detail

class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  explicit Interval(double v) : lo_(v), hi_(v) { check(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

  // v known to be within one ulp of the intended real number.
  static Interval approx(double v) {
    return Interval(detail::dn(v), detail::up(v));
  }
  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const {
    double m = 0.5 * lo_ + 0.5 * hi_;
    return std::min(std::max(m, lo_), hi_);
  }
  double width() const { return hi_ - lo_; }
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool overlaps(const Interval& o) const {
    return lo_ <= o.hi_ && o.lo_ <= hi_;
  }
  bool is_positive() const { return lo_ > 0; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  bool is_point(double v) const { return lo_ == v && hi_ == v; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    if (b.is_point(0.0)) return a;
    if (a.is_point(0.0)) return b;
    return Interval(detail::dn(a.lo_ + b.lo_), detail::up(a.hi_ + b.hi_));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    if (b.is_point(0.0)) return a;
    return Interval(detail::dn(a.lo_ - b.hi_), detail::up(a.hi_ - b.lo_));
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if (b.is_point(1.0)) return a;
    if (a.is_point(1.0)) return b;
    if (a.is_point(0.0) || b.is_point(0.0)) return Interval(0.0);
    if (b.is_point(-1.0)) return -a;
    if (a.is_point(-1.0)) return -b;
    double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(detail::dn(lo), detail::up(hi));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
      throw domain_error("interval division by interval containing 0");
    if (b.is_point(1.0)) return a;
    if (b.is_point(-1.0)) return -a;
    double q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_;
    double q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return Interval(detail::dn(lo), detail::up(hi));
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval operator+(const Interval& a, double b) { return a + Interval(b); }
  friend Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
  friend Interval operator-(const Interval& a, double b) { return a - Interval(b); }
  friend Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
  friend Interval operator*(const Interval& a, double b) { return a * Interval(b); }
  friend Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
  friend Interval operator/(const Interval& a, double b) { return a / Interval(b); }
  friend Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

  // Certainly-true comparisons (false means "not provable here").
  bool surely_less(const Interval& o) const { return hi_ < o.lo_; }
  bool surely_leq(const Interval& o) const { return hi_ <= o.lo_; }
  bool surely_leq(double v) const { return hi_ <= v; }
  bool surely_geq(double v) const { return lo_ >= v; }

 private:
  void check() const {
    if (std::isnan(lo_) || std::isnan(hi_) || lo_ > hi_)
      throw domain_error("malformed interval endpoints");
  }
  double lo_, hi_;
};

inline Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return Interval(0, std::max(-a.lo(), a.hi()));
}

inline Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}
inline Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval sqrt(const Interval& a) {
  double al = a.lo();
  // outward padding of an exactly-zero endpoint leaves a stray denormal
  if (al < 0 && al > -1e-300) al = 0.0;
  if (al < 0) throw domain_error("sqrt of interval below 0");
  double lo = al > 0 ? detail::dn(std::sqrt(al)) : 0.0;
  return Interval(std::max(lo, 0.0), detail::up(std::sqrt(a.hi())));
}

inline Interval iv_pi() {
  using namespace detail;
  return Interval(dn(kPiHi + kPiLo), up(kPiHi + kPiLo));
}
inline Interval iv_two_pi() {
  Interval p = iv_pi();
  return Interval(detail::dn(2 * p.lo()), detail::up(2 * p.hi()));
}
inline Interval iv_half_pi() { return iv_pi() / 2.0; }
inline Interval iv_ln2() {
  using namespace detail;
  return Interval(dn(kLn2Hi + kLn2Lo), up(kLn2Hi + kLn2Lo));
}
inline Interval iv_euler_gamma() {
  using namespace detail;
  return Interval(dn(kGammaHi + kGammaLo), up(kGammaHi + kGammaLo));
}
inline Interval iv_e() {
  using namespace detail;
  return Interval(dn(kEHi + kELo), up(kEHi + kELo));
}
inline Interval iv_sqrt_2pi() {
  using namespace detail;
  return Interval(dn(kSqrt2PiHi + kSqrt2PiLo), up(kSqrt2PiHi + kSqrt2PiLo));
}

namespace detail {

// Reciprocals 1/j as double-double, accurate to ~2^-104; plain double
// coefficients would leak ~1e-16 relative error per series term.
struct InvTables {
  ddouble inv[40];
  InvTables() {
    for (int j = 1; j < 40; ++j)
      inv[j] = dd_div({1.0, 0.0}, {static_cast<double>(j), 0.0});
  }
};
inline const ddouble& dd_inv(int j) {
  static const InvTables t;
  return t.inv[j];
}

// exp kernel.  Budget: reduction x = k ln2 + r with k*kLn2CwHi exact (32
// zeroed bits, |k| <= 1025) and x - k*kLn2CwHi exact by Sterbenz; the mid/lo
// Cody-Waite products round to < 6e-20 absolute on r; degree-17 Taylor tail
// < 9e-25; ~80 dd ops < 1e-26 relative; final collapse 0.5 ulp.  Total well
// under one ulp; result padded two ulps outward by the interval wrapper.
inline double exp_point(double x) {
  if (x < -745.0) return 0.0;
  if (x > 709.0) throw domain_error("exp overflow");
  double k = std::nearbyint(x * kInvLn2);
  double e1 = x - k * kLn2CwHi;  // exact
  ddouble r = dd_add(two_sum(e1, -k * kLn2CwMid), -k * kLn2CwLo);
  ddouble s{1.0, 0.0};
  for (int j = 17; j >= 1; --j)
    s = dd_add(dd_mul(dd_mul(s, r), dd_inv(j)), 1.0);
  double v = s.hi + s.lo;
  return std::ldexp(v, static_cast<int>(k));
}

// log kernel: x = 2^k m, m in [sqrt(2)/2, sqrt(2)); atanh series in
// t = (m-1)/(m+1), |t| <= 0.1716, degree-27 tail < 3e-24 relative.
inline double log_point(double x) {
  int k;
  double m = std::frexp(x, &k);  // m in [0.5, 1)
  if (m < 0x1.6a09e667f3bcdp-1) {
    m *= 2;
    --k;
  }
  ddouble t = dd_div(two_sum(m, -1.0), two_sum(m, 1.0));
  ddouble t2 = dd_mul(t, t);
  ddouble s = dd_inv(27);
  for (int j = 25; j >= 1; j -= 2) s = dd_add(dd_mul(s, t2), dd_inv(j));
  ddouble lm = dd_mul(dd_mul(s, t), 2.0);
  ddouble kl = dd_add(dd_mul({kLn2Hi, kLn2Lo}, static_cast<double>(k)), lm);
  return kl.hi + kl.lo;
}

struct reduced_angle {
  ddouble r;
  std::int64_t quadrant;
  double err;  // absolute error of r vs x - k*pi/2
};

// Valid for |x| <= 2^30.  k*kPi2CwHi is exact (21 significant bits times
// |k| <= 2^30 fits in 53); the subtraction is exact by Sterbenz; the mid/lo
// product roundings are accounted for in err.
inline reduced_angle reduce_pi2(double x) {
  double k = std::nearbyint(x * kTwoOverPi);
  double e1 = x - k * kPi2CwHi;
  double pm = k * kPi2CwMid;
  ddouble r = dd_add(two_sum(e1, -pm), -k * kPi2CwLo);
  double err = std::fabs(pm) * 0x1p-52 + std::fabs(k) * 2e-29 + 1e-30;
  auto q = static_cast<std::int64_t>(k);
  return {r, ((q % 4) + 4) % 4, err};
}

// Inverse factorials 1/(2m+1)! and 1/(2m)! as double-double.
struct TrigTables {
  ddouble inv_odd[11], inv_even[11];
  TrigTables() {
    ddouble f{1.0, 0.0};
    int n = 0;
    auto bump = [&](int target) {
      while (n < target) f = dd_mul(f, static_cast<double>(++n));
    };
    for (int m = 0; m <= 10; ++m) {
      bump(2 * m);
      inv_even[m] = dd_div({1.0, 0.0}, f);
      bump(2 * m + 1);
      inv_odd[m] = dd_div({1.0, 0.0}, f);
    }
  }
};
inline const TrigTables& trig_tables() {
  static const TrigTables t;
  return t;
}

inline double sin_kernel(ddouble r) {  // |r| <= 0.8; tail < 2e-22
  const TrigTables& tt = trig_tables();
  ddouble r2 = dd_mul(r, r);
  ddouble acc{0, 0};
  ddouble p = r2;
  for (int m = 1; m <= 9; ++m) {
    ddouble c = dd_mul(p, tt.inv_odd[m]);
    acc = dd_add(acc, (m % 2) ? ddouble{-c.hi, -c.lo} : c);
    p = dd_mul(p, r2);
  }
  ddouble res = dd_add(dd_mul(r, acc), r);
  return res.hi + res.lo;
}

inline double cos_kernel(ddouble r) {
  const TrigTables& tt = trig_tables();
  ddouble r2 = dd_mul(r, r);
  ddouble acc{0, 0};
  ddouble p = r2;
  for (int m = 1; m <= 9; ++m) {
    ddouble c = dd_mul(p, tt.inv_even[m]);
    acc = dd_add(acc, (m % 2) ? ddouble{-c.hi, -c.lo} : c);
    p = dd_mul(p, r2);
  }
  ddouble res = dd_add(acc, 1.0);
  return res.hi + res.lo;
}

inline double sin_point(double x, double& abs_err) {
  if (std::fabs(x) > 1073741824.0)
    throw domain_error("sin argument too large for reduction");
  reduced_angle ra = reduce_pi2(x);
  abs_err = ra.err + 1e-19;
  switch (ra.quadrant) {
    case 0: return sin_kernel(ra.r);
    case 1: return cos_kernel(ra.r);
    case 2: return -sin_kernel(ra.r);
    default: return -cos_kernel(ra.r);
  }
}
inline double cos_point(double x, double& abs_err) {
  if (std::fabs(x) > 1073741824.0)
    throw domain_error("cos argument too large for reduction");
  reduced_angle ra = reduce_pi2(x);
  abs_err = ra.err + 1e-19;
  switch (ra.quadrant) {
    case 0: return cos_kernel(ra.r);
    case 1: return -sin_kernel(ra.r);
    case 2: return -cos_kernel(ra.r);
    default: return sin_kernel(ra.r);
  }
}

inline Interval pad2(double v) { return Interval(dn(dn(v)), up(up(v))); }
inline Interval pad_abs(double v, double err) {
  return Interval(dn(v - err), up(v + err));
}

// Conservative test for a critical point c + k*period inside x.
inline bool has_critical_point(const Interval& x, const Interval& c,
                               const Interval& period) {
  Interval q = (x - c) / period;
  return std::ceil(q.lo() - 1e-9) <= std::floor(q.hi() + 1e-9);
}

}  // namespace detail

inline Interval exp(const Interval& a) {
  double lo = detail::exp_point(a.lo());
  double hi = detail::exp_point(a.hi());
  double l = std::max(detail::dn(detail::dn(lo)), 0.0);
  return Interval(l, detail::up(detail::up(hi)));
}

inline Interval log(const Interval& a) {
  if (a.lo() <= 0) throw domain_error("log of interval touching 0");
  return Interval(detail::dn(detail::dn(detail::log_point(a.lo()))),
                  detail::up(detail::up(detail::log_point(a.hi()))));
}

inline Interval sin(const Interval& a) {
  if (a.lo() == 0.0 && a.hi() == 0.0) return Interval(0.0);
  if (a.width() >= 6.2831853071795870) return Interval(-1, 1);
  double e1, e2;
  double s1 = detail::sin_point(a.lo(), e1);
  double s2 = detail::sin_point(a.hi(), e2);
  Interval r = Interval::hull(detail::pad_abs(s1, e1), detail::pad_abs(s2, e2));
  Interval hp = iv_half_pi(), tp = iv_two_pi();
  if (detail::has_critical_point(a, hp, tp)) r = Interval::hull(r, Interval(1.0));
  if (detail::has_critical_point(a, -hp, tp)) r = Interval::hull(r, Interval(-1.0));
  return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

inline Interval cos(const Interval& a) {
  if (a.width() >= 6.2831853071795870) return Interval(-1, 1);
  double e1, e2;
  double c1 = detail::cos_point(a.lo(), e1);
  double c2 = detail::cos_point(a.hi(), e2);
  Interval r = Interval::hull(detail::pad_abs(c1, e1), detail::pad_abs(c2, e2));
  Interval z(0.0), tp = iv_two_pi(), p = iv_pi();
  if (detail::has_critical_point(a, z, tp)) r = Interval::hull(r, Interval(1.0));
  if (detail::has_critical_point(a, p, tp)) r = Interval::hull(r, Interval(-1.0));
  return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

// cos + i sin of 2*pi*t, fractional part taken exactly first.
inline void cis2pi(const Interval& t, Interval& c, Interval& s) {
  if (t.width() >= 1.0 || t.mag() >= 0x1p52) {
    c = Interval(-1, 1);
    s = Interval(-1, 1);
    return;
  }
  double base = std::floor(t.lo());
  Interval frac = t - base;  // exact below 2^52
  Interval ang = frac * iv_two_pi();
  c = cos(ang);
  s = sin(ang);
}

namespace detail {
// atan on [0, 1]: series below tan(pi/8), one fold at pi/4 above it.
inline Interval atan01(const Interval& x, int depth = 0) {
  const double kCut = 0.4142135623730950;
  if (x.hi() <= kCut + 1e-12) {
    Interval x2 = x * x;
    Interval s(0.0);
    for (int j = 39; j >= 3; j -= 2)
      s = (s + (((j - 1) / 2) % 2 ? -1.0 : 1.0) / j) * x2;
    Interval series = (s + 1.0) * x;
    return series + Interval(-1, 1) * (3e-17 * x.mag());
  }
  if (x.lo() >= kCut - 1e-12 || depth > 0) {
    Interval u = (x - 1.0) / (x + 1.0);  // in [-0.30, 0] for x in [cut, 1]
    return iv_pi() / 4.0 - atan01(-u, depth + 1);
  }
  return Interval::hull(atan01(Interval(x.lo(), kCut), depth + 1),
                        atan01(Interval(kCut, x.hi()), depth + 1));
}
}  // namespace detail

inline Interval atan(const Interval& x) {
  if (x.lo() == 0.0 && x.hi() == 0.0) return Interval(0.0);
  if (x.hi() <= 0) return -atan(-x);
  if (x.lo() < 0)
    return Interval::hull(-atan(Interval(0.0, -x.lo())),
                          atan(Interval(0.0, x.hi())));
  if (x.lo() >= 1.0) return iv_half_pi() - detail::atan01(1.0 / x);
  if (x.hi() <= 1.0) return detail::atan01(x);
  return Interval::hull(
      detail::atan01(Interval(x.lo(), 1.0)),
      iv_half_pi() - detail::atan01(1.0 / Interval(1.0, x.hi())));
}

inline Interval acos(const Interval& x) {
  double xl = x.lo(), xh = x.hi();
  if (xl < -1.0 || xh > 1.0) {
    // tolerate sub-1e-9 rounding overshoot from upstream interval ops
    if (xl < -1.0 - 1e-9 || xh > 1.0 + 1e-9)
      throw domain_error("acos argument outside [-1,1]");
    xl = std::max(xl, -1.0);
    xh = std::min(xh, 1.0);
  }
  auto point = [](double v) -> Interval {
    if (v >= 1.0) return Interval(0.0);
    if (v <= -1.0) return iv_pi();
    Interval t(v);
    if (v > 0.5) return atan(sqrt((1.0 - t) * (1.0 + t)) / t);
    if (v < -0.5) {
      Interval w = -t;
      return iv_pi() - atan(sqrt((1.0 - w) * (1.0 + w)) / w);
    }
    return iv_half_pi() - atan(t / sqrt((1.0 - t) * (1.0 + t)));
  };
  Interval a = point(xh), b = point(xl);  // acos decreases
  return Interval(std::max(a.lo(), 0.0), b.hi());
}

inline Interval erf(const Interval& x) {
  auto series = [](double v) -> Interval {  // 0 <= v <= 4
    Interval t(v);
    Interval term = t;
    Interval sum = t;
    Interval v2 = t * t;
    int n = 0;
    while (true) {
      ++n;
      term = term * v2 / static_cast<double>(n);
      Interval contrib = term / (2.0 * n + 1.0);
      if (n > v * v + 2 && contrib.mag() < 1e-19) {
        sum += Interval(-1, 1) * contrib.mag();
        break;
      }
      sum = (n % 2) ? sum - contrib : sum + contrib;
      if (n > 300) throw domain_error("erf series failed to converge");
    }
    return sum * 2.0 / sqrt(iv_pi());
  };
  auto point = [&](double v) -> Interval {
    double a = std::fabs(v);
    Interval r = a > 4.0 ? Interval(0.999999984, 1.0) : series(a);
    return v < 0 ? -r : r;
  };
  Interval a = point(x.lo()), b = point(x.hi());  // erf increases
  return Interval(std::max(-1.0, a.lo()), std::min(1.0, b.hi()));
}

inline Interval pow(const Interval& x, const Interval& y) {
  if (x.lo() <= 0) throw domain_error("pow base must be positive");
  return exp(y * log(x));
}

inline Interval pow(const Interval& x, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return 1.0 / pow(x, -n);
  Interval r(1.0);
  Interval b = x;
  int e = n;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  if (n % 2 == 0 && x.contains_zero()) r = Interval(0.0, r.hi());
  return r;
}

inline Interval square(const Interval& x) {
  if (x.lo() >= 0 || x.hi() <= 0) return x * x;
  double m = std::max(-x.lo(), x.hi());
  return Interval(0.0, detail::up(m * m));
}

inline Interval iv(double v) { return Interval(v); }
inline Interval iv(std::int64_t v) {
  double d = static_cast<double>(v);
  if (std::fabs(d) < 9.0e15) return Interval(d);
  return Interval(detail::dn(d), detail::up(d));
}
inline Interval iv(std::uint64_t v) {
  double d = static_cast<double>(v);
  if (d < 9.0e15) return Interval(d);
  return Interval(detail::dn(d), detail::up(d));
}

}  // namespace goldbach
