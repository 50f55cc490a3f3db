#pragma once

// Certified special functions built on the interval core: rectangular complex
// intervals, log-Gamma on the right half plane via Stirling with explicit
// remainder, the sine and cosine integrals, and the real zeta function.

#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

struct CInterval {
  Interval re, im;

  CInterval() = default;
  CInterval(Interval r, Interval i) : re(r), im(i) {}
  explicit CInterval(double r, double i = 0) : re(r), im(i) {}

  friend CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CInterval operator*(const CInterval& a, const Interval& b) {
    return {a.re * b, a.im * b};
  }
  friend CInterval operator*(const CInterval& a, double b) {
    return {a.re * b, a.im * b};
  }
  friend CInterval operator/(const CInterval& a, const CInterval& b) {
    Interval d = square(b.re) + square(b.im);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend CInterval operator/(const CInterval& a, double b) {
    return {a.re / b, a.im / b};
  }
  CInterval& operator+=(const CInterval& o) { return *this = *this + o; }

  Interval abs2() const { return square(re) + square(im); }
  Interval abs() const { return sqrt(abs2()); }
  CInterval conj() const { return {re, -im}; }
};

inline CInterval cexp(const CInterval& z) {
  Interval r = exp(z.re);
  return {r * cos(z.im), r * sin(z.im)};
}

// Principal log for Re z > 0 (all uses here keep to the right half plane).
inline CInterval clog_right(const CInterval& z) {
  if (!z.re.is_positive())
    throw domain_error("clog_right needs Re z > 0");
  return {log(z.abs2()) / 2.0, atan(z.im / z.re)};
}

// z^w = exp(w log z) for Re z > 0.
inline CInterval cpow_right(const CInterval& z, const CInterval& w) {
  return cexp(w * clog_right(z));
}

// log Gamma(z) for Re z > 0 by Stirling after shifting |z| above 12:
//   log Gamma(z) = (z-1/2) log z - z + log(2 pi)/2
//                  + sum_{k=1..5} B_{2k} / ((2k-1)(2k) z^{2k-1}) + R,
//   |R| <= (|B_12|/(11*12)) sec(arg(z)/2)^12 / |z|^11, and sec(arg/2)^12 <= 64
//   on the right half plane.
inline CInterval clog_gamma(CInterval z) {
  if (!z.re.is_positive()) throw domain_error("clog_gamma needs Re z > 0");
  CInterval shift_log(Interval(0.0), Interval(0.0));
  int shifts = 0;
  while ((square(z.re) + square(z.im)).lo() < 144.0) {
    shift_log += clog_right(z);
    z = z + CInterval(1.0, 0.0);
    if (++shifts > 64) throw domain_error("clog_gamma shift runaway");
  }
  CInterval lz = clog_right(z);
  CInterval res = (z - CInterval(0.5, 0.0)) * lz - z;
  res += CInterval(log(iv_two_pi()) / 2.0, Interval(0.0));
  const double num[5] = {1.0, -1.0, 1.0, -1.0, 5.0};
  const double den[5] = {12.0, 360.0, 1260.0, 1680.0, 5940.0};
  CInterval z2 = z * z;
  CInterval zp = z;
  for (int k = 0; k < 5; ++k) {
    res += CInterval(Interval(num[k]), Interval(0.0)) / (zp * den[k]);
    zp = zp * z2;
  }
  Interval zabs2 = z.abs2();
  Interval rad = Interval(64.0 * (691.0 / 2730.0) / 132.0) /
                 (sqrt(zabs2) * pow(zabs2, 5));
  Interval pad = Interval(-1, 1) * rad.hi();
  res += CInterval(pad, pad);
  return res - shift_log;
}

inline Interval gamma_abs(const CInterval& z) {
  return exp(clog_gamma(z).re);
}

// Si(x) = int_0^x sin t / t dt and Ci(x).  Power series (in double-double,
// with a certified cancellation bound) for |x| <= 30; beyond that the
// enveloping asymptotic expansions
//   Si(x) = pi/2 - f(x) cos x - g(x) sin x,   Ci(x) = f(x) sin x - g(x) cos x,
//   f(x) = sum (-1)^k (2k)!/x^{2k+1},  g(x) = sum (-1)^k (2k+1)!/x^{2k+2},
// truncated where the terms are still decreasing (error <= first omitted
// term, both series coming from exact integral remainders).
namespace detail {

inline void si_ci_aux(const Interval& x, Interval& f, Interval& g) {
  Interval inv = 1.0 / x;
  Interval inv2 = inv * inv;
  Interval fterm = inv;
  Interval fsum(0.0);
  Interval gterm = inv2;
  Interval gsum(0.0);
  int N = 14;  // for x >= 30 the terms still decrease at k = 14
  for (int k = 0; k < N; ++k) {
    fsum = (k % 2) ? fsum - fterm : fsum + fterm;
    gsum = (k % 2) ? gsum - gterm : gsum + gterm;
    fterm = fterm * inv2 * ((2.0 * k + 1) * (2.0 * k + 2));
    gterm = gterm * inv2 * ((2.0 * k + 2) * (2.0 * k + 3));
  }
  f = fsum + Interval(-1, 1) * fterm.hi();
  g = gsum + Interval(-1, 1) * gterm.hi();
}

// Power series in double-double; the returned pad covers dd rounding
// (max-term cancellation times 2^-95 per effective op) plus the tail.
inline Interval si_series_dd(double a) {  // 0 <= a <= 30
  ddouble x{a, 0};
  ddouble x2 = dd_mul(x, x);
  ddouble u = x;  // x^(2k+1)/(2k+1)!
  ddouble sum = x;
  double max_abs = std::fabs(a);
  double last = std::fabs(a);
  for (int k = 1; k <= 60; ++k) {
    // (2k)(2k+1) and 2k+1 are exact doubles; dd_div keeps ~2^-100 per term
    u = dd_div(dd_mul(u, x2), {(2.0 * k) * (2.0 * k + 1), 0.0});
    ddouble contrib = dd_div(u, {(k % 2 ? -1.0 : 1.0) * (2.0 * k + 1), 0.0});
    sum = dd_add(sum, contrib);
    last = std::fabs(contrib.hi);
    max_abs = std::max(max_abs, std::fabs(u.hi));
    if (last < 1e-24 && 2.0 * k > a) break;
  }
  double v = sum.hi + sum.lo;
  double err = max_abs * 0x1p-90 + last * 2 + 1e-24;
  return Interval(dn(v - err), up(v + err));
}

inline Interval ci_series_part_dd(double a) {  // sum_{k>=1} (-1)^k x^2k/(2k(2k)!)
  ddouble x2 = dd_mul({a, 0}, {a, 0});
  ddouble u{1.0, 0};  // x^(2k)/(2k)!
  ddouble sum{0, 0};
  double max_abs = 1;
  double last = 1;
  for (int k = 1; k <= 60; ++k) {
    u = dd_div(dd_mul(u, x2), {(2.0 * k - 1) * (2.0 * k), 0.0});
    ddouble contrib = dd_div(u, {(k % 2 ? -1.0 : 1.0) * (2.0 * k), 0.0});
    sum = dd_add(sum, contrib);
    last = std::fabs(contrib.hi);
    max_abs = std::max(max_abs, std::fabs(u.hi));
    if (last < 1e-24 && 2.0 * k > a) break;
  }
  double v = sum.hi + sum.lo;
  double err = max_abs * 0x1p-90 + last * 2 + 1e-24;
  return Interval(dn(v - err), up(v + err));
}

inline Interval si_point(double v) {
  double a = std::fabs(v);
  Interval r;
  if (a <= 30.0) {
    r = si_series_dd(a);
  } else {
    Interval t(a);
    Interval f, g;
    si_ci_aux(t, f, g);
    r = iv_half_pi() - f * cos(t) - g * sin(t);
  }
  return v < 0 ? -r : r;
}

inline Interval ci_point(double v) {  // v > 0
  Interval t(v);
  if (v <= 30.0)
    return iv_euler_gamma() + log(t) + ci_series_part_dd(v);
  Interval f, g;
  si_ci_aux(t, f, g);
  return f * sin(t) - g * cos(t);
}

}  // namespace detail

// Mean-value-form interval extensions: f(X) within f(mid) + f'(X) (X - mid).
inline Interval si_integral(const Interval& x) {
  if (x.width() == 0) return detail::si_point(x.lo());
  if (x.width() > 2.0) return Interval(-1.8519371, 1.8519371);  // global range
  double m = x.mid();
  Interval deriv;  // sin t / t on x
  if (x.lo() > 0 || x.hi() < 0) {
    deriv = sin(x) / x;
  } else {
    deriv = Interval(-1.0, 1.0);  // |sin t / t| <= 1 everywhere
  }
  return detail::si_point(m) + deriv * (x - m);
}

inline Interval ci_integral(const Interval& x) {
  if (x.lo() <= 0) throw domain_error("Ci needs x > 0");
  if (x.width() == 0) return detail::ci_point(x.lo());
  double m = x.mid();
  Interval deriv = cos(x) / x;
  return detail::ci_point(m) + deriv * (x - m);
}

// zeta(s) for real s > 1 via Euler-Maclaurin with N direct terms:
//   zeta(s) = sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2 + s N^(-s-1)/12 + R,
//   |R| <= |s (s+1) (s+2)| N^(-s-3) / 720.
inline Interval zeta_real(const Interval& s, int N = 200) {
  if (s.lo() <= 1.0) throw domain_error("zeta_real needs s > 1");
  Interval sum(0.0);
  for (int n = 1; n <= N; ++n) sum += pow(Interval(static_cast<double>(n)), -s);
  Interval Ni(static_cast<double>(N));
  sum += pow(Ni, 1.0 - s) / (s - 1.0);
  sum -= pow(Ni, -s) / 2.0;
  sum += s * pow(Ni, -s - 1.0) / 12.0;
  Interval rem = s * (s + 1.0) * (s + 2.0) * pow(Ni, -s - 3.0) / 720.0;
  return sum + Interval(-1, 1) * rem.mag();
}

}  // namespace goldbach
