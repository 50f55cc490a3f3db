#pragma once

// The smoothing functions and every norm or constant attached to them: the
// tent eta2, Gaussian-based eta_heart / eta_diamond / phi, the symmetric
// eta_circ, the window h with its derivative constants C_0..C_4 and Mellin
// L1 bounds, the band-limited h_H / eta_plus pair, the Mellin convolution
// eta_star, and the log-twisted tent.

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "goldbach/bisect.hpp"
#include "goldbach/interval.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/special.hpp"

namespace goldbach {

enum class SmootherKind {
  kEta1,
  kEta2,
  kEtaHeart,    // e^{-t^2/2}
  kEtaDiamond,  // t e^{-t^2/2}
  kEtaCirc,     // t^3 (2-t)^3 e^{-(t-1)^2/2} on [0,2]
  kH,           // t^2 (2-t)^3 e^{t-1/2} on [0,2]
  kHH,          // band-limited h
  kEtaPlus,     // h_H(t) t e^{-t^2/2}
  kEtaStar,     // (eta2 *_M phi)(kappa t)
  kPhi,         // t^2 e^{-t^2/2}
  kLogTwist,    // log(y t) eta2(t)
};

struct Smoother {
  SmootherKind kind = SmootherKind::kEta2;
  double H = 200;     // band limit for kHH / kEtaPlus
  double kappa = 49;  // rescale for kEtaStar
  double y = 4;       // twist parameter for kLogTwist
};

inline const char* smoother_name(SmootherKind k) {
  switch (k) {
    case SmootherKind::kEta1: return "eta1";
    case SmootherKind::kEta2: return "eta2";
    case SmootherKind::kEtaHeart: return "etaHeart";
    case SmootherKind::kEtaDiamond: return "etaDiamond";
    case SmootherKind::kEtaCirc: return "etaCirc";
    case SmootherKind::kH: return "h";
    case SmootherKind::kHH: return "hH";
    case SmootherKind::kEtaPlus: return "etaPlus";
    case SmootherKind::kEtaStar: return "etaStar";
    case SmootherKind::kPhi: return "phi";
    case SmootherKind::kLogTwist: return "logTwist";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Polynomials with interval coefficients (for h and eta_circ derivatives).

struct Poly {
  std::vector<Interval> c;  // c[0] + c[1] x + ...

  Interval eval(const Interval& x) const {
    Interval r(0.0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }
  Poly deriv() const {
    Poly d;
    for (size_t i = 1; i < c.size(); ++i)
      d.c.push_back(c[i] * static_cast<double>(i));
    if (d.c.empty()) d.c.push_back(Interval(0.0));
    return d;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Interval(0.0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Interval(0.0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  Poly shift_times_x() const {  // x * p(x)
    Poly r;
    r.c.assign(c.size() + 1, Interval(0.0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + 1] = c[i];
    return r;
  }
  // certified sup of |p| over [a, b]
  Interval sup_abs(double a, double b, int cells = 64) const {
    Interval m(0.0);
    double w = (b - a) / cells;
    for (int i = 0; i < cells; ++i)
      m = max(m, abs(eval(Interval(a + i * w, a + (i + 1) * w))));
    return m;
  }
};

namespace hfun {

// h(x) = Q0(x) e^{x-1/2} on [0,2] with Q0 = x^2 (2-x)^3;
// h^{(k)}(x) = Qk(x) e^{x-1/2},  Q_{k+1} = Qk + Qk'.
inline const std::vector<Poly>& h_polys() {
  static const std::vector<Poly> polys = [] {
    std::vector<Poly> ps;
    Poly q;  // 8x^2 - 12x^3 + 6x^4 - x^5
    q.c = {Interval(0.0), Interval(0.0), Interval(8.0), Interval(-12.0),
           Interval(6.0), Interval(-1.0)};
    ps.push_back(q);
    for (int k = 0; k < 6; ++k) {
      Poly next = ps.back() + ps.back().deriv();
      ps.push_back(next);
    }
    return ps;
  }();
  return polys;
}

// h^{(k)} on [0,2], zero outside (as a function value; derivatives at the
// endpoints are one-sided).
inline Interval h_deriv(int k, const Interval& x) {
  Interval inside(0.0);
  // closed clamp: at the endpoints the one-sided limits are wanted
  if (x.lo() <= 2.0 && x.hi() >= 0.0) {
    Interval xc(std::max(x.lo(), 0.0), std::min(x.hi(), 2.0));
    inside = h_polys()[k].eval(xc) * exp(xc - 0.5);
  }
  if (x.lo() >= 0.0 && x.hi() <= 2.0) return inside;
  return Interval::hull(inside, Interval(0.0));
}

inline Interval h_value(const Interval& x) { return h_deriv(0, x); }

// certified sup_{[0,2]} |h^{(k)}|
inline Interval h_deriv_sup(int k) {
  static std::array<Interval, 7> cache;
  static std::array<bool, 7> have{};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!have[k]) {
    auto f = [&](const Interval& x) {
      return abs(h_polys()[k].eval(x) * exp(x - 0.5));
    };
    cache[k] = Interval(0.0, bisect_extremum(f, Interval(0.0, 2.0),
                                             k <= 2 ? 44 : 24, true)
                                 .enclosure.hi());
    have[k] = true;
  }
  return cache[k];
}

struct HConstants {
  std::array<Interval, 5> C;   // C_0..C_4
  Interval alpha21, alpha22;   // roots of Q2 in (0,2)
  Interval mh_l1;              // two-sided |M h(it)|_1 upper bound
  Interval t_i_mh_l1;          // half-line int_0^inf |t+i||Mh(it)| dt bound
};

inline const HConstants& h_constants() {
  static const HConstants hc = [] {
    HConstants out;
    const auto& ps = h_polys();
    // C0 = int_0^2 t (2-t)^3 e^{t-1/2} dt = 92 e^{-1/2} - 12 e^{3/2}
    out.C[0] = 92.0 * exp(Interval(-0.5)) - 12.0 * exp(Interval(1.5));
    // C1 = 2 h(1) = 2 sqrt(e)
    out.C[1] = 2.0 * exp(Interval(0.5));

    auto roots_in = [&](int k) {
      auto f = [&](const Interval& x) { return ps[k].eval(x); };
      auto rs = isolate_roots(f, Interval(1e-9, 2.0 - 1e-9), 4096, 60);
      if (rs.size() != 2)
        throw domain_error("unexpected root count for derivative polynomial");
      return rs;
    };
    auto h_at = [&](int k, const Interval& x) {
      return ps[k].eval(x) * exp(x - 0.5);
    };

    auto r2 = roots_in(2);
    out.alpha21 = r2[0];
    out.alpha22 = r2[1];
    // C2 = 2 sum_j (-1)^{j+1} (h'(a_j) a_j - h(a_j))
    out.C[2] = 2.0 * ((h_at(1, r2[0]) * r2[0] - h_at(0, r2[0])) -
                      (h_at(1, r2[1]) * r2[1] - h_at(0, r2[1])));

    auto r3 = roots_in(3);
    // C3 = 2 sum_j (-1)^j (h''(a_j) a_j^2 - 2 h'(a_j) a_j + 2 h(a_j))
    auto c3_term = [&](const Interval& a) {
      return h_at(2, a) * square(a) - 2.0 * h_at(1, a) * a + 2.0 * h_at(0, a);
    };
    out.C[3] = 2.0 * (-c3_term(r3[0]) + c3_term(r3[1]));

    auto r4 = roots_in(4);
    // C4 = 2 sum_j (-1)^j (h'''a^3 - 3 h''a^2 + 6 h'a - 6 h)
    //      + 24 e^{3/2} * 8  (boundary term at 2^-)
    //      + 24 e^{3/2} * 8  (distributional jump of h''' at 2)
    auto c4_term = [&](const Interval& a) {
      return h_at(3, a) * pow(a, 3) - 3.0 * h_at(2, a) * square(a) +
             6.0 * h_at(1, a) * a - 6.0 * h_at(0, a);
    };
    out.C[4] = 2.0 * (-c4_term(r4[0]) + c4_term(r4[1])) +
               384.0 * exp(Interval(1.5));

    // |M h(it)|_1 <= 2 (C1 + C1 log(C2 C0/C1^2) + C2 (C1/C2 - C2/C3)
    //                   + (C3/2)(C2^2/C3^2 - C3^2/C4^2) + (C4/3)(C3/C4)^3)
    const Interval &C0 = out.C[0], &C1 = out.C[1], &C2 = out.C[2],
                   &C3 = out.C[3], &C4 = out.C[4];
    out.mh_l1 =
        2.0 * (C1 + C1 * log(C2 * C0 / square(C1)) + C2 * (C1 / C2 - C2 / C3) +
               C3 / 2.0 * (square(C2 / C3) - square(C3 / C4)) +
               C4 / 3.0 * pow(C3 / C4, 3));

    // |(t+i) M h(it)|_1: antiderivative chain evaluated at the junctions
    auto asinh_iv = [](const Interval& x) {
      return log(x + sqrt(square(x) + 1.0));
    };
    auto F1 = [&](const Interval& t) {  // int |1 + i/t| dt piece
      return sqrt(square(t) + 1.0) + log((sqrt(square(t) + 1.0) - 1.0) / t);
    };
    Interval r10 = C1 / C0, r21 = C2 / C1;
    Interval part = C0 / 2.0 * (sqrt(pow(r10, 4) + square(r10)) + asinh_iv(r10));
    part += C1 * (F1(r21) - F1(r10));
    part += C2 * log(C3 * C1 / square(C2));
    part += C3 * (C2 / C3 - C3 / C4);
    part += C4 / 2.0 * square(C3 / C4);
    out.t_i_mh_l1 = part;
    return out;
  }();
  return hc;
}

}  // namespace hfun

// ---------------------------------------------------------------------------
// eta_circ = x^3 (2-x)^3 e^{-(x-1)^2/2} on [0,2]; derivative polynomials
// R_{k+1} = R_k' - (x-1) R_k against the Gaussian factor.

namespace etacirc {

inline const std::vector<Poly>& polys() {
  static const std::vector<Poly> ps = [] {
    std::vector<Poly> out;
    // x^3 (2-x)^3 = 8x^3 - 12x^4 + 6x^5 - x^6
    Poly r;
    r.c = {Interval(0.0), Interval(0.0), Interval(0.0), Interval(8.0),
           Interval(-12.0), Interval(6.0), Interval(-1.0)};
    out.push_back(r);
    Poly xm1;
    xm1.c = {Interval(-1.0), Interval(1.0)};
    for (int k = 0; k < 5; ++k) {
      const Poly& cur = out.back();
      Poly next = cur.deriv() - (cur.shift_times_x() - cur);  // R' - (x-1) R
      out.push_back(next);
    }
    return out;
  }();
  return ps;
}

inline Interval deriv(int k, const Interval& x) {
  Interval inside(0.0);
  if (x.lo() <= 2.0 && x.hi() >= 0.0) {
    Interval xc(std::max(x.lo(), 0.0), std::min(x.hi(), 2.0));
    inside = polys()[k].eval(xc) * exp(-square(xc - 1.0) / 2.0);
  }
  if (x.lo() >= 0.0 && x.hi() <= 2.0) return inside;
  return Interval::hull(inside, Interval(0.0));
}

inline Interval value(const Interval& x) { return deriv(0, x); }

inline Interval deriv_sup(int k) {
  return polys()[k].sup_abs(0.0, 2.0, 256);  // Gaussian factor <= 1
}

}  // namespace etacirc

// ---------------------------------------------------------------------------
// Closed-form small smoothers.

inline Interval eta1_value(const Interval& t) {
  if (t.lo() >= 0.5 && t.hi() <= 1.0) return Interval(2.0);
  if (t.hi() < 0.5 || t.lo() > 1.0) return Interval(0.0);
  return Interval(0.0, 2.0);
}

inline Interval eta2_value(const Interval& t) {
  if (t.hi() <= 0.25 || t.lo() >= 1.0) return Interval(0.0);
  // 4 max(log 2 - |log 2t|, 0) is valid for all t > 0 and clamps itself to 0
  // outside [1/4, 1]; the left endpoint only needs protecting from log(0).
  Interval tc(std::max(t.lo(), 1e-300), t.hi());
  Interval l = abs(log(2.0 * tc));
  return 4.0 * max(iv_ln2() - l, Interval(0.0));
}

inline Interval eta_heart_value(const Interval& t) {
  return exp(-square(t) / 2.0);
}
inline Interval eta_diamond_value(const Interval& t) {
  return t * exp(-square(t) / 2.0);
}
inline Interval phi_weight_value(const Interval& t) {
  return square(t) * exp(-square(t) / 2.0);
}
inline Interval log_twist_value(double y, const Interval& t) {
  if (t.hi() <= 0.25 || t.lo() >= 1.0) return Interval(0.0);
  Interval tc(std::max(t.lo(), 0.2), std::min(t.hi(), 1.0));
  Interval v = log(Interval(y) * tc) * eta2_value(tc);
  if (t.lo() < 0.25 || t.hi() > 1.0) v = Interval::hull(v, Interval(0.0));
  return v;
}

// ---------------------------------------------------------------------------
// h_H and eta_plus by the sine-integral route:
//   h_H(t) - h(t) = -(1/pi) [ int_0^inf  D(w) (Si(w) - pi/2) dw
//                           + int_{-W0}^0 D(w) (Si(w) + pi/2) dw ],
//   D(w) = d/dw h(t e^{-w/H}) = -(x/H) h'(x),  x = t e^{-w/H},
//   W0 = H log(2/t).  The upper tail beyond W1 is bounded by
//   (2 t |h'|_inf / (pi W1)) e^{-W1/H}.

namespace detail_hh {

// f4 bound for D(w) S(w) on a cell where x = t e^{-w/H} stays in [0,2]:
// with T = x d/dx, D^{(k)} = (-1)^{k+1} (T^k (x h'))(x) / H^{k+1}, and
// |T^k (x h')| <= sum_j S2(k+1,j) x^j |h^{(j)}| with Stirling-like weights.
inline double d_deriv_bound(int k, double Hband) {
  static const int weights[5][6] = {{1, 0, 0, 0, 0, 0},
                                    {1, 1, 0, 0, 0, 0},
                                    {1, 3, 1, 0, 0, 0},
                                    {1, 7, 6, 1, 0, 0},
                                    {1, 15, 25, 10, 1, 0}};
  double b = 0;
  for (int j = 0; j <= k; ++j) {
    double sup = hfun::h_deriv_sup(j + 1).hi();
    b += weights[k][j] * std::pow(2.0, j + 1) * sup;
  }
  return b / std::pow(Hband, k + 1);
}

// |S^{(j)}| with S = Si -/+ pi/2: |S| <= pi/2 + 0.282, |S^{(1+m)}| <= 1/(m+1)
// globally, and for w >= a >= 4 also |S| <= 2/a and |sinc^{(m)}(w)| <= 3/a
// (1/w + 3/w^2 + 6/w^3 + 6/w^4 <= 3/w there).
inline double s_deriv_bound(int j, double alo, bool positive_side) {
  if (j == 0) {
    double b = 1.8529;  // |Si| + pi/2 worst case
    if (positive_side && alo > 0) b = std::min(b, 2.0 / alo);
    return b;
  }
  double b = 1.0 / j;  // global sinc derivative bound
  if (positive_side && alo >= 4.0) b = std::min(b, 3.0 / alo);
  return b;
}

inline double cell_f4(double alo, double Hband, bool positive_side) {
  static const double binom[5] = {1, 4, 6, 4, 1};
  double f4 = 0;
  for (int k = 0; k <= 4; ++k)
    f4 += binom[k] * d_deriv_bound(k, Hband) *
          s_deriv_bound(4 - k, alo, positive_side);
  return f4;
}

}  // namespace detail_hh

// Residual-spectrum bounds: since |Mh(i tau)| <= C4/tau^4,
//   |h_H - h|_inf <= (1/pi) int_H^inf C4/tau^4 = C4 / (3 pi H^3),
//   |(h_H - h)'(t)| <= (1/(pi t)) int_H^inf C4/tau^3 = C4 / (2 pi H^2 t).
inline Interval h_H_gap_sup(double Hband) {
  Interval v = hfun::h_constants().C[4] /
               (3.0 * iv_pi() * pow(Interval(Hband), 3));
  return Interval(0.0, v.hi());
}
inline Interval h_H_gap_deriv_times_t(double Hband) {
  Interval v = hfun::h_constants().C[4] /
               (2.0 * iv_pi() * pow(Interval(Hband), 2));
  return Interval(0.0, v.hi());
}

// Enclosure of h_H(t) - h(t) for t (or an interval of t).
inline Interval h_H_gap(double Hband, const Interval& t, double tol = 1e-9) {
  if (t.lo() < 0) throw domain_error("h_H needs t >= 0");
  if (t.hi() == 0.0) return Interval(0.0);
  Interval hp_sup = hfun::h_deriv_sup(1);

  auto D = [&](const Interval& w) {
    Interval x = t * exp(-w / Hband);
    return -(x / Hband) * hfun::h_deriv(1, x);
  };

  // choose W1 so the tail is below tol/4
  double W1 = 10.0;
  while (2.0 * t.hi() * hp_sup.hi() / (3.1415 * W1) * std::exp(-W1 / Hband) >
         tol / 4 && W1 < 120 * Hband)
    W1 *= 1.5;
  Interval tail = Interval(-1, 1) *
                  (2.0 * t.hi() * hp_sup.hi() / (3.1415 * W1) *
                   std::exp(-W1 / Hband));

  Interval acc(0.0);
  // positive side: cells [a, min(2a, W1)] geometric from 1, plus [0,1]
  {
    std::vector<double> cuts{0.0, 1.0};
    while (cuts.back() < W1) cuts.push_back(std::min(cuts.back() * 2, W1));
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double a = cuts[i], b = cuts[i + 1];
      double f4 = detail_hh::cell_f4(a, Hband, true);
      double err_target = tol / (8.0 * (cuts.size() - 1));
      double n4 = std::pow(b - a, 5) * f4 / (180.0 * err_target);
      long n = std::max(2l, static_cast<long>(std::ceil(std::sqrt(std::sqrt(
                                 std::max(n4, 16.0))))));
      n += n % 2;
      auto f = [&](const Interval& w) {
        return D(w) * (si_integral(w) - iv_half_pi());
      };
      acc += verified_simpson(f, Interval(a, b), n, f4);
    }
  }
  // negative side: from -W0 to 0 where W0 = Hband log(2 / t_hi) (clamped)
  {
    double W0 = t.hi() >= 2.0 ? 0.0 : Hband * std::log(2.0 / t.hi());
    // x(w) <= 2 needs w >= -Hband log(2/t); below that h' vanishes anyway,
    // so truncating at -W0 - 1 is safe and cheap.
    double lo = -(W0 + 1.0);
    if (lo < 0.0) {
      std::vector<double> cuts;
      double step = 16.0;
      for (double a = lo; a < 0.0; a += step)
        cuts.push_back(a);
      cuts.push_back(0.0);
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        double f4 = detail_hh::cell_f4(0.0, Hband, false);
        double err_target = tol / (8.0 * (cuts.size() - 1));
        double n4 = std::pow(b - a, 5) * f4 / (180.0 * err_target);
        long n = std::max(2l, static_cast<long>(std::ceil(std::sqrt(std::sqrt(
                                   std::max(n4, 16.0))))));
        n += n % 2;
        auto f = [&](const Interval& w) {
          return D(w) * (si_integral(w) + iv_half_pi());
        };
        acc += verified_simpson(f, Interval(a, b), n, f4);
      }
    }
  }
  return -(acc + tail) / iv_pi();
}

inline Interval h_H_value(double Hband, const Interval& t, double tol = 1e-9) {
  return hfun::h_value(t) + h_H_gap(Hband, t, tol);
}

inline Interval eta_plus_value(double Hband, const Interval& t,
                               double tol = 1e-9) {
  if (t.hi() <= 0.0) return Interval(0.0);
  return h_H_value(Hband, t, tol) * eta_diamond_value(t);
}

// (eta2 *_M phi)(u) = int_{1/4}^1 eta2(w) phi(u/w) dw/w by verified Simpson
// on the two smooth pieces of eta2.
inline Interval eta_star_unscaled(const Interval& u, long panels = 96) {
  if (u.hi() <= 0.0) return Interval(0.0);
  if (u.lo() >= 50.0) return Interval(0.0, 1e-200);  // phi(u/w) < e^-1200
  auto f = [&](const Interval& w) {
    return eta2_value(w) * phi_weight_value(u / w) / w;
  };
  // |d^4/dw^4| on a smooth piece of w in [1/4,1]: Leibniz over
  // eta2 (|eta2^{(a)}| <= {2.78,16,64,512,6144}),
  // phi(u/w) through the Euler operator (|d^b_w phi(u/w)| <=
  //   4^b sum_j S(b,j) sup|T^j phi| <= {0.74, 8.8, 531, 2.9e4, 1.8e6}),
  // and 1/w (|d^c| <= c! 4^{c+1}); the multinomial total stays below 4e7
  // uniformly in u.
  const double f4 = 4e7;
  Interval a = verified_simpson(f, Interval(0.25, 0.5), panels, f4);
  Interval b = verified_simpson(f, Interval(0.5, 1.0), panels, f4);
  return a + b;
}

inline Interval eta_star_value(double kappa, const Interval& t,
                               long panels = 96) {
  return eta_star_unscaled(t * kappa, panels);
}

inline Interval smoother_eval(const Smoother& s, const Interval& t) {
  if (t.lo() < 0) throw domain_error("smoothers are evaluated on t >= 0");
  switch (s.kind) {
    case SmootherKind::kEta1: return eta1_value(t);
    case SmootherKind::kEta2: return eta2_value(t);
    case SmootherKind::kEtaHeart: return eta_heart_value(t);
    case SmootherKind::kEtaDiamond: return eta_diamond_value(t);
    case SmootherKind::kEtaCirc: return etacirc::value(t);
    case SmootherKind::kH: return hfun::h_value(t);
    case SmootherKind::kHH: return h_H_value(s.H, t);
    case SmootherKind::kEtaPlus: return eta_plus_value(s.H, t);
    case SmootherKind::kEtaStar: return eta_star_value(s.kappa, t);
    case SmootherKind::kPhi: return phi_weight_value(t);
    case SmootherKind::kLogTwist: return log_twist_value(s.y, t);
  }
  throw domain_error("unknown smoother");
}

// ---------------------------------------------------------------------------
// eta_plus band and gap constants.

struct EtaPlusGap {
  Interval l2;      // upper bound on |eta_plus - eta_circ|_2
  Interval l2_log;  // upper bound on int (eta_plus - eta_circ)^2 |log t| dt
};

inline EtaPlusGap eta_plus_gap(double H) {
  if (H <= 0) throw domain_error("eta_plus_gap needs H > 0");
  const auto& hc = hfun::h_constants();
  Interval Hi(H);
  Interval h72 = pow(Hi, Interval(3.5));
  // max t^3 e^{-t^2} = (3/2e)^{3/2}; the l2 gap gets its square root
  Interval peak = pow(Interval(1.5) / iv_e(), Interval(0.75));
  EtaPlusGap out;
  out.l2 = hc.C[4] / sqrt(7.0 * iv_pi()) * peak / h72;
  // max t^3 e^{-t^2} |log t| certified by bisection
  auto f = [](const Interval& t) {
    Interval tc(std::max(t.lo(), 1e-12), t.hi());
    Interval v = pow(tc, 3) * exp(-square(tc)) * abs(log(tc));
    if (t.lo() <= 1e-12) v = Interval::hull(v, Interval(0.0));
    return v;
  };
  Interval m = bisect_extremum(f, Interval(0.0, 5.0), 40, true).enclosure;
  out.l2_log = Interval(
      0.0, (m * square(hc.C[4]) / (7.0 * iv_pi()) / pow(Hi, 7)).hi());
  return out;
}

// |eta_plus|_inf <= 1 + (2/e) |h'|_inf (1 + (4/pi) log H)/H
inline Interval eta_plus_sup_bound(double H) {
  const Interval hp = hfun::h_deriv_sup(1);
  Interval Hi(H);
  return 1.0 + (2.0 / iv_e()) * hp * (1.0 + 4.0 / iv_pi() * log(Hi)) / Hi;
}

// |h_H - h|(t)/t band from the sine-integral tails (valid for H >= e).
inline Interval h_H_band_over_t(double H) {
  const Interval hp = hfun::h_deriv_sup(1);
  Interval Hi(H);
  return hp * (1.0 + 4.0 / iv_pi() * log(Hi)) / Hi;
}

// ---------------------------------------------------------------------------
// Fourier bounds for eta2'' and the log twist.

// g(t) = 4 e(-t/4) - 4 e(-t/2) + e(-t); |g| <= 7.87052 with 9 pi^2 as |g''|.
inline Interval trig_g_abs(const Interval& t) {
  Interval c1, s1, c2, s2, c4, s4;
  cis2pi(-t / 4.0, c4, s4);
  cis2pi(-t / 2.0, c2, s2);
  cis2pi(-t, c1, s1);
  Interval re = 4.0 * c4 - 4.0 * c2 + c1;
  Interval im = 4.0 * s4 - 4.0 * s2 + s1;
  return sqrt(square(re) + square(im));
}

// hat f for the absolutely continuous part of eta2'': f = -4/x^2 on
// [1/4,1/2), +4/x^2 on [1/2,1).  Closed form through Si and Ci for t != 0.
inline void eta2_hat_f(const Interval& t, Interval& re, Interval& im) {
  if (t.contains_zero() && t.mag() < 0.05) {
    // direct quadrature near 0: integrand bounded by 64, f4 bound crude
    auto fr = [&](double sign, const Interval& x) {
      Interval c, s;
      cis2pi(-x * t, c, s);
      return sign / square(x) * c;
    };
    auto fi = [&](double sign, const Interval& x) {
      Interval c, s;
      cis2pi(-x * t, c, s);
      return sign / square(x) * (-s);
    };
    double f4 = 4e6;
    using namespace std::placeholders;
    re = verified_simpson([&](const Interval& x) { return fr(-4.0, x); },
                          Interval(0.25, 0.5), 64, f4) +
         verified_simpson([&](const Interval& x) { return fr(4.0, x); },
                          Interval(0.5, 1.0), 64, f4);
    im = verified_simpson([&](const Interval& x) { return fi(-4.0, x); },
                          Interval(0.25, 0.5), 64, f4) +
         verified_simpson([&](const Interval& x) { return fi(4.0, x); },
                          Interval(0.5, 1.0), 64, f4);
    return;
  }
  if (t.hi() <= 0.0) {  // conjugate symmetry
    Interval r2, i2;
    eta2_hat_f(-t, r2, i2);
    re = r2;
    im = -i2;
    return;
  }
  if (t.lo() < 0.0) {
    Interval r1, i1, r2, i2;
    eta2_hat_f(Interval(t.lo(), 0.0), r1, i1);
    eta2_hat_f(Interval(0.0, t.hi()), r2, i2);
    re = Interval::hull(r1, r2);
    im = Interval::hull(i1, i2);
    return;
  }
  // t > 0: int_a^b e^{-iwx}/x^2 dx =
  //   [-e^{-iwx}/x]_a^b - i w ([Ci(wx)]_a^b - i [Si(wx)]_a^b),  w = 2 pi t.
  Interval w = iv_two_pi() * t;
  auto piece = [&](double a, double b, double coeff, Interval& pre,
                   Interval& pim) {
    Interval A(a), B(b);
    Interval ca, sa, cb, sb;  // (c, s) = e^{-i w x} components
    cis2pi(-t * a, ca, sa);
    cis2pi(-t * b, cb, sb);
    Interval bre = -(cb / B) + (ca / A);
    Interval bim = -(sb / B) + (sa / A);
    Interval dci = ci_integral(w * B) - ci_integral(w * A);
    Interval dsi = si_integral(w * B) - si_integral(w * A);
    Interval wre = -(w * dsi);
    Interval wim = -(w * dci);
    pre += coeff * (bre + wre);
    pim += coeff * (bim + wim);
  };
  re = Interval(0.0);
  im = Interval(0.0);
  piece(0.25, 0.5, -4.0, re, im);
  piece(0.5, 1.0, 4.0, re, im);
}

// |4 g(t) + hat f(t)|
inline Interval eta2_hat_dd_abs(const Interval& t) {
  Interval c1, s1, c2, s2, c4, s4;
  cis2pi(-t / 4.0, c4, s4);
  cis2pi(-t / 2.0, c2, s2);
  cis2pi(-t, c1, s1);
  Interval gre = 4.0 * (4.0 * c4 - 4.0 * c2 + c1);
  Interval gim = 4.0 * (4.0 * s4 - 4.0 * s2 + s1);
  Interval fre, fim;
  eta2_hat_f(t, fre, fim);
  return sqrt(square(gre + fre) + square(gim + fim));
}

struct FourierDDBound {
  Interval bound;        // certified sup bound
  Interval interior;     // certified value near the interior maximum
};

// sup over the line of |hat{eta2''}|; the grid covers [0, 655] with the
// 80/(pi t) far bound closing the tail against 31.521 - 4*7.87052.
inline FourierDDBound eta2_fourier_dd_sup(double step = 0.001) {
  FourierDDBound out;
  auto f = [](const Interval& t) { return eta2_hat_dd_abs(t); };
  Interval g = grid_sup(f, Interval(0.0, 655.0), step, 48.0 * 9.8696044010893586 /*pi^2*/);
  out.interior = g;
  out.bound = max(g, Interval(4 * 7.87052 + 80.0 / (3.141592653 * 655.0)));
  return out;
}

inline Interval wollust_sup(double step = 3e-4) {
  auto f = [](const Interval& t) { return trig_g_abs(t); };
  return grid_sup(f, Interval(0.0, 12.566370614359174), step,
                  9.0 * 9.8696044010893586);
}

// |(log . eta2)''|_1 = 96 log 2
inline Interval log_eta2_dd_l1() { return 96.0 * iv_ln2(); }

// fourier_dd_sup per smoother: eta2 and the log twist are supported.  The
// eta2 case runs the grid once and memoizes; the far tail |t| >= 655 is
// closed by 4|g| + 80/(pi t) <= 31.48208 + 0.03889.
inline Interval fourier_dd_sup(const Smoother& s) {
  if (s.kind == SmootherKind::kEta2) {
    static const Interval cached = [] {
      FourierDDBound b = eta2_fourier_dd_sup(0.001);
      Interval far(0.0, 4 * 7.87052 + 80.0 / (3.1415926535897 * 655.0));
      return Interval(b.interior.lo(), std::max(b.bound.hi(), far.hi()));
    }();
    return cached;
  }
  if (s.kind == SmootherKind::kLogTwist) {
    if (s.y < 4.0) throw domain_error("log twist bound needs y >= 4");
    return Interval(0.0, (Interval(31.521) * log(Interval(s.y))).hi());
  }
  throw domain_error("fourier_dd_sup: unsupported smoother");
}

}  // namespace goldbach
