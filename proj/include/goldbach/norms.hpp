#pragma once

// Norms and constants of the smoothing functions, memoized in a NormTable.
// Closed forms where they exist; verified quadrature and bisection otherwise.

#include <map>
#include <mutex>
#include <string>

#include "goldbach/smoothing.hpp"

namespace goldbach {

// certified sup of |f| over [0, top] by bisection (f must accept intervals
// touching 0).
inline Interval sup_abs_bisect(const IvFunc& f, double top, int iters = 36) {
  auto g = [&](const Interval& x) { return abs(f(x)); };
  return bisect_extremum(g, Interval(0.0, top), iters, true).enclosure;
}

// int_0^2 eta_circ^2 dt and int_0^2 eta_circ^2 log t dt by Simpson with
// per-cell fourth-derivative bounds assembled from the derivative sups.
struct EtaCircSqIntegrals {
  Interval plain;     // ~ 0.6402059973
  Interval log_part;  // ~ -0.0210947787
  Interval log_sq;    // int eta_circ^2 (log t)^2 dt
};

inline const EtaCircSqIntegrals& eta_circ_sq_integrals() {
  static const EtaCircSqIntegrals out = [] {
    EtaCircSqIntegrals r;
    double s[5];
    for (int k = 0; k <= 4; ++k) s[k] = etacirc::deriv_sup(k).hi();
    // |(f^2)^{(j)}| <= sum_i C(j,i) s_i s_{j-i}
    double B[5];
    B[0] = s[0] * s[0];
    B[1] = 2 * s[0] * s[1];
    B[2] = 2 * s[0] * s[2] + 2 * s[1] * s[1];
    B[3] = 2 * s[0] * s[3] + 6 * s[1] * s[2];
    B[4] = 2 * s[0] * s[4] + 8 * s[1] * s[3] + 6 * s[2] * s[2];

    auto f_plain = [](const Interval& t) { return square(etacirc::value(t)); };
    r.plain = verified_simpson(f_plain, Interval(0.0, 2.0), 4000, B[4]);

    // head [0, eps]: eta_circ <= 5.34 t^3 there, so the integrand is tiny
    const double eps = 0.05;
    auto head = [&](int logpow) {
      // int_0^eps 28.6 t^6 |log t|^p dt, p = 1, 2
      Interval E(eps);
      Interval l = abs(log(E));
      Interval base = 28.6 * pow(E, 7) / 7.0;
      Interval v = logpow == 1 ? base * (l + 1.0 / 7.0)
                               : base * (square(l) + l / 3.0 + 1.0 / 24.0);
      return Interval(-v.hi(), v.hi());
    };
    auto log_bounds = [&](double a, int m) -> double {
      // sup over [a, 2] of |d^m log t| (m >= 1), and of |log t| for m = 0
      if (m == 0) return std::max(std::fabs(std::log(a)), std::log(2.0)) + 1e-9;
      double fact = 1;
      for (int i = 1; i < m; ++i) fact *= i;
      return fact / std::pow(a, m);
    };
    auto run_log = [&](int logpow) {
      Interval acc = head(logpow);
      const double cuts[] = {eps, 0.1, 0.2, 0.4, 0.8, 2.0};
      const double binom[5] = {1, 4, 6, 4, 1};
      for (int c = 0; c + 1 < 6; ++c) {
        double a = cuts[c], b = cuts[c + 1];
        double f4 = 0;
        for (int j = 0; j <= 4; ++j) {
          // derivative bounds for log t or (log t)^2 on [a, 2]
          double lb;
          if (logpow == 1) {
            lb = log_bounds(a, 4 - j);
          } else {
            // |d^m (log t)^2| <= 2 (|log a|+m) (m-1)! / a^m for m>=1
            int m = 4 - j;
            if (m == 0) {
              double L = log_bounds(a, 0);
              lb = L * L;
            } else {
              double fact = 1;
              for (int i = 1; i < m; ++i) fact *= i;
              lb = 2 * (std::fabs(std::log(a)) + m) * fact / std::pow(a, m);
            }
          }
          f4 += binom[j] * B[j] * lb;
        }
        long n = static_cast<long>(std::ceil(std::sqrt(std::sqrt(
                     std::pow(b - a, 5) * f4 / (180.0 * 2e-8))))) + 2;
        n += n % 2;
        auto f = [&](const Interval& t) {
          Interval l = log(t);
          Interval w = logpow == 1 ? l : square(l);
          return square(etacirc::value(t)) * w;
        };
        acc += verified_simpson(f, Interval(a, b), n, f4);
      }
      return acc;
    };
    r.log_part = run_log(1);
    r.log_sq = run_log(2);
    return r;
  }();
  return out;
}

// |eta_circ^(3)|_1 = 4 max_{[0,1/2]} eta_circ'' + 14 (the second derivative
// rises, dips to -7 at t = 1, and mirrors.)
inline Interval eta_circ_d3_l1() {
  auto f = [](const Interval& t) { return etacirc::deriv(2, t); };
  Interval m = bisect_extremum(f, Interval(0.0, 0.5), 34, true).enclosure;
  Interval at1 = etacirc::deriv(2, Interval(1.0));
  return 2.0 * m - 2.0 * at1 + 2.0 * m;
}

// |eta_plus t^sigma|_1 <= sqrt(Gamma(sigma+2)/2) |h/sqrt(t)|_2 with
// |h/sqrt(t)|_2^2 = 31989/(8e) - 585 e^3/8.
inline Interval eta_plus_weighted_l1(double sigma) {
  Interval ch =
      sqrt(Interval(31989.0) / (8.0 * iv_e()) - 585.0 * pow(iv_e(), 3) / 8.0);
  Interval g = gamma_abs(CInterval(Interval(sigma + 2.0), Interval(0.0)));
  return Interval(0.0, (ch * sqrt(g / 2.0)).hi());
}

// |eta_plus' t^sigma|_1 <= 2.922875 sqrt(Gamma(sigma+1)) +
//                          1.062319 sqrt(Gamma(sigma+3))
inline Interval eta_plus_deriv_weighted_l1(double sigma) {
  Interval ch =
      sqrt(Interval(31989.0) / (8.0 * iv_e()) - 585.0 * pow(iv_e(), 3) / 8.0);
  Interval chp =
      sqrt(Interval(103983.0) / (16.0 * iv_e()) - 1899.0 * pow(iv_e(), 3) / 16.0);
  Interval c1 = ch / sqrt(Interval(2.0));
  Interval g1 = gamma_abs(CInterval(Interval(sigma + 1.0), Interval(0.0)));
  Interval g3 = gamma_abs(CInterval(Interval(sigma + 3.0), Interval(0.0)));
  Interval v = (c1 + chp / sqrt(Interval(2.0))) * sqrt(g1) + c1 * sqrt(g3);
  return Interval(0.0, v.hi());
}

struct NormTable {
  struct Entry {
    Interval value;
    std::string anchor;  // stable internal identifier
  };

  Interval get(const std::string& key) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second.value;
    }
    Entry e = compute(key);  // may recurse into get(); computed unlocked
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(key, e);
    return it->second.value;
  }

  std::map<std::string, Entry> snapshot() {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_;
  }

  // force-populate the standard entries (for dump-norms)
  void populate_standard() {
    static const char* keys[] = {
        "eta2.L1", "eta2.d1.L1", "eta2.d2.L1", "eta2.FT_dd_sup",
        "eta2.over_sqrt_t.L2sq", "etaHeart.L2", "etaHeart.L2log",
        "etaHeart.over_sqrt_t.L1", "etaHeart.sqrt_t.L1",
        "phi.L1", "phi.L2sq", "phi.L2log_sq", "phi.over_sqrt_t.L1",
        "phi.Linf", "phi.t.Linf", "phi.logplus.Linf",
        "etaDiamond.L2log", "etaDiamond.Linf", "etaDiamond.t.Linf",
        "etaDiamond.t_log.Linf", "etaCirc.L2sq", "etaCirc.L2",
        "etaCirc.d1.L2sq", "etaCirc.log.L2sq", "etaCirc.Linf",
        "etaCirc.log.Linf", "etaCirc.over_t.Linf", "etaCirc.t.Linf",
        "etaCirc.d3.L1", "etaPlus200.L1", "etaPlus200.L2",
        "etaPlus200.L2log", "etaPlus200.Linf", "etaPlus200.t.Linf",
        "etaStar49.L1", "etaStar49.L2sq", "etaStar49.Linf",
        "h.C0", "h.C1", "h.C2", "h.C3", "h.C4", "h.mh.L1",
        "h.t_i_mh.half_L1", "h.d1.Linf"};
    for (const char* k : keys) get(k);
  }

 private:
  Entry compute(const std::string& key);

  std::mutex mu_;
  std::map<std::string, Entry> cache_;
};

inline NormTable& norm_table() {
  static NormTable t;
  return t;
}

inline NormTable::Entry NormTable::compute(const std::string& key) {
  auto E = [&](Interval v, const char* tag) { return Entry{v, tag}; };
  const Interval ln2 = iv_ln2();
  const Interval pi = iv_pi();
  const Interval gamma_c = iv_euler_gamma();

  if (key == "eta2.L1") return E(Interval(1.0), "tent mass");
  if (key == "eta2.d1.L1") return E(8.0 * ln2, "tent slope mass");
  if (key == "eta2.d2.L1") return E(Interval(48.0), "tent curvature mass");
  if (key == "eta2.FT_dd_sup")
    return E(fourier_dd_sup({SmootherKind::kEta2}), "tent dd transform sup");
  if (key == "eta2.over_sqrt_t.L2sq")
    return E(32.0 / 3.0 * pow(ln2, 3), "tent/sqrt(t) L2^2");

  if (key == "etaHeart.L2") return E(sqrt(sqrt(pi) / 2.0), "gaussian L2");
  if (key == "etaHeart.L2log") {
    Interval v = sqrt(pi) / 16.0 *
                 (square(pi) + 2.0 * square(gamma_c) + 8.0 * gamma_c * ln2 +
                  8.0 * square(ln2));
    return E(sqrt(v), "gaussian log-L2");
  }
  if (key == "etaHeart.over_sqrt_t.L1")
    return E(gamma_abs(CInterval(Interval(0.25), Interval(0.0))) /
                 pow(Interval(2.0), Interval(0.75)),
             "gaussian /sqrt(t) L1");
  if (key == "etaHeart.sqrt_t.L1")
    return E(gamma_abs(CInterval(Interval(0.75), Interval(0.0))) /
                 pow(Interval(2.0), Interval(0.25)),
             "gaussian sqrt(t) L1");

  if (key == "phi.L1") return E(sqrt(pi / 2.0), "t^2 gaussian mass");
  if (key == "phi.L2sq") return E(3.0 / 8.0 * sqrt(pi), "t^2 gaussian L2^2");
  if (key == "phi.L2log_sq") {
    Interval v = sqrt(pi) / 64.0 *
                 (8.0 * (3.0 * gamma_c - 8.0) * ln2 + 3.0 * square(pi) +
                  6.0 * square(gamma_c) + 24.0 * square(ln2) + 16.0 -
                  32.0 * gamma_c);
    return E(v, "t^2 gaussian log-L2^2");
  }
  if (key == "phi.over_sqrt_t.L1")
    return E(pow(Interval(2.0), Interval(0.25)) *
                 gamma_abs(CInterval(Interval(0.25), Interval(0.0))) / 4.0,
             "t^2 gaussian /sqrt(t) L1");
  if (key == "phi.Linf") return E(2.0 / iv_e(), "t^2 gaussian sup");
  if (key == "phi.t.Linf")
    return E(pow(Interval(3.0), Interval(1.5)) * exp(Interval(-1.5)),
             "t^3 gaussian sup");
  if (key == "phi.logplus.Linf") {
    auto f = [](const Interval& t) {
      if (t.hi() <= 1.0) return Interval(0.0);
      Interval tc(std::max(t.lo(), 1.0), t.hi());
      Interval v = phi_weight_value(tc) * log(tc);
      return t.lo() < 1.0 ? Interval::hull(v, Interval(0.0)) : v;
    };
    return E(sup_abs_bisect(f, 6.0, 30), "t^2 gaussian log+ sup");
  }

  if (key == "etaDiamond.L2log") {
    Interval v = sqrt(pi) / 32.0 *
                 (8.0 * square(ln2) + 2.0 * square(gamma_c) + square(pi) +
                  8.0 * (gamma_c - 2.0) * ln2 - 8.0 * gamma_c);
    return E(sqrt(v), "t gaussian log-L2");
  }
  if (key == "etaDiamond.Linf")
    return E(exp(Interval(-0.5)), "t gaussian sup");
  if (key == "etaDiamond.t.Linf") return E(2.0 / iv_e(), "t^2 gaussian sup");
  if (key == "etaDiamond.t_log.Linf") {
    auto f = [](const Interval& t) {
      Interval tc(std::max(t.lo(), 1e-12), t.hi());
      Interval v = eta_diamond_value(tc) * tc * log(tc);
      return t.lo() <= 1e-12 ? Interval::hull(v, Interval(0.0)) : v;
    };
    return E(sup_abs_bisect(f, 6.0, 32), "t^2 gaussian log sup");
  }

  if (key == "etaCirc.L2sq")
    return E(eta_circ_sq_integrals().plain, "symmetric window L2^2");
  if (key == "etaCirc.L2")
    return E(sqrt(eta_circ_sq_integrals().plain), "symmetric window L2");
  if (key == "etaCirc.d1.L2sq") {
    Interval v = Interval(9151.0) / 128.0 * sqrt(pi) * erf(Interval(1.0)) -
                 Interval(18101.0) / 64.0 / iv_e();
    return E(v, "symmetric window slope L2^2");
  }
  if (key == "etaCirc.log.L2sq")
    return E(eta_circ_sq_integrals().log_sq, "symmetric window log-L2^2");
  if (key == "etaCirc.Linf") return E(Interval(1.0), "symmetric window sup");
  if (key == "etaCirc.log.Linf") {
    auto f = [](const Interval& t) {
      Interval tc(std::max(t.lo(), 1e-14), t.hi());
      Interval v = etacirc::value(tc) * log(tc);
      return t.lo() <= 1e-14 ? Interval::hull(v, Interval(0.0)) : v;
    };
    return E(sup_abs_bisect(f, 2.0, 38), "symmetric window log sup");
  }
  if (key == "etaCirc.over_t.Linf") {
    // eta_circ(t)/t = t^2 (2-t)^3 e^{-(t-1)^2/2}: evaluate the divided
    // polynomial directly so no interval division happens near t = 0.
    static const Poly divided = [] {
      Poly p;
      p.c = {Interval(0.0), Interval(0.0), Interval(8.0), Interval(-12.0),
             Interval(6.0), Interval(-1.0)};
      return p;
    }();
    auto f = [](const Interval& t) {
      Interval tc(std::max(t.lo(), 0.0), std::min(t.hi(), 2.0));
      return divided.eval(tc) * exp(-square(tc - 1.0) / 2.0);
    };
    return E(sup_abs_bisect(f, 2.0, 36), "symmetric window /t sup");
  }
  if (key == "etaCirc.t.Linf") {
    auto f = [](const Interval& t) { return etacirc::value(t) * t; };
    return E(sup_abs_bisect(f, 2.0, 36), "symmetric window t sup");
  }
  if (key == "etaCirc.d3.L1")
    return E(eta_circ_d3_l1(), "symmetric window third-derivative mass");

  if (key == "etaPlus200.L1") return E(eta_plus_weighted_l1(0.0), "band-limited window L1");
  if (key == "etaPlus200.L2") {
    Interval gap = eta_plus_gap(200).l2;
    Interval base = sqrt(eta_circ_sq_integrals().plain);
    return E(Interval((base - gap).lo(), (base + gap).hi()),
             "band-limited window L2");
  }
  if (key == "etaPlus200.L2log") {
    Interval c = hfun::h_constants().mh_l1 / (2.0 * pi);
    return E(Interval(0.0, (c * get("etaDiamond.L2log")).hi()),
             "band-limited window log-L2");
  }
  if (key == "etaPlus200.Linf")
    return E(Interval(0.0, eta_plus_sup_bound(200).hi()),
             "band-limited window sup");
  if (key == "etaPlus200.t.Linf") {
    Interval band = h_H_band_over_t(200);
    Interval base = get("etaCirc.t.Linf");
    Interval extra = band * get("phi.t.Linf");  // |t^2 e^{-t^2/2}| sup reuse
    return E(Interval(0.0, (base + extra).hi()), "band-limited window t sup");
  }

  if (key == "etaStar49.L1")
    return E(sqrt(pi / 2.0) / 49.0, "convolved window mass");
  if (key == "etaStar49.L2sq")
    return E(3.0 / (4.0 * 49.0) * get("eta2.over_sqrt_t.L2sq") *
                 get("phi.L2sq"),
             "convolved window L2^2");
  if (key == "etaStar49.Linf") {
    // |eta2/t|_1 |phi|_inf = 4 (log 2)^2 * 2/e
    Interval v = 4.0 * square(ln2) * 2.0 / iv_e();
    return E(Interval(0.0, v.hi()), "convolved window sup");
  }

  if (key == "h.C0") return E(hfun::h_constants().C[0], "window C0");
  if (key == "h.C1") return E(hfun::h_constants().C[1], "window C1");
  if (key == "h.C2") return E(hfun::h_constants().C[2], "window C2");
  if (key == "h.C3") return E(hfun::h_constants().C[3], "window C3");
  if (key == "h.C4") return E(hfun::h_constants().C[4], "window C4");
  if (key == "h.mh.L1") return E(hfun::h_constants().mh_l1, "window Mellin L1");
  if (key == "h.t_i_mh.half_L1")
    return E(hfun::h_constants().t_i_mh_l1, "window shifted Mellin half L1");
  if (key == "h.d1.Linf") return E(hfun::h_deriv_sup(1), "window slope sup");

  throw domain_error("norm table: unsupported key " + key);
}

}  // namespace goldbach
