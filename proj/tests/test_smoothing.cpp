#include "goldbach/smoothing.hpp"

#include <random>

#include "catch_amalgamated.hpp"
#include "goldbach/norms.hpp"
#include "goldbach/quadrature.hpp"

using goldbach::Interval;
using goldbach::Smoother;
using goldbach::SmootherKind;

TEST_CASE("tent values and tent convolution identity") {
  Interval peak = goldbach::eta2_value(Interval(0.5));
  REQUIRE(peak.contains((4.0 * goldbach::iv_ln2()).mid()));
  REQUIRE(goldbach::eta2_value(Interval(1.0)).contains(0.0));
  REQUIRE(goldbach::eta2_value(Interval(0.2)).hi() == 0.0);

  // eta2 = eta1 *_M eta1 at sampled t, by derivative-free quadrature
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.26, 0.99);
  for (int i = 0; i < 1000; ++i) {
    double t = d(rng);
    auto f = [&](const Interval& w) {
      return goldbach::eta1_value(w) * goldbach::eta1_value(t / w) / w;
    };
    Interval conv =
        goldbach::enclosure_integral(f, Interval(0.45, 1.0), 1200);
    REQUIRE(conv.overlaps(goldbach::eta2_value(Interval(t))));
  }
}

TEST_CASE("symmetric window: peak, symmetry, endpoint") {
  REQUIRE(goldbach::etacirc::value(Interval(1.0)).contains(1.0));
  REQUIRE(goldbach::etacirc::value(Interval(2.5)).hi() == 0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.0, 2.0);
  for (int i = 0; i < 400; ++i) {
    double t = d(rng);
    Interval a = goldbach::etacirc::value(Interval(t));
    Interval b = goldbach::etacirc::value(Interval(2.0) - t);
    REQUIRE(a.overlaps(b));
  }
}

// containment up to the precision of a printed decimal
static bool contains_printed(const Interval& iv, double v, double unit) {
  return iv.overlaps(Interval(v - unit, v + unit));
}

TEST_CASE("window constants against independent quadrature") {
  const auto& hc = goldbach::hfun::h_constants();
  REQUIRE(contains_printed(hc.C[0], 2.02055184, 1e-8));
  REQUIRE(hc.C[1].overlaps(2.0 * goldbach::exp(Interval(0.5))));
  REQUIRE(contains_printed(hc.C[2], 10.79195821037, 1e-11));
  REQUIRE(contains_printed(hc.C[3], 75.1295251672, 1e-10));
  REQUIRE(contains_printed(hc.alpha21, 0.48756597185712, 1e-14));
  REQUIRE(contains_printed(hc.alpha22, 1.48777169309489, 1e-14));

  // independent oracle for C2: Simpson quadrature of |h''| t between the
  // certified roots (sign-constant pieces)
  auto habs2 = [](const Interval& x) {
    return goldbach::abs(goldbach::hfun::h_deriv(2, x)) * x;
  };
  double f4 = 1e5;  // generous |d^4 (h'' t)| bound on [0,2]
  double a1 = hc.alpha21.mid(), a2 = hc.alpha22.mid();
  Interval q = goldbach::verified_simpson(habs2, Interval(0.0, a1), 600, f4) +
               goldbach::verified_simpson(habs2, Interval(a1, a2), 600, f4) +
               goldbach::verified_simpson(habs2, Interval(a2, 2.0), 600, f4);
  // the root midpoints are off by < 1e-11, contributing < 1e-9 to the split
  REQUIRE(std::fabs(q.mid() - hc.C[2].mid()) < 1e-5);
  REQUIRE(q.overlaps(hc.C[2] + Interval(-1e-5, 1e-5)));

  // C4 likewise (quadrature between roots plus the jump at 2)
  auto roots4 = goldbach::isolate_roots(
      [&](const Interval& x) { return goldbach::hfun::h_polys()[4].eval(x); },
      Interval(1e-9, 2.0 - 1e-9), 2048, 50);
  REQUIRE(roots4.size() == 2);
  auto habs4 = [](const Interval& x) {
    return goldbach::abs(goldbach::hfun::h_deriv(4, x)) * goldbach::pow(x, 3);
  };
  double b1 = roots4[0].mid(), b2 = roots4[1].mid();
  // the quadrature covers (0, 2); only the distributional jump at 2 is added
  Interval q4 =
      goldbach::verified_simpson(habs4, Interval(0.0, b1), 800, 4e6) +
      goldbach::verified_simpson(habs4, Interval(b1, b2), 800, 4e6) +
      goldbach::verified_simpson(habs4, Interval(b2, 2.0), 800, 4e6) +
      192.0 * goldbach::exp(Interval(1.5));
  REQUIRE(std::fabs(q4.mid() - hc.C[4].mid()) < 1e-3);

  REQUIRE(hc.mh_l1.hi() <= 16.1939176);
  REQUIRE(hc.t_i_mh_l1.hi() <= 27.8622803);
}

TEST_CASE("band-limited window tracks the sharp one") {
  // eta_plus(1; H=200) within the havana band around eta_circ(1) = 1
  Interval band = goldbach::h_H_band_over_t(200) *
                  goldbach::eta_diamond_value(Interval(1.0));
  Interval ep = goldbach::eta_plus_value(200, Interval(1.0), 1e-7);
  REQUIRE(ep.hi() <= 1.0 + band.hi());
  REQUIRE(ep.lo() >= 1.0 - band.hi());

  // sup bound at both H values
  REQUIRE(goldbach::eta_plus_sup_bound(200).hi() <= 1.079955);
  REQUIRE(goldbach::eta_plus_sup_bound(25).hi() <=
          1.0 + 2.06440727 * (1 + 4.0 / 3.141592653 * std::log(25.0)) / 25.0 +
              1e-5);

  // gap scaling: H -> 2H divides the l2 bound by 2^{7/2}
  Interval g1 = goldbach::eta_plus_gap(100).l2;
  Interval g2 = goldbach::eta_plus_gap(200).l2;
  REQUIRE(std::fabs(g1.hi() / g2.hi() - std::pow(2.0, 3.5)) < 1e-6);
  REQUIRE(goldbach::eta_plus_gap(200).l2.hi() <= 2.42942e-6);
  REQUIRE(goldbach::eta_plus_gap(200).l2_log.hi() <=
          27427.502 / std::pow(200.0, 7.0));
}

TEST_CASE("direct quadrature cross-check of the l2 gap at H=25") {
  // int (eta_plus - eta_circ)^2 over [0, 2.5] <= (274.857/25^3.5)^2, by
  // midpoint evaluation plus a certified Lipschitz correction:
  //   g = (h_H - h) eta_diamond,  |g'| <= C4/(2 pi H^2) e^{-t^2/2}
  //                                      + C4/(3 pi H^3) |eta_diamond'|.
  const double H = 25;
  Interval lip = goldbach::h_H_gap_deriv_times_t(H) +
                 goldbach::h_H_gap_sup(H);  // |eta_diamond'| <= 1
  const int cells = 1600;
  const double w = 2.5 / cells;
  Interval total(0.0);
  for (int i = 0; i < cells; ++i) {
    double mid = (i + 0.5) * w;
    Interval g = goldbach::h_H_gap(H, Interval(mid), 2e-6) *
                 goldbach::eta_diamond_value(Interval(mid));
    Interval gmax = goldbach::abs(g) + lip * (w / 2);
    total += Interval(w) * goldbach::square(gmax);
  }
  // tail beyond 2.5: |h_H - h| <= gap_sup, so the integrand is below
  // gap_sup^2 t^2 e^{-t^2}; int_2.5^inf t^2 e^{-t^2} dt < 0.0074
  total += Interval(0.0, (goldbach::square(goldbach::h_H_gap_sup(H)) *
                          Interval(0.0074))
                             .hi());
  double bound = std::pow(274.857 / std::pow(25.0, 3.5), 2.0);
  REQUIRE(total.hi() <= bound);
}

TEST_CASE("trig combination sup and tent transform") {
  Interval w = goldbach::wollust_sup(3e-4);
  REQUIRE(w.hi() <= 7.87052);
  REQUIRE(w.lo() >= 7.8704);

  // pointwise sanity of |4g + hat f| at t=0: hat{eta2''}(0) = 0
  Interval v0 = goldbach::eta2_hat_dd_abs(Interval(0.0));
  REQUIRE(v0.lo() <= 1e-3);

  // the log-twist bound scales with log y
  Smoother tw{SmootherKind::kLogTwist, 200, 49, 4.0};
  Interval b = goldbach::fourier_dd_sup(tw);
  REQUIRE(b.hi() <= 31.521 * std::log(4.0) + 1e-9);
  REQUIRE(goldbach::log_eta2_dd_l1().contains(96 * 0.6931471805599453));
}

TEST_CASE("eta_star evaluation matches a coarse independent sum") {
  // compare Simpson-based value against the derivative-free enclosure
  for (double u : {0.3, 0.7, 1.2, 2.0, 3.5}) {
    Interval a = goldbach::eta_star_unscaled(Interval(u), 64);
    auto f = [&](const Interval& w) {
      return goldbach::eta2_value(w) * goldbach::phi_weight_value(u / w) / w;
    };
    Interval b = goldbach::enclosure_integral(f, Interval(0.25, 1.0), 3000);
    REQUIRE(a.overlaps(b));
  }
  REQUIRE(goldbach::eta_star_unscaled(Interval(60.0)).hi() < 1e-100);
}

TEST_CASE("norm table basics") {
  auto& nt = goldbach::norm_table();
  REQUIRE(nt.get("eta2.d1.L1").contains(8 * 0.6931471805599453));
  REQUIRE(nt.get("eta2.d2.L1").contains(48.0));
  REQUIRE(nt.get("etaCirc.L2").lo() >= 0.8001287);
  REQUIRE(nt.get("etaCirc.L2").hi() <= 0.8001288);
  REQUIRE(nt.get("etaCirc.d1.L2sq").overlaps(Interval(2.7375292 - 1e-7, 2.7375292 + 1e-7)));
  REQUIRE(nt.get("etaCirc.log.Linf").hi() <= 0.279491);
  REQUIRE(nt.get("etaCirc.over_t.Linf").hi() <= 1.08754396);
  REQUIRE(nt.get("etaCirc.t.Linf").hi() <= 1.06473476);
  REQUIRE(nt.get("phi.L1").contains(1.2533141373155003));
  REQUIRE(nt.get("phi.logplus.Linf").hi() <= 0.381157);
  REQUIRE(nt.get("etaHeart.L2").hi() + nt.get("etaHeart.L2log").hi() <= 2.337);
  REQUIRE(nt.get("etaPlus200.L2").lo() >= 0.8001);
  REQUIRE(nt.get("etaPlus200.L2").hi() <= 0.800132);
  REQUIRE(nt.get("etaPlus200.L2log").hi() <= 0.8299818);
  REQUIRE(nt.get("etaStar49.L2sq").hi() <= 1.77082 / 49.0);
  REQUIRE(nt.get("etaStar49.Linf").hi() <= 1.414);
}
