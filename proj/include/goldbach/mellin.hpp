#pragma once

// Certified bounds for the Mellin transform F_delta(s) of the twisted
// Gaussian e^{-t^2/2} e(delta t): the saddle-derived envelope, the shifted
// two-branch corollary bound, the exponent function E(rho), and a verified
// quadrature oracle used to sanity-check the envelopes.

#include <vector>

#include "goldbach/interval.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/special.hpp"

namespace goldbach {

struct TwistParams {
  double sigma = 0.5;
  double tau = 20;
  double delta = 0;

  Interval ell() const { return -iv_two_pi() * delta; }           // -2 pi delta
  Interval abs_ell() const { return abs(ell()); }
  Interval rho() const {  // 4 |tau| / ell^2
    Interval l2 = square(ell());
    if (!l2.is_positive()) throw domain_error("rho undefined at delta = 0");
    return 4.0 * std::fabs(tau) / l2;
  }
};

inline Interval upsilon_of(const Interval& rho) {
  return sqrt((1.0 + sqrt(square(rho) + 1.0)) / 2.0);
}

// E(rho) = arccos(1/upsilon)/2 - (upsilon - 1)/rho, increasing in rho.
inline Interval exponent_E(const Interval& rho) {
  if (!(rho.lo() > 0)) throw domain_error("exponent_E needs rho > 0");
  Interval u = upsilon_of(rho);
  return acos(min(1.0 / u, Interval(1.0))) / 2.0 - (u - 1.0) / rho;
}

// Stirling envelope |Gamma(s)| e^{pi tau/2} <= sqrt(2 pi) |s|^{sigma - 1/2}
// e^{1/(12|s|) + sqrt(2)/(180 |s|^3)}, valid for sigma >= 0.
inline Interval gamma_linegrowth(double sigma, double tau) {
  Interval s2 = Interval(sigma) * sigma + Interval(tau) * tau;
  Interval sabs = sqrt(s2);
  Interval expo = 1.0 / (12.0 * sabs) + sqrt(Interval(2.0)) / (180.0 * sabs * s2);
  return iv_sqrt_2pi() * pow(sabs, Interval(sigma - 0.5)) * exp(expo);
}

// Saddle-point envelope for |F_delta(sigma + i tau)|.  Reflection reduces to
// tau > 0; the opposite-sign case carries the x0 and Gaussian-mass factors.
inline Interval princo_bound(const TwistParams& p) {
  if (p.tau == 0) throw domain_error("princo_bound needs tau != 0");
  if (p.sigma < 0) throw domain_error("princo_bound needs sigma >= 0");
  double atau = std::fabs(p.tau);
  Interval sigma(p.sigma);
  Interval gl = gamma_linegrowth(p.sigma, atau);

  bool opposite = (p.delta != 0) &&
                  ((p.delta > 0) != (p.tau > 0));  // sgn(delta) != sgn(tau)
  if (opposite) {
    Interval l = p.abs_ell();
    Interval rho = p.rho();
    Interval E = exponent_E(rho);
    Interval damp = exp(-E * atau);
    // c_{1,sigma,tau}
    Interval sin_pi8 = sin(iv_pi() / 8.0);
    Interval tan_pi8 = sin_pi8 / cos(iv_pi() / 8.0);
    Interval c1 =
        (1.0 +
         pow(Interval(2.0), Interval(0.25)) *
             pow(2.0 / (1.0 + square(sin_pi8)), sigma / 2.0) +
         exp(-(sqrt(Interval(2.0)) - 1.0) / 2.0 * atau) / pow(tan_pi8, sigma)) /
        2.0;
    Interval branch1 = c1 / pow(Interval(atau), sigma / 2.0);
    Interval best = branch1;
    if (rho.hi() <= 1.5) {
      Interval sin_pi5 = sin(iv_pi() / 5.0);
      Interval sec_2pi5 = 1.0 / cos(2.0 * iv_pi() / 5.0);
      Interval c2 = (1.0 +
                     min(pow(Interval(2.0), sigma + 0.5),
                         sqrt(sec_2pi5) / pow(sin_pi5, sigma)) +
                     exp(-Interval(atau) / 6.0) / pow(1.0 / sqrt(Interval(3.0)), sigma)) /
                    2.0;
      Interval branch2 = c2 / pow(l, sigma);
      best = min(best, branch2);
    }
    Interval v = gl * damp * best;
    return Interval(0.0, v.hi());
  }
  // same-sign or delta = 0
  Interval x0 = 0.51729 * sqrt(Interval(atau));
  Interval gauss_mass(1.0);
  if (p.delta != 0) {
    Interval l = p.abs_ell();
    Interval rho = p.rho();
    if (rho.hi() <= 1.5) x0 = max(x0, 0.84473 * atau / l);
    gauss_mass = exp(-square(l) / 2.0);
  }
  Interval pref = pow(x0, -sigma) * Interval(0.0, gauss_mass.hi());
  Interval osc = (1.0 + iv_pi() / pow(Interval(2.0), Interval(1.5))) *
                     exp(-iv_pi() / 4.0 * atau) +
                 exp(-iv_pi() * atau) / 2.0;
  Interval v = pref * gl * osc;
  return Interval(0.0, v.hi());
}

// |F_delta(s+k)| + |F_delta((1-s)+k)| for sigma in [0,1], |tau| >= 20.
inline Interval amanita_bound(int k, double sigma, double tau, double delta) {
  if (k < 0 || k > 2) throw domain_error("amanita_bound needs k in {0,1,2}");
  if (sigma < 0 || sigma > 1)
    throw domain_error("amanita_bound needs sigma in [0,1]");
  if (std::fabs(tau) < 20) throw domain_error("amanita_bound needs |tau| >= 20");
  static const double kappa0[3] = {3.001, 4.903, 7.96};
  static const double kappa1[3] = {3.286, 4.017, 5.13};
  double atau = std::fabs(tau);
  Interval l = abs(-iv_two_pi() * delta);
  Interval v;
  if (delta != 0.0) {
    Interval rho = 4.0 * atau / square(l);
    if (rho.hi() < 1.5) {
      Interval ratio = atau / l;
      v = kappa0[k] * pow(ratio, k) * exp(-0.1065 * square(2.0 * ratio));
      return Interval(0.0, v.hi());
    }
    if (!(rho.lo() >= 1.5)) {
      // straddling 3/2: both branch bounds are valid, take the max
      Interval ratio = atau / l;
      Interval a = kappa0[k] * pow(ratio, k) * exp(-0.1065 * square(2.0 * ratio));
      Interval b = kappa1[k] * pow(Interval(atau), Interval(k / 2.0)) *
                   exp(Interval(-0.1598) * atau);
      return Interval(0.0, std::max(a.hi(), b.hi()));
    }
  }
  v = kappa1[k] * pow(Interval(atau), Interval(k / 2.0)) *
      exp(Interval(-0.1598) * atau);
  return Interval(0.0, v.hi());
}

// ---------------------------------------------------------------------------
// oracle: F_delta(s) = (1/s) int_0^inf (t - i w) e^{-t^2/2} e^{iwt} t^s dt,
// with w = 2 pi delta (partial integration; the integrand vanishes at 0 for
// every sigma >= 0).

struct OracleResult {
  CInterval value;
  Interval modulus;
  double achieved_width = 0;
};

namespace detail_mellin {

// |d^4/dt^4 of (t - iw) t^s e^{-t^2/2} e^{iwt}| on [a, b], sigma >= 0
inline double oracle_f4(double a, double b, double sigma, double tau,
                        double w) {
  double saff = std::hypot(sigma + 1, tau);  // |s| slack
  double aw = std::fabs(w);
  auto powmax = [&](double e) {
    return std::max(std::pow(a, e), std::pow(b, e));
  };
  // u1 = (t - iw) t^s: |d^j u1| <= (|s|+1+j)^j t^{sigma+1-j}
  //                              + |w| (|s|+j)^j t^{sigma-j}
  double U1[5];
  for (int j = 0; j <= 4; ++j) {
    U1[j] = std::pow(saff + 1 + j, j) * powmax(sigma + 1 - j) +
            aw * std::pow(saff + j, j) * powmax(sigma - j);
  }
  // u2 = e^{-t^2/2}: |d^j| <= H_j(b) e^{-a^2/2}
  double amp = std::exp(-0.5 * a * a);
  double H[5] = {1.0, b, b * b + 1, b * b * b + 3 * b,
                 b * b * b * b + 6 * b * b + 3};
  // u3 = e^{iwt}: |d^j| = |w|^j
  double W[5] = {1, aw, aw * aw, aw * aw * aw, aw * aw * aw * aw};
  static const int tri[5][5] = {{1, 0, 0, 0, 0},
                                {1, 1, 0, 0, 0},
                                {1, 2, 1, 0, 0},
                                {1, 3, 3, 1, 0},
                                {1, 4, 6, 4, 1}};
  double total = 0;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j1 + j2 <= 4; ++j2) {
      int j3 = 4 - j1 - j2;
      double multi = tri[4][j1] * tri[4 - j1][j2];
      total += multi * U1[j1] * H[j2] * amp * W[j3];
    }
  return total;
}

}  // namespace detail_mellin

inline OracleResult f_delta_oracle(const TwistParams& p, double tol = 1e-12,
                                   long max_panels = 4000000) {
  if (p.sigma < 0) throw domain_error("oracle needs sigma >= 0");
  if (p.sigma == 0 && p.tau == 0) throw domain_error("oracle needs s != 0");
  double w = 2 * 3.14159265358979312 * p.delta;  // used only to size panels
  Interval wi = iv_two_pi() * p.delta;
  double T = std::max(30.0, std::fabs(p.tau));
  // head budget: (eps + |w|) eps^{sigma+1}/(sigma+1) <= tol/4
  double eps = std::min(
      0.05, std::pow(tol * (p.sigma + 1.0) / (4.0 * (std::fabs(w) + 1.0)),
                     1.0 / (p.sigma + 1.0)));

  // head: |(t-iw) t^s e^..| <= (eps + |w|) t^sigma on [0, eps]
  Interval head_mag = (eps + abs(wi)) *
                      pow(Interval(eps), Interval(p.sigma + 1.0)) /
                      (p.sigma + 1.0);
  // tail: (1 + |w|/T) int_T^inf t^{sigma+1} e^{-t^2/2}
  //       <= (1 + |w|/T) T^{sigma-2} (T^2 + 2) e^{-T^2/2}
  Interval tail_mag = (1.0 + abs(wi) / T) *
                      pow(Interval(T), Interval(p.sigma - 2.0)) *
                      (T * T + 2.0) * exp(Interval(-T * T / 2.0));

  // cell layout: geometric to 1, unit-ish up to min(T, 16), coarse beyond
  std::vector<double> cuts{eps};
  double c = eps;
  while (c < 1.0) {
    c = std::min(1.0, c * 4);
    cuts.push_back(c);
  }
  while (c < std::min(T, 16.0)) {
    c = std::min(std::min(T, 16.0), c + 1.0);
    cuts.push_back(c);
  }
  while (c < T) {
    c = std::min(T, c * 2);
    cuts.push_back(c);
  }

  CInterval acc(Interval(0.0), Interval(0.0));
  long used = 0;
  double errt = tol / (4.0 * static_cast<double>(cuts.size()));
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    double f4 = detail_mellin::oracle_f4(a, b, p.sigma, p.tau, w);
    double n4 = std::pow(b - a, 5) * f4 / (180.0 * errt);
    long n = std::max(2l, static_cast<long>(std::ceil(
                              std::sqrt(std::sqrt(std::max(n4, 16.0))))));
    n += n % 2;
    used += n;
    if (used > max_panels)
      throw domain_error("oracle precision unattainable at panel budget");
    auto fre = [&](const Interval& t) {
      // (t - iw) t^s e^{-t^2/2} e^{iwt}; t^s = t^sigma e^{i tau log t}
      Interval lg = log(t);
      Interval amp = pow(t, Interval(p.sigma)) * exp(-square(t) / 2.0);
      Interval phase = wi * t + p.tau * lg;
      Interval cph = cos(phase), sph = sin(phase);
      // (t - iw)(cph + i sph) -> re: t cph + w sph
      return amp * (t * cph + wi * sph);
    };
    auto fim = [&](const Interval& t) {
      Interval lg = log(t);
      Interval amp = pow(t, Interval(p.sigma)) * exp(-square(t) / 2.0);
      Interval phase = wi * t + p.tau * lg;
      Interval cph = cos(phase), sph = sin(phase);
      return amp * (t * sph - wi * cph);
    };
    acc.re += verified_simpson(fre, Interval(a, b), n, f4);
    acc.im += verified_simpson(fim, Interval(a, b), n, f4);
  }
  Interval slack = Interval(-1, 1) * (head_mag.hi() + tail_mag.hi());
  acc.re += slack;
  acc.im += slack;
  CInterval s(Interval(p.sigma), Interval(p.tau));
  CInterval value = acc / s;
  OracleResult out;
  out.value = value;
  out.modulus = value.abs();
  out.achieved_width = out.modulus.width();
  return out;
}

// closed form at delta = 0: F_0(s) = 2^{s/2-1} Gamma(s/2), sigma > 0.
inline Interval f0_closed_abs(double sigma, double tau) {
  if (sigma <= 0) throw domain_error("closed form needs sigma > 0");
  Interval mag = gamma_abs(CInterval(Interval(sigma / 2), Interval(tau / 2)));
  return pow(Interval(2.0), Interval(sigma / 2 - 1)) * mag;
}

}  // namespace goldbach
