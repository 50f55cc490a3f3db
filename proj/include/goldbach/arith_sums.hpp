#pragma once

// Exact partial sums over mu, phi, Lambda; G_q with its large-R asymptotic;
// convergent Euler-product constants; the q/phi(q) envelope.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "goldbach/bisect.hpp"
#include "goldbach/interval.hpp"
#include "goldbach/sieve.hpp"

namespace goldbach {

struct SumLedger {
  double x = 0;
  Interval value;
  const char* kind = "";
};

inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t q) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
    if (q % p == 0) {
      int e = 0;
      while (q % p == 0) {
        q /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (q > 1) f.emplace_back(q, 1);
  return f;
}

inline std::uint64_t phi_of(std::uint64_t q) {
  std::uint64_t r = q;
  for (auto [p, e] : factorize(q)) r = r / p * (p - 1);
  return r;
}

inline int mu_of(std::uint64_t q) {
  int m = 1;
  for (auto [p, e] : factorize(q)) {
    if (e >= 2) return 0;
    m = -m;
  }
  return m;
}

inline std::uint64_t radical_of(std::uint64_t q) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(q)) r *= p;
  return r;
}

// f_1(d) = prod_{p|d} (1+p^{-2/3}) (1 + (p^{1/3}+p^{2/3})/(p(p-1)))^{-1}
inline Interval f1_of(std::uint64_t d) {
  Interval r(1.0);
  for (auto [p, e] : factorize(d)) {
    Interval pi(static_cast<double>(p));
    Interval p13 = pow(pi, Interval(1.0 / 3.0));
    Interval p23 = p13 * p13;
    r *= (1.0 + 1.0 / p23) / (1.0 + (p13 + p23) / (pi * (pi - 1.0)));
  }
  return r;
}

// Sum over n <= x coprime to q of mu(n)/n.
inline SumLedger mobius_sum(std::uint64_t x, std::uint64_t q = 1) {
  if (x < 1) throw domain_error("mobius_sum needs x >= 1");
  Interval acc(0.0);
  std::uint64_t rad = radical_of(q);
  FactorSieve sieve(1, x);
  sieve.for_each([&](const NumberFacts& f) {
    if (f.mu == 0) return;
    if (q > 1 && std::gcd(f.n, rad) != 1) return;
    Interval term = Interval(static_cast<double>(f.mu)) / iv(f.n);
    acc += term;
  });
  return {static_cast<double>(x), acc, "mobius_over_n"};
}

// Sum over n of Lambda(n) eta(n/x) for eta supported in [support_lo,
// support_hi] (evaluated through the supplied interval extension).
inline SumLedger lambda_weighted_sum(double x, const IvFunc& eta,
                                     double support_lo, double support_hi) {
  if (x < 1) throw domain_error("lambda_weighted_sum needs x >= 1");
  auto lo_n = static_cast<std::uint64_t>(std::max(1.0, std::floor(support_lo * x)));
  auto hi_n = static_cast<std::uint64_t>(std::ceil(support_hi * x)) + 1;
  Interval acc(0.0);
  FactorSieve sieve(lo_n, hi_n - lo_n + 1);
  sieve.for_each([&](const NumberFacts& f) {
    if (!f.prime_power() || f.n < 2) return;
    Interval t = iv(f.n) / x;
    if (t.lo() > support_hi || t.hi() < support_lo) return;
    Interval lambda = log(Interval(static_cast<double>(
        f.prime ? f.n : static_cast<std::uint64_t>(f.spf))));
    acc += lambda * eta(t);
  });
  return {x, acc, "lambda_weighted"};
}

// psi(x) = sum_{n<=x} Lambda(n).
inline Interval psi_sum(std::uint64_t x) {
  Interval acc(0.0);
  FactorSieve sieve(1, x);
  sieve.for_each([&](const NumberFacts& f) {
    if (f.prime_power() && f.n >= 2)
      acc += log(Interval(static_cast<double>(
          f.prime ? f.n : static_cast<std::uint64_t>(f.spf))));
  });
  return acc;
}

inline Interval euler_cE(std::uint64_t prime_limit = 30000000) {
  Interval sum(0.0);
  FactorSieve sieve(2, prime_limit);
  sieve.for_each([&](const NumberFacts& f) {
    if (!f.prime) return;
    Interval p = iv(f.n);
    sum += log(p) / (p * (p - 1.0));
  });
  // tail: sum_{p > P} log p/(p(p-1)) <= (log P + 1)/(P - 1)
  Interval P(static_cast<double>(prime_limit));
  Interval tail = (log(P) + 1.0) / (P - 1.0);
  return iv_euler_gamma() + sum + Interval(0.0, tail.hi());
}

struct EulerConstants {
  Interval gcd2_mu2_over_phi_q;  // sum_q gcd(q,2) mu^2(q)/(phi(q) q)
  Interval mu2_over_phi_sq;      // sum_q mu^2(q)/phi(q)^2
  Interval c_E;
};

inline EulerConstants euler_constants(std::uint64_t product_limit = 200000,
                                      std::uint64_t ce_limit = 30000000) {
  EulerConstants out;
  Interval prod_a(1.0);  // prod_{2<p<=P} (1 + 1/(p(p-1)))
  Interval prod_b(1.0);  // prod_{p<=P} (1 + 1/(p-1)^2)
  FactorSieve sieve(2, product_limit);
  sieve.for_each([&](const NumberFacts& f) {
    if (!f.prime) return;
    Interval p = iv(f.n);
    if (f.n > 2) prod_a *= 1.0 + 1.0 / (p * (p - 1.0));
    prod_b *= 1.0 + 1.0 / square(p - 1.0);
  });
  // tails by eq-style bounds: log prod_{p>P}(1+1/(p(p-1))) <= 1/P and
  // log prod_{p>P}(1+1/(p-1)^2) <= 1/(P-1).
  Interval P(static_cast<double>(product_limit));
  Interval tail_a = exp(Interval(0.0, (1.0 / P).hi()));
  Interval tail_b = exp(Interval(0.0, (1.0 / (P - 1.0)).hi()));
  out.gcd2_mu2_over_phi_q = 2.0 * prod_a * tail_a;
  out.mu2_over_phi_sq = prod_b * tail_b;
  out.c_E = euler_cE(ce_limit);
  return out;
}

// digamma-style envelope for q/phi(q):  F(r) = e^gamma log log r +
// 2.50637/log log r, valid for every q <= max(3, r).
inline Interval phi_ratio_bound(double r) {
  if (r < 3) throw domain_error("phi_ratio_bound needs r >= 3");
  Interval ll = log(log(Interval(std::max(r, 3.0))));
  if (!ll.is_positive())
    return exp(iv_euler_gamma()) * Interval(1.0) + Interval(2.50637) /
           Interval(0.03, 1.0);  // r barely above e^1: fall back wide
  return exp(iv_euler_gamma()) * ll + Interval(2.50637) / ll;
}

// G_q(R) = sum_{r <= R, (r,q)=1} mu^2(r)/phi(r): exact summation through the
// sieve for R <= 1e8, the Ramare asymptotic enclosure beyond.
inline Interval gq(double R, std::uint64_t q, Interval c_E_value) {
  if (R < 1) return Interval(0.0);
  if (R <= 1e8) {
    auto limit = static_cast<std::uint64_t>(R);
    std::uint64_t rad = radical_of(q);
    Interval acc(0.0);
    FactorSieve sieve(1, limit);
    sieve.for_each([&](const NumberFacts& f) {
      if (f.mu == 0) return;
      if (q > 1 && std::gcd(f.n, rad) != 1) return;
      acc += 1.0 / iv(f.phi);
    });
    return acc;
  }
  Interval Ri(R);
  Interval main = log(Ri) + c_E_value;
  Interval ratio(1.0);
  for (auto [p, e] : factorize(q)) {
    Interval pi = iv(p);
    main += log(pi) / pi;
    ratio *= (pi - 1.0) / pi;
  }
  Interval err = 7.284 * pow(Ri, Interval(-1.0 / 3.0)) * f1_of(q);
  return ratio * main + Interval(-1, 1) * err.hi();
}

inline Interval gq(double R, std::uint64_t q) { return gq(R, q, euler_cE()); }

// sum_{W' < p <= W} (log p)^2, exact for W <= 1e7; above that the
// (1/2) W log W envelope (valid for W >= 117, W' >= W/2).
inline Interval sum_log_p_sq(double Wp, double W) {
  if (W <= 1e7) {
    auto lo = static_cast<std::uint64_t>(std::floor(Wp)) + 1;
    auto hi = static_cast<std::uint64_t>(std::floor(W));
    Interval acc(0.0);
    if (hi >= lo) {
      FactorSieve sieve(lo, hi - lo + 1);
      sieve.for_each([&](const NumberFacts& f) {
        if (f.prime) acc += square(log(iv(f.n)));
      });
    }
    return acc;
  }
  if (W < 117 || Wp < W / 2 - 1e-9)
    throw domain_error("sum_log_p_sq envelope needs W >= 117, W' >= W/2");
  Interval Wi(W);
  return Interval(0.0, (Wi * log(Wi) / 2.0).hi());
}

}  // namespace goldbach
