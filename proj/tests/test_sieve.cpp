#include "goldbach/sieve.hpp"

#include <numeric>

#include "catch_amalgamated.hpp"
#include "goldbach/arith_sums.hpp"

using goldbach::FactorSieve;
using goldbach::Interval;
using goldbach::NumberFacts;

TEST_CASE("factor sieve facts match direct factorization") {
  FactorSieve sieve(1, 5000);
  sieve.for_each([&](const NumberFacts& f) {
    auto fac = goldbach::factorize(f.n);
    std::uint64_t phi = f.n, sigma = 1;
    int mu = 1;
    for (auto [p, e] : fac) {
      phi = phi / p * (p - 1);
      std::uint64_t pp = 1, acc = 1;
      for (int i = 0; i < e; ++i) {
        pp *= p;
        acc += pp;
      }
      sigma *= acc;
      mu = e >= 2 ? 0 : -mu;
    }
    if (f.n == 1) phi = sigma = 1, mu = 1;
    REQUIRE(f.phi == phi);
    REQUIRE(f.sigma == sigma);
    REQUIRE(f.mu == mu);
    REQUIRE(f.prime == (fac.size() == 1 && fac[0].second == 1));
    REQUIRE(f.prime_power() == (fac.size() == 1));
  });
}

TEST_CASE("segmented and monolithic sieves agree on overlaps") {
  std::vector<NumberFacts> mono, seg;
  FactorSieve(1, 40000).for_each([&](const NumberFacts& f) {
    if (f.n >= 30000 && f.n < 31000) mono.push_back(f);
  });
  FactorSieve(30000, 1000, 128).for_each(
      [&](const NumberFacts& f) { seg.push_back(f); });
  REQUIRE(mono.size() == seg.size());
  for (size_t i = 0; i < mono.size(); ++i) {
    REQUIRE(mono[i].n == seg[i].n);
    REQUIRE(mono[i].mu == seg[i].mu);
    REQUIRE(mono[i].phi == seg[i].phi);
    REQUIRE(mono[i].sigma == seg[i].sigma);
    REQUIRE(mono[i].prime == seg[i].prime);
  }
}

TEST_CASE("spf table factorizes by repeated division") {
  FactorSieve sieve(1, 2000);
  auto spf = sieve.spf_segment(2, 1998);
  for (std::uint64_t n = 2; n < 2000; ++n) {
    std::uint64_t m = n;
    int guard = 0;
    while (m > 1) {
      std::uint32_t p = m < 2000 ? spf[m - 2] : 0;
      if (p == 0) break;
      REQUIRE(m % p == 0);
      m /= p;
      REQUIRE(++guard < 64);
    }
    REQUIRE(m == 1);
  }
}

TEST_CASE("spf cache round-trips") {
  FactorSieve sieve(1, 1000);
  auto spf = sieve.spf_segment(100, 900);
  std::string path = "/tmp/goldbach_spf_test.bin";
  REQUIRE(FactorSieve::write_cache(path, 100, spf));
  std::uint64_t start = 0;
  std::vector<std::uint32_t> back;
  REQUIRE(FactorSieve::read_cache(path, start, back));
  REQUIRE(start == 100);
  REQUIRE(back == spf);
}

TEST_CASE("mobius partial sums") {
  auto one = goldbach::mobius_sum(1, 1);
  REQUIRE(one.value.lo() == 1.0);
  REQUIRE(one.value.hi() == 1.0);

  // exact rational oracle over n <= 10 (common denominator 2520)
  long num = 0;
  for (std::uint64_t n = 1; n <= 10; ++n)
    num += goldbach::mu_of(n) * (2520 / static_cast<long>(n));
  auto ten = goldbach::mobius_sum(10, 1);
  Interval oracle = goldbach::iv(static_cast<std::int64_t>(num)) / 2520.0;
  REQUIRE(ten.value.overlaps(oracle));
  REQUIRE(ten.value.width() < 1e-14);

  // |sum| <= sqrt(2/x) on a desk slice
  Interval acc(0.0);
  std::uint64_t limit = 200000;
  bool ok = true;
  FactorSieve sieve(1, limit);
  sieve.for_each([&](const NumberFacts& f) {
    if (f.mu) acc += Interval(static_cast<double>(f.mu)) / goldbach::iv(f.n);
    if (f.n >= 33 && acc.mag() * acc.mag() * static_cast<double>(f.n) > 2.0)
      ok = false;
  });
  REQUIRE(ok);
}

TEST_CASE("coprimality filter in mobius_sum") {
  // q = 6: drop multiples of 2 and 3
  auto s = goldbach::mobius_sum(10, 6);
  // n in {1,5,7}: 1 - 1/5 - 1/7 = 23/35
  REQUIRE(s.value.contains(23.0 / 35.0));
}

TEST_CASE("lambda sums") {
  // x = 3 with the tent eta2: only n = 2 contributes
  auto eta2 = [](const Interval& t) {
    using goldbach::Interval;
    Interval l = goldbach::log(2.0 * t);
    return 4.0 * goldbach::max(goldbach::iv_ln2() - goldbach::abs(l),
                               Interval(0.0));
  };
  auto s = goldbach::lambda_weighted_sum(3.0, eta2, 0.25, 1.0);
  Interval expect = goldbach::iv_ln2() *
                    (4.0 * (goldbach::iv_ln2() - goldbach::log(Interval(4.0 / 3.0))));
  REQUIRE(s.value.overlaps(expect));

  Interval psi10 = goldbach::psi_sum(10);
  Interval ref = 3.0 * goldbach::iv_ln2() +
                 2.0 * goldbach::log(Interval(3.0)) +
                 goldbach::log(Interval(5.0)) + goldbach::log(Interval(7.0));
  REQUIRE(psi10.overlaps(ref));

  // psi two ways: weighted sum with indicator weight vs psi_sum
  auto ind = [](const Interval& t) {
    if (t.hi() <= 1.0) return Interval(1.0);
    if (t.lo() > 1.0) return Interval(0.0);
    return Interval(0.0, 1.0);
  };
  auto w = goldbach::lambda_weighted_sum(1e4, ind, 0.0, 1.0);
  Interval direct = goldbach::psi_sum(10000);
  REQUIRE(w.value.overlaps(direct));
}

TEST_CASE("G_q direct values and asymptotic consistency") {
  REQUIRE(goldbach::gq(1.0, 1, Interval(1.33, 1.34)).contains(1.0));

  Interval cE = goldbach::euler_cE(2000000);
  for (double R : {1e5}) {
    Interval g1 = goldbach::gq(R, 1, cE);
    double lr = std::log(R);
    REQUIRE(g1.lo() >= lr + 1.312);
    REQUIRE(g1.hi() <= lr + 1.354);
    Interval g2 = goldbach::gq(R, 2, cE);
    REQUIRE(g2.lo() >= (lr + 1.661) / 2);
    REQUIRE(g2.hi() <= (lr + 1.698) / 2);
  }
  // direct and asymptotic enclosures overlap for a spread of q, R
  for (std::uint64_t q : {1ull, 2ull, 6ull, 30ull, 97ull}) {
    for (double R : {1e4, 1e5}) {
      Interval direct = goldbach::gq(R, q, cE);
      Interval Ri(R);
      Interval main = goldbach::log(Ri) + cE;
      Interval ratio(1.0);
      for (auto [p, e] : goldbach::factorize(q)) {
        Interval pi = goldbach::iv(p);
        main += goldbach::log(pi) / pi;
        ratio *= (pi - 1.0) / pi;
      }
      Interval err =
          7.284 * goldbach::pow(Ri, Interval(-1.0 / 3.0)) * goldbach::f1_of(q);
      Interval asym = ratio * main + Interval(-1, 1) * err.hi();
      REQUIRE(direct.overlaps(asym));
    }
  }
}

TEST_CASE("phi ratio envelope") {
  Interval f3 = goldbach::phi_ratio_bound(3);
  REQUIRE(f3.lo() > 2.0);  // 2/phi(2) = 2 < F(3)
  Interval f = goldbach::phi_ratio_bound(20000);
  bool ok = true;
  FactorSieve sieve(1, 20000);
  sieve.for_each([&](const NumberFacts& fa) {
    if (fa.n >= 1 &&
        static_cast<double>(fa.n) >= f.lo() * 0)  // evaluate all q
      if (static_cast<double>(fa.n) / static_cast<double>(fa.phi) >= f.lo())
        ok = false;
  });
  REQUIRE(ok);
  // paper's working value at r = 150000
  Interval f15 = goldbach::phi_ratio_bound(150000);
  REQUIRE(f15.hi() <= 5.42506);
  REQUIRE(f15.hi() >= 5.42);
}

TEST_CASE("convergent Euler constants") {
  auto ec = goldbach::euler_constants(10000000, 30000000);
  REQUIRE(ec.gcd2_mu2_over_phi_q.lo() >= 2.591461);
  REQUIRE(ec.gcd2_mu2_over_phi_q.hi() <= 2.591463);
  REQUIRE(ec.mu2_over_phi_sq.lo() >= 2.826419);
  REQUIRE(ec.mu2_over_phi_sq.hi() <= 2.826421);
  REQUIRE(ec.c_E.contains(1.332582275));
  REQUIRE(ec.c_E.width() < 1.4e-6);
}

TEST_CASE("sum of (log p)^2 over a dyadic block") {
  Interval s = goldbach::sum_log_p_sq(50, 100);
  // primes 53..97: 53 59 61 67 71 73 79 83 89 97
  Interval ref(0.0);
  for (double p : {53., 59., 61., 67., 71., 73., 79., 83., 89., 97.})
    ref += goldbach::square(goldbach::log(Interval(p)));
  REQUIRE(s.overlaps(ref));
  Interval env = goldbach::sum_log_p_sq(5e7, 1e8);
  REQUIRE(env.hi() <= 0.5 * 1e8 * std::log(1e8) * 1.0000001);
}
