#pragma once

// Segmented smallest-prime-factor sieve delivering mu, phi, sigma, Lambda per
// integer.  Integer work is exact; interval arithmetic enters only when the
// callers divide or take logs.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint32_t> ps;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
        comp[j] = true;
    }
  }
  return ps;
}

struct NumberFacts {
  std::uint64_t n;
  int mu;                  // Moebius
  std::uint64_t phi;       // Euler totient
  std::uint64_t sigma;     // sum of divisors
  std::uint32_t spf;       // smallest prime factor (n itself may exceed 2^32
                           // only when prime; then spf is clamped to 0)
  std::uint8_t distinct;   // number of distinct prime factors
  bool prime;
  double log_spf;          // natural log of spf, rounded to nearest
  // Lambda(n) = log p if n = p^k; the caller widens log_spf to an interval.
  bool prime_power() const { return distinct == 1; }
};

// One sieving pass over [start, start+len), computing full factorizations by
// trial division against the sieving primes.  Deterministic segment order.
class FactorSieve {
 public:
  static constexpr std::uint32_t kDefaultSegment = 1u << 22;

  FactorSieve(std::uint64_t start, std::uint64_t length,
              std::uint32_t segment = kDefaultSegment)
      : start_(start), length_(length), segment_(segment) {
    std::uint64_t top = start_ + length_;
    std::uint32_t root = 2;
    while (static_cast<std::uint64_t>(root) * root < top) ++root;
    primes_ = primes_up_to(root);
  }

  std::uint64_t start() const { return start_; }
  std::uint64_t length() const { return length_; }

  // Calls fn(facts) for every n in [start, start+length) in increasing order.
  void for_each(const std::function<void(const NumberFacts&)>& fn) const {
    std::vector<std::uint64_t> rem, phi, sigma;
    std::vector<std::int8_t> mu;
    std::vector<std::uint32_t> spf;
    std::vector<std::uint8_t> distinct;
    for (std::uint64_t lo = start_; lo < start_ + length_; lo += segment_) {
      std::uint64_t hi = std::min(lo + segment_, start_ + length_);
      std::size_t n = hi - lo;
      rem.assign(n, 0);
      phi.assign(n, 1);
      sigma.assign(n, 1);
      mu.assign(n, 1);
      spf.assign(n, 0);
      distinct.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) rem[i] = lo + i;
      for (std::uint32_t p : primes_) {
        std::uint64_t p64 = p;
        if (p64 * p64 >= hi) break;
        std::uint64_t first = ((lo + p64 - 1) / p64) * p64;
        for (std::uint64_t m = first; m < hi; m += p64) {
          std::size_t i = m - lo;
          std::uint64_t pe = 1, sig_pow = 1, sig_acc = 1;
          int e = 0;
          while (rem[i] % p64 == 0) {
            rem[i] /= p64;
            pe *= p64;
            sig_pow *= p64;
            sig_acc += sig_pow;
            ++e;
          }
          if (e == 0) continue;  // multiple of p^2 already fully divided
          phi[i] *= pe / p64 * (p64 - 1);
          sigma[i] *= sig_acc;
          mu[i] = (e >= 2) ? 0 : -mu[i];
          if (!spf[i]) spf[i] = p;
          ++distinct[i];
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = lo + i;
        if (v == 0) continue;
        NumberFacts f;
        f.n = v;
        if (rem[i] > 1) {  // leftover prime factor > sqrt(hi)
          f.phi = phi[i] * (rem[i] - 1);
          f.sigma = sigma[i] * (rem[i] + 1);
          f.mu = -mu[i];
          f.distinct = distinct[i] + 1;
          f.spf = spf[i] ? spf[i]
                         : (rem[i] <= 0xffffffffull
                                ? static_cast<std::uint32_t>(rem[i])
                                : 0);
          f.prime = (distinct[i] == 0 && v == rem[i]);
        } else {
          f.phi = phi[i];
          f.sigma = sigma[i];
          f.mu = mu[i];
          f.distinct = distinct[i];
          f.spf = spf[i];
          f.prime = (f.distinct == 1 && f.spf == v);
        }
        if (v == 1) {
          f.mu = 1;
          f.phi = 1;
          f.sigma = 1;
          f.prime = false;
          f.distinct = 0;
        }
        if (f.distinct == 1) {
          std::uint64_t base = f.prime && f.spf == 0 ? v : f.spf;
          f.log_spf = std::log(static_cast<double>(base));
          if (f.spf == 0 && f.prime && v <= 0xffffffffull)
            f.spf = static_cast<std::uint32_t>(v);
        } else {
          f.log_spf = 0;
        }
        fn(f);
      }
    }
  }

  // Smallest-prime-factor table for one segment (0 where no sieving prime
  // divides n, i.e. n is 1 or a prime beyond the sieving bound).
  std::vector<std::uint32_t> spf_segment(std::uint64_t lo,
                                         std::uint32_t len) const {
    std::vector<std::uint32_t> spf(len, 0);
    for (std::uint32_t p : primes_) {
      std::uint64_t p64 = p;
      std::uint64_t first = std::max(((lo + p64 - 1) / p64) * p64, p64);
      for (std::uint64_t m = first; m < lo + len; m += p64) {
        std::size_t i = m - lo;
        if (!spf[i]) spf[i] = p;
      }
    }
    // remaining entries are 1 or primes beyond the sieving bound
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v < lo + len; ++v) {
      std::size_t i = v - lo;
      if (!spf[i] && v <= 0xffffffffull)
        spf[i] = static_cast<std::uint32_t>(v);
    }
    return spf;
  }

  // Binary cache: little-endian header (magic, segment_start, length) then
  // 32-bit SPF entries.
  static bool write_cache(const std::string& path, std::uint64_t seg_start,
                          const std::vector<std::uint32_t>& spf) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return false;
    const char magic[8] = {'G', 'B', 'S', 'P', 'F', '0', '0', '1'};
    std::uint64_t len = spf.size();
    bool ok = std::fwrite(magic, 1, 8, f) == 8 &&
              std::fwrite(&seg_start, 8, 1, f) == 1 &&
              std::fwrite(&len, 8, 1, f) == 1 &&
              std::fwrite(spf.data(), 4, spf.size(), f) == spf.size();
    std::fclose(f);
    return ok;
  }
  static bool read_cache(const std::string& path, std::uint64_t& seg_start,
                         std::vector<std::uint32_t>& spf) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    char magic[8];
    std::uint64_t len = 0;
    bool ok = std::fread(magic, 1, 8, f) == 8 &&
              std::memcmp(magic, "GBSPF001", 8) == 0 &&
              std::fread(&seg_start, 8, 1, f) == 1 &&
              std::fread(&len, 8, 1, f) == 1;
    if (ok) {
      spf.assign(len, 0);
      ok = std::fread(spf.data(), 4, len, f) == len;
    }
    std::fclose(f);
    return ok;
  }

 private:
  std::uint64_t start_, length_;
  std::uint32_t segment_;
  std::vector<std::uint32_t> primes_;
};

// Simple bit sieve of primality over [0, n].
inline std::vector<bool> prime_table(std::uint64_t n) {
  std::vector<bool> is(n + 1, true);
  if (n >= 0) is[0] = false;
  if (n >= 1) is[1] = false;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (is[i])
      for (std::uint64_t j = i * i; j <= n; j += i) is[j] = false;
  return is;
}

}  // namespace goldbach
