#pragma once

// Rigorous optimization by interval bisection, grid maximization with a
// second-derivative correction, and sign-certified root isolation.

#include <functional>
#include <string>
#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

using IvFunc = std::function<Interval(const Interval&)>;

struct BisectionReport {
  Interval enclosure;               // encloses the extremum value
  std::vector<Interval> surviving;  // every extremizer lies in one of these
  int iterations = 0;
};

// Encloses max f (mode="max") or min f over the domain.  Sub-intervals whose
// upper bound falls strictly below the best certified lower bound are
// discarded; ties are kept.  Surviving boxes stay sorted by lower endpoint.
inline BisectionReport bisect_extremum(const IvFunc& f, Interval domain,
                                       int iterations, bool maximize = true) {
  if (iterations < 1) throw domain_error("bisect_extremum needs iterations >= 1");
  auto eval = [&](const Interval& x) -> Interval {
    try {
      Interval y = f(x);
      return maximize ? y : -y;
    } catch (const domain_error& e) {
      throw domain_error(std::string(e.what()) + " on sub-interval [" +
                         std::to_string(x.lo()) + ", " + std::to_string(x.hi()) +
                         "]");
    }
  };

  std::vector<Interval> boxes{domain};
  double best_lo = -std::numeric_limits<double>::infinity();
  double best_hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < iterations; ++it) {
    if (boxes.size() > 200000) break;  // bounds stay valid, just less tight
    std::vector<Interval> next;
    next.reserve(boxes.size() * 2);
    for (const Interval& b : boxes) {
      double m = b.mid();
      next.emplace_back(b.lo(), m);
      next.emplace_back(m, b.hi());
    }
    std::vector<Interval> vals;
    vals.reserve(next.size());
    double cutoff = best_lo;
    double hi = -std::numeric_limits<double>::infinity();
    for (const Interval& b : next) {
      Interval v = eval(b);
      vals.push_back(v);
      cutoff = std::max(cutoff, v.lo());
      Interval p = eval(Interval(b.mid()));
      cutoff = std::max(cutoff, p.lo());
    }
    std::vector<Interval> kept;
    for (size_t i = 0; i < next.size(); ++i) {
      if (vals[i].hi() >= cutoff) {
        kept.push_back(next[i]);
        hi = std::max(hi, vals[i].hi());
      }
    }
    boxes = std::move(kept);
    // Both bounds stay valid across iterations, so refinement is monotone.
    best_lo = std::max(best_lo, cutoff);
    best_hi = std::min(best_hi, hi);
  }
  BisectionReport rep;
  rep.iterations = iterations;
  rep.surviving = std::move(boxes);
  rep.enclosure = maximize ? Interval(best_lo, best_hi)
                           : Interval(-best_hi, -best_lo);
  return rep;
}

// Upper bound on sup |f| over the domain from samples at spacing <= step plus
// the correction (1/8) step^2 max|f''| per cell.  The returned interval's
// lower endpoint is the certified interior estimate max_i |f(t_i)|.
inline Interval grid_sup(const IvFunc& f, Interval domain, double step,
                         double f2_bound) {
  if (step <= 0) throw domain_error("grid_sup needs step > 0");
  long n = static_cast<long>(std::ceil(domain.width() / step));
  if (n < 1) n = 1;
  Interval h = (Interval(domain.hi()) - domain.lo()) / static_cast<double>(n);
  Interval corr = square(h) * f2_bound / 8.0;
  Interval prev = abs(f(Interval(domain.lo())));
  Interval lo_max = prev;
  double hi_max = -std::numeric_limits<double>::infinity();
  for (long i = 1; i <= n; ++i) {
    Interval x = domain.lo() + h * static_cast<double>(i);
    if (i == n) x = Interval::hull(x, Interval(domain.hi()));
    Interval cur = abs(f(x));
    lo_max = max(lo_max, cur);
    hi_max = std::max(hi_max, (max(prev, cur) + corr).hi());
    prev = cur;
  }
  return Interval(lo_max.lo(), hi_max);
}

// Sign-certified root isolation: scans `cells` subintervals, keeps those with
// a certified sign change at the endpoints, then bisects each `bisections`
// times keeping the sign change certified.  Throws if any scanned endpoint
// has an uncertain sign next to a sign flip.
inline std::vector<Interval> isolate_roots(const IvFunc& f, Interval domain,
                                           int cells, int bisections) {
  auto sign_of = [&](double x) -> int {
    Interval v = f(Interval(x));
    if (v.lo() > 0) return 1;
    if (v.hi() < 0) return -1;
    return 0;
  };
  std::vector<Interval> roots;
  double a = domain.lo();
  double w = domain.width() / cells;
  int sa = sign_of(a);
  for (int i = 1; i <= cells; ++i) {
    double b = (i == cells) ? domain.hi() : domain.lo() + i * w;
    int sb = sign_of(b);
    if (sa != 0 && sb != 0 && sa != sb) {
      double lo = a, hi = b;
      int slo = sa;
      for (int j = 0; j < bisections; ++j) {
        double m = 0.5 * (lo + hi);
        int sm = sign_of(m);
        if (sm == 0) break;  // keep the current certified bracket
        if (sm == slo)
          lo = m;
        else
          hi = m;
      }
      roots.emplace_back(lo, hi);
    } else if (sa == 0 || sb == 0) {
      // Tolerated only away from actual crossings; resolution failure
      // otherwise.
      if (sa == 0 && sb == 0)
        throw domain_error("root isolation: sign check failed on a cell");
    }
    a = b;
    sa = sb;
  }
  return roots;
}

}  // namespace goldbach
