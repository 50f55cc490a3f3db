#pragma once

// Verified quadrature: composite Simpson with the standard remainder, and a
// derivative-free Riemann enclosure for integrands where a fourth-derivative
// bound is unavailable.

#include <vector>

#include "goldbach/bisect.hpp"
#include "goldbach/interval.hpp"

namespace goldbach {

// Composite Simpson over an even number of subintervals.  The remainder is
// (b-a)^5/(2880 n^4) * f4_bound with n = subdivisions/2 (equivalently
// (b-a) h^4 |f''''| / 180).
inline Interval verified_simpson(const IvFunc& f, Interval domain,
                                 long subdivisions, double f4_bound) {
  if (subdivisions < 2 || subdivisions % 2 != 0)
    throw domain_error("verified_simpson needs an even subdivision count");
  Interval a(domain.lo()), b(domain.hi());
  Interval h = (b - a) / static_cast<double>(subdivisions);
  Interval acc = f(a) + f(b);
  for (long i = 1; i < subdivisions; ++i) {
    Interval x = a + h * static_cast<double>(i);
    acc += f(x) * ((i % 2) ? 4.0 : 2.0);
  }
  Interval integral = acc * h / 3.0;
  Interval len = b - a;
  Interval rem = pow(len, 5) / (180.0 * std::pow(static_cast<double>(subdivisions), 4.0)) * f4_bound;
  return integral + Interval(-1, 1) * rem.hi();
}

// First-order Riemann enclosure: sum of cell_width * f(cell).  Needs no
// derivative data; width shrinks like 1/n for Lipschitz f.
inline Interval enclosure_integral(const IvFunc& f, Interval domain, long cells) {
  if (cells < 1) throw domain_error("enclosure_integral needs cells >= 1");
  Interval a(domain.lo()), b(domain.hi());
  Interval h = (b - a) / static_cast<double>(cells);
  Interval acc(0.0);
  Interval prev = a;
  for (long i = 1; i <= cells; ++i) {
    Interval next = (i == cells) ? b : a + h * static_cast<double>(i);
    Interval cell = Interval::hull(prev, next);
    acc += (next - prev) * f(cell);
    prev = next;
  }
  return acc;
}

// Simpson over a list of cells with per-cell subdivision counts and
// fourth-derivative bounds.
inline Interval simpson_cells(const IvFunc& f,
                              const std::vector<double>& breakpoints,
                              const std::vector<long>& subdivisions,
                              const std::vector<double>& f4_bounds) {
  Interval acc(0.0);
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    acc += verified_simpson(f, Interval(breakpoints[i], breakpoints[i + 1]),
                            subdivisions[i], f4_bounds[i]);
  }
  return acc;
}

}  // namespace goldbach
