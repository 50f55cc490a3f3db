#include "goldbach/interval.hpp"

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "goldbach/expr.hpp"
#include "goldbach/special.hpp"

using goldbach::Interval;

namespace {

double ulp(double v) { return std::nextafter(v, 1e300) - v; }

}  // namespace

TEST_CASE("point exp is tight and contains the truth") {
  Interval e = goldbach::exp(Interval(1.0));
  REQUIRE(e.contains(2.718281828459045));
  REQUIRE(e.width() <= 4 * ulp(2.72));

  for (double x : {-20.0, -3.5, -1.0, 0.0, 0.25, 1.0, 5.0, 50.0, 300.0}) {
    Interval r = goldbach::exp(Interval(x));
    long double ref = expl(static_cast<long double>(x));
    REQUIRE(static_cast<long double>(r.lo()) <= ref);
    REQUIRE(ref <= static_cast<long double>(r.hi()));
    REQUIRE(r.width() <= 4 * ulp(r.hi()));
  }
}

TEST_CASE("log, sqrt, pow round-trips") {
  for (double x : {1e-8, 0.1, 0.9999, 1.0, 2.0, 3.141, 1e10, 1e300}) {
    Interval l = goldbach::log(Interval(x));
    long double ref = logl(static_cast<long double>(x));
    REQUIRE(static_cast<long double>(l.lo()) <= ref);
    REQUIRE(ref <= static_cast<long double>(l.hi()));
  }
  REQUIRE(goldbach::log(goldbach::iv_e()).contains(1.0));
  REQUIRE(goldbach::sqrt(Interval(2.0)).contains(1.4142135623730951));
  REQUIRE(goldbach::pow(Interval(2.0), Interval(0.5))
              .contains(1.4142135623730951));
  REQUIRE(goldbach::pow(Interval(-2.0, 3.0), 2).contains(Interval(0.0, 9.0)));
}

TEST_CASE("trig identity and exact zero") {
  Interval z = goldbach::sin(Interval(0.0));
  REQUIRE(z.lo() == 0.0);
  REQUIRE(z.hi() == 0.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    double x = d(rng);
    Interval s = goldbach::sin(Interval(x));
    Interval c = goldbach::cos(Interval(x));
    REQUIRE(static_cast<long double>(s.lo()) <= sinl(x));
    REQUIRE(sinl(x) <= static_cast<long double>(s.hi()));
    REQUIRE(static_cast<long double>(c.lo()) <= cosl(x));
    REQUIRE(cosl(x) <= static_cast<long double>(c.hi()));
    Interval one = goldbach::square(s) + goldbach::square(c);
    REQUIRE(one.contains(1.0));
    REQUIRE(one.width() < 1e-14);
  }
  // wide interval short-circuit
  Interval w = goldbach::sin(Interval(0.0, 10.0));
  REQUIRE(w.lo() == -1.0);
  REQUIRE(w.hi() == 1.0);
  // interval straddling the maximum of sin
  Interval m = goldbach::sin(Interval(1.4, 1.8));
  REQUIRE(m.hi() >= 1.0);
  REQUIRE(m.lo() <= std::sin(1.4));
}

TEST_CASE("inverse trig and erf") {
  REQUIRE(goldbach::atan(Interval(1.0)).contains(0.7853981633974483));
  REQUIRE(goldbach::atan(Interval(1.0)).width() < 1e-13);
  REQUIRE(goldbach::acos(Interval(0.5)).contains(1.0471975511965979));
  REQUIRE(goldbach::acos(Interval(-0.7)).contains(2.3461938234056494));
  REQUIRE(goldbach::acos(Interval(1.0)).contains(0.0));
  REQUIRE(goldbach::erf(Interval(1.0)).contains(0.8427007929497149));
  REQUIRE(goldbach::erf(Interval(1.0)).width() < 1e-14);
  REQUIRE(goldbach::erf(Interval(-0.25)).contains(-0.2763263901682369));
}

TEST_CASE("interval arithmetic basics") {
  Interval a(1.0, 2.0), b(-3.0, 0.5);
  REQUIRE((a + b).contains(Interval(-2.0, 2.5)));
  REQUIRE((a * b).contains(-6.0));
  REQUIRE((a * b).contains(1.0));
  REQUIRE_THROWS_AS(a / b, goldbach::domain_error);
  REQUIRE(goldbach::abs(b).contains(Interval(0.0, 3.0)));
  REQUIRE(goldbach::square(b).lo() == 0.0);
}

TEST_CASE("special functions: Si, Ci, zeta, gamma") {
  // Reference values (classical tables):
  REQUIRE(goldbach::si_integral(Interval(1.0)).contains(0.9460830703671830));
  REQUIRE(goldbach::si_integral(Interval(10.0)).contains(1.6583475942188740));
  REQUIRE(goldbach::si_integral(Interval(100.0)).contains(1.5622254668890562));
  REQUIRE(goldbach::si_integral(Interval(20.0)).width() < 1e-12);
  REQUIRE(goldbach::ci_integral(Interval(1.0)).contains(0.3374039229009681));
  REQUIRE(goldbach::ci_integral(Interval(50.0)).contains(-0.005628386324116306));

  REQUIRE(goldbach::zeta_real(Interval(2.0), 100).contains(1.6449340668482264));
  Interval z32 = goldbach::zeta_real(Interval(1.5), 400);
  REQUIRE(z32.contains(2.6123753486854883));
  REQUIRE(z32.width() < 1e-9);

  // |Gamma(1/2 + i tau)| = sqrt(pi / cosh(pi tau))
  for (double tau : {1.0, 5.0, 20.0}) {
    goldbach::CInterval s(Interval(0.5), Interval(tau));
    Interval g = goldbach::gamma_abs(s);
    Interval pt = goldbach::iv_pi() * tau;
    Interval ch = (goldbach::exp(pt) + goldbach::exp(-pt)) / 2.0;
    Interval ref = goldbach::sqrt(goldbach::iv_pi() / ch);
    REQUIRE(g.overlaps(ref));
    REQUIRE(g.width() / g.lo() < 1e-10);
  }
  REQUIRE(goldbach::gamma_abs(goldbach::CInterval(Interval(1.0), Interval(0.0)))
              .contains(1.0));
  REQUIRE(goldbach::gamma_abs(goldbach::CInterval(Interval(5.0), Interval(0.0)))
              .contains(24.0));
}

TEST_CASE("containment under composition for random expression trees") {
  // Random trees over {+,-,*,/,sqrt,exp,log,sin,cos,erf,abs,pow}; the exact
  // value (80-bit evaluation) must lie in the interval result at point input.
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> leaf(0.05, 4.0);
  std::uniform_int_distribution<int> pick(0, 9);

  struct Node {
    int op;  // 0..3 binary, 4..9 unary: sqrt exp log sin cos erf
    int a = -1, b = -1;
    double c = 0;  // leaf (op == -1): constant or input x0 when c < 0
  };

  int checked = 0;
  long built = 0;
  while (checked < 100000) {
    ++built;
    std::vector<Node> nodes;
    std::uniform_int_distribution<int> depth_d(1, 4);
    int maxdepth = depth_d(rng);
    double x = leaf(rng);

    // build recursively
    auto build = [&](auto&& self, int depth) -> int {
      if (depth >= maxdepth || (depth > 0 && pick(rng) < 2)) {
        Node n;
        n.op = -1;
        n.c = pick(rng) < 4 ? -1.0 : leaf(rng);
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
      }
      Node n;
      n.op = pick(rng);
      n.a = self(self, depth + 1);
      if (n.op < 4) n.b = self(self, depth + 1);
      nodes.push_back(n);
      return static_cast<int>(nodes.size()) - 1;
    };
    int root = build(build, 0);

    auto eval_ld = [&](auto&& self, int i) -> long double {
      const Node& n = nodes[i];
      if (n.op == -1) return n.c < 0 ? static_cast<long double>(x) : n.c;
      long double a = self(self, n.a);
      switch (n.op) {
        case 0: return a + self(self, n.b);
        case 1: return a - self(self, n.b);
        case 2: return a * self(self, n.b);
        case 3: return a / self(self, n.b);
        case 4: return sqrtl(a);
        case 5: return a > 500 ? throw goldbach::domain_error("range") : expl(a);
        case 6: return logl(a);
        case 7: return sinl(a);
        case 8: return cosl(a);
        default: return erfl(a);
      }
    };
    auto eval_iv = [&](auto&& self, int i) -> Interval {
      const Node& n = nodes[i];
      if (n.op == -1) return Interval(n.c < 0 ? x : n.c);
      Interval a = self(self, n.a);
      switch (n.op) {
        case 0: return a + self(self, n.b);
        case 1: return a - self(self, n.b);
        case 2: return a * self(self, n.b);
        case 3: return a / self(self, n.b);
        case 4: return goldbach::sqrt(a);
        case 5: return a.hi() > 500 ? throw goldbach::domain_error("range")
                                    : goldbach::exp(a);
        case 6: return goldbach::log(a);
        case 7: return goldbach::sin(a);
        case 8: return goldbach::cos(a);
        default: return goldbach::erf(a);
      }
    };

    long double ref;
    Interval got;
    try {
      ref = eval_ld(eval_ld, root);
      if (!std::isfinite(static_cast<double>(ref)) ||
          std::fabs(static_cast<double>(ref)) > 1e280)
        continue;
      got = eval_iv(eval_iv, root);
    } catch (const goldbach::domain_error&) {
      continue;  // tree hit a domain edge; not a containment counterexample
    }
    ++checked;
    bool ok = static_cast<long double>(got.lo()) <= ref &&
              ref <= static_cast<long double>(got.hi());
    if (!ok) {
      CAPTURE(built, got.lo(), got.hi(), static_cast<double>(ref));
      REQUIRE(ok);
    }
  }
  REQUIRE(checked == 100000);
}

TEST_CASE("expression parser evaluates and guards domains") {
  using goldbach::iv_eval;
  std::vector<Interval> in{Interval(0.0)};
  REQUIRE(iv_eval("sin(x0)", in).contains(0.0));
  REQUIRE(iv_eval("exp(1)*exp(-1)", {}).contains(1.0));
  REQUIRE(iv_eval("2^10", {}).contains(1024.0));
  REQUIRE_THROWS_AS(iv_eval("log(x0)", in), goldbach::domain_error);
  REQUIRE_THROWS_AS(iv_eval("1/(x0)", in), goldbach::domain_error);
}

TEST_CASE("zeta(3/2)^3 * 1.27 reproduces the documented enclosure") {
  Interval z = goldbach::zeta_real(Interval(1.5), 400);
  Interval v = goldbach::pow(z, 3) * Interval(1.27);
  REQUIRE(v.lo() >= 22.6417);
  REQUIRE(v.hi() <= 22.6418);
}
