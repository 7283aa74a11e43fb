#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gpd/assignment.hpp"
#include "gpd/grading.hpp"
#include "gpd/oracles.hpp"
#include "gpd/transport.hpp"

using namespace gpd;

namespace {

const CostParams unit(1, 1);
constexpr double inf = CostParams::inf;

RealDiagram sharp_a() { return interval(1, 7) + interval(2, 8); }

}  // namespace

TEST_CASE("cost parameters") {
  CHECK_THROWS_AS(CostParams(0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(CostParams(1, std::nan("")), std::invalid_argument);
  CHECK(CostParams(1, inf).exact());
  CHECK_FALSE(CostParams(2, 2).exact());
  CHECK(norm2d(3, 4, 2) == Catch::Approx(5));
  CHECK(norm2d(3, -4, inf) == 4);
  CHECK(norm2d(3, 4, 1) == 7);
}

TEST_CASE("assignment solvers") {
  const CostMatrix<long long> c = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  const auto a = min_cost_assignment(c);
  long long total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += c[i][a[i]];
  CHECK(total == 5);
  const auto b = bottleneck_assignment(c);
  long long worst = 0;
  for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, c[i][b[i]]);
  CHECK(worst == 2);
}

TEST_CASE("small distances by hand") {
  const auto d = wasserstein(interval(3, 9), interval(4, 9), unit);
  REQUIRE(d.exact);
  CHECK(*d.exact == 1);
  CHECK(*wasserstein(interval(3, 9), RealDiagram{}, unit).exact == 6);
  CHECK(*wasserstein(interval(3, 9), RealDiagram{}, CostParams(1, inf)).exact == 3);
  CHECK(wasserstein(RealDiagram{}, RealDiagram{}, unit).value == 0);
  CHECK(wasserstein(interval(3, 9), RealDiagram{}, CostParams(2, 2)).value == Catch::Approx(3 * std::sqrt(2.0)));
  const RealDiagram d1 = sharp_a() + interval(3, 9), e1 = sharp_a() + interval(4, 9);
  CHECK(*wasserstein(d1, e1, unit).exact == 1);
  const auto self = wasserstein(d1, d1, unit);
  CHECK(*self.exact == 0);
  for (const auto& pr : self.coupling.pairs) CHECK(pr.source == pr.target);
}

TEST_CASE("optimal couplings are valid witnesses") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto d = oracles::random_diagram(rng, 5), e = oracles::random_diagram(rng, 5);
    for (const auto& cost : {unit, CostParams(2, 2), CostParams(inf, inf), CostParams(1, inf)}) {
      const auto w = wasserstein(d, e, cost);
      REQUIRE(w.coupling.is_valid_between(d, e));
      for (const auto& pr : w.coupling.pairs) {
        REQUIRE_FALSE((pr.source.on_diagonal() && pr.target.on_diagonal()));
        if (pr.target.on_diagonal()) REQUIRE(pr.target.x == midpoint(pr.source.x, pr.source.y));
        if (pr.source.on_diagonal()) REQUIRE(pr.source.x == midpoint(pr.target.x, pr.target.y));
      }
      REQUIRE(std::fabs(coupling_cost(w.coupling, cost) - w.value) <= 1e-9);
      if (cost.exact()) REQUIRE(*coupling_cost_exact(w.coupling, cost) == *w.exact);
    }
  }
}

TEST_CASE("Hungarian agrees with exhaustive matching") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto d = oracles::random_diagram(rng, 4, 10, 4), e = oracles::random_diagram(rng, 4, 10, 4);
    for (const auto& cost : {unit, CostParams(1, inf), CostParams(2, 2), CostParams(inf, inf), CostParams(1.5, 3),
                             CostParams(inf, 1)}) {
      const auto w = wasserstein(d, e, cost);
      REQUIRE(std::fabs(w.value - oracles::brute_wasserstein(d, e, cost)) <= 1e-9);
      if (cost.exact()) REQUIRE(*w.exact == oracles::brute_wasserstein_exact(d, e, cost));
    }
  }
}

TEST_CASE("signed distance of the sharp family levels") {
  const RealDiagram d = sharp_a() + interval(3, 9), e = sharp_a() + interval(4, 9);
  const auto dl = graded_levels(d), el = graded_levels(e);
  REQUIRE(dl.size() == 3);
  CHECK(*signed_wasserstein(dl[0], el[0], unit).exact == 2);
  CHECK(*signed_wasserstein(dl[1], el[1], unit).exact == 2);
  CHECK(dl[2] == interval(3, 7));
  CHECK(el[2] == interval(4, 7));
  CHECK(*signed_wasserstein(dl[2], el[2], unit).exact == 1);
  const auto g = graded_wasserstein(dl, el, unit);
  CHECK(*g.exact_total == 5);
  CHECK(signed_wasserstein(dl[0], dl[0], unit).value == 0);
  CHECK(signed_wasserstein(dl[0], el[0], unit).metric);
  CHECK_FALSE(signed_wasserstein(dl[0], el[0], CostParams(2, 1)).metric);
}

TEST_CASE("zero padding of graded distances") {
  const auto g = graded_wasserstein({interval(0, 4)}, {interval(0, 4), interval(1, 3)}, unit);
  REQUIRE(g.levels.size() == 2);
  CHECK(*g.levels[0].exact == 0);
  CHECK(*g.levels[1].exact == 2);
}

TEST_CASE("metric properties at p = 1") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracles::random_signed_diagram(rng, 3), b = oracles::random_signed_diagram(rng, 3),
               c = oracles::random_signed_diagram(rng, 3);
    for (const auto& cost : {unit, CostParams(1, inf)}) {
      const Rational ab = *signed_wasserstein(a, b, cost).exact;
      REQUIRE(ab == *signed_wasserstein(b, a, cost).exact);
      REQUIRE(ab <= *signed_wasserstein(a, c, cost).exact + *signed_wasserstein(c, b, cost).exact);
      REQUIRE(ab == *signed_wasserstein(a + c, b + c, cost).exact);
      REQUIRE(*signed_wasserstein(a, a, cost).exact == 0);
    }
  }
}

TEST_CASE("triangle counterexample matches its closed forms") {
  for (const char* eps_text : {"0.01", "0.25", "0.5", "1"}) {
    const Rational eps = parse_rational(eps_text);
    const double e = to_double(eps);
    for (const auto& cost : {CostParams(2, 2), CostParams(inf, 1), CostParams(1.5, 3), CostParams(1.0001, 1)}) {
      // The family breaks the triangle inequality exactly when
      // 2 |(1,eps)|_q > (1+eps) |(1,1)|_p; this always holds for small eps.
      const bool predicted = 2 * norm2d(1, e, cost.q) > (1 + e) * norm2d(1, 1, cost.p) + 1e-9;
      for (int k : {1, 2, 3}) {
        const auto r = triangle_counterexample(eps, k, cost);
        INFO("eps = " << eps_text << ", p = " << cost.p << ", q = " << cost.q << ", k = " << k);
        CHECK(r.matches_closed_forms);
        CHECK(r.violated == predicted);
      }
    }
  }
  // At p = q = 2 the violation disappears at eps = 1, where both sides equal 2 sqrt 2.
  CHECK_FALSE(triangle_counterexample(Rational(1), 1, CostParams(2, 2)).violated);
  CHECK(triangle_counterexample(Rational(1, 100), 1, CostParams(1.5, 3)).violated);
  const auto r = triangle_counterexample(Rational(1, 2), 1, CostParams(2, 2));
  CHECK(r.d_f == Catch::Approx(2 * std::sqrt(1.25)).epsilon(1e-12));
  CHECK(r.d_e == Catch::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.e_f == Catch::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(triangle_counterexample(Rational(1, 2), 1, unit), std::invalid_argument);
  CHECK_THROWS_AS(triangle_counterexample(Rational(2), 1, CostParams(2, 2)), std::invalid_argument);
}

TEST_CASE("real coordinates stay exact") {
  const RealDiagram d = interval(from_double(0.1), from_double(0.7));
  const RealDiagram e = interval(from_double(0.2), from_double(0.7));
  CHECK(*wasserstein(d, e, unit).exact == from_double(0.2) - from_double(0.1));
}
