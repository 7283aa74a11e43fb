#include <catch_amalgamated.hpp>

#include <random>

#include "gpd/geodesic.hpp"
#include "gpd/grading.hpp"
#include "gpd/oracles.hpp"
#include "gpd/stability.hpp"

using namespace gpd;

namespace {

const CostParams unit(1, 1);

Rational w11(const RealDiagram& a, const RealDiagram& b) { return *wasserstein(a, b, unit).exact; }

}  // namespace

TEST_CASE("single birth slide") {
  const auto path = coordinate_geodesic_path(interval(3, 9), interval(4, 9));
  REQUIRE(path.segments().size() == 1);
  CHECK(path.segments()[0].kind == GeodesicSegment::Kind::birth_slide);
  CHECK(path.length() == 1);
  CHECK(path(Rational(1, 2)) == interval(Rational(7, 2), 9));
  CHECK(path(1) == interval(4, 9));
  CHECK_THROWS_AS(path(2), std::out_of_range);
  CHECK_THROWS_AS(path(-1), std::out_of_range);
}

TEST_CASE("collapse onto the diagonal") {
  const auto path = coordinate_geodesic_path(interval(2, 6), RealDiagram{});
  REQUIRE(path.segments().size() == 1);
  CHECK(path.segments()[0].kind == GeodesicSegment::Kind::collapse);
  CHECK(path.length() == 4);
  CHECK(path(1) == interval(3, 6));
  CHECK(path(4).empty());
  const auto grow = coordinate_geodesic_path(RealDiagram{}, interval(2, 6));
  CHECK(grow.segments()[0].kind == GeodesicSegment::Kind::emerge);
  CHECK(grow(3) == interval(3, 6));
  CHECK(grow(0).empty());
}

TEST_CASE("geodesics realise distance along the path") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto d = oracles::random_diagram(rng, 5), e = oracles::random_diagram(rng, 5);
    const auto path = coordinate_geodesic_path(d, e);
    REQUIRE(path.length() == w11(d, e));
    REQUIRE(path(0) == d);
    REQUIRE(path(path.length()) == e);
    for (int j = 0; j < 10; ++j) {
      Rational s = path.length() * static_cast<int>(rng() % 97) / 96;
      Rational t = path.length() * static_cast<int>(rng() % 97) / 96;
      if (t < s) std::swap(s, t);
      REQUIRE(w11(path(s), path(t)) == t - s);
    }
  }
}

TEST_CASE("sharp stability family, K = 3") {
  const auto [d, e] = sharp_stability_family(3);
  CHECK(d == interval(1, 7) + interval(2, 8) + interval(3, 9));
  CHECK(e == interval(1, 7) + interval(2, 8) + interval(4, 9));
  const auto r = verify_stability(d, e);
  CHECK(r.holds());
  CHECK(r.K == 3);
  CHECK(r.distance == 1);
  CHECK(r.level_distances == std::vector<Rational>{2, 2, 1});
  CHECK(r.level_sum == 5);
  CHECK(r.upper_bound_sharp);
  CHECK_FALSE(r.lower_bound_sharp);
  CHECK(r.above_K_zero);
}

TEST_CASE("sharp family for other K") {
  for (int K = 1; K <= 6; ++K) {
    const auto [d, e] = sharp_stability_family(K);
    const auto r = verify_stability(d, e);
    INFO("K = " << K);
    REQUIRE(r.K == K);
    REQUIRE(r.distance == 1);
    for (int k = 1; k <= K; ++k) CHECK(*r.ratios[static_cast<std::size_t>(k) - 1] == (k < K ? 2 : 1));
    CHECK(r.upper_bound_sharp);
    const auto dk = graded_levels(d);
    CHECK(dk.back() == interval(K, 2 * K + 1));
  }
  CHECK_THROWS_AS(sharp_stability_family(0), std::invalid_argument);
}

TEST_CASE("interval modules attain the lower bound") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const int a = static_cast<int>(rng() % 10), c = static_cast<int>(rng() % 10);
    const auto d = interval(a, a + 1 + static_cast<int>(rng() % 6));
    const auto e = interval(c, c + 1 + static_cast<int>(rng() % 6));
    const auto r = verify_stability(d, e);
    REQUIRE(r.holds());
    REQUIRE(r.lower_bound_sharp);
  }
}

TEST_CASE("stability bounds on random pairs") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const auto d = oracles::random_diagram(rng, 6), e = oracles::random_diagram(rng, 6);
    const auto r = verify_stability(d, e);
    INFO("instance " << i);
    REQUIRE(r.failures.empty());
  }
  const auto same = verify_stability(interval(1, 3), interval(1, 3));
  CHECK(same.distance == 0);
  CHECK(!same.ratios[0]);
  const auto none = verify_stability(RealDiagram{}, RealDiagram{});
  CHECK(none.K == 0);
  CHECK(none.holds());
}
