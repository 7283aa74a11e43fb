#include <catch_amalgamated.hpp>

#include <random>

#include "gpd/module.hpp"
#include "gpd/oracles.hpp"

using namespace gpd;

namespace {

Barcode three_bars() {
  Barcode bc(11);
  bc.add({2, 8});
  bc.add({4, 12});
  bc.add({6, 10});
  return bc;
}

MapChain identity_chain(int m, std::size_t d) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(m) + 1, d);
  std::vector<Matrix> maps(static_cast<std::size_t>(m), Matrix::identity(d));
  return MapChain(dims, maps);
}

}  // namespace

TEST_CASE("barcode validation") {
  Barcode bc(5);
  CHECK_THROWS_AS(bc.add({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(bc.add({2, 7}), std::invalid_argument);
  CHECK_THROWS_AS(bc.add({1, 2}, 0), std::invalid_argument);
  bc.add({0, 6}, 2);
  bc.add({0, 6});
  CHECK(bc.size() == 3);
}

TEST_CASE("rank from the three-bar barcode") {
  const auto rank = rank_from_barcode(three_bars());
  CHECK(rank(6, 8) == 3);
  CHECK(rank(4, 8) == 2);
  CHECK(rank(2, 9) == 0);
  CHECK(rank(4, 12) == 1);
  CHECK(rank(0, 1) == 0);
  CHECK(rank.max_rank() == 3);
  CHECK(rank_from_barcode(Barcode(4)).table().support_size() == 0);
}

TEST_CASE("rank tables from barcodes are order-reversing") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracles::RandomModuleSpec spec{static_cast<int>(seed % 9), 10, 3, seed};
    const Barcode bc = oracles::random_barcode(spec);
    const auto rank = rank_from_barcode(bc);
    // Exhaustive over nested pairs.
    for (int a = 0; a <= bc.m(); ++a)
      for (int b = a + 1; b <= bc.m() + 1; ++b)
        for (int c = 0; c <= a; ++c)
          for (int d = b; d <= bc.m() + 1; ++d) REQUIRE(rank(a, b) >= rank(c, d));
    for (int a = 0; a <= bc.m(); ++a)
      for (int b = a + 1; b <= bc.m() + 1; ++b) REQUIRE(rank(a, b) == oracles::count_rank(bc, a, b));
  }
}

TEST_CASE("persistence diagram recovers the barcode") {
  const auto pd = diagram_from_rank(rank_from_barcode(three_bars()));
  CHECK(pd.points().size() == 3);
  CHECK(pd({2, 8}) == 1);
  CHECK(pd({4, 12}) == 1);
  CHECK(pd({6, 10}) == 1);
  CHECK(diagram_from_rank(rank_from_barcode(Barcode(3))).empty());
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    const Barcode bc = oracles::random_barcode({static_cast<int>(seed % 12), 20, 3, seed});
    const auto rank = rank_from_barcode(bc);
    const auto diagram = diagram_from_rank(rank);
    REQUIRE(barcode_from_diagram(diagram) == bc);
    REQUIRE(zeta_convolve(diagram.to_function()) == rank.table());
  }
}

TEST_CASE("non-realizable rank table is reported") {
  // Order-reversing but its inversion is negative at [1,2).
  IntervalFunction t(2);
  t.set({0, 2}, 1);
  t.set({1, 3}, 1);
  t.set({0, 1}, 1);
  t.set({1, 2}, 1);
  t.set({2, 3}, 1);
  const RankTable rank(t);
  try {
    diagram_from_rank(rank);
    FAIL("expected RealizabilityError");
  } catch (const RealizabilityError& e) {
    CHECK(e.cell() == GridInterval{1, 2});
  }
  IntervalFunction bad(2);
  bad.set({0, 3}, 1);
  CHECK_THROWS_AS(RankTable(bad), std::invalid_argument);
}

TEST_CASE("identity chain: every composite has full rank") {
  // M(m+1) = 0 is appended past the grid, so [a, m+1) still sees rank M(a <= m).
  const auto rank = rank_from_mapchain(identity_chain(5, 3));
  for (int a = 0; a <= 5; ++a)
    for (int b = a + 1; b <= 6; ++b) CHECK(rank(a, b) == 3);
  const auto pd = diagram_from_rank(rank);
  CHECK(pd.points().size() == 1);
  CHECK(pd({0, 6}) == 3);
}

TEST_CASE("a zero map kills every composite through it") {
  std::vector<Matrix> maps(4, Matrix::identity(2));
  maps[2] = Matrix(2, 2);
  const auto rank = rank_from_mapchain(MapChain({2, 2, 2, 2, 2}, maps));
  for (int a = 0; a <= 2; ++a)
    for (int b = 4; b <= 5; ++b) CHECK(rank(a, b) == 0);
  CHECK(rank(0, 3) == 2);
  CHECK(rank(3, 5) == 2);
}

TEST_CASE("map chain shape validation") {
  CHECK_THROWS_AS(MapChain({2, 3}, {Matrix(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(MapChain({2, 3}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Field::gf(4), std::invalid_argument);
}

TEST_CASE("interval sums: linear algebra agrees with bar counting") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Barcode bc = oracles::random_barcode({static_cast<int>(seed % 8), 8, 2, seed});
    for (auto field : {Field::gf(2), Field::gf(3), Field::rationals()})
      REQUIRE(rank_from_mapchain(MapChain::interval_sum(bc, field)) == rank_from_barcode(bc));
  }
}

TEST_CASE("random GF(2) chains give realizable rank tables") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 5;
    std::vector<std::size_t> dims;
    for (int i = 0; i <= m; ++i) dims.push_back(rng() % 5);
    std::vector<Matrix> maps;
    for (int i = 0; i < m; ++i) {
      Matrix a(dims[static_cast<std::size_t>(i) + 1], dims[static_cast<std::size_t>(i)]);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = static_cast<int>(rng() % 2);
      maps.push_back(a);
    }
    const auto rank = rank_from_mapchain(MapChain(dims, maps));
    for (int a = 0; a <= m; ++a) REQUIRE(rank(a, a + 1) == static_cast<std::int64_t>(dims[static_cast<std::size_t>(a)]));
    const auto pd = diagram_from_rank(rank);  // throws if some multiplicity is negative
    REQUIRE(zeta_convolve(pd.to_function()) == rank.table());
  }
}

TEST_CASE("rank over the rationals differs from GF(2) when it should") {
  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = -1;
  CHECK(rank(a, Field::rationals()) == 2);
  CHECK(rank(a, Field::gf(2)) == 1);
  CHECK(rank(a, Field::gf(3)) == 2);
}

TEST_CASE("rank evaluator on a grid") {
  const auto rank = rank_from_barcode(three_bars());
  const RankEvaluator identity(rank, Grid::identity(11));
  for (int a = 0; a <= 11; ++a)
    for (int b = a + 1; b <= 12; ++b) CHECK(identity(a, b) == rank(a, b));
  CHECK(identity(Rational(13, 2), Rational(15, 2)) == 3);
  CHECK(identity(-1, 3) == 0);
  CHECK(identity(5, 13) == 0);
  CHECK_THROWS_AS(RankEvaluator(rank, Grid::identity(4)), std::invalid_argument);

  // Constant on grid cells: [iota(i), iota(i+1)) x (iota(j-1), iota(j)].
  std::mt19937_64 rng(2);
  const Grid g = oracles::random_grid(11, rng);
  const RankEvaluator ev(rank, g);
  for (int i = 0; i <= 10; ++i)
    for (int j = i + 1; j <= 12; ++j) {
      const Rational a = g[i] + (g[i + 1] - g[i]) / 3;
      const Rational b = g[j] - (g[j] - g[j - 1]) / 5;
      if (!(a < b)) continue;
      CHECK(ev(a, b) == rank(i, j));
      CHECK(ev(g[i], g[j]) == rank(i, j));
    }
}

TEST_CASE("grids and diagram relabelling") {
  CHECK_THROWS_AS(Grid({Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({Rational(1), Rational(1)}), std::invalid_argument);
  const Grid g({Rational(0), Rational(1, 2), Rational(3), Rational(7)});
  CHECK(g.m() == 2);
  CHECK(*g.floor_index(Rational(2)) == 1);
  CHECK(*g.ceil_index(Rational(2)) == 2);
  CHECK(!g.floor_index(Rational(-1)));
  CHECK(!g.ceil_index(Rational(8)));
  SignedDiagram d(2, DiagramKind::graded);
  d.add({0, 3}, 1);
  d.add({1, 2}, -1);
  const RealDiagram r = extend_to_grid(d, g);
  CHECK(r(RealInterval{0, 7}) == 1);
  CHECK(r(RealInterval{Rational(1, 2), 3}) == -1);
  CHECK_THROWS_AS(d.add({1, 2}, -1), RealizabilityError);
}

TEST_CASE("embedding a real diagram on its own coordinates") {
  RealDiagram d{{{Rational(1, 2), 3}, 2}, {{1, 3}, 1}};
  const auto [grid, bc] = embed(d);
  CHECK(grid.points() == std::vector<Rational>{Rational(1, 2), 1, 3});
  CHECK(bc.bars().at({0, 2}) == 2);
  CHECK(bc.bars().at({1, 2}) == 1);
  CHECK(extend_to_grid(diagram_from_rank(rank_from_barcode(bc)), grid) == d);
}
