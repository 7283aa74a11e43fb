#include <catch_amalgamated.hpp>

#include <sstream>

#include "gpd/grading.hpp"
#include "gpd/io.hpp"

using namespace gpd;

namespace {

template <class Fn>
int error_line(Fn&& fn) {
  try {
    fn();
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("barcode files") {
  std::istringstream in("# three bars\n2 8 1\n\n4 12   # trailing comment\n6 10 1\n");
  const Barcode bc = io::parse_barcode(in);
  CHECK(bc.m() == 11);
  CHECK(bc.size() == 3);
  std::istringstream wide("1 3 2\n");
  CHECK(io::parse_barcode(wide, 6).m() == 6);
  std::istringstream empty("# nothing\n");
  CHECK(io::parse_barcode(empty).empty());

  CHECK(error_line([] {
          std::istringstream s("1 3\n2 x 1\n");
          io::parse_barcode(s);
        }) == 2);
  CHECK(error_line([] {
          std::istringstream s("1 3\n\n5 5\n");
          io::parse_barcode(s);
        }) == 3);
  CHECK(error_line([] {
          std::istringstream s("1 3 0\n");
          io::parse_barcode(s);
        }) == 1);
  CHECK(error_line([] {
          std::istringstream s("1 3 1 4\n");
          io::parse_barcode(s);
        }) == 1);
  CHECK(error_line([] {
          std::istringstream s("1 3\n2 9\n");
          io::parse_barcode(s, 5);
        }) == 2);
  CHECK(error_line([] {
          std::istringstream s("1.5 3\n");
          io::parse_barcode(s);
        }) == 1);
}

TEST_CASE("diagram and grid files") {
  std::istringstream in("0.5 3 1\n1/3 2 -1\n0.5 3 1\n");
  const RealDiagram d = io::parse_diagram(in);
  CHECK(d(RealInterval{Rational(1, 2), 3}) == 2);
  CHECK(d(RealInterval{Rational(1, 3), 2}) == -1);
  CHECK(error_line([] {
          std::istringstream s("3 1 1\n");
          io::parse_diagram(s);
        }) == 1);

  std::istringstream g("0\n0.25\n# comment\n1e1\n");
  const Grid grid = io::parse_grid(g);
  CHECK(grid.m() == 1);
  CHECK(grid[1] == Rational(1, 4));
  CHECK(error_line([] {
          std::istringstream s("0\n2\n1\n");
          io::parse_grid(s);
        }) == 3);
}

TEST_CASE("map chain files") {
  std::istringstream in(
      "field gf 3\n"
      "dims 1 2 1\n"
      "map\n1\n1\n"
      "map\n1 -1\n");
  const MapChain chain = io::parse_mapchain(in);
  CHECK(chain.m() == 2);
  CHECK(chain.field().prime == 3);
  const auto rank = rank_from_mapchain(chain);
  CHECK(rank(0, 3) == 0);
  CHECK(rank(0, 2) == 1);
  CHECK(rank(1, 3) == 1);

  CHECK(error_line([] {
          std::istringstream s("dims 1 1\nmap\n1 1\n");
          io::parse_mapchain(s);
        }) == 3);
  CHECK(error_line([] {
          std::istringstream s("field gf 4\n");
          io::parse_mapchain(s);
        }) == 1);
  CHECK(error_line([] {
          std::istringstream s("dims 1 1\nbogus\n");
          io::parse_mapchain(s);
        }) == 2);
}

TEST_CASE("writers are sorted and exact") {
  const RealDiagram d = interval(4, 12) + interval(2, 8) + interval(Rational(1, 3), Rational(5, 2), -1);
  std::ostringstream out;
  io::write_diagram(out, d);
  CHECK(out.str() == "1/3 2.5 -1\n2 8 1\n4 12 1\n");

  std::ostringstream inf;
  io::write_diagram(inf, d, {Rational(12)});
  CHECK(inf.str() == "1/3 2.5 -1\n2 8 1\n4 inf 1\n");

  std::ostringstream graded;
  io::write_graded(graded, {interval(2, 8), interval(6, 8)}, 2);
  CHECK(graded.str() == "# k = 2\n2 8 1\n\n# k = 3\n6 8 1\n");

  const Landscape land({{{2, 0}, {5, 3}, {8, 0}}, {{6, 0}, {7, 1}, {8, 0}}});
  std::ostringstream l;
  io::write_landscape(l, land);
  CHECK(l.str() == "1 2 0\n1 5 3\n1 8 0\n\n2 6 0\n2 7 1\n2 8 0\n");

  std::ostringstream samples;
  io::write_landscape_samples(samples, Landscape({{{2, 0}, {5, 3}, {8, 0}}}), 3);
  CHECK(samples.str() == "1 2 0\n1 5 3\n1 8 0\n");
}

TEST_CASE("json mirrors") {
  const auto j = io::to_json(interval(Rational(1, 2), 3, -1));
  CHECK(j.dump() == R"([{"birth":0.5,"death":3,"value":-1}])");
  const auto l = io::to_json(Landscape({{{2, 0}, {5, 3}, {8, 0}}}));
  CHECK(l[0]["k"] == 1);
  CHECK(l[0]["critical_points"][1]["h"] == 3);
}
