#include "gpd/io.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace gpd::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> fields;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string field; ss >> field;) line.fields.push_back(field);
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_integer(const Line& line, const std::string& field, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected an integer ") + what + ", got '" + field + "'");
  }
}

Rational parse_real(const Line& line, const std::string& field, const char* what) {
  try {
    return parse_rational(field);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected a number for ") + what + ", got '" + field + "'");
  }
}

std::string render(const Rational& v, const WriteOptions& options) {
  if (options.infinite_death && v == *options.infinite_death) return "inf";
  return format_rational(v);
}

}  // namespace

nlohmann::json number(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1 && boost::multiprecision::abs(numerator(value)) < (BigInt(1) << 62))
    return numerator(value).convert_to<long long>();
  return to_double(value);
}

Barcode parse_barcode(std::istream& in, std::optional<int> m) {
  struct Row {
    int line;
    long long birth, death, mult;
  };
  std::vector<Row> rows;
  long long max_death = 1;
  for (const auto& line : tokenize(in)) {
    if (line.fields.size() < 2 || line.fields.size() > 3)
      throw ParseError(line.number, "expected 'birth death [multiplicity]'");
    Row row{line.number, parse_integer(line, line.fields[0], "birth"), parse_integer(line, line.fields[1], "death"),
            line.fields.size() == 3 ? parse_integer(line, line.fields[2], "multiplicity") : 1};
    if (row.birth < 0 || row.birth >= row.death)
      throw ParseError(line.number, "bar needs 0 <= birth < death");
    if (row.mult < 1) throw ParseError(line.number, "multiplicity must be positive");
    max_death = std::max(max_death, row.death);
    rows.push_back(row);
  }
  const int grid_m = m ? *m : static_cast<int>(max_death - 1);
  Barcode bc(grid_m);
  for (const auto& row : rows) {
    if (row.death > grid_m + 1)
      throw ParseError(row.line, "death " + std::to_string(row.death) + " exceeds m+1 = " + std::to_string(grid_m + 1));
    bc.add({static_cast<int>(row.birth), static_cast<int>(row.death)}, row.mult);
  }
  return bc;
}

RealDiagram parse_diagram(std::istream& in) {
  RealDiagram d;
  for (const auto& line : tokenize(in)) {
    if (line.fields.size() < 2 || line.fields.size() > 3) throw ParseError(line.number, "expected 'birth death [value]'");
    Rational birth = parse_real(line, line.fields[0], "birth");
    Rational death = parse_real(line, line.fields[1], "death");
    long long value = line.fields.size() == 3 ? parse_integer(line, line.fields[2], "value") : 1;
    if (!(birth < death)) throw ParseError(line.number, "point needs birth < death");
    d.add({birth, death}, value);
  }
  return d;
}

Grid parse_grid(std::istream& in) {
  std::vector<Rational> points;
  for (const auto& line : tokenize(in)) {
    if (line.fields.size() != 1) throw ParseError(line.number, "expected one grid value per line");
    points.push_back(parse_real(line, line.fields[0], "grid value"));
    if (points.size() > 1 && !(points[points.size() - 2] < points.back()))
      throw ParseError(line.number, "grid values must be strictly increasing");
  }
  if (points.size() < 2) throw ParseError(0, "a grid needs at least two values");
  return Grid(std::move(points));
}

MapChain parse_mapchain(std::istream& in) {
  const auto lines = tokenize(in);
  std::size_t pos = 0;
  Field field = Field::gf(2);
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  bool have_dims = false;
  while (pos < lines.size()) {
    const auto& line = lines[pos];
    const auto& key = line.fields[0];
    if (key == "field") {
      if (line.fields.size() == 2 && line.fields[1] == "rational") field = Field::rationals();
      else if (line.fields.size() == 2 && line.fields[1] == "gf2") field = Field::gf(2);
      else if (line.fields.size() == 3 && line.fields[1] == "gf") {
        auto p = parse_integer(line, line.fields[2], "prime");
        try {
          field = Field::gf(static_cast<std::uint64_t>(p));
        } catch (const std::exception& ex) {
          throw ParseError(line.number, ex.what());
        }
      } else {
        throw ParseError(line.number, "expected 'field gf2', 'field gf <p>' or 'field rational'");
      }
      ++pos;
    } else if (key == "dims") {
      for (std::size_t i = 1; i < line.fields.size(); ++i) {
        auto d = parse_integer(line, line.fields[i], "dimension");
        if (d < 0) throw ParseError(line.number, "dimensions must be non-negative");
        dims.push_back(static_cast<std::size_t>(d));
      }
      if (dims.empty()) throw ParseError(line.number, "dims needs at least one value");
      have_dims = true;
      ++pos;
    } else if (key == "map") {
      if (!have_dims) throw ParseError(line.number, "'map' before 'dims'");
      const std::size_t i = maps.size();
      if (i + 1 >= dims.size()) throw ParseError(line.number, "more maps than dims allow");
      Matrix mat(dims[i + 1], dims[i]);
      ++pos;
      for (std::size_t r = 0; r < dims[i + 1]; ++r, ++pos) {
        if (pos >= lines.size()) throw ParseError(line.number, "map " + std::to_string(i) + " is missing rows");
        const auto& row = lines[pos];
        if (row.fields.size() != dims[i])
          throw ParseError(row.number, "map " + std::to_string(i) + " rows need " + std::to_string(dims[i]) + " entries");
        for (std::size_t c = 0; c < dims[i]; ++c) mat.at(r, c) = parse_real(row, row.fields[c], "matrix entry");
      }
      maps.push_back(std::move(mat));
    } else {
      throw ParseError(line.number, "unknown map chain keyword '" + key + "'");
    }
  }
  if (!have_dims) throw ParseError(0, "map chain needs a 'dims' line");
  if (maps.size() + 1 != dims.size())
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "expected " + std::to_string(dims.size() - 1) + " maps, got " + std::to_string(maps.size()));
  try {
    return MapChain(std::move(dims), std::move(maps), field);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(0, ex.what());
  }
}

void write_diagram(std::ostream& out, const RealDiagram& diagram, const WriteOptions& options) {
  for (const auto& [iv, v] : diagram.points())
    out << format_rational(iv.birth) << ' ' << render(iv.death, options) << ' ' << v << '\n';
}

void write_graded(std::ostream& out, const std::vector<RealDiagram>& levels, int first_k, const WriteOptions& options) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) out << '\n';
    out << "# k = " << first_k + static_cast<int>(i) << '\n';
    write_diagram(out, levels[i], options);
  }
}

void write_landscape(std::ostream& out, const Landscape& landscape) {
  for (int k = 1; k <= landscape.K(); ++k) {
    if (k > 1) out << '\n';
    for (const auto& p : landscape.level(k))
      out << k << ' ' << format_rational(p.t) << ' ' << format_rational(p.h) << '\n';
  }
}

void write_landscape_samples(std::ostream& out, const Landscape& landscape, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least two samples per level");
  for (int k = 1; k <= landscape.K(); ++k) {
    const auto& pts = landscape.level(k);
    if (pts.empty()) continue;
    if (k > 1) out << '\n';
    const Rational lo = pts.front().t, hi = pts.back().t;
    for (int s = 0; s < samples; ++s) {
      const Rational t = lo + (hi - lo) * s / (samples - 1);
      out << k << ' ' << to_double(t) << ' ' << to_double(landscape_eval(landscape, k, t)) << '\n';
    }
  }
}

nlohmann::json to_json(const RealDiagram& diagram, const WriteOptions& options) {
  auto points = nlohmann::json::array();
  for (const auto& [iv, v] : diagram.points()) {
    nlohmann::json death = options.infinite_death && iv.death == *options.infinite_death
                               ? nlohmann::json("inf")
                               : number(iv.death);
    points.push_back({{"birth", number(iv.birth)}, {"death", death}, {"value", v}});
  }
  return points;
}

nlohmann::json to_json(const Landscape& landscape) {
  auto levels = nlohmann::json::array();
  for (int k = 1; k <= landscape.K(); ++k) {
    auto pts = nlohmann::json::array();
    for (const auto& p : landscape.level(k)) pts.push_back({{"t", number(p.t)}, {"h", number(p.h)}});
    levels.push_back({{"k", k}, {"critical_points", pts}});
  }
  return levels;
}

nlohmann::json to_json(const Coupling& coupling) {
  auto pairs = nlohmann::json::array();
  auto point = [](const PlanePoint& p) {
    return nlohmann::json{{"x", number(p.x)}, {"y", number(p.y)}, {"diagonal", p.on_diagonal()}};
  };
  for (const auto& pr : coupling.pairs)
    pairs.push_back({{"source", point(pr.source)}, {"target", point(pr.target)}, {"multiplicity", pr.multiplicity}});
  return pairs;
}

nlohmann::json to_json(const StabilityReport& r) {
  auto levels = nlohmann::json::array();
  for (std::size_t i = 0; i < r.level_distances.size(); ++i) {
    levels.push_back({{"k", i + 1},
                      {"distance", number(r.level_distances[i])},
                      {"ratio", r.ratios[i] ? number(*r.ratios[i]) : nlohmann::json(nullptr)},
                      {"bound_factor", i + 1 < r.level_distances.size() ? 2 : 1}});
  }
  return {{"K", r.K},
          {"distance", number(r.distance)},
          {"levels", levels},
          {"level_sum", number(r.level_sum)},
          {"upper_bound", number((2 * r.K - 1) * r.distance)},
          {"level_bounds_hold", r.level_bounds_hold},
          {"above_K_zero", r.above_K_zero},
          {"lower_bound_holds", r.lower_bound_holds},
          {"upper_bound_holds", r.upper_bound_holds},
          {"lower_bound_sharp", r.lower_bound_sharp},
          {"upper_bound_sharp", r.upper_bound_sharp},
          {"failures", r.failures}};
}

nlohmann::json to_json(const TriangleReport& r) {
  auto finite = [](double x) { return std::isinf(x) ? nlohmann::json("inf") : nlohmann::json(x); };
  return {{"eps", number(r.eps)},
          {"k", r.k},
          {"p", finite(r.cost.p)},
          {"q", finite(r.cost.q)},
          {"W_Dk_Fk", r.d_f},
          {"W_Dk_Ek", r.d_e},
          {"W_Ek_Fk", r.e_f},
          {"closed_W_Dk_Fk", r.closed_d_f},
          {"closed_W_Dk_Ek", r.closed_d_e},
          {"closed_W_Ek_Fk", r.closed_e_f},
          {"matches_closed_forms", r.matches_closed_forms},
          {"triangle_violated", r.violated}};
}

}  // namespace gpd::io
