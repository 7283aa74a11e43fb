// gpd: persistence diagrams, graded diagrams, landscapes and distances from
// barcodes or map chains.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gpd/grading.hpp"
#include "gpd/io.hpp"
#include "gpd/landscape.hpp"
#include "gpd/transport.hpp"
#include "gpd/verify.hpp"

namespace {

using namespace gpd;
using nlohmann::json;

enum Exit { ok = 0, usage = 1, parse = 2, verification = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A map chain starts with a "field" or "dims" line; anything else is a barcode.
bool looks_like_mapchain(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string first;
    if (words >> first) return first == "field" || first == "dims";
  }
  return false;
}

struct Common {
  std::string input;
  std::string grid = "identity";
  std::string output;
  std::string format = "text";
  std::optional<int> m;
  bool inf_death = false;
};

struct Loaded {
  RankTable rank;
  Grid grid;
};

Loaded load(const Common& c) {
  std::optional<Grid> grid;
  if (c.grid != "identity") {
    std::istringstream in(slurp(c.grid));
    try {
      grid = io::parse_grid(in);
    } catch (const io::ParseError& ex) {
      throw io::ParseError(ex.line(), std::string("grid: ") + ex.what());
    }
  }
  const std::string text = slurp(c.input);
  std::istringstream in(text);
  if (looks_like_mapchain(text)) {
    MapChain chain = io::parse_mapchain(in);
    if (grid && grid->m() != chain.m())
      throw InputError("grid has m = " + std::to_string(grid->m()) + " but the map chain has m = " +
                       std::to_string(chain.m()));
    RankTable rank = rank_from_mapchain(chain);
    return {rank, grid ? *grid : Grid::identity(chain.m())};
  }
  std::optional<int> m = c.m;
  if (grid) {
    if (m && *m != grid->m()) throw InputError("--m disagrees with the grid");
    m = grid->m();
  }
  Barcode bc = io::parse_barcode(in, m);
  return {rank_from_barcode(bc), grid ? *grid : Grid::identity(bc.m())};
}

io::WriteOptions write_options(const Common& c, const Grid& grid) {
  io::WriteOptions w;
  if (c.inf_death) w.infinite_death = grid[grid.m() + 1];
  return w;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw InputError("cannot write '" + c.output + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_pd(const Common& c) {
  const auto [rank, grid] = load(c);
  const RealDiagram pd = extend_to_grid(diagram_from_rank(rank), grid);
  const auto w = write_options(c, grid);
  std::ostringstream out;
  if (c.format == "json") out << dump({{"m", grid.m()}, {"points", io::to_json(pd, w)}});
  else io::write_diagram(out, pd, w);
  emit(c, out.str());
  return ok;
}

int cmd_gpd(const Common& c, std::optional<int> k, bool sum) {
  const auto [rank, grid] = load(c);
  const GradedDiagram gd = graded_diagram(graded_rank(rank));
  const auto w = write_options(c, grid);
  std::ostringstream out;
  if (sum) {
    const RealDiagram total = extend_to_grid(gd.sum(), grid);
    if (c.format == "json") out << dump({{"m", grid.m()}, {"points", io::to_json(total, w)}});
    else io::write_diagram(out, total, w);
  } else {
    std::vector<RealDiagram> levels;
    int first = 1;
    if (k) {
      levels.push_back(extend_to_grid(gd.level(*k), grid));
      first = *k;
    } else {
      for (int i = 1; i <= gd.K(); ++i) levels.push_back(extend_to_grid(gd.level(i), grid));
    }
    if (c.format == "json") {
      json arr = json::array();
      for (std::size_t i = 0; i < levels.size(); ++i)
        arr.push_back({{"k", first + static_cast<int>(i)}, {"points", io::to_json(levels[i], w)}});
      out << dump({{"m", grid.m()}, {"K", gd.K()}, {"levels", arr}});
    } else {
      io::write_graded(out, levels, first, w);
    }
  }
  emit(c, out.str());
  return ok;
}

int cmd_landscape(const Common& c, std::optional<int> k, const std::string& plot, int samples) {
  const auto [rank, grid] = load(c);
  Landscape land = landscape_from_graded(graded_diagram(graded_rank(rank)), grid);
  if (k) {
    std::vector<std::vector<CriticalPoint>> only(static_cast<std::size_t>(*k));
    only.back() = land.level(*k);
    land = Landscape(std::move(only));
  }
  std::ostringstream out;
  if (c.format == "json") {
    json levels = json::array();
    for (const auto& level : io::to_json(land))
      if (!level["critical_points"].empty()) levels.push_back(level);
    out << dump({{"levels", levels}});
  } else {
    // Only non-empty levels; each row carries its k.
    std::ostringstream all;
    io::write_landscape(all, land);
    std::istringstream rows(all.str());
    bool pending_blank = false, any = false;
    for (std::string row; std::getline(rows, row);) {
      if (row.empty()) {
        pending_blank = any;
        continue;
      }
      if (pending_blank) out << '\n';
      pending_blank = false;
      any = true;
      out << row << '\n';
    }
  }
  emit(c, out.str());
  if (!plot.empty()) {
    std::ofstream p(plot);
    if (!p) throw InputError("cannot write '" + plot + "'");
    io::write_landscape_samples(p, land, samples);
  }
  return ok;
}

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return CostParams::inf;
  return to_double(parse_rational(s));
}

std::string show(const Distance& d) {
  if (d.exact) return format_rational(*d.exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d.value);
  return buf;
}

json distance_json(const Distance& d, bool witness) {
  json j = {{"value", d.value}, {"metric", d.metric}};
  if (d.exact) j["exact"] = format_rational(*d.exact);
  if (witness) j["coupling"] = io::to_json(d.coupling);
  return j;
}

void write_coupling(std::ostream& out, const Coupling& coupling, const std::string& indent) {
  for (const auto& pr : coupling.pairs)
    out << indent << "pair " << format_rational(pr.source.x) << ' ' << format_rational(pr.source.y) << " -> "
        << format_rational(pr.target.x) << ' ' << format_rational(pr.target.y) << ' ' << pr.multiplicity << '\n';
}

RealDiagram load_diagram(const std::string& path) {
  std::istringstream in(slurp(path));
  return io::parse_diagram(in);
}

int cmd_dist(const Common& c, const std::string& other, const std::string& p, const std::string& q, bool graded,
             bool witness) {
  const CostParams cost(parse_exponent(p), parse_exponent(q));
  const RealDiagram a = load_diagram(c.input), b = load_diagram(other);
  const bool is_signed = !a.is_nonnegative() || !b.is_nonnegative();
  std::ostringstream out;
  const Distance plain = is_signed ? signed_wasserstein(a, b, cost) : wasserstein(a, b, cost);
  if (!graded) {
    if (c.format == "json") {
      json j = distance_json(plain, witness);
      j["p"] = p;
      j["q"] = q;
      out << dump(j);
    } else {
      out << "W " << show(plain) << '\n';
      if (witness) write_coupling(out, plain.coupling, "");
    }
    if (!plain.metric) std::cerr << "warning: signed distance with p > 1 is not a metric\n";
    emit(c, out.str());
    return ok;
  }
  if (is_signed) throw InputError("--graded needs non-negative diagrams");
  if (cost.p > 1) std::cerr << "warning: graded distances with p > 1 are not a metric\n";
  const GradedDistance gd = graded_wasserstein(graded_levels(a), graded_levels(b), cost);
  std::string total;
  if (gd.exact_total) {
    total = format_rational(*gd.exact_total);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", gd.total);
    total = buf;
  }
  if (c.format == "json") {
    json levels = json::array();
    for (std::size_t i = 0; i < gd.levels.size(); ++i) {
      json l = distance_json(gd.levels[i], witness);
      l["k"] = i + 1;
      levels.push_back(l);
    }
    out << dump({{"p", p}, {"q", q}, {"levels", levels}, {"sum", gd.total}, {"sum_exact", total},
                 {"plain", distance_json(plain, witness)}});
  } else {
    for (std::size_t i = 0; i < gd.levels.size(); ++i) {
      out << "W_" << i + 1 << ' ' << show(gd.levels[i]) << '\n';
      if (witness) write_coupling(out, gd.levels[i].coupling, "  ");
    }
    out << "sum " << total << '\n';
    out << "W " << show(plain) << '\n';
    if (witness) write_coupling(out, plain.coupling, "  ");
  }
  emit(c, out.str());
  return ok;
}

int cmd_verify(const Common& c, const std::string& suite, verify::Options options, const std::string& eps,
               const std::string& p, const std::string& q) {
  if (!eps.empty()) options.eps = parse_rational(eps);
  if (!p.empty() || !q.empty()) options.cost = CostParams(parse_exponent(p.empty() ? "1" : p), parse_exponent(q.empty() ? "1" : q));
  const verify::Result result = verify::run(suite, options);
  emit(c, dump(result.report));
  std::cerr << suite << ": " << (result.passed ? "pass" : "FAIL") << '\n';
  return result.passed ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded persistence diagrams, landscapes and Wasserstein distances"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool with_grid) {
    sub->add_option("input", c.input, "input file, '-' for stdin")->required();
    sub->add_option("-o,--output", c.output, "output file (default stdout)");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (with_grid) {
      sub->add_option("--grid", c.grid, "grid file (one real per line) or 'identity'");
      sub->add_option("--m", c.m, "grid size m for barcodes (default: largest death - 1)");
      sub->add_flag("--inf-death", c.inf_death, "print the last grid value as inf");
    }
  };

  auto* pd = app.add_subcommand("pd", "persistence diagram via Moebius inversion of the rank function");
  add_common(pd, true);

  auto* gpd_cmd = app.add_subcommand("gpd", "graded persistence diagrams");
  add_common(gpd_cmd, true);
  std::optional<int> k;
  bool sum = false;
  gpd_cmd->add_option("--k", k, "emit only level k")->check(CLI::PositiveNumber);
  gpd_cmd->add_flag("--sum", sum, "emit the sum of all levels (equals `pd` output)");

  auto* land = app.add_subcommand("landscape", "persistence landscape critical points");
  add_common(land, true);
  std::optional<int> land_k;
  std::string plot;
  int samples = 201;
  land->add_option("--k", land_k, "emit only level k")->check(CLI::PositiveNumber);
  land->add_option("--plot", plot, "also write sampled 'k t h' polylines to this file");
  land->add_option("--samples", samples, "samples per level for --plot")->check(CLI::Range(2, 1000000));

  auto* dist = app.add_subcommand("dist", "(p,q)-Wasserstein distance between two diagram files");
  add_common(dist, false);
  std::string other, p = "1", q = "1";
  bool graded = false, witness = false;
  dist->add_option("other", other, "second diagram file")->required();
  dist->add_option("--p", p, "outer exponent (number or inf)");
  dist->add_option("--q", q, "inner exponent (number or inf)");
  dist->add_flag("--graded", graded, "per-level signed distances of the graded diagrams");
  dist->add_flag("--witness", witness, "print an optimal coupling");

  auto* ver = app.add_subcommand("verify", "property suites: consistency, stability, triangle, geodesic");
  std::string suite, eps, vp, vq;
  verify::Options options;
  ver->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"consistency", "stability", "triangle", "geodesic"}));
  ver->add_option("-o,--output", c.output, "report file (default stdout)");
  ver->add_option("--seed", options.seed, "base seed; instance i uses seed + i");
  ver->add_option("--count", options.count, "number of random instances")->check(CLI::NonNegativeNumber);
  ver->add_option("--sharp-K", options.sharp_K, "stability: check the sharp family for this K")
      ->check(CLI::PositiveNumber);
  ver->add_option("--eps", eps, "triangle: epsilon in (0,1]");
  ver->add_option("--p", vp, "triangle: outer exponent");
  ver->add_option("--q", vq, "triangle: inner exponent");
  ver->add_option("--k", options.k, "triangle: graded level")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*pd) return cmd_pd(c);
    if (*gpd_cmd) return cmd_gpd(c, k, sum);
    if (*land) return cmd_landscape(c, land_k, plot, samples);
    if (*dist) return cmd_dist(c, other, p, q, graded, witness);
    if (*ver) return cmd_verify(c, suite, options, eps, vp, vq);
  } catch (const io::ParseError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return parse;
  } catch (const RealizabilityError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return verification;
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return parse;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return parse;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return usage;
  }
  return usage;
}
