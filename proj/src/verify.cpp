#include "gpd/verify.hpp"

#include <random>
#include <stdexcept>

#include "gpd/geodesic.hpp"
#include "gpd/grading.hpp"
#include "gpd/io.hpp"
#include "gpd/oracles.hpp"
#include "gpd/stability.hpp"

namespace gpd::verify {

namespace {

using nlohmann::json;

// Staircase structure of one level: values in {-1,0,1}, reconstruction,
// and #(-1) = #(+1) - (number of components).
std::optional<std::string> check_level(const SignedDiagram& level) {
  std::int64_t plus = 0, minus = 0;
  for (const auto& [cell, v] : level.points()) {
    if (v == 1) ++plus;
    else if (v == -1) ++minus;
    else return "value " + std::to_string(v) + " at " + to_string(cell);
  }
  Staircase st;
  try {
    st = staircase_decompose(level);
  } catch (const std::exception& ex) {
    return std::string("staircase: ") + ex.what();
  }
  if (!st.satisfies_inequalities()) return "staircase inequalities fail";
  if (st.reconstruct() != extend_to_grid(level, Grid::identity(level.m()))) return "staircase does not reconstruct";
  if (minus != plus - static_cast<std::int64_t>(st.components.size()))
    return "#(-1) = " + std::to_string(minus) + " but #(+1) - components = " +
           std::to_string(plus - static_cast<std::int64_t>(st.components.size()));
  return std::nullopt;
}

}  // namespace

Result consistency(const Options& options) {
  Result result;
  json failures = json::array();
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    oracles::RandomModuleSpec spec{std::uniform_int_distribution<int>(1, 10)(rng), 12, 3, seed};
    const Barcode bc = oracles::random_barcode(spec);
    std::vector<std::string> problems;

    const RankTable rank = rank_from_barcode(bc);
    const IntervalFunction pd = mobius_convolve(rank.table());
    const GradedRank gr = graded_rank(rank);
    GradedDiagram gd(bc.m(), {});
    try {
      gd = graded_diagram(gr);
    } catch (const std::exception& ex) {
      problems.push_back(ex.what());
    }
    if (gr.sum() != rank.table()) problems.push_back("sum of Rank_k differs from Rank");
    if (gd.sum().to_function() != pd) problems.push_back("sum of pd_k differs from pd");
    if (zeta_convolve(pd) != rank.table()) problems.push_back("zeta * pd differs from Rank");
    for (int k = 1; k <= gd.K(); ++k) {
      const auto level = gd.level(k).to_function();
      if (mobius_convolve(gr.level(k)) != level) problems.push_back("mu * Rank_k differs from pd_k at k = " + std::to_string(k));
      if (zeta_convolve(level) != gr.level(k)) problems.push_back("zeta * pd_k differs from Rank_k at k = " + std::to_string(k));
      if (auto bad = check_level(gd.level(k))) problems.push_back("k = " + std::to_string(k) + ": " + *bad);
    }
    if (!problems.empty()) {
      result.passed = false;
      failures.push_back({{"instance", i}, {"seed", seed}, {"m", bc.m()}, {"problems", problems}});
    }
  }
  result.report = {{"suite", "consistency"}, {"seed", options.seed}, {"count", options.count},
                   {"passed", result.passed}, {"failures", failures}};
  return result;
}

Result stability(const Options& options) {
  Result result;
  if (options.sharp_K) {
    const int K = *options.sharp_K;
    const auto [d, e] = sharp_stability_family(K);
    const StabilityReport r = verify_stability(d, e);
    bool pattern = r.K == K && r.distance == 1;
    for (int k = 1; pattern && k <= K; ++k) {
      const auto& ratio = r.ratios[static_cast<std::size_t>(k) - 1];
      pattern = ratio && *ratio == (k < K ? 2 : 1);
    }
    result.passed = r.holds() && pattern && r.upper_bound_sharp;
    result.report = {{"suite", "stability"}, {"sharp_K", K}, {"passed", result.passed},
                     {"ratios_match_sharp_pattern", pattern}, {"instance", io::to_json(r)}};
    return result;
  }

  json instances = json::array();
  json failures = json::array();
  int lower_sharp = 0, upper_sharp = 0;
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    const RealDiagram d = oracles::random_diagram(rng, 6, 12, 2);
    const RealDiagram e = oracles::random_diagram(rng, 6, 12, 2);
    const StabilityReport r = verify_stability(d, e);
    lower_sharp += r.lower_bound_sharp;
    upper_sharp += r.upper_bound_sharp;
    json entry = io::to_json(r);
    entry["instance"] = i;
    entry["seed"] = seed;
    if (!r.holds()) {
      result.passed = false;
      failures.push_back(entry);
    }
    instances.push_back(std::move(entry));
  }
  result.report = {{"suite", "stability"},          {"seed", options.seed},
                   {"count", options.count},         {"passed", result.passed},
                   {"lower_bound_sharp_count", lower_sharp}, {"upper_bound_sharp_count", upper_sharp},
                   {"failures", failures},           {"instances", instances}};
  return result;
}

Result triangle(const Options& options) {
  // Small enough that every default (p, q) breaks the inequality; at eps = 1
  // the (2,2) case is an equality.
  std::vector<Rational> eps_values = {Rational(1, 4), Rational(1, 10), Rational(1, 100)};
  std::vector<CostParams> costs = {CostParams(2, 2), CostParams(CostParams::inf, 1), CostParams(1.5, 3)};
  if (options.eps) eps_values = {*options.eps};
  if (options.cost) costs = {*options.cost};
  Result result;
  json cases = json::array();
  for (const auto& cost : costs)
    for (const auto& eps : eps_values) {
      const TriangleReport r = triangle_counterexample(eps, options.k, cost);
      if (!r.matches_closed_forms || !r.violated) result.passed = false;
      cases.push_back(io::to_json(r));
    }
  result.report = {{"suite", "triangle"}, {"k", options.k}, {"passed", result.passed}, {"cases", cases}};
  return result;
}

Result geodesic(const Options& options) {
  Result result;
  const CostParams unit(1, 1);
  json failures = json::array();
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(seed);
    const RealDiagram d = oracles::random_diagram(rng, 5, 12, 2);
    const RealDiagram e = oracles::random_diagram(rng, 5, 12, 2);
    const GeodesicPath path = coordinate_geodesic_path(d, e);
    std::vector<std::string> problems;
    const Rational w = *wasserstein(d, e, unit).exact;
    if (path.length() != w) problems.push_back("path length " + format_rational(path.length()) + " != W = " + format_rational(w));
    if (path(0) != d) problems.push_back("gamma(0) != D");
    if (path(path.length()) != e) problems.push_back("gamma(L) != E");
    std::uniform_int_distribution<int> tick(0, 64);
    for (int j = 0; j < 10; ++j) {
      Rational s = path.length() * tick(rng) / 64, t = path.length() * tick(rng) / 64;
      if (t < s) std::swap(s, t);
      const Rational between = *wasserstein(path(s), path(t), unit).exact;
      if (between != t - s)
        problems.push_back("W(gamma(" + format_rational(s) + "), gamma(" + format_rational(t) + ")) = " +
                           format_rational(between));
    }
    if (!problems.empty()) {
      result.passed = false;
      failures.push_back({{"instance", i}, {"seed", seed}, {"problems", problems}});
    }
  }
  result.report = {{"suite", "geodesic"}, {"seed", options.seed}, {"count", options.count},
                   {"passed", result.passed}, {"failures", failures}};
  return result;
}

Result run(const std::string& suite, const Options& options) {
  if (suite == "consistency") return consistency(options);
  if (suite == "stability") return stability(options);
  if (suite == "triangle") return triangle(options);
  if (suite == "geodesic") return geodesic(options);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace gpd::verify
