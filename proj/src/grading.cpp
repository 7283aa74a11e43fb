#include "gpd/grading.hpp"

#include <algorithm>
#include <set>

#include "gpd/parallel.hpp"

namespace gpd {

GradedRank::GradedRank(int m, std::vector<IntervalFunction> levels) : m_(m), levels_(std::move(levels)) {
  for (const auto& level : levels_)
    if (level.m() != m_) throw std::invalid_argument("graded rank level with mismatched m");
}

IntervalFunction GradedRank::level(int k) const {
  if (k < 1) throw std::invalid_argument("graded levels start at k = 1");
  if (k > K()) return IntervalFunction(m_);
  return levels_[static_cast<std::size_t>(k) - 1];
}

IntervalFunction GradedRank::sum() const {
  IntervalFunction total(m_);
  for (const auto& level : levels_) total += level;
  return total;
}

GradedDiagram::GradedDiagram(int m, std::vector<SignedDiagram> levels) : m_(m), levels_(std::move(levels)) {
  for (const auto& level : levels_)
    if (level.m() != m_) throw std::invalid_argument("graded diagram level with mismatched m");
}

SignedDiagram GradedDiagram::level(int k) const {
  if (k < 1) throw std::invalid_argument("graded levels start at k = 1");
  if (k > K()) return SignedDiagram(m_, DiagramKind::graded);
  return levels_[static_cast<std::size_t>(k) - 1];
}

SignedDiagram GradedDiagram::sum() const {
  IntervalFunction total(m_);
  for (const auto& level : levels_)
    for (const auto& [cell, v] : level.points()) total.add(cell, v);
  return SignedDiagram::from_function(total, DiagramKind::persistence);
}

GradedRank graded_rank(const RankTable& rank) {
  const auto K = rank.max_rank();
  std::vector<IntervalFunction> levels(static_cast<std::size_t>(K), IntervalFunction(rank.m()));
  rank.table().for_each_nonzero([&](const GridInterval& cell, std::int64_t n) {
    for (std::int64_t k = 1; k <= K && unary(n, k); ++k) levels[static_cast<std::size_t>(k) - 1].set(cell, 1);
  });
  return GradedRank(rank.m(), std::move(levels));
}

GradedDiagram graded_diagram(const GradedRank& graded) {
  std::vector<SignedDiagram> levels(static_cast<std::size_t>(graded.K()));
  parallel_for(levels.size(), [&](std::size_t i) {
    levels[i] = SignedDiagram::from_function(mobius_convolve(graded.levels()[i]), DiagramKind::graded);
  });
  return GradedDiagram(graded.m(), std::move(levels));
}

GradedDiagram graded_diagram(const Barcode& barcode) { return graded_diagram(graded_rank(rank_from_barcode(barcode))); }

std::vector<RealDiagram> graded_levels(const RealDiagram& diagram) {
  auto [grid, barcode] = embed(diagram);
  auto gd = graded_diagram(barcode);
  std::vector<RealDiagram> out;
  out.reserve(static_cast<std::size_t>(gd.K()));
  for (const auto& level : gd.levels()) out.push_back(extend_to_grid(level, grid));
  return out;
}

// ---- staircase ----

std::vector<RealInterval> StaircaseComponent::maxima() const {
  std::vector<RealInterval> out;
  for (std::size_t j = 0; j < size(); ++j) out.push_back({births[j], deaths[j]});
  return out;
}

std::vector<RealInterval> StaircaseComponent::meets() const {
  std::vector<RealInterval> out;
  for (std::size_t j = 0; j + 1 < size(); ++j) out.push_back({births[j + 1], deaths[j]});
  return out;
}

RealDiagram Staircase::reconstruct() const {
  RealDiagram out;
  for (const auto& c : components) {
    for (const auto& iv : c.maxima()) out.add(iv, 1);
    for (const auto& iv : c.meets()) out.add(iv, -1);
  }
  return out;
}

bool Staircase::satisfies_inequalities() const {
  const StaircaseComponent* previous = nullptr;
  for (const auto& c : components) {
    if (c.size() == 0 || c.births.size() != c.deaths.size()) return false;
    if (previous) {
      if (!(previous->births.back() < c.births.front())) return false;
      if (!(previous->deaths.back() < c.deaths.front())) return false;
      if (!(previous->deaths.back() <= c.births.front())) return false;
    }
    if (!(c.births[0] < c.deaths[0])) return false;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
      if (!(c.births[j] < c.births[j + 1]) || !(c.deaths[j] < c.deaths[j + 1])) return false;
      if (!(c.births[j + 1] < c.deaths[j])) return false;
    }
    previous = &c;
  }
  return true;
}

namespace {

std::string show(const RealInterval& iv) {
  return "[" + format_rational(iv.birth) + "," + format_rational(iv.death) + ")";
}

}  // namespace

Staircase staircase_decompose(const RealDiagram& level) {
  std::vector<RealInterval> maxima;
  std::set<RealInterval> meets;
  for (const auto& [iv, v] : level.points()) {
    if (v == 1) maxima.push_back(iv);
    else if (v == -1) meets.insert(iv);
    else throw std::invalid_argument("graded level takes value " + std::to_string(v) + " at " + show(iv));
  }
  // points() is ordered by birth, so maxima are too.
  for (std::size_t j = 0; j + 1 < maxima.size(); ++j) {
    if (!(maxima[j].birth < maxima[j + 1].birth) || !(maxima[j].death < maxima[j + 1].death))
      throw std::invalid_argument("+1 points " + show(maxima[j]) + " and " + show(maxima[j + 1]) +
                                  " are comparable, so not both maximal");
  }

  Staircase out;
  for (std::size_t j = 0; j < maxima.size(); ++j) {
    const bool joins_previous = j > 0 && maxima[j].birth < maxima[j - 1].death;
    if (joins_previous) {
      RealInterval meet{maxima[j].birth, maxima[j - 1].death};
      if (meets.erase(meet) == 0)
        throw std::invalid_argument("missing -1 at " + show(meet) + ", the meet of " + show(maxima[j - 1]) +
                                    " and " + show(maxima[j]));
    } else {
      if (j > 0 && maxima[j].birth == maxima[j - 1].death)
        out.diagnostics.push_back("components touch at " + format_rational(maxima[j].birth) +
                                  " (b_{i,m_i} = a_{i+1,1}); treated as separate components");
      out.components.emplace_back();
    }
    out.components.back().births.push_back(maxima[j].birth);
    out.components.back().deaths.push_back(maxima[j].death);
  }
  if (!meets.empty())
    throw std::invalid_argument("-1 point " + show(*meets.begin()) + " is not the meet of two adjacent maxima");
  return out;
}

Staircase staircase_decompose(const SignedDiagram& level) {
  return staircase_decompose(extend_to_grid(level, Grid::identity(level.m())));
}

RealizabilityReport realizability_check(const SignedDiagram& level) {
  IntervalFunction rank_k = zeta_convolve(level.to_function());
  RealizabilityReport report;
  const int m = level.m();
  for (int a = 0; a <= m && report.realizable; ++a) {
    for (int b = a + 1; b <= m + 1; ++b) {
      const auto v = rank_k.value(a, b);
      if (v != 0 && v != 1) {
        report = {false, "zeta * level takes value " + std::to_string(v) + " at " + to_string({a, b})};
        break;
      }
      if ((a >= 1 && rank_k.value(a - 1, b) > v) || (b <= m && rank_k.value(a, b + 1) > v)) {
        report = {false, "zeta * level is not order-reversing at " + to_string({a, b})};
        break;
      }
    }
  }
  return report;
}

RealizabilityReport realizability_check(const RealDiagram& level) {
  std::set<Rational> coords;
  for (const auto& [iv, v] : level.points()) {
    coords.insert(iv.birth);
    coords.insert(iv.death);
  }
  if (coords.empty()) return {};
  Grid grid(std::vector<Rational>(coords.begin(), coords.end()));
  SignedDiagram on_grid(grid.m());
  for (const auto& [iv, v] : level.points()) on_grid.add({*grid.floor_index(iv.birth), *grid.ceil_index(iv.death)}, v);
  return realizability_check(on_grid);
}

}  // namespace gpd
