#include "gpd/stability.hpp"

#include <stdexcept>

#include "gpd/grading.hpp"
#include "gpd/parallel.hpp"

namespace gpd {

StabilityReport verify_stability(const RealDiagram& d, const RealDiagram& e) {
  const CostParams unit(1.0, 1.0);
  const auto d_levels = graded_levels(d);
  const auto e_levels = graded_levels(e);

  StabilityReport r;
  r.K = static_cast<int>(std::max(d_levels.size(), e_levels.size()));
  r.distance = *wasserstein(d, e, unit).exact;

  const RealDiagram zero;
  r.level_distances.assign(static_cast<std::size_t>(r.K), Rational(0));
  parallel_for(r.level_distances.size(), [&](std::size_t i) {
    const auto& dk = i < d_levels.size() ? d_levels[i] : zero;
    const auto& ek = i < e_levels.size() ? e_levels[i] : zero;
    r.level_distances[i] = *signed_wasserstein(dk, ek, unit).exact;
  });

  // Level K+1 recomputed from the rank tables: u_{K+1} o Rank must vanish.
  auto level_above_K = [&](const RealDiagram& x) {
    const auto [grid, barcode] = embed(x);
    const RankTable rank = rank_from_barcode(barcode);
    IntervalFunction graded(rank.m());
    rank.table().for_each_nonzero([&](const GridInterval& cell, std::int64_t n) {
      if (unary(n, r.K + 1)) graded.set(cell, 1);
    });
    return mobius_convolve(graded).support_size();
  };
  r.above_K_zero = level_above_K(d) == 0 && level_above_K(e) == 0;
  if (!r.above_K_zero) r.failures.push_back("graded level K+1 is nonzero");

  for (int k = 1; k <= r.K; ++k) {
    const Rational& wk = r.level_distances[static_cast<std::size_t>(k) - 1];
    r.level_sum += wk;
    r.ratios.push_back(r.distance == 0 ? std::nullopt : std::optional<Rational>(wk / r.distance));
    const Rational bound = (k < r.K ? 2 : 1) * r.distance;
    if (wk > bound) {
      r.level_bounds_hold = false;
      r.failures.push_back("level " + std::to_string(k) + ": W(D_k,E_k) = " + format_rational(wk) + " exceeds " +
                           format_rational(bound));
    }
  }
  const Rational upper = (2 * r.K - 1) * r.distance;
  r.lower_bound_holds = r.distance <= r.level_sum;
  r.upper_bound_holds = r.K == 0 ? r.level_sum == 0 : r.level_sum <= upper;
  r.lower_bound_sharp = r.distance == r.level_sum;
  r.upper_bound_sharp = r.K > 0 && r.level_sum == upper;
  if (!r.lower_bound_holds)
    r.failures.push_back("sum of level distances " + format_rational(r.level_sum) + " is below W(D,E) = " +
                         format_rational(r.distance));
  if (!r.upper_bound_holds)
    r.failures.push_back("sum of level distances " + format_rational(r.level_sum) + " exceeds (2K-1) W(D,E) = " +
                         format_rational(upper));
  return r;
}

std::pair<RealDiagram, RealDiagram> sharp_stability_family(int K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  RealDiagram a;
  for (int i = 1; i <= K - 1; ++i) a += interval(i, 2 * K + i);
  return {a + interval(K, 3 * K), a + interval(K + 1, 3 * K)};
}

}  // namespace gpd
