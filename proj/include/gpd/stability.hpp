#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpd/transport.hpp"

namespace gpd {

/// Level-wise W_{1,1} stability of graded diagrams against W_{1,1}(D, E):
///   W(D_k,E_k) <= 2 W(D,E) for k < K,   W(D_K,E_K) <= W(D,E),
///   D_k = E_k = 0 for k > K,            W(D,E) <= sum_k W(D_k,E_k) <= (2K-1) W(D,E).
struct StabilityReport {
  int K = 0;
  Rational distance;                    ///< W_{1,1}(D,E)
  std::vector<Rational> level_distances;  ///< W_{1,1}(D_k,E_k), k = 1..K
  std::vector<std::optional<Rational>> ratios;  ///< level / distance; nullopt when distance = 0
  Rational level_sum;
  bool level_bounds_hold = true;
  bool above_K_zero = true;
  bool lower_bound_holds = true;        ///< W <= sum
  bool upper_bound_holds = true;        ///< sum <= (2K-1) W
  bool lower_bound_sharp = false;       ///< equality on the left
  bool upper_bound_sharp = false;       ///< equality on the right
  std::vector<std::string> failures;

  bool holds() const { return failures.empty(); }
};

/// Requires non-negative diagrams. Levels are evaluated in parallel.
StabilityReport verify_stability(const RealDiagram& d, const RealDiagram& e);

/// A = [1,2K+1) + ... + [K-1,3K-1), D = A + [K,3K), E = A + [K+1,3K): the
/// family attaining every stability bound. Requires K >= 1.
std::pair<RealDiagram, RealDiagram> sharp_stability_family(int K);

}  // namespace gpd
