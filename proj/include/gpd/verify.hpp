#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "gpd/rational.hpp"
#include "gpd/transport.hpp"

// Property sweeps behind `gpd verify`. Instance i of a random sweep is drawn
// from seed + i, so any failure can be replayed on its own.
namespace gpd::verify {

struct Options {
  std::uint64_t seed = 1;
  int count = 100;
  std::optional<int> sharp_K;        ///< stability: check the sharp family instead of random pairs
  std::optional<Rational> eps;       ///< triangle: single eps instead of the default sweep
  std::optional<CostParams> cost;    ///< triangle: single (p,q) instead of the default sweep
  int k = 1;                         ///< triangle: graded level
};

struct Result {
  bool passed = true;
  nlohmann::json report;
};

Result consistency(const Options& options);
Result stability(const Options& options);
Result triangle(const Options& options);
Result geodesic(const Options& options);

/// Dispatches on "consistency", "stability", "triangle" or "geodesic";
/// throws std::invalid_argument for other names.
Result run(const std::string& suite, const Options& options);

}  // namespace gpd::verify
