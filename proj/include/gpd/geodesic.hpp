#pragma once

#include <vector>

#include "gpd/transport.hpp"

namespace gpd {

/// One coordinate geodesic: a single point moves one coordinate linearly, or
/// shrinks onto / grows from the diagonal by moving its birth.
struct GeodesicSegment {
  enum class Kind { birth_slide, death_slide, collapse, emerge };
  Kind kind;
  RealInterval from;  ///< degenerate (birth == death) for `emerge`
  RealInterval to;    ///< degenerate for `collapse`
  Rational length;

  /// Position of the moving point after travelling s in [0, length].
  RealInterval at(const Rational& s) const;
};

/// Concatenated coordinate geodesics realising W_{1,1}(D, E).
class GeodesicPath {
 public:
  GeodesicPath(RealDiagram start, std::vector<GeodesicSegment> segments);

  const RealDiagram& start() const { return start_; }
  const std::vector<GeodesicSegment>& segments() const { return segments_; }
  /// Total length, equal to W_{1,1}(D, E).
  const Rational& length() const { return length_; }

  /// gamma(t) for t in [0, length()]; throws std::out_of_range otherwise.
  RealDiagram operator()(const Rational& t) const;

 private:
  RealDiagram start_;
  std::vector<GeodesicSegment> segments_;
  Rational length_;
};

/// Built from an optimal (1,1) coupling, one segment per term of the
/// coordinate-wise cost. Requires non-negative diagrams.
GeodesicPath coordinate_geodesic_path(const RealDiagram& d, const RealDiagram& e);

}  // namespace gpd
