#pragma once

#include <vector>

#include "gpd/grading.hpp"

namespace gpd {

/// Vertex of a landscape polyline.
struct CriticalPoint {
  Rational t;
  Rational h;
  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Persistence landscape stored by critical points. Level k (1-based) is the
/// polyline through its points, zero outside [first.t, last.t]. Each
/// component contributes (a, 0), alternating maxima and minima, then (b, 0);
/// a point where two components touch is stored once with h = 0.
class Landscape {
 public:
  explicit Landscape(std::vector<std::vector<CriticalPoint>> levels = {}) : levels_(std::move(levels)) {}

  int K() const { return static_cast<int>(levels_.size()); }
  const std::vector<CriticalPoint>& level(int k) const;
  const std::vector<std::vector<CriticalPoint>>& levels() const { return levels_; }

 private:
  std::vector<std::vector<CriticalPoint>> levels_;
};

/// Critical points of one graded level in real coordinates.
std::vector<CriticalPoint> landscape_level(const RealDiagram& graded_level);

/// Rejects unrealizable levels (std::invalid_argument).
Landscape landscape_from_graded(const GradedDiagram& graded, const Grid& grid);
Landscape landscape_from_levels(const std::vector<RealDiagram>& graded_levels);

/// lambda_k(t); 0 for k > K or t outside the support.
Rational landscape_eval(const Landscape& landscape, int k, const Rational& t);
double landscape_eval(const Landscape& landscape, int k, double t);

/// Piecewise-constant function with values in {-1, 0, 1} on the open gaps
/// between breakpoints; 0 at breakpoints and outside them.
class StepFunction {
 public:
  StepFunction() = default;
  /// values.size() must be breakpoints.size() - 1 (or both empty).
  StepFunction(std::vector<Rational> breakpoints, std::vector<int> values);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(const Rational& t) const;
  /// Integral from the first breakpoint up to breakpoints()[i].
  const Rational& area_before(std::size_t i) const { return area_[i]; }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<int> values_;
  std::vector<Rational> area_;
};

/// rho_k in simplified form: per staircase component, +1 from a_{i,1} to the
/// first midpoint, then alternating signs between consecutive midpoints, and
/// -1 from the last midpoint to b_{i,m_i}.
StepFunction derivative(const RealDiagram& graded_level);
StepFunction derivative(const SignedDiagram& graded_level, const Grid& grid);

/// The defining signed sum of c_i (chi(a_i, m_i) - chi(m_i, b_i)), evaluated at t.
int derivative_raw(const RealDiagram& graded_level, const Rational& t);

/// Integral of sf over (-inf, t].
Rational integrate(const StepFunction& sf, const Rational& t);

}  // namespace gpd
