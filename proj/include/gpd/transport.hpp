#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gpd/module.hpp"

namespace gpd {

/// Exponents of the (p,q)-cost: p-norm over pairs of q-norm displacements.
struct CostParams {
  static constexpr double inf = std::numeric_limits<double>::infinity();
  double p = 1.0;
  double q = 1.0;

  CostParams() = default;
  /// Throws std::invalid_argument unless 1 <= p, q <= inf.
  CostParams(double p_, double q_);

  /// Whether every optimal value is rational for rational inputs.
  bool exact() const { return (p == 1.0 || p == inf) && (q == 1.0 || q == inf); }
  std::string label() const;
};

/// Point of the extended plane; x == y marks a point of the diagonal.
struct PlanePoint {
  Rational x;
  Rational y;
  bool on_diagonal() const { return x == y; }
  static PlanePoint of(const RealInterval& iv) { return {iv.birth, iv.death}; }
  /// Nearest diagonal point in every q-norm used here: the midpoint projection.
  static PlanePoint projection(const RealInterval& iv) {
    auto mid = midpoint(iv.birth, iv.death);
    return {mid, mid};
  }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct CouplingPair {
  PlanePoint source;
  PlanePoint target;
  std::int64_t multiplicity = 1;
};

/// Multiset of matched pairs; diagonal partners are midpoint projections and
/// no pair joins two diagonal points.
struct Coupling {
  std::vector<CouplingPair> pairs;

  /// Checks the marginals against D (sources) and E (targets) and the
  /// diagonal conventions.
  bool is_valid_between(const RealDiagram& source, const RealDiagram& target) const;
};

double pair_cost(const PlanePoint& a, const PlanePoint& b, double q);
double coupling_cost(const Coupling& coupling, const CostParams& cost);
/// Exact cost when cost.exact(); nullopt otherwise.
std::optional<Rational> coupling_cost_exact(const Coupling& coupling, const CostParams& cost);

struct Distance {
  double value = 0.0;
  std::optional<Rational> exact;  ///< set when the cost parameters allow it
  Coupling coupling;              ///< witnesses the optimum
  bool metric = true;             ///< false for signed inputs with p > 1
};

/// W_{p,q} between non-negative diagrams, solved exactly as an assignment on
/// the points plus one diagonal slot per point.
Distance wasserstein(const RealDiagram& d, const RealDiagram& e, const CostParams& cost = {});

/// W_{p,q}(A, B) := W_{p,q}(A+ + B-, B+ + A-). Flagged non-metric for p > 1.
Distance signed_wasserstein(const RealDiagram& a, const RealDiagram& b, const CostParams& cost = {});

struct GradedDistance {
  std::vector<Distance> levels;  ///< index k-1
  double total = 0.0;
  std::optional<Rational> exact_total;
};

/// Level-wise signed distances; the shorter sequence is padded with zero levels.
GradedDistance graded_wasserstein(const std::vector<RealDiagram>& d_levels, const std::vector<RealDiagram>& e_levels,
                                  const CostParams& cost = {});

/// The three diagrams of the triangle-inequality counterexample and their
/// computed and closed-form distances at level k.
struct TriangleReport {
  Rational eps;
  int k = 1;
  CostParams cost;
  RealDiagram d, e, f;                 ///< persistence diagrams
  RealDiagram d_k, e_k, f_k;           ///< their k-th graded levels
  double d_f = 0, d_e = 0, e_f = 0;    ///< computed W(D_k,F_k), W(D_k,E_k), W(E_k,F_k)
  double closed_d_f = 0, closed_d_e = 0, closed_e_f = 0;
  bool matches_closed_forms = false;   ///< all within 1e-9
  bool violated = false;               ///< W(D_k,F_k) > W(D_k,E_k) + W(E_k,F_k)
};

/// Requires 0 < eps <= 1, k >= 1 and p > 1; throws std::invalid_argument.
TriangleReport triangle_counterexample(const Rational& eps, int k, const CostParams& cost);

/// ‖(x, y)‖_r for r in [1, inf].
double norm2d(double x, double y, double r);

}  // namespace gpd
