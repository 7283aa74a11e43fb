#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/module.hpp"

namespace gpd {

/// Unary digit: 1 iff n >= k.
inline int unary(std::int64_t n, std::int64_t k) { return n >= k ? 1 : 0; }

/// Rank_k = u_k ∘ Rank for k = 1..K, K the maximal rank. Levels above K are
/// identically zero and are not stored.
class GradedRank {
 public:
  GradedRank(int m, std::vector<IntervalFunction> levels);

  int m() const { return m_; }
  int K() const { return static_cast<int>(levels_.size()); }
  /// 1-based; returns the zero function for k > K.
  IntervalFunction level(int k) const;
  const std::vector<IntervalFunction>& levels() const { return levels_; }
  IntervalFunction sum() const;

 private:
  int m_;
  std::vector<IntervalFunction> levels_;
};

/// pd_k = mu * Rank_k for k = 1..K.
class GradedDiagram {
 public:
  GradedDiagram(int m, std::vector<SignedDiagram> levels);

  int m() const { return m_; }
  int K() const { return static_cast<int>(levels_.size()); }
  /// 1-based; returns an empty diagram for k > K.
  SignedDiagram level(int k) const;
  const std::vector<SignedDiagram>& levels() const { return levels_; }
  /// Pointwise sum over k, tagged as a persistence diagram.
  SignedDiagram sum() const;

 private:
  int m_;
  std::vector<SignedDiagram> levels_;
};

GradedRank graded_rank(const RankTable& rank);

/// Per-level Moebius inversion. Throws RealizabilityError if a level leaves
/// {-1, 0, 1}, which means a level was not order-reversing.
GradedDiagram graded_diagram(const GradedRank& graded);

/// Barcode -> Rank -> Rank_* -> pd_*.
GradedDiagram graded_diagram(const Barcode& barcode);

/// k-th graded levels (index k-1) of a non-negative real diagram, computed on
/// the grid of its own coordinates.
std::vector<RealDiagram> graded_levels(const RealDiagram& diagram);

/// One connected component of a graded level: maxima [a_j, b_j) joined
/// through the meets [a_{j+1}, b_j).
struct StaircaseComponent {
  std::vector<Rational> births;  // a_{i,1} < ... < a_{i,m_i}
  std::vector<Rational> deaths;  // b_{i,1} < ... < b_{i,m_i}

  std::size_t size() const { return births.size(); }
  std::vector<RealInterval> maxima() const;
  std::vector<RealInterval> meets() const;
};

struct Staircase {
  std::vector<StaircaseComponent> components;  // ordered by a_{i,1}
  /// Non-fatal observations, e.g. components that touch (b_{i,m_i} = a_{i+1,1}).
  std::vector<std::string> diagnostics;

  RealDiagram reconstruct() const;
  /// All ordering inequalities between the a's and b's.
  bool satisfies_inequalities() const;
};

/// Splits a graded level into staircase components. Throws
/// std::invalid_argument when the +1 points are not an antichain or a -1
/// point is not the meet of two adjacent maxima.
Staircase staircase_decompose(const RealDiagram& level);
Staircase staircase_decompose(const SignedDiagram& level);

struct RealizabilityReport {
  bool realizable = true;
  std::string diagnostic;
};

/// True iff zeta * level is a {0,1}-valued order-reversing function.
RealizabilityReport realizability_check(const SignedDiagram& level);
RealizabilityReport realizability_check(const RealDiagram& level);

}  // namespace gpd
