#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpd/linalg.hpp"
#include "gpd/poset.hpp"
#include "gpd/rational.hpp"

namespace gpd {

/// Raised when a table or diagram cannot come from any persistence module.
class RealizabilityError : public std::runtime_error {
 public:
  RealizabilityError(const std::string& what, GridInterval cell) : std::runtime_error(what), cell_(cell) {}
  const GridInterval& cell() const { return cell_; }

 private:
  GridInterval cell_;
};

/// Multiset of half-open bars on [m+1]; the interval decomposition of a module
/// indexed by [m]. A death of m+1 means the bar survives to the end of the grid.
class Barcode {
 public:
  explicit Barcode(int m = 0);

  int m() const { return m_; }
  void add(const GridInterval& bar, std::int64_t multiplicity = 1);
  const std::map<GridInterval, std::int64_t>& bars() const { return bars_; }
  std::int64_t size() const;
  bool empty() const { return bars_.empty(); }

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  int m_;
  std::map<GridInterval, std::int64_t> bars_;
};

/// Persistence module given by vector spaces K^{d_i} and maps
/// maps[i]: K^{d_i} -> K^{d_{i+1}} stored as d_{i+1} x d_i matrices.
class MapChain {
 public:
  MapChain(std::vector<std::size_t> dims, std::vector<Matrix> maps, Field field = Field::gf(2));

  /// Direct sum of interval modules, one identity-linked basis vector per bar.
  static MapChain interval_sum(const Barcode& barcode, Field field = Field::gf(2));

  int m() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Field& field() const { return field_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  Field field_;
};

/// Rank(M)[a,b) = rank M(a <= b-1) on every half-open interval of [m+1].
class RankTable {
 public:
  /// Validates non-negativity and order reversal; throws std::invalid_argument.
  explicit RankTable(IntervalFunction table);

  int m() const { return table_.m(); }
  const IntervalFunction& table() const { return table_; }
  std::int64_t operator()(int a, int b) const { return table_.value(a, b); }
  std::int64_t max_rank() const { return table_.max_value(); }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  IntervalFunction table_;
};

/// Strictly increasing embedding iota: [m+1] -> R.
class Grid {
 public:
  explicit Grid(std::vector<Rational> points);
  static Grid identity(int m);

  int m() const { return static_cast<int>(points_.size()) - 2; }
  const Rational& operator[](int i) const { return points_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& points() const { return points_; }
  bool is_identity() const;

  /// Largest i with iota(i) <= a.
  std::optional<int> floor_index(const Rational& a) const;
  /// Smallest j with iota(j) >= b.
  std::optional<int> ceil_index(const Rational& b) const;

 private:
  std::vector<Rational> points_;
};

enum class DiagramKind { persistence, graded, signed_values };

/// Finitely supported integer function on [m+1]^2_<. A `persistence` diagram
/// is non-negative; a `graded` one takes values in {-1, 0, 1}.
class SignedDiagram {
 public:
  explicit SignedDiagram(int m = 0, DiagramKind kind = DiagramKind::signed_values) : m_(m), kind_(kind) {}
  static SignedDiagram from_function(const IntervalFunction& f, DiagramKind kind);

  int m() const { return m_; }
  DiagramKind kind() const { return kind_; }
  const std::map<GridInterval, std::int64_t>& points() const { return points_; }
  std::int64_t operator()(const GridInterval& cell) const;
  bool empty() const { return points_.empty(); }

  void add(const GridInterval& cell, std::int64_t value);
  IntervalFunction to_function() const;

  friend bool operator==(const SignedDiagram& lhs, const SignedDiagram& rhs) {
    return lhs.m_ == rhs.m_ && lhs.points_ == rhs.points_;
  }

 private:
  int m_;
  DiagramKind kind_;
  std::map<GridInterval, std::int64_t> points_;
};

/// Half-open interval [birth, death) of the real line.
struct RealInterval {
  Rational birth;
  Rational death;

  friend bool operator==(const RealInterval&, const RealInterval&) = default;
  friend bool operator<(const RealInterval& lhs, const RealInterval& rhs) {
    if (lhs.birth != rhs.birth) return lhs.birth < rhs.birth;
    return lhs.death < rhs.death;
  }
};

/// Finitely supported integer function on R^2_<, the common currency of the
/// landscape and transport layers.
class RealDiagram {
 public:
  RealDiagram() = default;
  RealDiagram(std::initializer_list<std::pair<RealInterval, std::int64_t>> points);

  const std::map<RealInterval, std::int64_t>& points() const { return points_; }
  std::int64_t operator()(const RealInterval& interval) const;
  bool empty() const { return points_.empty(); }
  bool is_nonnegative() const;
  std::int64_t mass() const;  ///< sum of |values|

  /// Throws std::invalid_argument unless birth < death.
  void add(const RealInterval& interval, std::int64_t value);

  /// The unique non-negative parts with disjoint support, A = A+ - A-.
  RealDiagram positive_part() const;
  RealDiagram negative_part() const;

  RealDiagram& operator+=(const RealDiagram& other);
  RealDiagram& operator-=(const RealDiagram& other);
  friend RealDiagram operator+(RealDiagram lhs, const RealDiagram& rhs) { return lhs += rhs; }
  friend RealDiagram operator-(RealDiagram lhs, const RealDiagram& rhs) { return lhs -= rhs; }
  friend RealDiagram operator*(std::int64_t scale, const RealDiagram& d);
  friend bool operator==(const RealDiagram&, const RealDiagram&) = default;

 private:
  std::map<RealInterval, std::int64_t> points_;
};

/// Indicator diagram of a single interval, e.g. interval(3, 9) for [3,9).
RealDiagram interval(const Rational& birth, const Rational& death, std::int64_t value = 1);

RankTable rank_from_barcode(const Barcode& barcode);

/// Ranks of the composite maps by exact elimination over the chain's field.
RankTable rank_from_mapchain(const MapChain& chain);

/// pd = mu * Rank. Throws RealizabilityError on a negative value.
SignedDiagram diagram_from_rank(const RankTable& rank);

/// Reads a persistence diagram back as a barcode; requires non-negative values.
Barcode barcode_from_diagram(const SignedDiagram& diagram);

/// Relabels support points through iota.
RealDiagram extend_to_grid(const SignedDiagram& diagram, const Grid& grid);

/// Rank of the real-indexed extension, evaluated on any real [a,b).
class RankEvaluator {
 public:
  RankEvaluator(RankTable table, Grid grid);
  std::int64_t operator()(const Rational& a, const Rational& b) const;
  const RankTable& table() const { return table_; }
  const Grid& grid() const { return grid_; }

 private:
  RankTable table_;
  Grid grid_;
};

RankEvaluator extend_to_grid(const RankTable& rank, const Grid& grid);

/// A non-negative real diagram re-expressed on the grid of its own distinct
/// coordinates: grid[i] is the i-th smallest coordinate.
struct GridEmbedding {
  Grid grid;
  Barcode barcode;
};

/// Requires a non-negative diagram; an empty one embeds as m = 0, no bars.
GridEmbedding embed(const RealDiagram& diagram);

}  // namespace gpd
