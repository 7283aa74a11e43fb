#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Incidence algebra on the poset [m+1]^2_< of half-open intervals [a,b),
// 0 <= a < b <= m+1, ordered by inclusion.
namespace gpd {

struct GridInterval {
  int birth = 0;
  int death = 1;

  /// True when *this is a subinterval of `outer`.
  bool inside(const GridInterval& outer) const {
    return outer.birth <= birth && death <= outer.death;
  }
  bool valid(int m) const { return 0 <= birth && birth < death && death <= m + 1; }

  auto operator<=>(const GridInterval&) const = default;
};

std::string to_string(const GridInterval& interval);

/// Integer-valued function on every half-open interval of [m+1], zero by
/// default. Dense triangular storage up to kDenseLimit, an ordered map above.
class IntervalFunction {
 public:
  static constexpr int kDenseLimit = 4096;
  enum class Storage { automatic, dense, sparse };

  explicit IntervalFunction(int m = 0, Storage storage = Storage::automatic);

  int m() const { return m_; }
  bool is_dense() const { return dense_; }

  /// Value on [a,b); 0 for pairs outside the grid, so boundary reads are total.
  std::int64_t value(int a, int b) const;
  std::int64_t operator()(const GridInterval& i) const { return value(i.birth, i.death); }

  /// Throws std::out_of_range for cells outside the grid.
  void set(const GridInterval& cell, std::int64_t v);
  void add(const GridInterval& cell, std::int64_t v);

  /// Visits nonzero cells in (birth, death) order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (dense_) {
      for (int a = 0; a <= m_; ++a)
        for (int b = a + 1; b <= m_ + 1; ++b)
          if (auto v = dense_values_[index(a, b)]; v != 0) fn(GridInterval{a, b}, v);
    } else {
      for (const auto& [cell, v] : sparse_values_)
        if (v != 0) fn(cell, v);
    }
  }

  std::int64_t max_value() const;
  std::int64_t min_value() const;
  std::size_t support_size() const;

  IntervalFunction& operator+=(const IntervalFunction& other);
  IntervalFunction& operator-=(const IntervalFunction& other);
  friend IntervalFunction operator+(IntervalFunction lhs, const IntervalFunction& rhs) { return lhs += rhs; }
  friend IntervalFunction operator-(IntervalFunction lhs, const IntervalFunction& rhs) { return lhs -= rhs; }
  friend bool operator==(const IntervalFunction& lhs, const IntervalFunction& rhs);

 private:
  std::size_t index(int a, int b) const;
  void check(const GridInterval& cell) const;

  int m_;
  bool dense_;
  std::vector<std::int64_t> dense_values_;
  std::map<GridInterval, std::int64_t> sparse_values_;
};

int zeta_value(const GridInterval& lower, const GridInterval& upper);
int delta_value(const GridInterval& lower, const GridInterval& upper);

/// Closed-form Moebius function of [m+1]^2_<. Requires lower ⊆ upper;
/// throws std::invalid_argument otherwise.
int mobius_value(const GridInterval& lower, const GridInterval& upper);

/// (mu * h)[x,y) = sum over J ⊇ [x,y) of mu([x,y),J) h(J).
IntervalFunction mobius_convolve(const IntervalFunction& h);

/// (zeta * g)[x,y) = sum over x' <= x, y' >= y of g[x',y').
IntervalFunction zeta_convolve(const IntervalFunction& g);

/// First cell where a covering relation is violated, if any.
std::optional<GridInterval> order_reversal_violation(const IntervalFunction& h);
inline bool is_order_reversing(const IntervalFunction& h) { return !order_reversal_violation(h); }

}  // namespace gpd
