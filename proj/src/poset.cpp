#include "gpd/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpd {

std::string to_string(const GridInterval& interval) {
  return "[" + std::to_string(interval.birth) + "," + std::to_string(interval.death) + ")";
}

IntervalFunction::IntervalFunction(int m, Storage storage) : m_(m) {
  if (m < 0) throw std::invalid_argument("grid size m must be non-negative");
  dense_ = storage == Storage::dense || (storage == Storage::automatic && m <= kDenseLimit);
  if (dense_) {
    const auto n = static_cast<std::size_t>(m) + 1;
    dense_values_.assign(n * (n + 1) / 2, 0);
  }
}

// Row a holds deaths a+1 .. m+1, i.e. (m+1-a) cells.
std::size_t IntervalFunction::index(int a, int b) const {
  const auto n = static_cast<std::size_t>(m_) + 1;
  const auto sa = static_cast<std::size_t>(a);
  const std::size_t row_start = sa == 0 ? 0 : sa * n - sa * (sa - 1) / 2;
  return row_start + static_cast<std::size_t>(b - a - 1);
}

void IntervalFunction::check(const GridInterval& cell) const {
  if (!cell.valid(m_))
    throw std::out_of_range("interval " + to_string(cell) + " outside grid with m = " + std::to_string(m_));
}

std::int64_t IntervalFunction::value(int a, int b) const {
  if (a < 0 || a >= b || b > m_ + 1) return 0;
  if (dense_) return dense_values_[index(a, b)];
  auto it = sparse_values_.find(GridInterval{a, b});
  return it == sparse_values_.end() ? 0 : it->second;
}

void IntervalFunction::set(const GridInterval& cell, std::int64_t v) {
  check(cell);
  if (dense_) {
    dense_values_[index(cell.birth, cell.death)] = v;
  } else if (v == 0) {
    sparse_values_.erase(cell);
  } else {
    sparse_values_[cell] = v;
  }
}

void IntervalFunction::add(const GridInterval& cell, std::int64_t v) {
  set(cell, value(cell.birth, cell.death) + v);
}

std::int64_t IntervalFunction::max_value() const {
  std::int64_t best = 0;
  for_each_nonzero([&](const GridInterval&, std::int64_t v) { best = std::max(best, v); });
  return best;
}

std::int64_t IntervalFunction::min_value() const {
  std::int64_t best = 0;
  for_each_nonzero([&](const GridInterval&, std::int64_t v) { best = std::min(best, v); });
  return best;
}

std::size_t IntervalFunction::support_size() const {
  std::size_t count = 0;
  for_each_nonzero([&](const GridInterval&, std::int64_t) { ++count; });
  return count;
}

IntervalFunction& IntervalFunction::operator+=(const IntervalFunction& other) {
  if (other.m_ != m_) throw std::invalid_argument("grid size mismatch");
  other.for_each_nonzero([&](const GridInterval& cell, std::int64_t v) { add(cell, v); });
  return *this;
}

IntervalFunction& IntervalFunction::operator-=(const IntervalFunction& other) {
  if (other.m_ != m_) throw std::invalid_argument("grid size mismatch");
  other.for_each_nonzero([&](const GridInterval& cell, std::int64_t v) { add(cell, -v); });
  return *this;
}

bool operator==(const IntervalFunction& lhs, const IntervalFunction& rhs) {
  if (lhs.m_ != rhs.m_) return false;
  bool equal = true;
  lhs.for_each_nonzero([&](const GridInterval& c, std::int64_t v) { equal = equal && rhs(c) == v; });
  rhs.for_each_nonzero([&](const GridInterval& c, std::int64_t v) { equal = equal && lhs(c) == v; });
  return equal;
}

int zeta_value(const GridInterval& lower, const GridInterval& upper) {
  return lower.inside(upper) ? 1 : 0;
}

int delta_value(const GridInterval& lower, const GridInterval& upper) {
  return lower == upper ? 1 : 0;
}

int mobius_value(const GridInterval& lower, const GridInterval& upper) {
  if (!lower.inside(upper))
    throw std::invalid_argument(to_string(lower) + " is not contained in " + to_string(upper));
  const int left = lower.birth - upper.birth;
  const int right = upper.death - lower.death;
  if (left > 1 || right > 1) return 0;
  return (left + right) % 2 == 0 ? 1 : -1;
}

IntervalFunction mobius_convolve(const IntervalFunction& h) {
  const int m = h.m();
  IntervalFunction out(m, h.is_dense() ? IntervalFunction::Storage::dense : IntervalFunction::Storage::sparse);
  if (h.is_dense()) {
    for (int x = 0; x <= m; ++x) {
      for (int y = x + 1; y <= m + 1; ++y) {
        std::int64_t v = 0;
        if (x >= 1 && y <= m) {
          v = h.value(x, y) - h.value(x - 1, y) - h.value(x, y + 1) + h.value(x - 1, y + 1);
        } else if (x >= 1) {  // y = m+1
          v = h.value(x, m + 1) - h.value(x - 1, m + 1);
        } else if (y <= m) {  // x = 0
          v = h.value(0, y) - h.value(0, y + 1);
        } else {  // [0, m+1)
          v = h.value(0, m + 1);
        }
        if (v != 0) out.set({x, y}, v);
      }
    }
    return out;
  }
  // Sparse: scatter each h[c,d) onto the (at most four) cells whose
  // Moebius neighbourhood contains it.
  h.for_each_nonzero([&](const GridInterval& j, std::int64_t v) {
    out.add(j, v);
    if (j.birth + 1 < j.death) out.add({j.birth + 1, j.death}, -v);
    if (j.birth < j.death - 1) out.add({j.birth, j.death - 1}, -v);
    if (j.birth + 1 < j.death - 1) out.add({j.birth + 1, j.death - 1}, v);
  });
  return out;
}

IntervalFunction zeta_convolve(const IntervalFunction& g) {
  const int m = g.m();
  IntervalFunction out(m, g.is_dense() ? IntervalFunction::Storage::dense : IntervalFunction::Storage::sparse);
  if (g.is_dense()) {
    // Z[x,y) = g[x,y) + Z[x-1,y) + Z[x,y+1) - Z[x-1,y+1), filled by increasing
    // x and decreasing y so all three neighbours are final.
    for (int x = 0; x <= m; ++x) {
      for (int y = m + 1; y > x; --y) {
        std::int64_t v = g.value(x, y) + out.value(x - 1, y) + out.value(x, y + 1) - out.value(x - 1, y + 1);
        if (v != 0) out.set({x, y}, v);
      }
    }
    return out;
  }
  g.for_each_nonzero([&](const GridInterval& j, std::int64_t v) {
    for (int x = j.birth; x < j.death; ++x)
      for (int y = x + 1; y <= j.death; ++y) out.add({x, y}, v);
  });
  return out;
}

std::optional<GridInterval> order_reversal_violation(const IntervalFunction& h) {
  const int m = h.m();
  std::optional<GridInterval> found;
  auto check = [&](int a, int b) {
    if (found) return;
    const auto v = h.value(a, b);
    if (a >= 1 && h.value(a - 1, b) > v) found = GridInterval{a, b};
    else if (b <= m && h.value(a, b + 1) > v) found = GridInterval{a, b};
  };
  if (h.is_dense()) {
    for (int a = 0; a <= m && !found; ++a)
      for (int b = a + 1; b <= m + 1; ++b) check(a, b);
    return found;
  }
  // A violation needs a larger value one step outward; only cells next to
  // the support can witness one.
  h.for_each_nonzero([&](const GridInterval& c, std::int64_t) {
    check(c.birth, c.death);
    if (c.birth + 1 < c.death) check(c.birth + 1, c.death);
    if (c.birth < c.death - 1) check(c.birth, c.death - 1);
  });
  return found;
}

}  // namespace gpd
