#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gpd/oracles.hpp"

namespace gpd::oracles {

std::int64_t count_rank(const Barcode& bc, int i, int j) {
  std::int64_t total = 0;
  for (const auto& [bar, mult] : bc.bars())
    if (bar.birth <= i && bar.death >= j) total += mult;
  return total;
}

Rational brute_rank_sup(const Barcode& bc, const Grid& grid, int k, const Rational& t) {
  const int last = grid.m() + 1;
  std::vector<Rational> candidates;
  for (int i = 0; i <= last; ++i) {
    if (grid[i] < t) candidates.push_back(t - grid[i]);
    if (grid[i] > t) candidates.push_back(grid[i] - t);
  }
  Rational best = 0;
  for (const auto& h : candidates) {
    const Rational lo = t - h, hi = t + h;
    int i = -1, j = -1;
    for (int x = 0; x <= last; ++x)
      if (grid[x] <= lo) i = x;
    for (int x = last; x >= 0; --x)
      if (grid[x] >= hi) j = x;
    if (i < 0 || j < 0) continue;
    if (count_rank(bc, i, j) >= k && h > best) best = h;
  }
  return best;
}

namespace {

std::vector<RealInterval> expand(const RealDiagram& d) {
  std::vector<RealInterval> out;
  for (const auto& [iv, v] : d.points()) {
    if (v < 0) throw std::invalid_argument("brute force matching needs non-negative diagrams");
    for (std::int64_t c = 0; c < v; ++c) out.push_back(iv);
  }
  return out;
}

void guard(std::size_t n1, std::size_t n2) {
  if (n1 + n2 > 10) throw std::invalid_argument("brute force matching limited to 10 points");
}

// Visits every partial injection of {0..n1-1} into {0..n2-1}; -1 marks the diagonal.
void each_matching(std::size_t n1, std::size_t n2, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> assign(n1, -1);
  std::vector<bool> used(n2, false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n1) {
      fn(assign);
      return;
    }
    assign[i] = -1;
    go(i + 1);
    for (std::size_t j = 0; j < n2; ++j) {
      if (used[j]) continue;
      used[j] = true;
      assign[i] = static_cast<int>(j);
      go(i + 1);
      used[j] = false;
    }
    assign[i] = -1;
  };
  go(0);
}

double qnorm(double dx, double dy, double q) {
  dx = std::fabs(dx);
  dy = std::fabs(dy);
  if (std::isinf(q)) return std::max(dx, dy);
  return std::pow(std::pow(dx, q) + std::pow(dy, q), 1.0 / q);
}

// Distance from (x, y) to the diagonal in the q-norm: (y - x)/2 * 2^(1/q).
double diagonal_distance(double x, double y, double q) {
  const double half = (y - x) / 2;
  return std::isinf(q) ? half : half * std::pow(2.0, 1.0 / q);
}

}  // namespace

double brute_wasserstein(const RealDiagram& d, const RealDiagram& e, const CostParams& cost) {
  const auto a = expand(d), b = expand(e);
  guard(a.size(), b.size());
  double best = std::numeric_limits<double>::infinity();
  each_matching(a.size(), b.size(), [&](const std::vector<int>& assign) {
    std::vector<double> costs;
    std::vector<bool> hit(b.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double ax = to_double(a[i].birth), ay = to_double(a[i].death);
      if (assign[i] < 0) {
        costs.push_back(diagonal_distance(ax, ay, cost.q));
      } else {
        const auto& t = b[static_cast<std::size_t>(assign[i])];
        hit[static_cast<std::size_t>(assign[i])] = true;
        costs.push_back(qnorm(ax - to_double(t.birth), ay - to_double(t.death), cost.q));
      }
    }
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!hit[j]) costs.push_back(diagonal_distance(to_double(b[j].birth), to_double(b[j].death), cost.q));
    double total = 0;
    if (std::isinf(cost.p)) {
      for (double c : costs) total = std::max(total, c);
    } else {
      for (double c : costs) total += std::pow(c, cost.p);
      total = std::pow(total, 1.0 / cost.p);
    }
    best = std::min(best, total);
  });
  return best;
}

Rational brute_wasserstein_exact(const RealDiagram& d, const RealDiagram& e, const CostParams& cost) {
  if (!cost.exact()) throw std::invalid_argument("exact brute force needs p, q in {1, inf}");
  const bool q_inf = std::isinf(cost.q), p_inf = std::isinf(cost.p);
  const auto a = expand(d), b = expand(e);
  guard(a.size(), b.size());
  auto point_cost = [&](const Rational& dx, const Rational& dy) {
    Rational x = dx < 0 ? Rational(-dx) : dx, y = dy < 0 ? Rational(-dy) : dy;
    return q_inf ? std::max(x, y) : Rational(x + y);
  };
  auto diagonal = [&](const RealInterval& iv) {
    Rational len = iv.death - iv.birth;
    return q_inf ? Rational(len / 2) : len;
  };
  std::optional<Rational> best;
  each_matching(a.size(), b.size(), [&](const std::vector<int>& assign) {
    Rational total = 0;
    auto fold = [&](const Rational& c) { total = p_inf ? std::max(total, c) : Rational(total + c); };
    std::vector<bool> hit(b.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (assign[i] < 0) {
        fold(diagonal(a[i]));
      } else {
        const auto& t = b[static_cast<std::size_t>(assign[i])];
        hit[static_cast<std::size_t>(assign[i])] = true;
        fold(point_cost(a[i].birth - t.birth, a[i].death - t.death));
      }
    }
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!hit[j]) fold(diagonal(b[j]));
    if (!best || total < *best) best = total;
  });
  return *best;
}

// ---- Moebius from its recursive definition ----

namespace {

std::vector<GridInterval> all_cells(int m) {
  std::vector<GridInterval> cells;
  for (int a = 0; a <= m; ++a)
    for (int b = a + 1; b <= m + 1; ++b) cells.push_back({a, b});
  return cells;
}

std::size_t cell_index(int m, const GridInterval& c) {
  std::size_t idx = 0;
  for (int a = 0; a < c.birth; ++a) idx += static_cast<std::size_t>(m + 1 - a);
  return idx + static_cast<std::size_t>(c.death - c.birth - 1);
}

bool contained(const GridInterval& x, const GridInterval& y) { return y.birth <= x.birth && x.death <= y.death; }

}  // namespace

RecursiveMobius::RecursiveMobius(int m) : m_(m) {
  const std::size_t n = all_cells(m).size();
  memo_.assign(n * n, 0);
  known_.assign(n * n, false);
}

std::size_t RecursiveMobius::slot(const GridInterval& x, const GridInterval& y) const {
  const std::size_t n = static_cast<std::size_t>((m_ + 1) * (m_ + 2) / 2);
  return cell_index(m_, x) * n + cell_index(m_, y);
}

std::int64_t RecursiveMobius::operator()(const GridInterval& x, const GridInterval& y) {
  if (!contained(x, y)) return 0;
  if (x == y) return 1;
  const auto s = slot(x, y);
  if (known_[s]) return memo_[s];
  // mu(x, y) = - sum over x <= z < y of mu(x, z).
  std::int64_t total = 0;
  for (int a = y.birth; a <= x.birth; ++a)
    for (int b = x.death; b <= y.death; ++b) {
      GridInterval z{a, b};
      if (z != y) total += (*this)(x, z);
    }
  memo_[s] = -total;
  known_[s] = true;
  return -total;
}

IntervalFunction brute_mobius_convolve(const IntervalFunction& f) {
  const int m = f.m();
  RecursiveMobius mu(m);
  IntervalFunction out(m);
  const auto cells = all_cells(m);
  for (const auto& x : cells) {
    std::int64_t total = 0;
    for (const auto& y : cells)
      if (contained(x, y)) total += mu(x, y) * f(y);
    if (total != 0) out.set(x, total);
  }
  return out;
}

IntervalFunction brute_zeta_convolve(const IntervalFunction& g) {
  const int m = g.m();
  IntervalFunction out(m);
  const auto cells = all_cells(m);
  for (const auto& x : cells) {
    std::int64_t total = 0;
    for (const auto& y : cells)
      if (contained(x, y)) total += g(y);
    if (total != 0) out.set(x, total);
  }
  return out;
}

std::vector<IntervalFunction> enumerate_downsets(int m) {
  // A down-set is fixed by its maxima: an antichain, i.e. intervals with
  // strictly increasing births and strictly increasing deaths.
  const auto cells = all_cells(m);
  std::vector<IntervalFunction> out;
  std::vector<GridInterval> maxima;
  std::function<void()> emit = [&]() {
    IntervalFunction f(m);
    for (const auto& c : cells)
      for (const auto& top : maxima)
        if (contained(c, top)) {
          f.set(c, 1);
          break;
        }
    out.push_back(std::move(f));
  };
  std::function<void(int, int)> extend = [&](int min_birth, int min_death) {
    emit();
    for (int a = min_birth; a <= m; ++a)
      for (int b = std::max(a + 1, min_death); b <= m + 1; ++b) {
        maxima.push_back({a, b});
        extend(a + 1, b + 1);
        maxima.pop_back();
      }
  };
  extend(0, 0);
  return out;
}

PointList point_list(const IntervalFunction& f) {
  PointList out;
  f.for_each_nonzero([&](const GridInterval& c, std::int64_t v) { out.emplace_back(c, v); });
  return out;
}

std::set<PointList> realizable_levels(int m) {
  std::set<PointList> out;
  for (const auto& downset : enumerate_downsets(m)) out.insert(point_list(brute_mobius_convolve(downset)));
  return out;
}

}  // namespace gpd::oracles
