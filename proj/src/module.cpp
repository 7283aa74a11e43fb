#include "gpd/module.hpp"

#include <algorithm>
#include <set>

namespace gpd {

// ---- Barcode ----

Barcode::Barcode(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("grid size m must be non-negative");
}

void Barcode::add(const GridInterval& bar, std::int64_t multiplicity) {
  if (!bar.valid(m_))
    throw std::invalid_argument("bar " + to_string(bar) + " outside grid with m = " + std::to_string(m_));
  if (multiplicity < 1) throw std::invalid_argument("bar multiplicity must be positive");
  bars_[bar] += multiplicity;
}

std::int64_t Barcode::size() const {
  std::int64_t total = 0;
  for (const auto& [bar, mult] : bars_) total += mult;
  return total;
}

// ---- MapChain ----

MapChain::MapChain(std::vector<std::size_t> dims, std::vector<Matrix> maps, Field field)
    : dims_(std::move(dims)), maps_(std::move(maps)), field_(field) {
  if (dims_.empty()) throw std::invalid_argument("map chain needs at least one vector space");
  if (maps_.size() + 1 != dims_.size())
    throw std::invalid_argument("map chain with " + std::to_string(dims_.size()) + " spaces needs " +
                                std::to_string(dims_.size() - 1) + " maps, got " + std::to_string(maps_.size()));
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].cols() != dims_[i] || maps_[i].rows() != dims_[i + 1])
      throw std::invalid_argument("map " + std::to_string(i) + " must be " + std::to_string(dims_[i + 1]) + " x " +
                                  std::to_string(dims_[i]) + ", got " + std::to_string(maps_[i].rows()) + " x " +
                                  std::to_string(maps_[i].cols()));
  }
}

MapChain MapChain::interval_sum(const Barcode& barcode, Field field) {
  const int m = barcode.m();
  // Basis of M(i): one vector per bar copy alive at i, in a fixed order.
  std::vector<GridInterval> copies;
  for (const auto& [bar, mult] : barcode.bars())
    for (std::int64_t c = 0; c < mult; ++c) copies.push_back(bar);

  std::vector<std::vector<std::size_t>> alive(static_cast<std::size_t>(m) + 1);
  for (std::size_t id = 0; id < copies.size(); ++id)
    for (int i = copies[id].birth; i < copies[id].death && i <= m; ++i) alive[static_cast<std::size_t>(i)].push_back(id);

  std::vector<std::size_t> dims;
  for (const auto& basis : alive) dims.push_back(basis.size());
  std::vector<Matrix> maps;
  for (int i = 0; i < m; ++i) {
    const auto& src = alive[static_cast<std::size_t>(i)];
    const auto& dst = alive[static_cast<std::size_t>(i) + 1];
    Matrix map(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto it = std::find(dst.begin(), dst.end(), src[c]);
      if (it != dst.end()) map.at(static_cast<std::size_t>(it - dst.begin()), c) = 1;
    }
    maps.push_back(std::move(map));
  }
  return MapChain(std::move(dims), std::move(maps), field);
}

// ---- RankTable ----

RankTable::RankTable(IntervalFunction table) : table_(std::move(table)) {
  if (table_.min_value() < 0) throw std::invalid_argument("rank table has a negative value");
  if (auto bad = order_reversal_violation(table_))
    throw std::invalid_argument("rank table is not order-reversing at " + to_string(*bad));
}

// ---- Grid ----

Grid::Grid(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("a grid needs at least two points (m >= 0)");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1] < points_[i]))
      throw std::invalid_argument("grid points must be strictly increasing (index " + std::to_string(i) + ")");
}

Grid Grid::identity(int m) {
  if (m < 0) throw std::invalid_argument("grid size m must be non-negative");
  std::vector<Rational> pts;
  for (int i = 0; i <= m + 1; ++i) pts.emplace_back(i);
  return Grid(std::move(pts));
}

bool Grid::is_identity() const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] != static_cast<long long>(i)) return false;
  return true;
}

std::optional<int> Grid::floor_index(const Rational& a) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), a);
  if (it == points_.begin()) return std::nullopt;
  return static_cast<int>(it - points_.begin()) - 1;
}

std::optional<int> Grid::ceil_index(const Rational& b) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), b);
  if (it == points_.end()) return std::nullopt;
  return static_cast<int>(it - points_.begin());
}

// ---- SignedDiagram ----

SignedDiagram SignedDiagram::from_function(const IntervalFunction& f, DiagramKind kind) {
  SignedDiagram d(f.m(), kind);
  f.for_each_nonzero([&](const GridInterval& cell, std::int64_t v) { d.add(cell, v); });
  return d;
}

std::int64_t SignedDiagram::operator()(const GridInterval& cell) const {
  auto it = points_.find(cell);
  return it == points_.end() ? 0 : it->second;
}

void SignedDiagram::add(const GridInterval& cell, std::int64_t value) {
  if (!cell.valid(m_))
    throw std::invalid_argument("point " + to_string(cell) + " outside grid with m = " + std::to_string(m_));
  auto v = (points_[cell] += value);
  if (v == 0) points_.erase(cell);
  else if (kind_ == DiagramKind::persistence && v < 0)
    throw RealizabilityError("persistence diagram takes negative value at " + to_string(cell), cell);
  else if (kind_ == DiagramKind::graded && (v < -1 || v > 1))
    throw RealizabilityError("graded diagram takes value " + std::to_string(v) + " at " + to_string(cell), cell);
}

IntervalFunction SignedDiagram::to_function() const {
  IntervalFunction f(m_);
  for (const auto& [cell, v] : points_) f.set(cell, v);
  return f;
}

// ---- RealDiagram ----

RealDiagram::RealDiagram(std::initializer_list<std::pair<RealInterval, std::int64_t>> points) {
  for (const auto& [iv, v] : points) add(iv, v);
}

std::int64_t RealDiagram::operator()(const RealInterval& iv) const {
  auto it = points_.find(iv);
  return it == points_.end() ? 0 : it->second;
}

bool RealDiagram::is_nonnegative() const {
  return std::all_of(points_.begin(), points_.end(), [](const auto& p) { return p.second > 0; });
}

std::int64_t RealDiagram::mass() const {
  std::int64_t total = 0;
  for (const auto& [iv, v] : points_) total += v < 0 ? -v : v;
  return total;
}

void RealDiagram::add(const RealInterval& iv, std::int64_t value) {
  if (!(iv.birth < iv.death))
    throw std::invalid_argument("interval [" + format_rational(iv.birth) + "," + format_rational(iv.death) +
                                ") is empty");
  if (value == 0) return;
  auto v = (points_[iv] += value);
  if (v == 0) points_.erase(iv);
}

RealDiagram RealDiagram::positive_part() const {
  RealDiagram out;
  for (const auto& [iv, v] : points_)
    if (v > 0) out.points_.emplace(iv, v);
  return out;
}

RealDiagram RealDiagram::negative_part() const {
  RealDiagram out;
  for (const auto& [iv, v] : points_)
    if (v < 0) out.points_.emplace(iv, -v);
  return out;
}

RealDiagram& RealDiagram::operator+=(const RealDiagram& other) {
  for (const auto& [iv, v] : other.points_) add(iv, v);
  return *this;
}

RealDiagram& RealDiagram::operator-=(const RealDiagram& other) {
  for (const auto& [iv, v] : other.points_) add(iv, -v);
  return *this;
}

RealDiagram operator*(std::int64_t scale, const RealDiagram& d) {
  RealDiagram out;
  for (const auto& [iv, v] : d.points_) out.add(iv, scale * v);
  return out;
}

RealDiagram interval(const Rational& birth, const Rational& death, std::int64_t value) {
  RealDiagram d;
  d.add({birth, death}, value);
  return d;
}

// ---- operations ----

RankTable rank_from_barcode(const Barcode& barcode) {
  const int m = barcode.m();
  // Rank[a,b) counts bars [s,t) with s <= a and t >= b, i.e. zeta applied to
  // the bar multiplicities.
  IntervalFunction bars(m);
  for (const auto& [bar, mult] : barcode.bars()) bars.add(bar, mult);
  return RankTable(zeta_convolve(bars));
}

RankTable rank_from_mapchain(const MapChain& chain) {
  const int m = chain.m();
  const auto& field = chain.field();
  IntervalFunction table(m);
  for (int a = 0; a <= m; ++a) {
    // composite = M(a <= c), extended one map at a time; Rank[a, c+1) = rank.
    Matrix composite = Matrix::identity(chain.dims()[static_cast<std::size_t>(a)]);
    for (int c = a; c <= m; ++c) {
      if (c > a) composite = multiply(chain.maps()[static_cast<std::size_t>(c) - 1], composite, field);
      auto r = static_cast<std::int64_t>(rank(composite, field));
      if (r == 0) break;  // all longer composites factor through zero
      table.set({a, c + 1}, r);
    }
  }
  return RankTable(std::move(table));
}

SignedDiagram diagram_from_rank(const RankTable& rank) {
  IntervalFunction pd = mobius_convolve(rank.table());
  std::optional<GridInterval> negative;
  pd.for_each_nonzero([&](const GridInterval& cell, std::int64_t v) {
    if (v < 0 && !negative) negative = cell;
  });
  if (negative)
    throw RealizabilityError("rank table is not the rank function of a module: pd" + to_string(*negative) + " = " +
                                 std::to_string(pd(*negative)),
                             *negative);
  return SignedDiagram::from_function(pd, DiagramKind::persistence);
}

Barcode barcode_from_diagram(const SignedDiagram& diagram) {
  Barcode bc(diagram.m());
  for (const auto& [cell, v] : diagram.points()) {
    if (v < 0) throw RealizabilityError("negative multiplicity at " + to_string(cell), cell);
    bc.add(cell, v);
  }
  return bc;
}

RealDiagram extend_to_grid(const SignedDiagram& diagram, const Grid& grid) {
  if (grid.m() != diagram.m())
    throw std::invalid_argument("grid has m = " + std::to_string(grid.m()) + " but diagram has m = " +
                                std::to_string(diagram.m()));
  RealDiagram out;
  for (const auto& [cell, v] : diagram.points()) out.add({grid[cell.birth], grid[cell.death]}, v);
  return out;
}

RankEvaluator::RankEvaluator(RankTable table, Grid grid) : table_(std::move(table)), grid_(std::move(grid)) {
  if (grid_.m() != table_.m())
    throw std::invalid_argument("grid has m = " + std::to_string(grid_.m()) + " but rank table has m = " +
                                std::to_string(table_.m()));
}

std::int64_t RankEvaluator::operator()(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("rank evaluator needs a < b");
  auto i = grid_.floor_index(a);
  auto j = grid_.ceil_index(b);
  if (!i || !j) return 0;
  return table_(*i, *j);
}

RankEvaluator extend_to_grid(const RankTable& rank, const Grid& grid) { return RankEvaluator(rank, grid); }

GridEmbedding embed(const RealDiagram& diagram) {
  std::set<Rational> coords;
  for (const auto& [iv, v] : diagram.points()) {
    if (v < 0) throw std::invalid_argument("embed requires a non-negative diagram");
    coords.insert(iv.birth);
    coords.insert(iv.death);
  }
  if (coords.empty()) return {Grid::identity(0), Barcode(0)};
  std::vector<Rational> pts(coords.begin(), coords.end());
  Grid grid(std::move(pts));
  Barcode bc(grid.m());
  for (const auto& [iv, v] : diagram.points()) bc.add({*grid.floor_index(iv.birth), *grid.ceil_index(iv.death)}, v);
  return {std::move(grid), std::move(bc)};
}

}  // namespace gpd
