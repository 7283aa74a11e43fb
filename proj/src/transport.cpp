#include "gpd/transport.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gpd/assignment.hpp"
#include "gpd/grading.hpp"

namespace gpd {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr double kTolerance = 1e-9;

std::vector<PlanePoint> expand(const RealDiagram& d) {
  std::vector<PlanePoint> out;
  for (const auto& [iv, v] : d.points()) {
    if (v < 0) throw std::invalid_argument("wasserstein requires non-negative diagrams; use signed_wasserstein");
    for (std::int64_t c = 0; c < v; ++c) out.push_back(PlanePoint::of(iv));
  }
  return out;
}

PlanePoint diagonal_of(const PlanePoint& p) {
  auto mid = midpoint(p.x, p.y);
  return {mid, mid};
}

Rational exact_pair_cost(const PlanePoint& a, const PlanePoint& b, double q) {
  Rational dx = abs(a.x - b.x), dy = abs(a.y - b.y);
  return q == 1.0 ? Rational(dx + dy) : (dx < dy ? dy : dx);
}

// Rows: D points then diagonal slots for E. Columns: E points then diagonal
// slots for D. Every D-slot is interchangeable, so any slot may take any D point.
template <class T, class CostFn>
CostMatrix<T> build_matrix(const std::vector<PlanePoint>& d, const std::vector<PlanePoint>& e, CostFn&& cost) {
  const std::size_t n1 = d.size(), n2 = e.size(), n = n1 + n2;
  CostMatrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) m[i][j] = cost(d[i], e[j]);
    const T to_diag = cost(d[i], diagonal_of(d[i]));
    for (std::size_t j = n2; j < n; ++j) m[i][j] = to_diag;
  }
  for (std::size_t j = 0; j < n2; ++j) {
    const T from_diag = cost(diagonal_of(e[j]), e[j]);
    for (std::size_t i = n1; i < n; ++i) m[i][j] = from_diag;
  }
  return m;
}

Coupling coupling_from(const std::vector<PlanePoint>& d, const std::vector<PlanePoint>& e,
                       const std::vector<std::size_t>& assignment) {
  const std::size_t n1 = d.size(), n2 = e.size();
  std::vector<CouplingPair> pairs;
  auto push = [&](const PlanePoint& s, const PlanePoint& t) {
    for (auto& p : pairs)
      if (p.source == s && p.target == t) {
        ++p.multiplicity;
        return;
      }
    pairs.push_back({s, t, 1});
  };
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const std::size_t j = assignment[i];
    if (i < n1 && j < n2) push(d[i], e[j]);
    else if (i < n1) push(d[i], diagonal_of(d[i]));
    else if (j < n2) push(diagonal_of(e[j]), e[j]);
  }
  return {std::move(pairs)};
}

// Exact route: rational costs, scaled to 64-bit integers when they fit.
std::vector<std::size_t> solve_exact(const std::vector<PlanePoint>& d, const std::vector<PlanePoint>& e,
                                     const CostParams& cost) {
  auto rational = build_matrix<Rational>(d, e, [&](const PlanePoint& a, const PlanePoint& b) {
    return exact_pair_cost(a, b, cost.q);
  });
  BigInt scale = 1;
  Rational largest = 0;
  for (const auto& row : rational)
    for (const auto& c : row) {
      scale = boost::multiprecision::lcm(scale, BigInt(denominator(c)));
      if (largest < c) largest = c;
    }
  const Rational bound = largest * Rational(scale) * static_cast<long long>(rational.size() + 1);
  const bool fits = bound < Rational(BigInt(1) << 60);
  const bool bottleneck = cost.p == CostParams::inf;
  if (!fits) return bottleneck ? bottleneck_assignment(rational) : min_cost_assignment(rational);

  CostMatrix<long long> scaled(rational.size(), std::vector<long long>(rational.size()));
  for (std::size_t i = 0; i < rational.size(); ++i)
    for (std::size_t j = 0; j < rational.size(); ++j) {
      Rational v = rational[i][j] * Rational(scale);
      scaled[i][j] = numerator(v).convert_to<long long>();
    }
  return bottleneck ? bottleneck_assignment(scaled) : min_cost_assignment(scaled);
}

std::vector<std::size_t> solve_float(const std::vector<PlanePoint>& d, const std::vector<PlanePoint>& e,
                                     const CostParams& cost) {
  const bool bottleneck = cost.p == CostParams::inf;
  auto m = build_matrix<double>(d, e, [&](const PlanePoint& a, const PlanePoint& b) {
    const double c = pair_cost(a, b, cost.q);
    return (bottleneck || cost.p == 1.0) ? c : std::pow(c, cost.p);
  });
  return bottleneck ? bottleneck_assignment(m) : min_cost_assignment(m);
}

}  // namespace

CostParams::CostParams(double p_, double q_) : p(p_), q(q_) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("cost exponents must satisfy 1 <= p, q <= inf");
}

std::string CostParams::label() const {
  auto show = [](double x) {
    if (x == inf) return std::string("inf");
    std::ostringstream os;
    os << x;
    return os.str();
  };
  return "(" + show(p) + "," + show(q) + ")";
}

double norm2d(double x, double y, double r) {
  x = std::fabs(x);
  y = std::fabs(y);
  if (r == CostParams::inf) return std::max(x, y);
  if (r == 1.0) return x + y;
  const double big = std::max(x, y);
  if (big == 0.0) return 0.0;
  return big * std::pow(std::pow(x / big, r) + std::pow(y / big, r), 1.0 / r);
}

double pair_cost(const PlanePoint& a, const PlanePoint& b, double q) {
  return norm2d(to_double(a.x - b.x), to_double(a.y - b.y), q);
}

double coupling_cost(const Coupling& coupling, const CostParams& cost) {
  double total = 0.0;
  for (const auto& pr : coupling.pairs) {
    const double c = pair_cost(pr.source, pr.target, cost.q);
    if (cost.p == CostParams::inf) total = std::max(total, c);
    else total += static_cast<double>(pr.multiplicity) * std::pow(c, cost.p);
  }
  if (cost.p == CostParams::inf || cost.p == 1.0) return total;
  return std::pow(total, 1.0 / cost.p);
}

std::optional<Rational> coupling_cost_exact(const Coupling& coupling, const CostParams& cost) {
  if (!cost.exact()) return std::nullopt;
  Rational total = 0;
  for (const auto& pr : coupling.pairs) {
    Rational c = exact_pair_cost(pr.source, pr.target, cost.q);
    if (cost.p == CostParams::inf) {
      if (total < c) total = c;
    } else {
      total += c * pr.multiplicity;
    }
  }
  return total;
}

bool Coupling::is_valid_between(const RealDiagram& source, const RealDiagram& target) const {
  RealDiagram from, to;
  for (const auto& pr : pairs) {
    if (pr.multiplicity < 1) return false;
    if (pr.source.on_diagonal() && pr.target.on_diagonal()) return false;
    if (pr.source.on_diagonal()) {
      if (!(pr.source == diagonal_of(pr.target))) return false;
    } else {
      from.add({pr.source.x, pr.source.y}, pr.multiplicity);
    }
    if (pr.target.on_diagonal()) {
      if (!(pr.target == diagonal_of(pr.source))) return false;
    } else {
      to.add({pr.target.x, pr.target.y}, pr.multiplicity);
    }
  }
  return from == source && to == target;
}

Distance wasserstein(const RealDiagram& d, const RealDiagram& e, const CostParams& cost) {
  const auto dp = expand(d);
  const auto ep = expand(e);
  const auto assignment = cost.exact() ? solve_exact(dp, ep, cost) : solve_float(dp, ep, cost);
  Distance out;
  out.coupling = coupling_from(dp, ep, assignment);
  out.exact = coupling_cost_exact(out.coupling, cost);
  out.value = out.exact ? to_double(*out.exact) : coupling_cost(out.coupling, cost);
  return out;
}

Distance signed_wasserstein(const RealDiagram& a, const RealDiagram& b, const CostParams& cost) {
  Distance out = wasserstein(a.positive_part() + b.negative_part(), b.positive_part() + a.negative_part(), cost);
  out.metric = cost.p == 1.0;
  return out;
}

GradedDistance graded_wasserstein(const std::vector<RealDiagram>& d_levels, const std::vector<RealDiagram>& e_levels,
                                  const CostParams& cost) {
  GradedDistance out;
  const std::size_t K = std::max(d_levels.size(), e_levels.size());
  const RealDiagram zero;
  if (cost.exact()) out.exact_total = Rational(0);
  for (std::size_t k = 0; k < K; ++k) {
    const auto& dk = k < d_levels.size() ? d_levels[k] : zero;
    const auto& ek = k < e_levels.size() ? e_levels[k] : zero;
    out.levels.push_back(signed_wasserstein(dk, ek, cost));
    out.total += out.levels.back().value;
    if (out.exact_total) *out.exact_total += *out.levels.back().exact;
  }
  return out;
}

TriangleReport triangle_counterexample(const Rational& eps, int k, const CostParams& cost) {
  if (!(eps > 0) || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (cost.p == 1.0) throw std::invalid_argument("p = 1 gives a metric; the counterexample needs p > 1");

  TriangleReport r;
  r.eps = eps;
  r.k = k;
  r.cost = cost;
  const RealDiagram background = static_cast<std::int64_t>(k - 1) * interval(0, 12);
  r.d = interval(0, 10) + background;
  r.f = interval(2, 10 + 2 * eps) + background;
  r.e = interval(0, 10) + interval(1, 10 + eps) + interval(2, 10 + 2 * eps) + background;

  auto level_k = [k](const RealDiagram& diagram) {
    auto levels = graded_levels(diagram);
    return static_cast<std::size_t>(k) <= levels.size() ? levels[static_cast<std::size_t>(k) - 1] : RealDiagram{};
  };
  r.d_k = level_k(r.d);
  r.e_k = level_k(r.e);
  r.f_k = level_k(r.f);

  r.d_f = signed_wasserstein(r.d_k, r.f_k, cost).value;
  r.d_e = signed_wasserstein(r.d_k, r.e_k, cost).value;
  r.e_f = signed_wasserstein(r.e_k, r.f_k, cost).value;

  const double e = to_double(eps);
  r.closed_d_f = 2.0 * norm2d(1.0, e, cost.q);
  r.closed_d_e = e * norm2d(1.0, 1.0, cost.p);
  r.closed_e_f = norm2d(1.0, 1.0, cost.p);
  r.matches_closed_forms = std::fabs(r.d_f - r.closed_d_f) <= kTolerance &&
                           std::fabs(r.d_e - r.closed_d_e) <= kTolerance &&
                           std::fabs(r.e_f - r.closed_e_f) <= kTolerance;
  r.violated = r.d_f > r.d_e + r.e_f + kTolerance;
  return r;
}

}  // namespace gpd
