#include "gpd/landscape.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpd {

const std::vector<CriticalPoint>& Landscape::level(int k) const {
  static const std::vector<CriticalPoint> empty;
  if (k < 1) throw std::invalid_argument("landscape levels start at k = 1");
  return k > K() ? empty : levels_[static_cast<std::size_t>(k) - 1];
}

std::vector<CriticalPoint> landscape_level(const RealDiagram& graded_level) {
  const Staircase staircase = staircase_decompose(graded_level);
  std::vector<CriticalPoint> points;
  for (const auto& c : staircase.components) {
    const Rational& start = c.births.front();
    if (points.empty() || points.back().t != start) points.push_back({start, 0});
    for (std::size_t j = 0; j < c.size(); ++j) {
      points.push_back({midpoint(c.births[j], c.deaths[j]), (c.deaths[j] - c.births[j]) / 2});
      if (j + 1 < c.size())
        points.push_back({midpoint(c.births[j + 1], c.deaths[j]), (c.deaths[j] - c.births[j + 1]) / 2});
    }
    points.push_back({c.deaths.back(), 0});
  }
  return points;
}

Landscape landscape_from_levels(const std::vector<RealDiagram>& graded_levels) {
  std::vector<std::vector<CriticalPoint>> levels;
  for (const auto& level : graded_levels) {
    if (auto report = realizability_check(level); !report.realizable)
      throw std::invalid_argument("graded level is not realizable: " + report.diagnostic);
    levels.push_back(landscape_level(level));
  }
  // Trailing empty levels carry no information.
  while (!levels.empty() && levels.back().empty()) levels.pop_back();
  return Landscape(std::move(levels));
}

Landscape landscape_from_graded(const GradedDiagram& graded, const Grid& grid) {
  std::vector<RealDiagram> levels;
  for (const auto& level : graded.levels()) levels.push_back(extend_to_grid(level, grid));
  return landscape_from_levels(levels);
}

Rational landscape_eval(const Landscape& landscape, int k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("landscape levels start at k = 1");
  const auto& pts = landscape.level(k);
  if (pts.empty() || t <= pts.front().t || t >= pts.back().t) return 0;
  auto upper = std::upper_bound(pts.begin(), pts.end(), t, [](const Rational& x, const CriticalPoint& p) { return x < p.t; });
  const auto& right = *upper;
  const auto& left = *(upper - 1);
  return left.h + (right.h - left.h) * (t - left.t) / (right.t - left.t);
}

double landscape_eval(const Landscape& landscape, int k, double t) {
  return to_double(landscape_eval(landscape, k, from_double(t)));
}

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<int> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() ? !values_.empty() : values_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("step function needs one value per gap between breakpoints");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw std::invalid_argument("breakpoints must increase strictly");
  area_.assign(breakpoints_.size(), Rational(0));
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    area_[i] = area_[i - 1] + values_[i - 1] * (breakpoints_[i] - breakpoints_[i - 1]);
}

int StepFunction::operator()(const Rational& t) const {
  if (breakpoints_.empty() || t <= breakpoints_.front() || t >= breakpoints_.back()) return 0;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (*it == t) return 0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction derivative(const RealDiagram& graded_level) {
  const Staircase staircase = staircase_decompose(graded_level);
  std::vector<Rational> breaks;
  std::vector<int> values;
  for (const auto& c : staircase.components) {
    // Midpoints of maxima and meets interleave and increase strictly.
    std::vector<Rational> mids;
    for (std::size_t j = 0; j < c.size(); ++j) {
      mids.push_back(midpoint(c.births[j], c.deaths[j]));
      if (j + 1 < c.size()) mids.push_back(midpoint(c.births[j + 1], c.deaths[j]));
    }
    if (breaks.empty() || breaks.back() != c.births.front()) {
      if (!breaks.empty()) values.push_back(0);
      breaks.push_back(c.births.front());
    }
    int sign = 1;
    for (const auto& mid : mids) {
      values.push_back(sign);
      breaks.push_back(mid);
      sign = -sign;
    }
    values.push_back(-1);
    breaks.push_back(c.deaths.back());
  }
  return StepFunction(std::move(breaks), std::move(values));
}

StepFunction derivative(const SignedDiagram& graded_level, const Grid& grid) {
  return derivative(extend_to_grid(graded_level, grid));
}

int derivative_raw(const RealDiagram& graded_level, const Rational& t) {
  int total = 0;
  for (const auto& [iv, c] : graded_level.points()) {
    const Rational mid = midpoint(iv.birth, iv.death);
    if (iv.birth < t && t < mid) total += static_cast<int>(c);
    if (mid < t && t < iv.death) total -= static_cast<int>(c);
  }
  return total;
}

Rational integrate(const StepFunction& sf, const Rational& t) {
  const auto& br = sf.breakpoints();
  if (br.empty() || t <= br.front()) return 0;
  if (t >= br.back()) return sf.area_before(br.size() - 1);
  // Last breakpoint strictly below t, then the partial gap up to t.
  const auto i = static_cast<std::size_t>(std::lower_bound(br.begin(), br.end(), t) - br.begin()) - 1;
  return sf.area_before(i) + sf.values()[i] * (t - br[i]);
}

}  // namespace gpd
