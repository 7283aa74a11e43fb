#include <algorithm>

#include "gpd/oracles.hpp"

namespace gpd::oracles {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Barcode random_barcode(const RandomModuleSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Barcode bc(spec.m);
  const int count = uniform(rng, 0, std::max(spec.max_bars, 0));
  // All (m+1)(m+2)/2 bars equally likely: pick an index and decode it.
  const int n = spec.m + 1;
  const int cells = n * (n + 1) / 2;
  for (int i = 0; i < count; ++i) {
    int idx = uniform(rng, 0, cells - 1);
    int s = 0;
    while (idx >= n - s) {
      idx -= n - s;
      ++s;
    }
    const int t = s + 1 + idx;
    bc.add({s, t}, uniform(rng, 1, std::max(spec.max_multiplicity, 1)));
  }
  return bc;
}

Grid random_grid(int m, std::mt19937_64& rng, bool from_doubles) {
  std::vector<Rational> pts;
  if (from_doubles) {
    std::uniform_real_distribution<double> gap(0.1, 2.0);
    double x = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    for (int i = 0; i <= m + 1; ++i) {
      pts.push_back(from_double(x));
      x += gap(rng);
    }
  } else {
    Rational x = uniform(rng, -3, 3);
    for (int i = 0; i <= m + 1; ++i) {
      pts.push_back(x);
      const int den = uniform(rng, 1, 7);
      x += Rational(uniform(rng, 1, 3 * den), den);
    }
  }
  return Grid(std::move(pts));
}

RealDiagram random_diagram(std::mt19937_64& rng, int max_points, int span, int denominator) {
  RealDiagram d;
  const int n = uniform(rng, 0, max_points);
  const int top = span * denominator;
  for (int i = 0; i < n; ++i) {
    int u = uniform(rng, 0, top - 1);
    int v = uniform(rng, u + 1, top);
    d.add({Rational(u, denominator), Rational(v, denominator)}, 1);
  }
  return d;
}

RealDiagram random_signed_diagram(std::mt19937_64& rng, int max_points, int span, int denominator) {
  RealDiagram d;
  const int n = uniform(rng, 0, max_points);
  const int top = span * denominator;
  for (int i = 0; i < n; ++i) {
    int u = uniform(rng, 0, top - 1);
    int v = uniform(rng, u + 1, top);
    d.add({Rational(u, denominator), Rational(v, denominator)}, uniform(rng, 0, 1) ? 1 : -1);
  }
  return d;
}

}  // namespace gpd::oracles
