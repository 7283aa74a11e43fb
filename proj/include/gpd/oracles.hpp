#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gpd/module.hpp"
#include "gpd/transport.hpp"

// Naive reference implementations and seeded instance generators. Nothing
// here calls the production rank, inversion, landscape or matching kernels;
// only the data types are shared.
namespace gpd::oracles {

struct RandomModuleSpec {
  int m = 8;
  int max_bars = 10;
  int max_multiplicity = 1;
  std::uint64_t seed = 0;
};

/// Bar count uniform in [0, max_bars]; each bar uniform over all [s,t) with
/// 0 <= s < t <= m+1; multiplicity uniform in [1, max_multiplicity].
Barcode random_barcode(const RandomModuleSpec& spec);

/// Strictly increasing grid of m+2 points. Gaps are rationals with
/// denominators up to 7, or random doubles (converted exactly) when
/// `from_doubles` is set.
Grid random_grid(int m, std::mt19937_64& rng, bool from_doubles = false);

/// Non-negative diagram with 0..max_points points (counted with multiplicity),
/// coordinates on a 1/denominator lattice inside [0, span].
RealDiagram random_diagram(std::mt19937_64& rng, int max_points, int span = 12, int denominator = 2);

/// Like random_diagram but each point carries a random sign.
RealDiagram random_signed_diagram(std::mt19937_64& rng, int max_points, int span = 12, int denominator = 2);

/// Rank(bc)[i,j) by counting bars directly.
std::int64_t count_rank(const Barcode& bc, int i, int j);

/// lambda_k(t) straight from the sup in its definition: every candidate h
/// where the floor/ceil grid indices change is tried, rank counted from the bars.
Rational brute_rank_sup(const Barcode& bc, const Grid& grid, int k, const Rational& t);

/// Minimum W_{p,q} over every partial matching of D into E (rest to the
/// diagonal). Requires |D| + |E| <= 10 points counted with multiplicity.
double brute_wasserstein(const RealDiagram& d, const RealDiagram& e, const CostParams& cost);
/// Same enumeration in exact arithmetic; only for p, q in {1, inf}.
Rational brute_wasserstein_exact(const RealDiagram& d, const RealDiagram& e, const CostParams& cost);

/// Moebius function of the interval poset from its recursive definition.
class RecursiveMobius {
 public:
  explicit RecursiveMobius(int m);
  /// mu(x, y) for x <= y (x contained in y); 0 otherwise.
  std::int64_t operator()(const GridInterval& x, const GridInterval& y);

 private:
  int m_;
  std::vector<std::int64_t> memo_;
  std::vector<bool> known_;
  std::size_t slot(const GridInterval& x, const GridInterval& y) const;
};

/// (mu * f)(x) = sum over y containing x of mu(x, y) f(y), with mu recursive.
IntervalFunction brute_mobius_convolve(const IntervalFunction& f);
/// (zeta * g)(x) = sum over y containing x of g(y).
IntervalFunction brute_zeta_convolve(const IntervalFunction& g);

/// Every subinterval-closed set of cells of [m+1]^2_<, as 0/1 functions.
/// Exponential; intended for m <= 6.
std::vector<IntervalFunction> enumerate_downsets(int m);

/// Signed diagrams that are Moebius inversions of some 0/1 down-set, as sorted
/// point lists (for set membership).
using PointList = std::vector<std::pair<GridInterval, std::int64_t>>;
std::set<PointList> realizable_levels(int m);
PointList point_list(const IntervalFunction& f);

}  // namespace gpd::oracles
