#include "gpd/geodesic.hpp"

#include <stdexcept>

namespace gpd {

namespace {

using boost::multiprecision::abs;

Rational lerp(const Rational& from, const Rational& to, const Rational& s, const Rational& length) {
  return from + (to - from) * s / length;
}

}  // namespace

RealInterval GeodesicSegment::at(const Rational& s) const {
  if (length == 0) return to;
  switch (kind) {
    case Kind::birth_slide:
    case Kind::collapse:
    case Kind::emerge:
      return {lerp(from.birth, to.birth, s, length), from.death};
    case Kind::death_slide:
      return {from.birth, lerp(from.death, to.death, s, length)};
  }
  return to;
}

GeodesicPath::GeodesicPath(RealDiagram start, std::vector<GeodesicSegment> segments)
    : start_(std::move(start)), segments_(std::move(segments)) {
  for (const auto& seg : segments_) length_ += seg.length;
}

RealDiagram GeodesicPath::operator()(const Rational& t) const {
  if (t < 0 || t > length_) throw std::out_of_range("geodesic parameter outside [0, length]");
  RealDiagram state = start_;
  auto place = [&state](const RealInterval& iv, std::int64_t v) {
    if (iv.birth < iv.death) state.add(iv, v);  // degenerate intervals are on the diagonal
  };
  Rational remaining = t;
  for (const auto& seg : segments_) {
    if (remaining <= 0) break;
    const Rational travelled = remaining < seg.length ? remaining : seg.length;
    place(seg.from, -1);
    place(seg.at(travelled), 1);
    remaining -= travelled;
  }
  return state;
}

GeodesicPath coordinate_geodesic_path(const RealDiagram& d, const RealDiagram& e) {
  const Distance optimal = wasserstein(d, e, CostParams(1.0, 1.0));
  std::vector<GeodesicSegment> segments;
  using Kind = GeodesicSegment::Kind;
  for (const auto& pr : optimal.coupling.pairs) {
    for (std::int64_t c = 0; c < pr.multiplicity; ++c) {
      const auto& s = pr.source;
      const auto& t = pr.target;
      if (t.on_diagonal()) {
        segments.push_back({Kind::collapse, {s.x, s.y}, {s.y, s.y}, s.y - s.x});
      } else if (s.on_diagonal()) {
        segments.push_back({Kind::emerge, {t.y, t.y}, {t.x, t.y}, t.y - t.x});
      } else {
        // Move the birth first when the new birth stays below the old death;
        // otherwise extend the death first so the interval never empties.
        const RealInterval mid_birth{t.x, s.y};
        const RealInterval mid_death{s.x, t.y};
        if (t.x < s.y) {
          if (s.x != t.x) segments.push_back({Kind::birth_slide, {s.x, s.y}, mid_birth, abs(t.x - s.x)});
          if (s.y != t.y) segments.push_back({Kind::death_slide, mid_birth, {t.x, t.y}, abs(t.y - s.y)});
        } else {
          if (s.y != t.y) segments.push_back({Kind::death_slide, {s.x, s.y}, mid_death, abs(t.y - s.y)});
          if (s.x != t.x) segments.push_back({Kind::birth_slide, mid_death, {t.x, t.y}, abs(t.x - s.x)});
        }
      }
    }
  }
  return GeodesicPath(d, std::move(segments));
}

}  // namespace gpd
