#include "l1plan/geom.hpp"

#include <algorithm>
#include <map>
#include <set>

// Erosion of a polygonal domain by an axis-aligned box:
//   inner(S) = S \ union of open (e + box) over boundary edges e.
// Each e + box is a convex hexagon (a rectangle for axis-parallel e). The
// result is assembled from the arrangement of S's edges and all hexagon
// edges: every arrangement edge is classified by sampling both of its sides,
// and edges with the kept region on exactly one side are traced into rings.

namespace l1plan::geom {

namespace {

struct Key {
  Point a;
  Point b;
  friend bool operator<(const Key& l, const Key& r) { return l.a < r.a || (l.a == r.a && l.b < r.b); }
};

std::vector<Segment> ring_segments(const Ring& r) {
  std::vector<Segment> e;
  for (std::size_t i = 0; i < r.size(); ++i) e.push_back({r[i], r[(i + 1) % r.size()]});
  return e;
}

// Parameter of p along s (p assumed on the supporting line).
Rational param(const Segment& s, const Point& p) {
  Point d = s.b - s.a;
  if (d.x != 0) return (p.x - s.a.x) / d.x;
  return (p.y - s.a.y) / d.y;
}

std::optional<Point> line_intersection(const Segment& s, const Segment& t) {
  Point d = s.b - s.a;
  Point e = t.b - t.a;
  Rational den = d.x * e.y - d.y * e.x;
  if (den == 0) return std::nullopt;
  Point w = t.a - s.a;
  Rational u = (w.x * e.y - w.y * e.x) / den;
  return s.a + u * d;
}

// Strict interior test for an open convex polygon given by half-planes.
bool strictly_inside(const std::vector<HalfPlane>& hp, const Point& p) {
  for (const auto& h : hp)
    if (!(h.a * p.x + h.b * p.y < h.c)) return false;
  return true;
}

// Counterclockwise angle comparison of direction vectors relative to `ref`.
// Returns true when v is reached before w rotating counterclockwise from ref.
bool ccw_before(const Point& ref, const Point& v, const Point& w) {
  auto half = [&](const Point& u) {
    Rational c = ref.x * u.y - ref.y * u.x;
    Rational d = ref.x * u.x + ref.y * u.y;
    if (c > 0 || (c == 0 && d > 0)) return 0;
    return 1;
  };
  int hv = half(v), hw = half(w);
  if (hv != hw) return hv < hw;
  Rational c = v.x * w.y - v.y * w.x;
  return c > 0;
}

}  // namespace

std::vector<PolygonalDomain> inner_minkowski(const PolygonalDomain& input, const HalfExtents& ext) {
  PolygonalDomain s = canonicalize(input);
  if (s.outer.size() < 3) return {};

  std::vector<Segment> boundary = ring_segments(s.outer);
  for (const auto& h : s.holes) {
    auto e = ring_segments(h);
    boundary.insert(boundary.end(), e.begin(), e.end());
  }

  std::vector<std::vector<HalfPlane>> hexagons;
  std::vector<Segment> segments = boundary;
  for (const auto& e : boundary) {
    std::vector<Point> corners;
    for (const Point& p : {e.a, e.b}) {
      corners.emplace_back(p.x - ext.half_width, p.y - ext.half_height);
      corners.emplace_back(p.x + ext.half_width, p.y - ext.half_height);
      corners.emplace_back(p.x + ext.half_width, p.y + ext.half_height);
      corners.emplace_back(p.x - ext.half_width, p.y + ext.half_height);
    }
    Ring hex = convex_hull(std::move(corners));
    hexagons.push_back(half_planes(hex));
    auto hs = ring_segments(hex);
    segments.insert(segments.end(), hs.begin(), hs.end());
  }

  // Split every segment at all points where others touch or cross it.
  std::set<Key> pieces;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s_i = segments[i];
    std::vector<std::pair<Rational, Point>> cuts = {{Rational(0), s_i.a}, {Rational(1), s_i.b}};
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (i == j) continue;
      const Segment& s_j = segments[j];
      if (!segments_intersect(s_i, s_j)) continue;
      if (orientation(s_i.a, s_i.b, s_j.a) == 0 && orientation(s_i.a, s_i.b, s_j.b) == 0) {
        for (const Point& p : {s_j.a, s_j.b})
          if (on_segment(p, s_i)) cuts.emplace_back(param(s_i, p), p);
      } else if (auto p = line_intersection(s_i, s_j)) {
        cuts.emplace_back(param(s_i, *p), *p);
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k].first == cuts[k + 1].first) continue;
      Point a = cuts[k].second, b = cuts[k + 1].second;
      if (b < a) std::swap(a, b);
      pieces.insert({a, b});
    }
  }

  auto kept = [&](const Point& q) {
    if (locate_in_domain(q, s) != Location::Inside) return false;
    for (const auto& hp : hexagons)
      if (strictly_inside(hp, q)) return false;
    return true;
  };

  auto sample = [&](const Point& m, const Point& n) {
    std::optional<Rational> best;
    for (const auto& sg : segments) {
      if (on_segment(m, sg)) continue;
      Point e = sg.b - sg.a;
      Rational den = n.x * e.y - n.y * e.x;
      Point w = sg.a - m;
      if (den == 0) {
        if (orientation(m, m + n, sg.a) != 0) continue;
        // Collinear with the probe ray: the nearer endpoint ahead of m blocks it.
        for (const Point& p : {sg.a, sg.b}) {
          Point v = p - m;
          Rational t = n.x != 0 ? v.x / n.x : v.y / n.y;
          if (t > 0 && (!best || t < *best)) best = t;
        }
        continue;
      }
      Rational t = (w.x * e.y - w.y * e.x) / den;
      Rational u = (w.x * n.y - w.y * n.x) / den;
      if (t <= 0 || u < 0 || u > 1) continue;
      if (!best || t < *best) best = t;
    }
    Rational t = best ? *best / 2 : Rational(1);
    return m + t * n;
  };

  // Directed boundary edges with the kept region on their left.
  std::map<Point, std::vector<Point>> out;
  std::size_t edge_count = 0;
  for (const auto& k : pieces) {
    Point m = half() * (k.a + k.b);
    Point d = k.b - k.a;
    bool left = kept(sample(m, Point(-d.y, d.x)));
    bool right = kept(sample(m, Point(d.y, -d.x)));
    if (left == right) continue;
    if (left)
      out[k.a].push_back(k.b);
    else
      out[k.b].push_back(k.a);
    ++edge_count;
  }

  std::vector<Ring> rings;
  std::set<Key> used;
  for (auto& [start, targets] : out) {
    for (const auto& first : targets) {
      if (used.count({start, first})) continue;
      Ring ring;
      Point from = start, to = first;
      used.insert({from, to});
      ring.push_back(from);
      for (std::size_t guard = 0; guard <= edge_count && to != start; ++guard) {
        ring.push_back(to);
        static const std::vector<Point> none;
        auto found = out.find(to);
        const auto& cand = found == out.end() ? none : found->second;
        Point back = from - to;
        std::optional<Point> next;
        for (const auto& c : cand) {
          if (used.count({to, c})) continue;
          // Leftmost turn: the candidate with the largest counterclockwise angle from `back`.
          if (!next || ccw_before(back, *next - to, c - to)) next = c;
        }
        if (!next) break;
        used.insert({to, *next});
        from = to;
        to = *next;
      }
      Ring c = canonical_ring(ring);
      if (!c.empty()) rings.push_back(std::move(c));
    }
  }

  std::vector<Ring> outers, holes;
  for (auto& r : rings) (signed_area2(r) > 0 ? outers : holes).push_back(std::move(r));

  std::vector<PolygonalDomain> comps(outers.size());
  for (std::size_t i = 0; i < outers.size(); ++i) comps[i].outer = outers[i];
  for (auto& h : holes) {
    int best = -1;
    for (std::size_t i = 0; i < outers.size(); ++i) {
      bool inside = false;
      for (std::size_t v = 0; v < h.size() && !inside; ++v) {
        Location l = locate_in_ring(h[v], outers[i]);
        if (l == Location::Inside) inside = true;
        if (l == Location::Boundary) {
          Point mid = half() * (h[v] + h[(v + 1) % h.size()]);
          if (locate_in_ring(mid, outers[i]) == Location::Inside) inside = true;
        }
      }
      if (!inside) continue;
      if (best < 0 || abs(signed_area2(outers[i])) < abs(signed_area2(outers[best]))) best = static_cast<int>(i);
    }
    if (best >= 0) comps[best].holes.push_back(std::move(h));
  }
  for (auto& c : comps) {
    std::sort(c.holes.begin(), c.holes.end(), [](const Ring& a, const Ring& b) { return a.front() < b.front(); });
    c.id = input.id;
  }
  std::sort(comps.begin(), comps.end(),
            [](const PolygonalDomain& a, const PolygonalDomain& b) { return a.outer.front() < b.outer.front(); });
  return comps;
}

}  // namespace l1plan::geom
