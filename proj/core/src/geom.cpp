#include "l1plan/geom.hpp"

#include "l1plan/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace l1plan::geom {

std::string to_string(const Point& p) {
  return "(" + l1plan::to_string(p.x) + ", " + l1plan::to_string(p.y) + ")";
}

Rational l1_dist(const Point& p, const Point& q) { return abs(p.x - q.x) + abs(p.y - q.y); }

Rational linf_dist(const Point& p, const Point& q) { return max(abs(p.x - q.x), abs(p.y - q.y)); }

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& o, const Point& a, const Point& b) {
  Rational c = cross(o, a, b);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) && min(s.a.y, s.b.y) <= p.y &&
         p.y <= max(s.a.y, s.b.y);
}

bool segments_intersect(const Segment& s, const Segment& t) {
  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(t.a, s) || on_segment(t.b, s) || on_segment(s.a, t) || on_segment(s.b, t);
}

bool segments_cross_properly(const Segment& s, const Segment& t) {
  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Rational signed_area2(const Ring& ring) {
  Rational a = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

Rational area(const PolygonalDomain& d) {
  Rational a = abs(signed_area2(d.outer));
  for (const auto& h : d.holes) a -= abs(signed_area2(h));
  return a / 2;
}

Location locate_in_ring(const Point& p, const Ring& ring) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (on_segment(p, {a, b})) return Location::Boundary;
    // Half-open rule on y so vertices are counted once.
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

Location locate_in_domain(const Point& p, const PolygonalDomain& d) {
  Location outer = locate_in_ring(p, d.outer);
  if (outer != Location::Inside) return outer;
  for (const auto& h : d.holes) {
    Location l = locate_in_ring(p, h);
    if (l == Location::Boundary) return Location::Boundary;
    if (l == Location::Inside) return Location::Outside;
  }
  return Location::Inside;
}

Ring canonical_ring(const Ring& ring) {
  Ring r;
  for (const auto& p : ring)
    if (r.empty() || r.back() != p) r.push_back(p);
  while (r.size() > 1 && r.front() == r.back()) r.pop_back();
  bool changed = true;
  while (changed && r.size() >= 3) {
    changed = false;
    Ring out;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = r[(i + n - 1) % n];
      const Point& cur = r[i];
      const Point& next = r[(i + 1) % n];
      if (orientation(prev, cur, next) == 0) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    r = std::move(out);
  }
  if (r.size() < 3) return {};
  // Rotate so the lexicographically smallest vertex comes first.
  auto it = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), it, r.end());
  return r;
}

namespace {

Ring oriented(Ring r, bool ccw) {
  if ((signed_area2(r) > 0) != ccw) {
    std::reverse(r.begin(), r.end());
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
  }
  return r;
}

std::vector<Segment> ring_edges(const Ring& r) {
  std::vector<Segment> e;
  for (std::size_t i = 0; i < r.size(); ++i) e.push_back({r[i], r[(i + 1) % r.size()]});
  return e;
}

void require_simple(const Ring& r, const char* what) {
  auto edges = ring_edges(r);
  const std::size_t n = edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges may only share their common vertex.
        const Segment& s = edges[i];
        const Segment& t = edges[j];
        const Point& shared = (j == i + 1) ? s.b : s.a;
        const Point& s_other = (j == i + 1) ? s.a : s.b;
        const Point& t_other = (j == i + 1) ? t.b : t.a;
        if (on_segment(s_other, t) || on_segment(t_other, s))
          throw std::invalid_argument(std::string(what) + " ring folds back on itself at " + to_string(shared));
        continue;
      }
      if (segments_intersect(edges[i], edges[j]))
        throw std::invalid_argument(std::string(what) + " ring is self-intersecting near " + to_string(edges[i].a));
    }
  }
}

}  // namespace

PolygonalDomain canonicalize(PolygonalDomain d) {
  d.outer = oriented(canonical_ring(d.outer), true);
  std::vector<Ring> holes;
  for (auto& h : d.holes) {
    Ring c = canonical_ring(h);
    if (!c.empty()) holes.push_back(oriented(std::move(c), false));
  }
  d.holes = std::move(holes);
  return d;
}

void validate(const PolygonalDomain& d) {
  if (d.outer.size() < 3 || signed_area2(d.outer) == 0) throw std::invalid_argument("outer ring is degenerate");
  require_simple(d.outer, "outer");
  auto outer_edges = ring_edges(d.outer);
  for (std::size_t i = 0; i < d.holes.size(); ++i) {
    const Ring& h = d.holes[i];
    if (h.size() < 3 || signed_area2(h) == 0) throw std::invalid_argument("hole ring is degenerate");
    require_simple(h, "hole");
    for (const auto& p : h)
      if (locate_in_ring(p, d.outer) != Location::Inside)
        throw std::invalid_argument("hole vertex " + to_string(p) + " is not strictly inside the outer ring");
    for (const auto& e : ring_edges(h))
      for (const auto& f : outer_edges)
        if (segments_intersect(e, f)) throw std::invalid_argument("hole touches the outer ring");
    for (std::size_t j = 0; j < i; ++j) {
      const Ring& g = d.holes[j];
      for (const auto& e : ring_edges(h))
        for (const auto& f : ring_edges(g))
          if (segments_intersect(e, f)) throw std::invalid_argument("holes intersect");
      if (locate_in_ring(h[0], g) != Location::Outside || locate_in_ring(g[0], h) != Location::Outside)
        throw std::invalid_argument("holes are nested");
    }
  }
}

namespace {

std::vector<Segment> domain_edges(const PolygonalDomain& d) {
  auto e = ring_edges(d.outer);
  for (const auto& h : d.holes) {
    auto he = ring_edges(h);
    e.insert(e.end(), he.begin(), he.end());
  }
  return e;
}

// A point strictly inside d, close to the midpoint of the given edge of d,
// chosen so no segment in `blockers` separates it from the edge.
std::optional<Point> inner_sample(const Segment& edge, bool left_side, const std::vector<Segment>& blockers) {
  Point m = half() * (edge.a + edge.b);
  Point dir = edge.b - edge.a;
  Point n = left_side ? Point(-dir.y, dir.x) : Point(dir.y, -dir.x);
  std::optional<Rational> best;
  for (const auto& s : blockers) {
    if (on_segment(m, s)) continue;
    // Solve m + t n = s.a + u (s.b - s.a).
    Point e = s.b - s.a;
    Rational den = n.x * e.y - n.y * e.x;
    Point w = s.a - m;
    if (den == 0) {
      if (orientation(m, m + n, s.a) != 0) continue;
      for (const Point& p : {s.a, s.b}) {
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
}

}  // namespace

bool interiors_overlap(const PolygonalDomain& a, const PolygonalDomain& b) {
  auto ea = domain_edges(a);
  auto eb = domain_edges(b);
  for (const auto& s : ea)
    for (const auto& t : eb)
      if (segments_cross_properly(s, t)) return true;
  std::vector<Segment> all = ea;
  all.insert(all.end(), eb.begin(), eb.end());
  // Interior samples next to every edge (on the side facing the domain's interior).
  auto probe = [&](const PolygonalDomain& d, const std::vector<Segment>& edges, const PolygonalDomain& other) {
    for (const auto& e : edges) {
      auto q = inner_sample(e, true, all);  // outer CCW / holes CW keep the interior on the left
      if (q && locate_in_domain(*q, d) == Location::Inside && locate_in_domain(*q, other) == Location::Inside)
        return true;
    }
    return false;
  };
  return probe(a, ea, b) || probe(b, eb, a);
}

std::vector<HalfPlane> half_planes(const Ring& convex_ccw) {
  std::vector<HalfPlane> hp;
  const std::size_t n = convex_ccw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = convex_ccw[i];
    const Point& q = convex_ccw[(i + 1) % n];
    HalfPlane h{q.y - p.y, p.x - q.x, Rational(0)};
    h.c = h.a * p.x + h.b * p.y;
    hp.push_back(std::move(h));
  }
  return hp;
}

Ring convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Ring h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) {
    // All collinear: keep the two extremes.
    return Ring{pts.front(), pts.back()};
  }
  return h;
}

bool contains_box(const Ring& convex_ccw, const HalfExtents& ext) {
  if (convex_ccw.size() < 3) return false;
  lp::LinearProgram program;
  auto cx = program.add_variable("cx");
  auto cy = program.add_variable("cy");
  for (const auto& h : half_planes(convex_ccw)) {
    Rational support = abs(h.a) * ext.half_width + abs(h.b) * ext.half_height;
    program.add_leq(h.a * lp::LinearExpr(cx) + h.b * lp::LinearExpr(cy), h.c - support);
  }
  return lp::solve(program).optimal();
}

bool box_inside(const PolygonalDomain& s, const Point& c, const HalfExtents& ext) {
  const Rational x0 = c.x - ext.half_width, x1 = c.x + ext.half_width;
  const Rational y0 = c.y - ext.half_height, y1 = c.y + ext.half_height;
  for (const auto& p : {Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1), c})
    if (!contains_closed(s, p)) return false;
  // No boundary edge may meet the open box.
  for (const auto& e : domain_edges(s)) {
    Rational lo = 0, hi = 1;
    bool lo_open = false, hi_open = false;
    bool empty = false;
    auto clip = [&](const Rational& start, const Rational& delta, const Rational& mn, const Rational& mx) {
      if (delta == 0) {
        if (!(mn < start && start < mx)) empty = true;
        return;
      }
      Rational t0 = (mn - start) / delta, t1 = (mx - start) / delta;
      if (t1 < t0) std::swap(t0, t1);
      if (t0 > lo || (t0 == lo)) {
        if (t0 > lo) lo = t0;
        lo_open = true;
      }
      if (t1 < hi || (t1 == hi)) {
        if (t1 < hi) hi = t1;
        hi_open = true;
      }
    };
    clip(e.a.x, e.b.x - e.a.x, x0, x1);
    clip(e.a.y, e.b.y - e.a.y, y0, y1);
    if (empty) continue;
    if (lo < hi || (lo == hi && !lo_open && !hi_open)) return false;
  }
  return true;
}

}  // namespace l1plan::geom
