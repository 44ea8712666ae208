#include "l1plan/geom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace l1plan::geom {

namespace {

// Local frame: (u, v) = (x, y) for horizontal sweeps and (y, x) for vertical ones.
Point to_local(const Point& p, Axis axis) { return axis == Axis::Horizontal ? p : Point(p.y, p.x); }
Point from_local(const Point& p, Axis axis) { return to_local(p, axis); }

Rational u_at(const Segment& local_edge, const Rational& v) {
  const Point& a = local_edge.a;
  const Point& b = local_edge.b;
  if (a.y == b.y) return a.x;
  return a.x + (v - a.y) * (b.x - a.x) / (b.y - a.y);
}

Segment local_side(const Segment& world, Axis axis) { return {to_local(world.a, axis), to_local(world.b, axis)}; }

}  // namespace

const char* to_string(Axis axis) { return axis == Axis::Horizontal ? "horizontal" : "vertical"; }

Rational Trapezoid::low_at(const Rational& s) const { return u_at(local_side(low_side, axis), s); }
Rational Trapezoid::high_at(const Rational& s) const { return u_at(local_side(high_side, axis), s); }

Ring Trapezoid::corners() const {
  Ring local = {Point(low_at(lo), lo), Point(high_at(lo), lo), Point(high_at(hi), hi), Point(low_at(hi), hi)};
  Ring world;
  for (const auto& p : local) {
    Point w = from_local(p, axis);
    if (world.empty() || world.back() != w) world.push_back(w);
  }
  while (world.size() > 1 && world.front() == world.back()) world.pop_back();
  if (axis == Axis::Vertical) std::reverse(world.begin(), world.end());
  return world;
}

bool Trapezoid::contains(const Point& p) const {
  Point l = to_local(p, axis);
  if (l.y < lo || l.y > hi) return false;
  return low_at(l.y) <= l.x && l.x <= high_at(l.y);
}

std::vector<HalfPlane> Trapezoid::half_planes() const { return geom::half_planes(corners()); }

std::vector<HalfPlane> Trapezoid::constraints() const {
  // Local rows a*u + b*v <= c, mapped back to world by swapping for vertical.
  std::vector<HalfPlane> local;
  local.push_back({Rational(0), Rational(-1), -lo});
  local.push_back({Rational(0), Rational(1), hi});
  auto side = [&](const Segment& world, int sign) {
    Segment e = local_side(world, axis);
    if (e.a.y == e.b.y) {
      local.push_back({Rational(-sign), Rational(0), -sign * e.a.x});
      return;
    }
    // u = a.u + (v - a.v) * s
    Rational s = (e.b.x - e.a.x) / (e.b.y - e.a.y);
    Rational c = e.a.x - e.a.y * s;
    // sign = +1: u >= s v + c  ->  -u + s v <= -c ; sign = -1: u - s v <= c
    local.push_back({Rational(-sign), sign * s, -sign * c});
  };
  side(low_side, 1);
  side(high_side, -1);
  if (axis == Axis::Horizontal) return local;
  std::vector<HalfPlane> world;
  for (const auto& h : local) world.push_back({h.b, h.a, h.c});
  return world;
}

Trapezoid point_trapezoid(const Point& p, int id) {
  Trapezoid t;
  t.id = id;
  t.axis = Axis::Horizontal;
  t.lo = t.hi = p.y;
  t.low_side = t.high_side = Segment{p, p};
  return t;
}

Rational Trapezoid::area() const {
  return (hi - lo) * ((high_at(lo) - low_at(lo)) + (high_at(hi) - low_at(hi))) / 2;
}

std::optional<int> Decomposition::locate(const Point& p) const {
  for (const auto& t : trapezoids)
    if (t.contains(p)) return t.id;
  return std::nullopt;
}

Decomposition decompose(const PolygonalDomain& region, Axis axis) {
  return decompose(std::span<const PolygonalDomain>(&region, 1), axis);
}

Decomposition decompose(std::span<const PolygonalDomain> regions, Axis axis) {
  Decomposition dec;
  dec.axis = axis;
  std::set<Point> region_vertices;

  for (std::size_t r = 0; r < regions.size(); ++r) {
    const PolygonalDomain& region = regions[r];
    std::vector<Segment> edges;  // local frame, non-horizontal only
    std::vector<Segment> world_edges;
    std::vector<Rational> levels;
    auto take_ring = [&](const Ring& ring) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        region_vertices.insert(a);
        Point la = to_local(a, axis), lb = to_local(b, axis);
        levels.push_back(la.y);
        if (la.y == lb.y) continue;
        if (lb.y < la.y) std::swap(la, lb);
        edges.push_back({la, lb});
        world_edges.push_back({from_local(la, axis), from_local(lb, axis)});
      }
    };
    take_ring(region.outer);
    for (const auto& h : region.holes) take_ring(h);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::map<std::pair<int, int>, std::size_t> open;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      const Rational& v0 = levels[k];
      const Rational& v1 = levels[k + 1];
      Rational mid = (v0 + v1) / 2;
      std::vector<std::pair<Rational, int>> active;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].a.y <= v0 && edges[e].b.y >= v1) active.emplace_back(u_at(edges[e], mid), static_cast<int>(e));
      std::sort(active.begin(), active.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
      std::map<std::pair<int, int>, std::size_t> next_open;
      for (std::size_t i = 0; i + 1 < active.size(); i += 2) {
        std::pair<int, int> key{active[i].second, active[i + 1].second};
        auto it = open.find(key);
        if (it != open.end() && dec.trapezoids[it->second].hi == v0) {
          dec.trapezoids[it->second].hi = v1;
          next_open[key] = it->second;
          continue;
        }
        Trapezoid t;
        t.id = static_cast<int>(dec.trapezoids.size());
        t.axis = axis;
        t.lo = v0;
        t.hi = v1;
        t.low_side = world_edges[key.first];
        t.high_side = world_edges[key.second];
        t.parent_domain = region.id;
        t.parent_region = static_cast<int>(r);
        next_open[key] = dec.trapezoids.size();
        dec.trapezoids.push_back(std::move(t));
      }
      open = std::move(next_open);
    }
  }

  // Adjacency and cuts: sides shared at a common sweep level.
  const auto& traps = dec.trapezoids;
  for (std::size_t i = 0; i < traps.size(); ++i) {
    for (std::size_t j = 0; j < traps.size(); ++j) {
      if (i == j || traps[i].parent_region != traps[j].parent_region || traps[i].hi != traps[j].lo) continue;
      const Rational& v = traps[i].hi;
      Rational u0 = max(traps[i].low_at(v), traps[j].low_at(v));
      Rational u1 = min(traps[i].high_at(v), traps[j].high_at(v));
      if (u0 >= u1) continue;
      int a = traps[i].id, b = traps[j].id;
      dec.adjacency.emplace_back(std::min(a, b), std::max(a, b));
      dec.cuts.push_back({from_local(Point(u0, v), axis), from_local(Point(u1, v), axis)});
    }
  }
  std::sort(dec.adjacency.begin(), dec.adjacency.end());

  std::set<Point> steiner;
  for (const auto& t : traps)
    for (const auto& c : t.corners())
      if (!region_vertices.count(c)) steiner.insert(c);
  dec.steiner_vertices.assign(steiner.begin(), steiner.end());
  return dec;
}

Hull hull_of_two_trapezoids(const Trapezoid& x, const Trapezoid& y) {
  // For X == Y this is X itself.
  std::vector<Point> pts = x.corners();
  auto c = y.corners();
  pts.insert(pts.end(), c.begin(), c.end());
  Hull h;
  h.polygon = convex_hull(pts);
  Rational x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const auto& p : pts) {
    x0 = min(x0, p.x);
    x1 = max(x1, p.x);
    y0 = min(y0, p.y);
    y1 = max(y1, p.y);
  }
  h.width = x1 - x0;
  h.height = y1 - y0;
  return h;
}

}  // namespace l1plan::geom
