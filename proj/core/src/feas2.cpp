#include "l1plan/feas2.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace l1plan::feas2 {

namespace {

using geom::Segment;

bool in_region(const FeasibilityStructure& f, const Point& p) {
  for (const auto& c : f.eroded)
    if (geom::contains_closed(c, p)) return true;
  return false;
}

std::vector<Segment> region_edges(const std::vector<geom::PolygonalDomain>& regions) {
  std::vector<Segment> out;
  auto ring = [&](const geom::Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back({r[i], r[(i + 1) % r.size()]});
  };
  for (const auto& c : regions) {
    ring(c.outer);
    for (const auto& h : c.holes) ring(h);
  }
  return out;
}

std::optional<Point> crossing(const Segment& s, const Segment& t) {
  Point d1 = s.b - s.a, d2 = t.b - t.a, w = t.a - s.a;
  Rational den = d1.x * d2.y - d1.y * d2.x;
  if (den == 0) return std::nullopt;
  Rational u = (w.x * d2.y - w.y * d2.x) / den;
  Rational v = (w.x * d1.y - w.y * d1.x) / den;
  if (u < 0 || u > 1 || v < 0 || v > 1) return std::nullopt;
  return s.a + u * d1;
}

// Open parameter interval where |c + s*m| < 1.
struct Open {
  bool all = false;
  bool none = false;
  Rational lo, hi;
};

Open strip(const Rational& c, const Rational& m) {
  Open o;
  if (m == 0) {
    if (abs(c) < 1) o.all = true;
    else o.none = true;
    return o;
  }
  Rational a = (-1 - c) / m, b = (1 - c) / m;
  o.lo = std::min(a, b);
  o.hi = std::max(a, b);
  return o;
}

/// Box moving from u to v overlaps the box resting at w at some instant.
bool sweep_blocked(const Point& u, const Point& v, const Point& w) {
  Open x = strip(u.x - w.x, v.x - u.x), y = strip(u.y - w.y, v.y - u.y);
  if (x.none || y.none) return false;
  // Intersect both open intervals with [0, 1].
  Rational lo = -1, hi = 2;
  for (const Open* o : {&x, &y}) {
    if (o->all) continue;
    lo = std::max(lo, o->lo);
    hi = std::min(hi, o->hi);
  }
  // (lo, hi) open, [0, 1] closed: nonempty iff lo < hi, lo < 1, hi > 0.
  return lo < hi && lo < 1 && hi > 0;
}

int add_node(FeasibilityStructure& f, const Point& p) {
  auto [it, fresh] = f.node_ids.emplace(p, static_cast<int>(f.nodes.size()));
  if (fresh) f.nodes.push_back(p);
  return it->second;
}

void build_arrangement(FeasibilityStructure& f) {
  auto boundary = region_edges(f.eroded);
  for (const auto& e : boundary) add_node(f, e.a);
  f.region_vertex_count = f.nodes.size();

  std::vector<Segment> segs = boundary;
  for (const auto* dec : {&f.horizontal, &f.vertical})
    for (const auto& t : dec->trapezoids) {
      auto cs = t.corners();
      for (std::size_t i = 0; i < cs.size() && cs.size() > 1; ++i) segs.push_back({cs[i], cs[(i + 1) % cs.size()]});
    }
  segs.erase(std::remove_if(segs.begin(), segs.end(), [](const Segment& s) { return s.a == s.b; }), segs.end());

  for (const auto& s : segs) {
    add_node(f, s.a);
    add_node(f, s.b);
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (auto p = crossing(segs[i], segs[j])) add_node(f, *p);

  std::set<std::pair<int, int>> edges;
  for (const auto& s : segs) {
    std::vector<std::pair<Rational, int>> on;
    Point d = s.b - s.a;
    for (std::size_t k = 0; k < f.nodes.size(); ++k)
      if (geom::on_segment(f.nodes[k], s)) {
        Point r = f.nodes[k] - s.a;
        on.emplace_back(r.x * d.x + r.y * d.y, static_cast<int>(k));
      }
    std::sort(on.begin(), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      int a = on[k].second, b = on[k + 1].second;
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  f.adjacency.assign(f.nodes.size(), {});
  for (auto [a, b] : edges) {
    f.adjacency[a].push_back(b);
    f.adjacency[b].push_back(a);
  }
}

bool pair_ok(const FeasibilityStructure& f, int a, int b) { return geom::linf_dist(f.nodes[a], f.nodes[b]) >= 1; }

template <class Visit>
void for_each_move(const FeasibilityStructure& f, int a, int b, Visit visit) {
  for (int a2 : f.adjacency[a])
    if (pair_ok(f, a2, b) && !sweep_blocked(f.nodes[a], f.nodes[a2], f.nodes[b])) visit(a2, b);
  for (int b2 : f.adjacency[b])
    if (pair_ok(f, a, b2) && !sweep_blocked(f.nodes[b], f.nodes[b2], f.nodes[a])) visit(a, b2);
}

void check_pair(const FeasibilityStructure& f, const Configuration& c) {
  if (c.size() != 2) throw std::invalid_argument("feasibility: exactly two robots expected");
  for (const auto& s : c.shapes)
    if (!(s == geom::HalfExtents{})) throw std::invalid_argument("feasibility: robots must be unit squares");
  for (std::size_t i = 0; i < 2; ++i)
    if (!in_region(f, c.points[i]))
      throw NotInDomain("robot " + std::to_string(i) + " at " + geom::to_string(c.points[i]) + " is not inside the domain");
  if (!model::is_feasible(c)) throw InfeasibleConfiguration("feasibility: robots overlap");
}

// Farthest point reachable from p along the axis direction d while staying in
// the eroded region.
Point push(const FeasibilityStructure& f, const Point& p, const Point& d) {
  bool horizontal = d.y == 0;
  auto along = [&](const Point& q) { return horizontal ? q.x : q.y; };
  auto across = [&](const Point& q) { return horizontal ? q.y : q.x; };
  Rational sign = horizontal ? d.x : d.y;
  std::vector<Rational> ts{Rational(0)};
  for (const auto& e : region_edges(f.eroded)) {
    Rational c0 = across(e.a), c1 = across(e.b), c = across(p);
    if (c0 == c1) {
      if (c0 != c) continue;
      ts.push_back((along(e.a) - along(p)) * sign);
      ts.push_back((along(e.b) - along(p)) * sign);
    } else {
      if (c < std::min(c0, c1) || c > std::max(c0, c1)) continue;
      Rational x = along(e.a) + (c - c0) * (along(e.b) - along(e.a)) / (c1 - c0);
      ts.push_back((x - along(p)) * sign);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 0) continue;
    Rational next = i + 1 < ts.size() ? Rational((ts[i] + ts[i + 1]) / 2) : Rational(ts[i] + 1);
    if (!in_region(f, p + next * d)) return p + ts[i] * d;
  }
  throw std::logic_error("push: region is unbounded");
}

// Corner reached from boundary point w by sliding away from the separator.
int slide(const FeasibilityStructure& f, const Point& w, const Point& d) {
  if (auto it = f.node_ids.find(w); it != f.node_ids.end() && f.is_region_vertex(it->second)) return it->second;
  for (const auto& e : region_edges(f.eroded)) {
    if (!geom::on_segment(w, e)) continue;
    Point v = e.b - e.a;
    if (v.x * d.y - v.y * d.x == 0) continue;  // parallel to the push
    Rational ga = e.a.x * d.x + e.a.y * d.y, gb = e.b.x * d.x + e.b.y * d.y;
    const Point& end = ga > gb ? e.a : ga < gb ? e.b : std::min(e.a, e.b);
    return f.node_ids.at(end);
  }
  throw std::logic_error("slide: pushed point is not on the region boundary");
}

}  // namespace

Configuration CornerConfiguration::configuration(const FeasibilityStructure& f) const {
  return Configuration({f.nodes[a], f.nodes[b]});
}

FeasibilityStructure build_feasibility(const geom::PolygonalDomain& s) {
  FeasibilityStructure f;
  f.domain = geom::canonicalize(s);
  geom::validate(f.domain);
  f.eroded = geom::inner_minkowski(f.domain);
  if (f.eroded.empty()) throw EmptyErosion("no unit square fits inside the domain");
  f.horizontal = geom::decompose(f.eroded, geom::Axis::Horizontal);
  f.vertical = geom::decompose(f.eroded, geom::Axis::Vertical);
  build_arrangement(f);

  const std::size_t n = f.nodes.size();
  f.component.assign(n * n, -1);
  std::size_t edge_ends = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    int a0 = static_cast<int>(start / n), b0 = static_cast<int>(start % n);
    if (f.component[start] != -1 || !pair_ok(f, a0, b0)) continue;
    int id = f.component_count++;
    std::deque<std::pair<int, int>> queue{{a0, b0}};
    f.component[start] = id;
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for_each_move(f, a, b, [&](int a2, int b2) {
        ++edge_ends;
        auto& slot = f.component[static_cast<std::size_t>(a2) * n + b2];
        if (slot == -1) {
          slot = id;
          queue.emplace_back(a2, b2);
        }
      });
    }
  }
  f.pair_edge_count = edge_ends / 2;
  return f;
}

CornerConfiguration normalize_to_corner(const FeasibilityStructure& f, const Configuration& p) {
  check_pair(f, p);
  const Point &p0 = p.points[0], &p1 = p.points[1];
  Rational gx = abs(p1.x - p0.x) - 1, gy = abs(p1.y - p0.y) - 1;
  CornerConfiguration out;
  // Larger gap wins; on a tie push along y (horizontal separator).
  out.axis = gx > gy ? geom::Axis::Vertical : geom::Axis::Horizontal;
  Point d0 = out.axis == geom::Axis::Vertical ? Point(p0.x < p1.x ? -1 : 1, 0) : Point(0, p0.y < p1.y ? -1 : 1);
  Point d1(-d0.x, -d0.y);

  Point w0 = push(f, p0, d0), w1 = push(f, p1, d1);
  out.a = slide(f, w0, d0);
  out.b = slide(f, w1, d1);
  out.schedule = model::Schedule(p);
  out.schedule.move_one(0, w0).move_one(0, f.nodes[out.a]).move_one(1, w1).move_one(1, f.nodes[out.b]);
  return out;
}

bool query_feasible(const FeasibilityStructure& f, const Configuration& a, const Configuration& b) {
  auto ca = normalize_to_corner(f, a);
  auto cb = normalize_to_corner(f, b);
  return f.label(ca.a, ca.b) == f.label(cb.a, cb.b);
}

std::vector<std::pair<int, int>> corner_path(const FeasibilityStructure& f, std::pair<int, int> from,
                                             std::pair<int, int> to) {
  const std::size_t n = f.nodes.size();
  auto index = [n](std::pair<int, int> q) { return static_cast<std::size_t>(q.first) * n + q.second; };
  if (f.component[index(from)] == -1 || f.component[index(from)] != f.component[index(to)]) return {};
  std::vector<long> parent(n * n, -2);
  parent[index(from)] = -1;
  std::deque<std::pair<int, int>> queue{from};
  while (!queue.empty() && parent[index(to)] == -2) {
    auto cur = queue.front();
    queue.pop_front();
    for_each_move(f, cur.first, cur.second, [&](int a2, int b2) {
      auto& slot = parent[index({a2, b2})];
      if (slot != -2) return;
      slot = static_cast<long>(index(cur));
      queue.emplace_back(a2, b2);
    });
  }
  std::vector<std::pair<int, int>> path;
  for (long at = static_cast<long>(index(to)); at != -1; at = parent[at])
    path.emplace_back(static_cast<int>(at / n), static_cast<int>(at % n));
  std::reverse(path.begin(), path.end());
  return path;
}

int region_of(const FeasibilityStructure& f, const Point& p) {
  for (std::size_t i = 0; i < f.eroded.size(); ++i)
    if (geom::contains_closed(f.eroded[i], p)) return static_cast<int>(i);
  return -1;
}

std::vector<Point> single_robot_route(const FeasibilityStructure& f, const Point& p, const Point& q) {
  int rp = region_of(f, p), rq = region_of(f, q);
  if (rp < 0 || rq < 0) throw NotInDomain("route endpoint is not inside the domain");
  if (rp != rq) return {};
  if (p == q) return {p};
  const Point left(-1, 0);
  Point wp = push(f, p, left), wq = push(f, q, left);
  int cp = slide(f, wp, left), cq = slide(f, wq, left);
  std::vector<int> parent(f.nodes.size(), -2);
  parent[cp] = -1;
  std::deque<int> queue{cp};
  while (!queue.empty() && parent[cq] == -2) {
    int u = queue.front();
    queue.pop_front();
    for (int v : f.adjacency[u])
      if (parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (parent[cq] == -2) throw std::logic_error("single_robot_route: component is not connected by cuts");
  std::vector<Point> corners;
  for (int at = cq; at != -1; at = parent[at]) corners.push_back(f.nodes[at]);
  std::reverse(corners.begin(), corners.end());
  std::vector<Point> route{p, wp};
  route.insert(route.end(), corners.begin(), corners.end());
  route.push_back(wq);
  route.push_back(q);
  route.erase(std::unique(route.begin(), route.end()), route.end());
  return route;
}

model::Schedule reconstruct_zero_exposure_schedule(const FeasibilityStructure& f, const Configuration& a,
                                                   const Configuration& b) {
  check_pair(f, a);
  check_pair(f, b);
  if (a.points == b.points) return model::Schedule(a);
  auto ca = normalize_to_corner(f, a);
  auto cb = normalize_to_corner(f, b);
  auto path = corner_path(f, {ca.a, ca.b}, {cb.a, cb.b});
  if (path.empty()) throw NotReachable("no schedule inside the domain connects the two configurations");
  model::Schedule m = ca.schedule;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i].first != path[i - 1].first) m.move_one(0, f.nodes[path[i].first]);
    else m.move_one(1, f.nodes[path[i].second]);
  }
  m.then(cb.schedule.reversed());
  return m.simplify();
}

}  // namespace l1plan::feas2
