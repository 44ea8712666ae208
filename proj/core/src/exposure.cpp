#include "l1plan/exposure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>

namespace l1plan::exposure {

namespace {

using geom::Point;
using geom::Trapezoid;

struct Box {
  Rational x0, y0, x1, y1;
};

Box bbox(const Trapezoid& t) {
  auto cs = t.corners();
  Box b{cs[0].x, cs[0].y, cs[0].x, cs[0].y};
  for (const auto& p : cs) {
    b.x0 = std::min(b.x0, p.x), b.x1 = std::max(b.x1, p.x);
    b.y0 = std::min(b.y0, p.y), b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// L1 distance between two boxes, a lower bound for travel between them.
Rational gap(const Box& a, const Box& b) {
  Rational dx = std::max({Rational(0), Rational(b.x0 - a.x1), Rational(a.x0 - b.x1)});
  Rational dy = std::max({Rational(0), Rational(b.y0 - a.y1), Rational(a.y0 - b.y1)});
  return dx + dy;
}

// Robot r's covering domain and erosion component, or (-1, -1).
std::pair<int, int> locate(const CoverIndex& cover, const Point& p) {
  for (std::size_t i = 0; i < cover.feasibility.size(); ++i) {
    if (!cover.feasibility[i]) continue;
    int r = feas2::region_of(*cover.feasibility[i], p);
    if (r >= 0) return {static_cast<int>(i), r};
  }
  return {-1, -1};
}

ExposureGraph make_vertices(const std::vector<geom::PolygonalDomain>& cover) {
  ExposureGraph g;
  g.cover = index_cover(cover);
  auto states = build_state_vertices(g.cover);
  g.candidate_count = states.size();
  for (auto& s : states) {
    Configuration rep;
    try {
      rep = representative_configuration(s);
    } catch (const NoRepresentative&) {
      continue;
    }
    auto key = zero_key(g.cover, rep);
    g.vertices.push_back({std::move(s), std::move(rep), key});
  }
  return g;
}

}  // namespace

CoverIndex index_cover(const std::vector<geom::PolygonalDomain>& cover) {
  CoverIndex out;
  for (const auto& d : cover) {
    auto c = geom::canonicalize(d);
    geom::validate(c);
    out.domains.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < out.domains.size(); ++i)
    for (std::size_t j = i + 1; j < out.domains.size(); ++j)
      if (geom::interiors_overlap(out.domains[i], out.domains[j]))
        throw std::invalid_argument("cover domains " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
  for (std::size_t i = 0; i < out.domains.size(); ++i) {
    if (geom::inner_minkowski(out.domains[i]).empty()) {
      out.feasibility.emplace_back();
      continue;
    }
    out.feasibility.emplace_back(feas2::build_feasibility(out.domains[i]));
    for (auto t : out.feasibility.back()->horizontal.trapezoids) {
      t.id = static_cast<int>(out.W.size());
      t.parent_domain = static_cast<int>(i);
      out.W.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<State2> build_state_vertices(const CoverIndex& cover) {
  std::vector<State2> out;
  for (const auto& x : cover.W)
    for (const auto& y : cover.W) {
      auto z = geom::hull_of_two_trapezoids(x, y);
      if (geom::contains_unit_square(z.polygon)) {
        out.push_back({x, y, 0, planner2::SigmaRule::Separated});
        continue;
      }
      if (z.width >= 1) {
        out.push_back({x, y, 1, planner2::SigmaRule::Separated});
        out.push_back({x, y, -1, planner2::SigmaRule::Separated});
      }
      if (z.height >= 1) {
        out.push_back({x, y, 2, planner2::SigmaRule::Separated});
        out.push_back({x, y, -2, planner2::SigmaRule::Separated});
      }
    }
  return out;
}

Configuration representative_configuration(const State2& v) {
  auto cx = v.X.corners(), cy = v.Y.corners();
  // Keep the extremal side named by sigma: robot 0 takes the low side of X
  // and robot 1 the high side of Y for positive sigma, and vice versa.
  auto extreme = [](std::vector<Point> pts, bool use_x, bool take_min) {
    auto coord = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    Rational best = coord(pts[0]);
    for (const auto& p : pts) best = take_min ? std::min(best, coord(p)) : std::max(best, coord(p));
    pts.erase(std::remove_if(pts.begin(), pts.end(), [&](const Point& p) { return coord(p) != best; }), pts.end());
    return pts;
  };
  if (v.sigma != 0) {
    bool use_x = v.sigma == 1 || v.sigma == -1;
    bool positive = v.sigma > 0;
    cx = extreme(cx, use_x, positive);
    cy = extreme(cy, use_x, !positive);
  }
  std::optional<std::pair<Point, Point>> best;
  Rational best_d = -1;
  for (const auto& p : cx)
    for (const auto& q : cy) {
      Rational d = geom::linf_dist(p, q);
      if (d > best_d) best_d = d, best = std::make_pair(p, q);
    }
  if (!best || best_d < 1) throw NoRepresentative("state admits no separated extremal placement");
  Configuration c({best->first, best->second});
  if (!planner2::in_state(c, v)) throw NoRepresentative("extremal placement violates the state relation");
  return c;
}

std::optional<ZeroKey> zero_key(const CoverIndex& cover, const Configuration& c) {
  auto [d0, r0] = locate(cover, c.points[0]);
  auto [d1, r1] = locate(cover, c.points[1]);
  if (d0 < 0 || d1 < 0) return std::nullopt;
  // Different domains are interior disjoint, so the robots cannot collide
  // and each only needs to stay in its own erosion component.
  if (d0 != d1) return ZeroKey{d0, d1, r0, r1};
  const auto& f = *cover.feasibility[d0];
  auto corner = feas2::normalize_to_corner(f, c);
  return ZeroKey{d0, d0, f.label(corner.a, corner.b), -1};
}

ExposureGraph build_exposure_graph(const std::vector<geom::PolygonalDomain>& cover, bool positive_weights) {
  ExposureGraph g = make_vertices(cover);
  const int n = static_cast<int>(g.vertices.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto &a = g.vertices[u], &b = g.vertices[v];
      Edge e{u, v, a.key && b.key && *a.key == *b.key, Rational(0)};
      if (!e.zero && positive_weights) {
        auto plan = planner2::try_plan_state(a.state, b.state, planner2::Objective::Makespan);
        if (!plan) continue;
        e.weight = plan->value;
      }
      ++(e.zero ? g.zero_edge_count : g.positive_edge_count);
      g.edges.push_back(std::move(e));
    }
  return g;
}

ExposurePlan plan_exposure2(const Configuration& a, const Configuration& b,
                            const std::vector<geom::PolygonalDomain>& cover) {
  return plan_on_graph(a, b, make_vertices(cover));
}

ExposurePlan plan_on_graph(const Configuration& a, const Configuration& b, ExposureGraph graph) {
  for (const auto* c : {&a, &b}) {
    if (c->size() != 2) throw std::invalid_argument("exposure planning needs exactly two robots");
    for (const auto& s : c->shapes)
      if (!(s == geom::HalfExtents{})) throw std::invalid_argument("exposure planning needs unit-square robots");
    if (!model::is_feasible(*c)) throw InfeasibleConfiguration("start or target has overlapping robots");
  }
  const auto& cov = graph.cover;
  std::vector<Vertex> nodes = std::move(graph.vertices);
  const int source = static_cast<int>(nodes.size()), sink = source + 1;
  nodes.push_back({planner2::point_state(a), a, zero_key(cov, a)});
  nodes.push_back({planner2::point_state(b), b, zero_key(cov, b)});
  const int n = static_cast<int>(nodes.size());

  std::vector<std::array<Box, 2>> boxes;
  for (const auto& v : nodes) boxes.push_back({bbox(v.state.X), bbox(v.state.Y)});
  auto lower = [&](int u, int v) {
    return std::max(gap(boxes[u][0], boxes[v][0]), gap(boxes[u][1], boxes[v][1]));
  };

  std::map<std::pair<int, int>, std::optional<planner2::StatePlan>> solved;
  auto positive = [&](int u, int v) -> const std::optional<planner2::StatePlan>& {
    auto it = solved.find({u, v});
    if (it == solved.end())
      it = solved.emplace(std::make_pair(u, v),
                          planner2::try_plan_state(nodes[u].state, nodes[v].state, planner2::Objective::Makespan))
               .first;
    return it->second;
  };

  struct Entry {
    Rational key;   // priority: base + edge weight (or its lower bound)
    Rational base;  // distance of the parent
    int hops;
    int node;
    int parent;
    bool exact;
    bool zero;
  };
  // Ties: fewer edges, then smaller vertex ids.
  auto later = [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return x.key > y.key;
    if (x.hops != y.hops) return x.hops > y.hops;
    if (x.node != y.node) return x.node > y.node;
    if (x.parent != y.parent) return x.parent > y.parent;
    return x.exact < y.exact;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  std::vector<bool> settled(n, false);
  std::vector<Rational> dist(n);
  std::vector<int> parent(n, -1), hops(n, 0);
  std::vector<bool> via_zero(n, false);

  queue.push({Rational(0), Rational(0), 0, source, -1, true, false});
  while (!queue.empty()) {
    Entry e = queue.top();
    queue.pop();
    if (settled[e.node]) continue;
    if (!e.exact) {
      const auto& plan = positive(e.parent, e.node);
      if (plan) queue.push({e.base + plan->value, e.base, e.hops, e.node, e.parent, true, false});
      continue;
    }
    settled[e.node] = true;
    dist[e.node] = e.key;
    parent[e.node] = e.parent;
    hops[e.node] = e.hops;
    via_zero[e.node] = e.zero;
    if (e.node == sink) break;
    const auto& ku = nodes[e.node].key;
    for (int v = 0; v < n; ++v) {
      if (settled[v]) continue;
      const auto& kv = nodes[v].key;
      if (ku && kv && *ku == *kv) queue.push({e.key, e.key, e.hops + 1, v, e.node, true, true});
      else queue.push({e.key + lower(e.node, v), e.key, e.hops + 1, v, e.node, false, false});
    }
  }
  if (!settled[sink]) throw std::logic_error("exposure graph: target unreachable");

  ExposurePlan out;
  out.value = dist[sink];
  out.vertex_count = static_cast<std::size_t>(source);
  for (int v = sink; v != -1; v = parent[v]) out.path.push_back(v);
  std::reverse(out.path.begin(), out.path.end());
  for (std::size_t i = 1; i < out.path.size(); ++i) out.zero_steps.push_back(via_zero[out.path[i]]);
  out.positive_solved = solved.size();

  // Rebuild the motion: zero steps only move within cover, so the robots
  // travel covered from the current configuration to the next witness.
  model::Schedule m(a);
  Configuration cur = a;
  auto link = [&](const Configuration& to) {
    if (cur.points == to.points) return;
    auto k0 = zero_key(cov, cur), k1 = zero_key(cov, to);
    if (k0 && k1 && *k0 == *k1) {
      auto [d0, d1] = std::make_pair(std::get<0>(*k0), std::get<1>(*k0));
      if (d0 == d1) {
        m.then(feas2::reconstruct_zero_exposure_schedule(*cov.feasibility[d0], cur, to));
      } else {
        for (std::size_t r = 0; r < 2; ++r) {
          const auto& f = *cov.feasibility[r == 0 ? d0 : d1];
          for (const auto& p : feas2::single_robot_route(f, cur.points[r], to.points[r])) m.move_one(r, p);
        }
      }
    } else {
      ++out.exposed_links;
      m.then(planner2::plan_makespan2(cur, to).schedule);
    }
    cur = to;
  };
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
    if (out.zero_steps[i]) continue;
    const auto& plan = *solved.at({out.path[i], out.path[i + 1]});
    link(plan.start);
    m.then(plan.schedule);
    cur = plan.end;
  }
  link(b);
  m.simplify();
  out.schedule = std::move(m);
  out.exposure_measured = model::measure_exposure(out.schedule, cov.domains);
  out.makespan_measured = model::measure_makespan(out.schedule);
  return out;
}

}  // namespace l1plan::exposure
