#include "l1plan/planner2.hpp"

#include "l1plan/errors.hpp"

#include <algorithm>
#include <array>

namespace l1plan::planner2 {

using geom::Point;
using lp::LinearExpr;
using orderings::Ordering;
using orderings::Rel;

const char* to_string(Objective o) { return o == Objective::Makespan ? "makespan" : "sum"; }

bool commonly_ordered(const Configuration& a, const Configuration& b) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool shared = false;
      for (Rel r : {Rel::Left, Rel::Right, Rel::Below, Rel::Above}) {
        Configuration pa({a.points[i], a.points[j]}, {a.shapes[i], a.shapes[j]});
        Configuration pb({b.points[i], b.points[j]}, {b.shapes[i], b.shapes[j]});
        Ordering o{{r}};
        if (orderings::satisfies(pa, o) && orderings::satisfies(pb, o)) {
          shared = true;
          break;
        }
      }
      if (!shared) return false;
    }
  return true;
}

Schedule same_ordering_schedule(const Configuration& a, const Configuration& b, const Rational& d) {
  if (a.size() != b.size()) throw std::invalid_argument("same_ordering_schedule: robot counts differ");
  if (!commonly_ordered(a, b)) throw NotCommonlyOrdered("start and target configurations are not commonly ordered");
  if (d < model::diameter(a, b))
    throw DBelowDiameter("makespan " + l1plan::to_string(d) + " is below the diameter " +
                         l1plan::to_string(model::diameter(a, b)));
  Schedule m;
  m.shapes = a.shapes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point& p = a.points[i];
    const Point& q = b.points[i];
    Rational dx = abs(q.x - p.x), dy = abs(q.y - p.y);
    Point corner(q.x, p.y);
    model::Trajectory tr;
    tr.points.push_back({Rational(0), p});
    auto push = [&](const Rational& t, const Point& at) {
      if (t > tr.points.back().t) tr.points.push_back({t, at});
    };
    push(dx, corner);
    push(d - dy, corner);
    push(d, q);
    m.trajectories.push_back(std::move(tr));
  }
  return m;
}

// --- route programs -------------------------------------------------------------

namespace {

const orderings::TransitionGraph& four_cycle() {
  static const orderings::TransitionGraph g = orderings::build_transition_graph(2);
  return g;
}

struct Endpoint {
  const Configuration* fixed = nullptr;
  const State2* state = nullptr;
};

struct RouteResult {
  Rational value;
  std::vector<Configuration> chain;  // start, intermediates..., end
};

std::optional<RouteResult> solve_route(const Endpoint& from, const Endpoint& to, const std::vector<int>& path,
                                       const std::vector<model::RobotShape>& shapes, Objective objective) {
  const auto& g = four_cycle();
  const std::size_t m = path.size() - 1;  // edges
  const std::size_t points = m + 2;
  const auto gap = model::pair_gap(shapes[0], shapes[1]);

  lp::LinearProgram program;
  std::vector<std::vector<LinearExpr>> xs(points), ys(points);
  for (std::size_t u = 0; u < points; ++u)
    for (int r = 0; r < 2; ++r) {
      std::string tag = "c" + std::to_string(u) + "_" + std::to_string(r);
      xs[u].emplace_back(program.add_variable(tag + "x"));
      ys[u].emplace_back(program.add_variable(tag + "y"));
    }

  auto pin = [&](std::size_t u, const Endpoint& e) {
    if (e.fixed) {
      for (int r = 0; r < 2; ++r) {
        program.add_eq(xs[u][r], e.fixed->points[r].x);
        program.add_eq(ys[u][r], e.fixed->points[r].y);
      }
      return;
    }
    add_membership(program, xs[u][0], ys[u][0], e.state->X);
    add_membership(program, xs[u][1], ys[u][1], e.state->Y);
    add_sigma_constraint(program, xs[u][0], ys[u][0], xs[u][1], ys[u][1], e.state->sigma, gap, e.state->rule);
  };
  pin(0, from);
  pin(points - 1, to);

  // Chain point u lies in O_{u-1} and O_u (clamped at the ends).
  for (std::size_t u = 0; u < points; ++u) {
    std::size_t lo = u == 0 ? 0 : u - 1;
    std::size_t hi = std::min(u, m);
    orderings::add_ordering_constraints(program, xs[u], ys[u], shapes, g.vertices[path[lo]]);
    if (hi != lo) orderings::add_ordering_constraints(program, xs[u], ys[u], shapes, g.vertices[path[hi]]);
  }

  // dist[u][r]: L1 length robot r covers between chain points u and u+1.
  std::vector<std::array<LinearExpr, 2>> dist(m + 1);
  for (std::size_t u = 0; u <= m; ++u)
    for (int r = 0; r < 2; ++r)
      dist[u][r] = lp::l1_norm_bound(program, xs[u + 1][r] - xs[u][r], ys[u + 1][r] - ys[u][r],
                                     "d" + std::to_string(u) + "_" + std::to_string(r));

  auto obj = program.add_variable(objective == Objective::Makespan ? "phi" : "Sigma");
  if (objective == Objective::Makespan) {
    // One candidate per choice of robot on every segment.
    for (std::size_t choice = 0; choice < (std::size_t{1} << (m + 1)); ++choice) {
      LinearExpr total;
      for (std::size_t u = 0; u <= m; ++u) total += dist[u][(choice >> u) & 1];
      program.add_geq(obj, total, "candidate" + std::to_string(choice));
    }
  } else {
    LinearExpr total;
    for (std::size_t u = 0; u <= m; ++u) total += dist[u][0] + dist[u][1];
    program.add_geq(obj, total, "distance_sum");
  }
  program.minimize(obj);
  auto sol = lp::solve(program);
  if (!sol.optimal()) return std::nullopt;

  RouteResult out;
  out.value = sol.objective;
  for (std::size_t u = 0; u < points; ++u)
    out.chain.emplace_back(
        std::vector<Point>{{sol.value(xs[u][0]), sol.value(ys[u][0])}, {sol.value(xs[u][1]), sol.value(ys[u][1])}},
        shapes);
  return out;
}

Schedule stitch(const std::vector<Configuration>& chain) {
  Schedule s(chain.front());
  for (std::size_t u = 0; u + 1 < chain.size(); ++u) {
    Rational d = model::diameter(chain[u], chain[u + 1]);
    if (d == 0) continue;
    s.then(same_ordering_schedule(chain[u], chain[u + 1], d));
  }
  return s;
}

std::vector<int> all_vertices() { return {0, 1, 2, 3}; }

// Relaxation without separation: a lower bound on every route's value that
// lets the search stop early once a route meets it.
std::optional<Rational> state_lower_bound(const State2& from, const State2& to,
                                          const std::vector<model::RobotShape>& shapes, Objective objective) {
  lp::LinearProgram program;
  const auto gap = model::pair_gap(shapes[0], shapes[1]);
  std::vector<LinearExpr> ax, ay, bx, by;
  for (int r = 0; r < 2; ++r) {
    ax.emplace_back(program.add_variable());
    ay.emplace_back(program.add_variable());
    bx.emplace_back(program.add_variable());
    by.emplace_back(program.add_variable());
  }
  add_membership(program, ax[0], ay[0], from.X);
  add_membership(program, ax[1], ay[1], from.Y);
  add_membership(program, bx[0], by[0], to.X);
  add_membership(program, bx[1], by[1], to.Y);
  add_sigma_constraint(program, ax[0], ay[0], ax[1], ay[1], from.sigma, gap, from.rule);
  add_sigma_constraint(program, bx[0], by[0], bx[1], by[1], to.sigma, gap, to.rule);
  auto obj = program.add_variable("bound");
  LinearExpr total;
  for (int r = 0; r < 2; ++r) {
    auto d = lp::l1_norm_bound(program, bx[r] - ax[r], by[r] - ay[r]);
    if (objective == Objective::Makespan) {
      program.add_geq(obj, d);
    } else {
      total += d;
    }
  }
  if (objective == Objective::Sum) program.add_geq(obj, total);
  program.minimize(obj);
  auto sol = lp::solve(program);
  if (!sol.optimal()) return std::nullopt;
  return sol.objective;
}

std::optional<StatePlan> search(const Endpoint& from, const Endpoint& to, const std::vector<int>& starts,
                                const std::vector<int>& ends, const std::vector<model::RobotShape>& shapes,
                                Objective objective, const std::optional<Rational>& lower_bound) {
  const auto& g = four_cycle();
  std::optional<StatePlan> best;
  std::vector<int> best_path;
  orderings::enumerate_simple_paths(g, starts, ends, 3, [&](const std::vector<int>& path) {
    auto res = solve_route(from, to, path, shapes, objective);
    if (!res) return true;
    if (best && res->value >= best->value) return true;
    StatePlan p;
    p.value = res->value;
    p.start = res->chain.front();
    p.end = res->chain.back();
    p.intermediates.assign(res->chain.begin() + 1, res->chain.end() - 1);
    for (int v : path) p.route.push_back(g.vertices[v]);
    p.schedule = stitch(res->chain);
    best = std::move(p);
    return !(lower_bound && best->value == *lower_bound);
  });
  return best;
}

}  // namespace

Plan plan2(const Configuration& a, const Configuration& b, Objective objective) {
  if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("two-robot planner needs exactly two robots");
  if (!model::is_feasible(a)) throw InfeasibleConfiguration("start configuration has overlapping robots");
  if (!model::is_feasible(b)) throw InfeasibleConfiguration("target configuration has overlapping robots");
  Configuration bb(b.points, a.shapes);
  const auto& g = four_cycle();
  Endpoint from{&a, nullptr}, to{&bb, nullptr};
  Rational lb = objective == Objective::Makespan ? model::diameter(a, bb) : model::distance_sum(a, bb);
  auto best = search(from, to, orderings::orderings_containing(a, g), orderings::orderings_containing(bb, g),
                           a.shapes, objective, lb);
  if (!best) throw std::logic_error("no route found between two feasible configurations");
  return static_cast<Plan>(std::move(*best));
}

Plan plan_makespan2(const Configuration& a, const Configuration& b) { return plan2(a, b, Objective::Makespan); }
Plan plan_sum2(const Configuration& a, const Configuration& b) { return plan2(a, b, Objective::Sum); }

State2 point_state(const Configuration& c) {
  return State2{geom::point_trapezoid(c.points[0]), geom::point_trapezoid(c.points[1]), 0};
}

void add_sigma_constraint(lp::LinearProgram& program, const LinearExpr& x0, const LinearExpr& y0,
                          const LinearExpr& x1, const LinearExpr& y1, int sigma, const model::PairGap& gap, SigmaRule rule) {
  if (rule == SigmaRule::Separated) {
    switch (sigma) {
      case 0: return;
      case 1: program.add_leq(x0 + gap.wx, x1, "sigma"); return;
      case -1: program.add_geq(x0, x1 + gap.wx, "sigma"); return;
      case 2: program.add_leq(y0 + gap.wy, y1, "sigma"); return;
      case -2: program.add_geq(y0, y1 + gap.wy, "sigma"); return;
      default: throw std::invalid_argument("sigma must lie in {-2,-1,0,1,2}");
    }
  }
  switch (sigma) {
    case 0: break;
    case 1: program.add_leq(x0, x1 + gap.wx, "sigma"); break;
    case -1: program.add_geq(x0, x1 - gap.wx, "sigma"); break;
    case 2: program.add_leq(y0, y1 + gap.wy, "sigma"); break;
    case -2: program.add_geq(y0, y1 - gap.wy, "sigma"); break;
    default: throw std::invalid_argument("sigma must lie in {-2,-1,0,1,2}");
  }
}

void add_membership(lp::LinearProgram& program, const LinearExpr& x, const LinearExpr& y, const geom::Trapezoid& t) {
  for (const auto& h : t.constraints()) program.add_leq(h.a * x + h.b * y, h.c, "in_trap");
}

bool in_state(const Configuration& c, const State2& s) {
  if (!s.X.contains(c.points[0]) || !s.Y.contains(c.points[1])) return false;
  auto g = model::pair_gap(c.shapes[0], c.shapes[1]);
  const auto& p = c.points[0];
  const auto& q = c.points[1];
  if (s.rule == SigmaRule::Separated) {
    switch (s.sigma) {
      case 1: return p.x + g.wx <= q.x;
      case -1: return p.x >= q.x + g.wx;
      case 2: return p.y + g.wy <= q.y;
      case -2: return p.y >= q.y + g.wy;
      default: return true;
    }
  }
  switch (s.sigma) {
    case 1: return p.x <= q.x + g.wx;
    case -1: return p.x >= q.x - g.wx;
    case 2: return p.y <= q.y + g.wy;
    case -2: return p.y >= q.y - g.wy;
    default: return true;
  }
}

std::optional<StatePlan> try_plan_state(const State2& from, const State2& to, Objective objective,
                                        const std::vector<model::RobotShape>& shapes) {
  std::vector<model::RobotShape> sh = shapes.empty() ? std::vector<model::RobotShape>(2) : shapes;
  auto lb = state_lower_bound(from, to, sh, objective);
  if (!lb) return std::nullopt;
  Endpoint a{nullptr, &from}, b{nullptr, &to};
  return search(a, b, all_vertices(), all_vertices(), sh, objective, lb);
}

StatePlan plan_state_makespan(const State2& from, const State2& to, const std::vector<model::RobotShape>& shapes) {
  auto p = try_plan_state(from, to, Objective::Makespan, shapes);
  if (!p) throw StateInfeasible("no feasible placement for the given states");
  return std::move(*p);
}

StatePlan plan_state_sum(const State2& from, const State2& to, const std::vector<model::RobotShape>& shapes) {
  auto p = try_plan_state(from, to, Objective::Sum, shapes);
  if (!p) throw StateInfeasible("no feasible placement for the given states");
  return std::move(*p);
}

}  // namespace l1plan::planner2
