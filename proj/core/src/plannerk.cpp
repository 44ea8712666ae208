#include "l1plan/plannerk.hpp"

#include "l1plan/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace l1plan::plannerk {

using geom::Point;
using lp::LinearExpr;
using orderings::TransitionGraph;

const char* to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "bounded_search"; }

Schedule same_ordering_schedule_k(const Configuration& a, const Configuration& b) {
  Configuration bb(b.points, a.shapes);
  return planner2::same_ordering_schedule(a, bb, model::diameter(a, bb));
}

const TransitionGraph& transition_graph(const std::vector<model::RobotShape>& shapes, std::size_t max_k) {
  if (shapes.size() > max_k)
    throw ResourceBound("k = " + std::to_string(shapes.size()) + " exceeds the cap " + std::to_string(max_k));
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<TransitionGraph>> cache;
  std::string key;
  for (const auto& s : shapes) key += l1plan::to_string(s.half_width) + "x" + l1plan::to_string(s.half_height) + ";";
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<TransitionGraph>(orderings::build_transition_graph(shapes.size(), shapes, max_k));
  return *slot;
}

StateK point_state_k(const Configuration& c) {
  StateK s;
  for (const auto& p : c.points) s.X.push_back(geom::point_trapezoid(p));
  s.sigma.assign(orderings::pair_count(c.size()), 0);
  return s;
}

bool in_state(const Configuration& c, const StateK& s) {
  const std::size_t k = c.size();
  if (s.X.size() != k || s.sigma.size() != orderings::pair_count(k)) return false;
  for (std::size_t r = 0; r < k; ++r)
    if (!s.X[r].contains(c.points[r])) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Configuration pair({c.points[i], c.points[j]}, {c.shapes[i], c.shapes[j]});
      planner2::State2 s2{s.X[i], s.X[j], s.sigma[orderings::pair_index(k, i, j)]};
      if (!planner2::in_state(pair, s2)) return false;
    }
  return true;
}

namespace {

struct End {
  const Configuration* fixed = nullptr;
  const StateK* state = nullptr;
};

using Coords = std::vector<LinearExpr>;

void pin(lp::LinearProgram& program, const Coords& xs, const Coords& ys, const End& e,
         const std::vector<model::RobotShape>& shapes) {
  const std::size_t k = xs.size();
  if (e.fixed) {
    for (std::size_t r = 0; r < k; ++r) {
      program.add_eq(xs[r], e.fixed->points[r].x);
      program.add_eq(ys[r], e.fixed->points[r].y);
    }
    return;
  }
  for (std::size_t r = 0; r < k; ++r) planner2::add_membership(program, xs[r], ys[r], e.state->X[r]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      planner2::add_sigma_constraint(program, xs[i], ys[i], xs[j], ys[j],
                                     e.state->sigma[orderings::pair_index(k, i, j)],
                                     model::pair_gap(shapes[i], shapes[j]));
}

std::optional<PathLpResult> solve_path(const End& from, const End& to, const TransitionGraph& g,
                                       const std::vector<int>& path, const std::vector<model::RobotShape>& shapes,
                                       Objective objective) {
  if (path.empty()) throw std::invalid_argument("path_lp: empty ordering sequence");
  const std::size_t k = shapes.size();
  const std::size_t l = path.size() - 1;
  const std::size_t points = l + 2;

  lp::LinearProgram program;
  std::vector<Coords> xs(points), ys(points);
  for (std::size_t u = 0; u < points; ++u)
    for (std::size_t r = 0; r < k; ++r) {
      xs[u].emplace_back(program.add_variable());
      ys[u].emplace_back(program.add_variable());
    }
  pin(program, xs.front(), ys.front(), from, shapes);
  pin(program, xs.back(), ys.back(), to, shapes);
  for (std::size_t u = 0; u < points; ++u) {
    std::size_t lo = u == 0 ? 0 : u - 1;
    std::size_t hi = std::min(u, l);
    orderings::add_ordering_constraints(program, xs[u], ys[u], shapes, g.vertices[path[lo]]);
    if (hi != lo) orderings::add_ordering_constraints(program, xs[u], ys[u], shapes, g.vertices[path[hi]]);
  }

  LinearExpr objective_expr;
  for (std::size_t u = 0; u <= l; ++u) {
    auto phi = program.add_variable("phi" + std::to_string(u), lp::Domain::NonNegative);
    for (std::size_t r = 0; r < k; ++r) {
      auto d = lp::l1_norm_bound(program, xs[u + 1][r] - xs[u][r], ys[u + 1][r] - ys[u][r]);
      if (objective == Objective::Makespan)
        program.add_geq(phi, d);
      else
        objective_expr += d;
    }
    if (objective == Objective::Makespan) objective_expr += LinearExpr(phi);
  }
  program.minimize(objective_expr);
  auto sol = lp::solve(program);
  if (!sol.optimal()) return std::nullopt;

  PathLpResult res;
  for (std::size_t u = 0; u < points; ++u) {
    std::vector<Point> pts;
    for (std::size_t r = 0; r < k; ++r) pts.emplace_back(sol.value(xs[u][r]), sol.value(ys[u][r]));
    res.chain.emplace_back(std::move(pts), shapes);
  }
  // Re-measured from the coordinates; must agree with the LP optimum.
  res.value = 0;
  for (std::size_t u = 0; u <= l; ++u) {
    Rational v = objective == Objective::Makespan ? model::diameter(res.chain[u], res.chain[u + 1])
                                                  : model::distance_sum(res.chain[u], res.chain[u + 1]);
    res.segment_values.push_back(v);
    res.value += v;
  }
  if (res.value != sol.objective) throw std::logic_error("path_lp: segment values disagree with the LP optimum");
  return res;
}

Schedule stitch(const std::vector<Configuration>& chain) {
  Schedule s(chain.front());
  for (std::size_t u = 0; u + 1 < chain.size(); ++u) {
    if (model::diameter(chain[u], chain[u + 1]) == 0) continue;
    s.then(same_ordering_schedule_k(chain[u], chain[u + 1]));
  }
  return s;
}

// Longest simple path has at most V - 1 edges.
bool covers_all_paths(const TransitionGraph& g, std::size_t max_len) { return max_len + 1 >= g.vertices.size(); }

std::optional<StatePlanK> search(const End& from, const End& to, const std::vector<int>& starts,
                                 const std::vector<int>& ends, const std::vector<model::RobotShape>& shapes,
                                 Objective objective, const Rational& lower_bound, const Options& options) {
  const auto& g = transition_graph(shapes, options.max_k);
  std::optional<StatePlanK> best;
  std::size_t solved = 0;
  bool budget_hit = false;
  orderings::enumerate_simple_paths(g, starts, ends, options.max_len, [&](const std::vector<int>& path) {
    if (options.max_paths && solved >= options.max_paths) {
      budget_hit = true;
      return false;
    }
    ++solved;
    auto res = solve_path(from, to, g, path, shapes, objective);
    if (!res) return true;
    if (best && res->value >= best->value) return true;
    if (res->value < lower_bound) throw std::logic_error("plannerk: route value below a proven lower bound");
    StatePlanK p;
    p.value = res->value;
    p.start = res->chain.front();
    p.end = res->chain.back();
    p.intermediates.assign(res->chain.begin() + 1, res->chain.end() - 1);
    for (int v : path) p.route.push_back(g.vertices[v]);
    p.schedule = stitch(res->chain);
    best = std::move(p);
    return best->value != lower_bound;
  });
  if (!best) return std::nullopt;
  best->paths_solved = solved;
  best->lower_bound = lower_bound;
  bool exhausted = !budget_hit && covers_all_paths(g, options.max_len);
  best->exactness = best->value == lower_bound || exhausted ? Exactness::Exact : Exactness::BoundedSearch;
  return best;
}

Configuration sub(const Configuration& c, std::size_t i, std::size_t j) {
  return Configuration({c.points[i], c.points[j]}, {c.shapes[i], c.shapes[j]});
}

Rational fixed_lower_bound(const Configuration& a, const Configuration& b, Objective objective, bool pairwise) {
  Rational lb = objective == Objective::Makespan ? model::diameter(a, b) : model::distance_sum(a, b);
  if (!pairwise) return lb;
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational v = planner2::plan2(sub(a, i, j), sub(b, i, j), objective).value;
      if (objective == Objective::Sum)
        for (std::size_t r = 0; r < k; ++r)
          if (r != i && r != j) v += geom::l1_dist(a.points[r], b.points[r]);
      lb = max(lb, v);
    }
  return lb;
}

// Relaxation without separation constraints.
std::optional<Rational> state_relaxation(const StateK& from, const StateK& to,
                                         const std::vector<model::RobotShape>& shapes, Objective objective) {
  const std::size_t k = shapes.size();
  lp::LinearProgram program;
  Coords ax, ay, bx, by;
  for (std::size_t r = 0; r < k; ++r) {
    ax.emplace_back(program.add_variable());
    ay.emplace_back(program.add_variable());
    bx.emplace_back(program.add_variable());
    by.emplace_back(program.add_variable());
  }
  pin(program, ax, ay, End{nullptr, &from}, shapes);
  pin(program, bx, by, End{nullptr, &to}, shapes);
  auto bound = program.add_variable("bound");
  LinearExpr total;
  for (std::size_t r = 0; r < k; ++r) {
    auto d = lp::l1_norm_bound(program, bx[r] - ax[r], by[r] - ay[r]);
    if (objective == Objective::Makespan)
      program.add_geq(bound, d);
    else
      total += d;
  }
  if (objective == Objective::Sum) program.add_geq(bound, total);
  program.minimize(bound);
  auto sol = lp::solve(program);
  if (!sol.optimal()) return std::nullopt;
  return sol.objective;
}

// Orderings some placement of the state satisfies.
std::vector<int> state_orderings(const StateK& s, const TransitionGraph& g,
                                 const std::vector<model::RobotShape>& shapes) {
  std::vector<int> out;
  const std::size_t k = shapes.size();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    lp::LinearProgram program;
    Coords xs, ys;
    for (std::size_t r = 0; r < k; ++r) {
      xs.emplace_back(program.add_variable());
      ys.emplace_back(program.add_variable());
    }
    pin(program, xs, ys, End{nullptr, &s}, shapes);
    orderings::add_ordering_constraints(program, xs, ys, shapes, g.vertices[v]);
    if (lp::solve(program).optimal()) out.push_back(static_cast<int>(v));
  }
  return out;
}

void check_state(const StateK& s, std::size_t k) {
  if (s.X.size() != k) throw std::invalid_argument("state has " + std::to_string(s.X.size()) + " trapezoids, expected " + std::to_string(k));
  if (s.sigma.size() != orderings::pair_count(k)) throw std::invalid_argument("state needs one sigma per robot pair");
}

}  // namespace

std::optional<PathLpResult> path_lp(const Configuration& a, const Configuration& b, const TransitionGraph& g,
                                    const std::vector<int>& path, Objective objective) {
  if (a.size() != b.size() || a.size() != g.k) throw std::invalid_argument("path_lp: robot counts differ");
  for (int v : path)
    if (v < 0 || v >= static_cast<int>(g.vertices.size())) throw std::invalid_argument("path_lp: unknown ordering id");
  Configuration bb(b.points, a.shapes);
  return solve_path(End{&a, nullptr}, End{&bb, nullptr}, g, path, a.shapes, objective);
}

PlanK plan_k(const Configuration& a, const Configuration& b, Objective objective, const Options& options) {
  if (a.size() != b.size()) throw std::invalid_argument("start and target have different robot counts");
  if (a.size() < 2) throw std::invalid_argument("need at least two robots");
  if (!model::is_feasible(a)) throw InfeasibleConfiguration("start configuration has overlapping robots");
  Configuration bb(b.points, a.shapes);
  if (!model::is_feasible(bb)) throw InfeasibleConfiguration("target configuration has overlapping robots");
  const auto& g = transition_graph(a.shapes, options.max_k);
  Rational lb = fixed_lower_bound(a, bb, objective, options.pairwise_bound);
  auto best = search(End{&a, nullptr}, End{&bb, nullptr}, orderings::orderings_containing(a, g),
                     orderings::orderings_containing(bb, g), a.shapes, objective, lb, options);
  if (!best) throw ResourceBound("no route within path length " + std::to_string(options.max_len));
  return static_cast<PlanK>(std::move(*best));
}

PlanK plan_makespan_k(const Configuration& a, const Configuration& b, const Options& options) {
  return plan_k(a, b, Objective::Makespan, options);
}

PlanK plan_sum_k(const Configuration& a, const Configuration& b, const Options& options) {
  return plan_k(a, b, Objective::Sum, options);
}

StatePlanK plan_state_k(const StateK& from, const StateK& to, const std::vector<model::RobotShape>& shapes,
                        Objective objective, const Options& options) {
  const std::size_t k = shapes.size();
  if (k < 2) throw std::invalid_argument("need at least two robots");
  check_state(from, k);
  check_state(to, k);
  const auto& g = transition_graph(shapes, options.max_k);
  auto relaxed = state_relaxation(from, to, shapes, objective);
  if (!relaxed) throw StateInfeasible("no placement satisfies the state constraints");
  auto starts = state_orderings(from, g, shapes);
  auto ends = state_orderings(to, g, shapes);
  if (starts.empty() || ends.empty()) throw StateInfeasible("no feasible placement for the given states");

  Rational lb = *relaxed;
  if (options.pairwise_bound) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::size_t p = orderings::pair_index(k, i, j);
        planner2::State2 f{from.X[i], from.X[j], from.sigma[p]}, t{to.X[i], to.X[j], to.sigma[p]};
        auto v = planner2::try_plan_state(f, t, objective, {shapes[i], shapes[j]});
        if (!v) throw StateInfeasible("robots " + std::to_string(i) + " and " + std::to_string(j) + " cannot be placed");
        lb = max(lb, v->value);
      }
  }
  auto best = search(End{nullptr, &from}, End{nullptr, &to}, starts, ends, shapes, objective, lb, options);
  if (!best) throw ResourceBound("no route within path length " + std::to_string(options.max_len));
  return std::move(*best);
}

StatePlanK plan_state_makespan_k(const StateK& from, const StateK& to, const std::vector<model::RobotShape>& shapes,
                                 const Options& options) {
  return plan_state_k(from, to, shapes, Objective::Makespan, options);
}

}  // namespace l1plan::plannerk
