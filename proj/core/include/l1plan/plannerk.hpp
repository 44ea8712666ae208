#pragma once

// Planners for k robots in the open plane: one LP per path of the ordering
// transition graph, searched by nondecreasing path length, with a pairwise
// lower bound that certifies early stops.

#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"
#include "l1plan/orderings.hpp"
#include "l1plan/planner2.hpp"

#include <optional>
#include <vector>

namespace l1plan::plannerk {

using model::Configuration;
using model::Schedule;
using planner2::Objective;

enum class Exactness { Exact, BoundedSearch };
const char* to_string(Exactness e);

struct Options {
  std::size_t max_len = 4;
  std::size_t max_k = 4;
  /// Path LPs solved before giving up; 0 means no limit.
  std::size_t max_paths = 20000;
  /// Use the two-robot optimum of every pair as a lower bound (and stop when
  /// it is met). Off, only the diameter / distance sum is used.
  bool pairwise_bound = true;
};

/// The one-turn schedule with d = diam(a, b); a and b must be commonly ordered.
Schedule same_ordering_schedule_k(const Configuration& a, const Configuration& b);

struct PathLpResult {
  Rational value;
  /// I^0 = start, I^1 .. I^l, I^{l+1} = end.
  std::vector<Configuration> chain;
  /// Makespan: max robot distance per segment; sum: total distance per segment.
  std::vector<Rational> segment_values;
};

/// LP over the intermediates of one path: I^u lies in orderings u-1 and u,
/// segment u costs phi^u >= |i^u_r - i^{u+1}_r|_1 for every robot r (makespan)
/// or the sum of those lengths (sum). nullopt when infeasible.
std::optional<PathLpResult> path_lp(const Configuration& a, const Configuration& b,
                                    const orderings::TransitionGraph& g, const std::vector<int>& path,
                                    Objective objective);

struct PlanK {
  Rational value;
  Schedule schedule;
  std::vector<orderings::Ordering> route;
  std::vector<Configuration> intermediates;
  Exactness exactness = Exactness::BoundedSearch;
  Rational lower_bound;
  std::size_t paths_solved = 0;
};

PlanK plan_k(const Configuration& a, const Configuration& b, Objective objective, const Options& options = {});
PlanK plan_makespan_k(const Configuration& a, const Configuration& b, const Options& options = {});
PlanK plan_sum_k(const Configuration& a, const Configuration& b, const Options& options = {});

/// k trapezoids and one sigma per pair (indexed by orderings::pair_index),
/// with the two-robot meaning per pair.
struct StateK {
  std::vector<geom::Trapezoid> X;
  std::vector<int> sigma;
};

StateK point_state_k(const Configuration& c);
bool in_state(const Configuration& c, const StateK& s);

struct StatePlanK : PlanK {
  Configuration start;
  Configuration end;
};

/// Throws StateInfeasible when a state has no feasible placement.
StatePlanK plan_state_k(const StateK& from, const StateK& to, const std::vector<model::RobotShape>& shapes,
                        Objective objective, const Options& options = {});
StatePlanK plan_state_makespan_k(const StateK& from, const StateK& to,
                                 const std::vector<model::RobotShape>& shapes, const Options& options = {});

/// Transition graph for these shapes, built once and shared.
const orderings::TransitionGraph& transition_graph(const std::vector<model::RobotShape>& shapes,
                                                   std::size_t max_k = 4);

}  // namespace l1plan::plannerk
