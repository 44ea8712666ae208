#pragma once

// Exact planners for two robots in the open plane: one-turn schedules for
// commonly ordered pairs, min-makespan and min-sum over routes of the
// four-cycle of orderings, and the state-to-state variant used by the
// exposure graph.

#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"
#include "l1plan/orderings.hpp"

#include <optional>
#include <vector>

namespace l1plan::planner2 {

using model::Configuration;
using model::Schedule;

enum class Objective { Makespan, Sum };
const char* to_string(Objective o);

/// Some ordering contains both configurations (every pair shares a relation).
bool commonly_ordered(const Configuration& a, const Configuration& b);

/// x-move, wait until d - |dy|, y-move, for every robot. Works for any number
/// of robots. Throws NotCommonlyOrdered or DBelowDiameter.
Schedule same_ordering_schedule(const Configuration& a, const Configuration& b, const Rational& d);

struct Plan {
  Rational value;
  Schedule schedule;
  /// Orderings visited, as labels of the two-robot transition graph.
  std::vector<orderings::Ordering> route;
  /// Configurations where the route switches ordering.
  std::vector<Configuration> intermediates;
};

Plan plan_makespan2(const Configuration& a, const Configuration& b);
Plan plan_sum2(const Configuration& a, const Configuration& b);
Plan plan2(const Configuration& a, const Configuration& b, Objective objective);

/// Def. of a two-robot state: robot 0 in X, robot 1 in Y, and a relation
/// sigma in {-2,-1,0,1,2}: 1 means x0 <= x1 + 1, -1 means x0 >= x1 - 1,
/// 2 and -2 the same along y, 0 no restriction.
///
/// The literal inequality lets robot 0 sit exactly one unit on the far side
/// of robot 1, so a sigma = 1 state can hold both orders. Separated reads
/// sigma = 1 as x0 + 1 <= x1 (robot 0 stays to the left), which makes every
/// sigma != 0 state convex in configuration space.
enum class SigmaRule { Literal, Separated };

struct State2 {
  geom::Trapezoid X;
  geom::Trapezoid Y;
  int sigma = 0;
  SigmaRule rule = SigmaRule::Literal;
};

/// State whose trapezoids are the two points of a configuration.
State2 point_state(const Configuration& c);

struct StatePlan : Plan {
  Configuration start;
  Configuration end;
};

/// Best schedule from some configuration in `from` to some configuration in
/// `to`. nullopt when either state admits no feasible placement.
std::optional<StatePlan> try_plan_state(const State2& from, const State2& to, Objective objective,
                                        const std::vector<model::RobotShape>& shapes = {});
/// As try_plan_state but throws StateInfeasible.
StatePlan plan_state_makespan(const State2& from, const State2& to, const std::vector<model::RobotShape>& shapes = {});
StatePlan plan_state_sum(const State2& from, const State2& to, const std::vector<model::RobotShape>& shapes = {});

/// Adds the sigma inequality of a state over symbolic coordinates.
void add_sigma_constraint(lp::LinearProgram& program, const lp::LinearExpr& x0, const lp::LinearExpr& y0,
                          const lp::LinearExpr& x1, const lp::LinearExpr& y1, int sigma,
                          const model::PairGap& gap, SigmaRule rule = SigmaRule::Literal);
/// Adds membership of (x, y) in a trapezoid.
void add_membership(lp::LinearProgram& program, const lp::LinearExpr& x, const lp::LinearExpr& y,
                    const geom::Trapezoid& t);

bool in_state(const Configuration& c, const State2& s);

}  // namespace l1plan::planner2
