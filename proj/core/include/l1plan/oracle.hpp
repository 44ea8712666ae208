#pragma once

// Brute-force lattice searches over joint robot configurations. Every robot
// takes at most one axis step per tick, all moves are simultaneous, and each
// tick is checked exactly for overlap along the straight-line motion. Used as
// ground truth on small lattice-exact instances.

#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"
#include "l1plan/planner2.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace l1plan::oracle {

using model::Configuration;
using planner2::Objective;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Window {
  Rational x0, y0, x1, y1;
};

struct GridOptions {
  Rational step{1, 2};
  /// Window around the instance when none is given.
  Rational margin{2};
  std::optional<Window> window;
  /// Cap on the joint configuration count (lattice points ^ robots).
  std::size_t max_states = 4'000'000;
};

struct GridResult {
  Rational value;
  /// Joint configuration after every tick, starting with the start.
  std::vector<Configuration> path;
  std::size_t states_visited = 0;
};

/// Min makespan (BFS) or min sum (uniform cost) in the open plane.
/// Throws BudgetExceeded, Unreachable, or std::invalid_argument when an input
/// coordinate is off the lattice.
GridResult grid_cmp(const Configuration& a, const Configuration& b, Objective objective, const GridOptions& options = {});

/// Reachability with every robot box inside `domain` at all times.
std::optional<GridResult> grid_feasibility(const geom::PolygonalDomain& domain, const Configuration& a,
                                           const Configuration& b, const GridOptions& options = {});

/// Min exposed time: a tick is free when every robot stays inside one
/// covering domain for the whole tick, and costs one step otherwise.
GridResult grid_exposure(const Configuration& a, const Configuration& b,
                         const std::vector<geom::PolygonalDomain>& cover, const GridOptions& options = {});

/// One tick per path step, each lasting `step`.
model::Schedule path_schedule(const std::vector<Configuration>& path, const Rational& step);

}  // namespace l1plan::oracle
