#pragma once

// Two unit-square robots inside one polygonal domain: can they get from one
// configuration to another without leaving it? Both robots are pushed to
// corners of the eroded region, and corner pairs are grouped into connected
// components of single-robot moves along region edges and decomposition cuts.

#include "l1plan/errors.hpp"
#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace l1plan::feas2 {

using geom::Point;
using model::Configuration;

class EmptyErosion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using NotInDomain = OutsideDomain;

class NotReachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeasibilityStructure {
  geom::PolygonalDomain domain;
  std::vector<geom::PolygonalDomain> eroded;
  geom::Decomposition horizontal;
  geom::Decomposition vertical;

  /// V*: region vertices first, then cut endpoints and cut crossings.
  std::vector<Point> nodes;
  std::size_t region_vertex_count = 0;
  /// Neighbors along region edges and cuts, split at every node.
  std::vector<std::vector<int>> adjacency;

  /// Component of the ordered placement (robot 0 at a, robot 1 at b), -1 when
  /// the two boxes overlap. Indexed a * nodes.size() + b.
  std::vector<int> component;
  int component_count = 0;
  std::size_t pair_edge_count = 0;

  std::map<Point, int> node_ids;

  int label(int a, int b) const { return component[static_cast<std::size_t>(a) * nodes.size() + b]; }
  bool is_region_vertex(int id) const { return static_cast<std::size_t>(id) < region_vertex_count; }
};

/// Throws EmptyErosion when no unit square fits in the domain.
FeasibilityStructure build_feasibility(const geom::PolygonalDomain& s);

struct CornerConfiguration {
  int a = -1;
  int b = -1;
  /// Separator used: Vertical means the robots were pushed apart along x.
  geom::Axis axis = geom::Axis::Vertical;
  /// From the input to the corner pair; at most one turn per robot.
  model::Schedule schedule;

  Configuration configuration(const FeasibilityStructure& f) const;
};

/// Throws NotInDomain if a box is outside, InfeasibleConfiguration if they overlap.
CornerConfiguration normalize_to_corner(const FeasibilityStructure& f, const Configuration& p);

bool query_feasible(const FeasibilityStructure& f, const Configuration& a, const Configuration& b);

/// Corner pairs from `from` to `to`, one robot moving per step. Empty if not
/// connected.
std::vector<std::pair<int, int>> corner_path(const FeasibilityStructure& f, std::pair<int, int> from,
                                             std::pair<int, int> to);

/// Index of the eroded component holding p, or -1.
int region_of(const FeasibilityStructure& f, const Point& p);

/// Polyline for a robot alone in the domain, from p to q along region edges
/// and cuts. Empty when they lie in different components.
std::vector<Point> single_robot_route(const FeasibilityStructure& f, const Point& p, const Point& q);

/// Throws NotReachable when query_feasible is false.
model::Schedule reconstruct_zero_exposure_schedule(const FeasibilityStructure& f, const Configuration& a,
                                                   const Configuration& b);

}  // namespace l1plan::feas2
