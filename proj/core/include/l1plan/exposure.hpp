#pragma once

// Two-robot minimum exposure planning. Vertices are states over trapezoids
// of the eroded covering domains; zero edges join states whose
// representatives can reach each other while staying covered, and positive
// edges cost the cover-ignoring state-to-state makespan.

#include "l1plan/feas2.hpp"
#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"
#include "l1plan/planner2.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace l1plan::exposure {

using model::Configuration;
using planner2::State2;

class NoRepresentative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eroded covering domains, their horizontal trapezoids W, and one
/// feasibility structure per domain that admits a robot.
struct CoverIndex {
  std::vector<geom::PolygonalDomain> domains;
  /// Global trapezoid list; parent_domain is the cover index and
  /// parent_region the erosion component within that domain.
  std::vector<geom::Trapezoid> W;
  std::vector<std::optional<feas2::FeasibilityStructure>> feasibility;
};

/// Throws std::invalid_argument when cover domains overlap or are invalid.
CoverIndex index_cover(const std::vector<geom::PolygonalDomain>& cover);

/// Candidate states from the case analysis on hull(X u Y), over ordered
/// pairs of W. Several relations can come from one pair.
std::vector<State2> build_state_vertices(const CoverIndex& cover);
inline std::vector<State2> build_state_vertices(const std::vector<geom::PolygonalDomain>& cover) {
  return build_state_vertices(index_cover(cover));
}

/// Extremal-point representative of a state; throws NoRepresentative when
/// the rule yields overlapping robots.
Configuration representative_configuration(const State2& v);

/// Zero-exposure reachability class: (domain of robot 0, domain of robot 1,
/// then either a corner-pair component or the two erosion components).
using ZeroKey = std::tuple<int, int, int, int>;

/// nullopt when some robot is not covered.
std::optional<ZeroKey> zero_key(const CoverIndex& cover, const Configuration& c);

struct Vertex {
  State2 state;
  Configuration representative;
  std::optional<ZeroKey> key;
};

struct Edge {
  int u = -1;
  int v = -1;
  bool zero = false;
  Rational weight;
};

struct ExposureGraph {
  CoverIndex cover;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  /// States proposed by the case analysis, before dropping those without a
  /// representative.
  std::size_t candidate_count = 0;
  std::size_t zero_edge_count = 0;
  std::size_t positive_edge_count = 0;
  int source = -1;
  int sink = -1;
};

/// With `positive_weights` false, positive edges are counted but their
/// makespans are not solved (weight left at 0).
ExposureGraph build_exposure_graph(const std::vector<geom::PolygonalDomain>& cover, bool positive_weights = true);

struct ExposurePlan {
  /// Graph distance: the planned exposure.
  Rational value;
  model::Schedule schedule;
  Rational exposure_measured;
  Rational makespan_measured;
  /// Vertex ids from source to sink; edge i joins path[i] and path[i + 1].
  std::vector<int> path;
  std::vector<bool> zero_steps;
  std::size_t vertex_count = 0;
  std::size_t positive_solved = 0;
  /// Transitions the witness chain could not link without exposure.
  std::size_t exposed_links = 0;
};

/// Shortest path from A to B with lazily evaluated positive edges.
ExposurePlan plan_exposure2(const Configuration& a, const Configuration& b,
                            const std::vector<geom::PolygonalDomain>& cover);

/// Same search on a prebuilt graph (vertices only; edges are recomputed).
ExposurePlan plan_on_graph(const Configuration& a, const Configuration& b, ExposureGraph graph);

}  // namespace l1plan::exposure
