#pragma once

// Axis-separation orderings of k robots and the transition graph between
// them.

#include "l1plan/lp.hpp"
#include "l1plan/model.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace l1plan::orderings {

using model::Configuration;
using model::RobotShape;

/// Position of robot i relative to robot j (i < j).
enum class Rel : std::uint8_t { Left, Right, Below, Above };

Rel opposite(Rel r);
bool opposing(Rel a, Rel b);
char symbol(Rel r);  // 'L', 'R', 'B', 'A'

std::size_t pair_count(std::size_t k);
/// Index of the unordered pair (i, j), i < j, in lexicographic order.
std::size_t pair_index(std::size_t k, std::size_t i, std::size_t j);

struct Ordering {
  std::vector<Rel> rel;  // one entry per pair, indexed by pair_index

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.rel == b.rel; }
  /// e.g. "L" for k = 2, "LAR" for k = 3 (pairs 01, 02, 12).
  std::string label() const;
};

/// Direct check of every separation inequality.
bool satisfies(const Configuration& c, const Ordering& o);

/// Adds the separation inequalities of `o` over symbolic robot coordinates.
void add_ordering_constraints(lp::LinearProgram& program, const std::vector<lp::LinearExpr>& xs,
                              const std::vector<lp::LinearExpr>& ys, const std::vector<RobotShape>& shapes,
                              const Ordering& o);

/// True when some configuration satisfies every ordering in `os` at once.
bool realizable(const std::vector<Ordering>& os, const std::vector<RobotShape>& shapes);

struct TransitionGraph {
  std::size_t k = 0;
  std::vector<RobotShape> shapes;
  std::vector<Ordering> vertices;
  std::vector<std::vector<int>> adjacency;  // sorted neighbour ids

  int index_of(const Ordering& o) const;  // -1 when absent
  std::size_t edge_count() const;
};

/// Throws ResourceBound when k exceeds max_k.
TransitionGraph build_transition_graph(std::size_t k, std::vector<RobotShape> shapes = {}, std::size_t max_k = 4);

/// Vertex ids whose orderings contain `c`. Throws InfeasibleConfiguration
/// when two robots overlap.
std::vector<int> orderings_containing(const Configuration& c, const TransitionGraph& g);

/// Receives each simple path (vertex ids); returning false stops enumeration.
using PathVisitor = std::function<bool(const std::vector<int>&)>;

/// Simple paths with at most max_len edges from a vertex in `from` to one in
/// `to`, in nondecreasing length. Returns false if the visitor stopped early.
bool enumerate_simple_paths(const TransitionGraph& g, const std::vector<int>& from, const std::vector<int>& to,
                            std::size_t max_len, const PathVisitor& visit);

std::string to_dot(const TransitionGraph& g);

}  // namespace l1plan::orderings
