#include "l1plan/orderings.hpp"

#include "l1plan/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace l1plan::orderings {

Rel opposite(Rel r) {
  switch (r) {
    case Rel::Left: return Rel::Right;
    case Rel::Right: return Rel::Left;
    case Rel::Below: return Rel::Above;
    case Rel::Above: return Rel::Below;
  }
  return r;
}

bool opposing(Rel a, Rel b) { return opposite(a) == b; }

char symbol(Rel r) {
  switch (r) {
    case Rel::Left: return 'L';
    case Rel::Right: return 'R';
    case Rel::Below: return 'B';
    case Rel::Above: return 'A';
  }
  return '?';
}

std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

std::size_t pair_index(std::size_t k, std::size_t i, std::size_t j) {
  // Pairs (0,1), (0,2), ..., (0,k-1), (1,2), ...
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

std::string Ordering::label() const {
  std::string s;
  for (Rel r : rel) s += symbol(r);
  return s;
}

bool satisfies(const Configuration& c, const Ordering& o) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto g = model::pair_gap(c.shapes[i], c.shapes[j]);
      const auto& p = c.points[i];
      const auto& q = c.points[j];
      bool ok = false;
      switch (o.rel[pair_index(k, i, j)]) {
        case Rel::Left: ok = p.x + g.wx <= q.x; break;
        case Rel::Right: ok = p.x >= q.x + g.wx; break;
        case Rel::Below: ok = p.y + g.wy <= q.y; break;
        case Rel::Above: ok = p.y >= q.y + g.wy; break;
      }
      if (!ok) return false;
    }
  return true;
}

void add_ordering_constraints(lp::LinearProgram& program, const std::vector<lp::LinearExpr>& xs,
                              const std::vector<lp::LinearExpr>& ys, const std::vector<RobotShape>& shapes,
                              const Ordering& o) {
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto g = model::pair_gap(shapes[i], shapes[j]);
      std::string tag = "sep" + std::to_string(i) + "_" + std::to_string(j);
      switch (o.rel[pair_index(k, i, j)]) {
        case Rel::Left: program.add_leq(xs[i] + g.wx, xs[j], tag); break;
        case Rel::Right: program.add_geq(xs[i], xs[j] + g.wx, tag); break;
        case Rel::Below: program.add_leq(ys[i] + g.wy, ys[j], tag); break;
        case Rel::Above: program.add_geq(ys[i], ys[j] + g.wy, tag); break;
      }
    }
}

bool realizable(const std::vector<Ordering>& os, const std::vector<RobotShape>& shapes) {
  if (os.empty()) return true;
  const std::size_t k = shapes.size();
  lp::LinearProgram program;
  std::vector<lp::LinearExpr> xs, ys;
  for (std::size_t i = 0; i < k; ++i) {
    xs.emplace_back(program.add_variable("x" + std::to_string(i)));
    ys.emplace_back(program.add_variable("y" + std::to_string(i)));
  }
  for (const auto& o : os) add_ordering_constraints(program, xs, ys, shapes, o);
  return lp::solve(program).status != lp::Status::Infeasible;
}

int TransitionGraph::index_of(const Ordering& o) const {
  auto it = std::find(vertices.begin(), vertices.end(), o);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::size_t TransitionGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& a : adjacency) e += a.size();
  return e / 2;
}

TransitionGraph build_transition_graph(std::size_t k, std::vector<RobotShape> shapes, std::size_t max_k) {
  if (k < 2) throw std::invalid_argument("transition graph needs at least two robots");
  if (k > max_k)
    throw ResourceBound("transition graph for " + std::to_string(k) + " robots exceeds the cap of " +
                        std::to_string(max_k));
  if (shapes.empty()) shapes.assign(k, RobotShape{});
  if (shapes.size() != k) throw std::invalid_argument("transition graph: one shape per robot expected");

  TransitionGraph g;
  g.k = k;
  g.shapes = shapes;
  const std::size_t pairs = pair_count(k);
  std::size_t total = 1;
  for (std::size_t p = 0; p < pairs; ++p) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Ordering o;
    std::size_t c = code;
    for (std::size_t p = 0; p < pairs; ++p) {
      o.rel.push_back(static_cast<Rel>(c % 4));
      c /= 4;
    }
    if (realizable({o}, shapes)) g.vertices.push_back(std::move(o));
  }
  g.adjacency.assign(g.vertices.size(), {});
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      bool adjacent = true;
      for (std::size_t p = 0; p < pairs && adjacent; ++p)
        adjacent = !opposing(g.vertices[u].rel[p], g.vertices[v].rel[p]);
      if (adjacent) {
        g.adjacency[u].push_back(static_cast<int>(v));
        g.adjacency[v].push_back(static_cast<int>(u));
      }
    }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

std::vector<int> orderings_containing(const Configuration& c, const TransitionGraph& g) {
  if (!model::is_feasible(c)) throw InfeasibleConfiguration("configuration has overlapping robots");
  if (c.size() != g.k) throw std::invalid_argument("configuration size does not match the transition graph");
  std::vector<int> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (satisfies(c, g.vertices[v])) out.push_back(static_cast<int>(v));
  return out;
}

bool enumerate_simple_paths(const TransitionGraph& g, const std::vector<int>& from, const std::vector<int>& to,
                            std::size_t max_len, const PathVisitor& visit) {
  const std::size_t n = g.vertices.size();
  // Hop distance to the target set prunes branches that cannot finish in time.
  std::vector<std::size_t> dist(n, n + 1);
  std::deque<int> queue;
  std::vector<char> is_target(n, 0);
  for (int t : to) {
    is_target[t] = 1;
    dist[t] = 0;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[u])
      if (dist[v] > dist[u] + 1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }

  std::vector<int> starts(from);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  bool stopped = false;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    int u = path.back();
    if (remaining == 0) {
      if (is_target[u] && !visit(path)) stopped = true;
      return;
    }
    for (int v : g.adjacency[u]) {
      if (stopped) return;
      if (on_path[v] || dist[v] > remaining - 1) continue;
      on_path[v] = 1;
      path.push_back(v);
      extend(remaining - 1);
      path.pop_back();
      on_path[v] = 0;
    }
  };
  for (std::size_t len = 0; len <= max_len && len < n; ++len) {
    for (int s : starts) {
      if (dist[s] > len) continue;
      path.assign(1, s);
      on_path[s] = 1;
      extend(len);
      on_path[s] = 0;
      if (stopped) return false;
    }
  }
  return true;
}

std::string to_dot(const TransitionGraph& g) {
  std::ostringstream out;
  out << "graph transitions {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << g.vertices[v].label() << "\"];\n";
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (int v : g.adjacency[u])
      if (static_cast<std::size_t>(v) > u) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace l1plan::orderings
