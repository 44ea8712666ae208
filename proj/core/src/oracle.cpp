#include "l1plan/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

namespace l1plan::oracle {

namespace {

using geom::Point;

long to_units(const Rational& v, const Rational& step, const char* what) {
  Rational q = v / step;
  if (q.get_den() != 1) throw std::invalid_argument(std::string(what) + " " + l1plan::to_string(v) + " is off the lattice");
  if (!q.get_num().fits_slong_p()) throw std::invalid_argument("lattice coordinate out of range");
  return q.get_num().get_si();
}

Rational floor_to(const Rational& v, const Rational& ref, const Rational& step) {
  Rational q = (v - ref) / step;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return ref + Rational(f) * step;
}

struct Lattice {
  Rational x0, y0, step;
  int w = 0, h = 0;

  int size() const { return w * h; }
  Point point(int idx) const { return {x0 + step * (idx % w), y0 + step * (idx / w)}; }
  int index(const Point& p) const {
    long ix = to_units(p.x - x0, step, "coordinate");
    long iy = to_units(p.y - y0, step, "coordinate");
    if (ix < 0 || iy < 0 || ix >= w || iy >= h) throw std::invalid_argument("configuration outside the search window");
    return static_cast<int>(iy * w + ix);
  }
};

Lattice make_lattice(const Window& win, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("lattice step must be positive");
  Lattice l;
  l.x0 = win.x0;
  l.y0 = win.y0;
  l.step = step;
  l.w = static_cast<int>(to_units(win.x1 - win.x0, step, "window width")) + 1;
  l.h = static_cast<int>(to_units(win.y1 - win.y0, step, "window height")) + 1;
  if (l.w <= 0 || l.h <= 0) throw std::invalid_argument("empty search window");
  return l;
}

Window window_around(const Configuration& a, const Configuration& b, const GridOptions& o) {
  if (o.window) return *o.window;
  Rational x0 = a.points[0].x, x1 = x0, y0 = a.points[0].y, y1 = y0;
  for (const auto* c : {&a, &b})
    for (const auto& p : c->points) {
      x0 = min(x0, p.x);
      x1 = max(x1, p.x);
      y0 = min(y0, p.y);
      y1 = max(y1, p.y);
    }
  // Align to the lattice through the first start point.
  const Point& ref = a.points[0];
  Window w;
  w.x0 = floor_to(x0 - o.margin, ref.x, o.step);
  w.y0 = floor_to(y0 - o.margin, ref.y, o.step);
  w.x1 = x1 + o.margin;
  w.y1 = y1 + o.margin;
  w.x1 = floor_to(w.x1, ref.x, o.step);
  w.y1 = floor_to(w.y1, ref.y, o.step);
  return w;
}

// Open set of t where |a + b t| < g, as (lo, hi) in half-units of t;
// b ranges over -2..2 so the endpoints are integers after doubling.
struct Span {
  bool empty = false;
  bool all = false;
  long lo = 0, hi = 0;
};

Span below(long a, long b, long g) {
  Span s;
  if (b == 0) {
    (std::labs(a) < g ? s.all : s.empty) = true;
    return s;
  }
  long p = 2 * (-g - a), q = 2 * (g - a);
  // divide by b (|b| is 1 or 2)
  s.lo = p / b;
  s.hi = q / b;
  if (s.lo > s.hi) std::swap(s.lo, s.hi);
  return s;
}

struct Problem {
  std::size_t k = 0;
  Lattice lat;
  std::vector<std::vector<char>> allowed;  // per robot, per lattice point
  std::vector<std::vector<int>> cover;     // per robot, per lattice point; -1 when exposed
  std::vector<long> gx, gy;                // per pair, in lattice units
  std::vector<int> start, target;
};

enum class Cost { Tick, Moves, Exposure };

constexpr int kMoves[5][2] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};

GridResult run(const Problem& pb, Cost cost_kind, std::size_t max_states, bool& reached) {
  const std::size_t k = pb.k;
  const std::int64_t n = pb.lat.size();
  double states_d = 1;
  for (std::size_t r = 0; r < k; ++r) states_d *= static_cast<double>(n);
  if (states_d > static_cast<double>(max_states))
    throw BudgetExceeded("joint configuration space of " + std::to_string(static_cast<long long>(states_d)) +
                         " states exceeds the budget of " + std::to_string(max_states));
  const std::int64_t states = static_cast<std::int64_t>(states_d);

  auto encode = [&](const std::vector<int>& pos) {
    std::int64_t s = 0;
    for (std::size_t r = k; r-- > 0;) s = s * n + pos[r];
    return s;
  };
  auto decode = [&](std::int64_t s, std::vector<int>& pos) {
    for (std::size_t r = 0; r < k; ++r) {
      pos[r] = static_cast<int>(s % n);
      s /= n;
    }
  };

  std::vector<std::int32_t> dist(states, -1);
  std::vector<std::int64_t> parent(states, -1);
  using Item = std::pair<std::int32_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  const std::int64_t s0 = encode(pb.start), goal = encode(pb.target);
  dist[s0] = 0;
  queue.push({0, s0});

  std::vector<int> pos(k), next(k), choice(k);
  std::vector<int> px(k), py(k), dx(k), dy(k);
  const int w = pb.lat.w;
  std::size_t visited = 0;
  reached = false;
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (d != dist[s]) continue;
    ++visited;
    if (s == goal) {
      reached = true;
      break;
    }
    decode(s, pos);
    for (std::size_t r = 0; r < k; ++r) {
      px[r] = pos[r] % w;
      py[r] = pos[r] / w;
    }
    // Odometer over the 5^k joint moves, skipping the all-wait move.
    std::fill(choice.begin(), choice.end(), 0);
    for (;;) {
      std::size_t r = 0;
      while (r < k && ++choice[r] == 5) choice[r++] = 0;
      if (r == k) break;

      bool ok = true;
      int moving = 0;
      for (std::size_t i = 0; i < k && ok; ++i) {
        dx[i] = kMoves[choice[i]][0];
        dy[i] = kMoves[choice[i]][1];
        moving += choice[i] != 0;
        int nx = px[i] + dx[i], ny = py[i] + dy[i];
        if (nx < 0 || ny < 0 || nx >= w || ny >= pb.lat.h) {
          ok = false;
          break;
        }
        next[i] = ny * w + nx;
        if (!pb.allowed[i][next[i]]) ok = false;
      }
      if (!ok) continue;
      std::size_t pair = 0;
      for (std::size_t i = 0; i < k && ok; ++i)
        for (std::size_t j = i + 1; j < k && ok; ++j, ++pair) {
          long ax = px[i] - px[j], ay = py[i] - py[j];
          long bx = dx[i] - dx[j], by = dy[i] - dy[j];
          long gx = pb.gx[pair], gy = pb.gy[pair];
          // End configuration separated.
          if (std::labs(ax + bx) < gx && std::labs(ay + by) < gy) {
            ok = false;
            break;
          }
          Span sx = below(ax, bx, gx), sy = below(ay, by, gy);
          if (sx.empty || sy.empty) continue;
          // Both ends are separated, so only the open tick (0, 2) matters.
          long lo = 0, hi = 2;
          for (const Span* sp : {&sx, &sy})
            if (!sp->all) {
              lo = std::max(lo, sp->lo);
              hi = std::min(hi, sp->hi);
            }
          if (lo < hi) ok = false;
        }
      if (!ok) continue;

      std::int32_t c = 0;
      switch (cost_kind) {
        case Cost::Tick: c = 1; break;
        case Cost::Moves: c = moving; break;
        case Cost::Exposure:
          c = 0;
          for (std::size_t i = 0; i < k; ++i) {
            int from_cover = pb.cover[i][pos[i]];
            if (from_cover < 0 || pb.cover[i][next[i]] != from_cover) c = 1;
          }
          break;
      }
      std::int64_t t = encode(next);
      if (dist[t] < 0 || d + c < dist[t]) {
        dist[t] = d + c;
        parent[t] = s;
        queue.push({d + c, t});
      }
    }
  }

  GridResult res;
  res.states_visited = visited;
  if (!reached) return res;
  res.value = pb.lat.step * dist[goal];
  std::vector<std::int64_t> chain;
  for (std::int64_t s = goal; s >= 0; s = s == s0 ? -1 : parent[s]) chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  std::vector<model::RobotShape> shapes;
  for (const auto& c : chain) {
    decode(c, pos);
    std::vector<Point> pts;
    for (std::size_t r = 0; r < k; ++r) pts.push_back(pb.lat.point(pos[r]));
    res.path.emplace_back(std::move(pts));
  }
  return res;
}

Problem make_problem(const Configuration& a, const Configuration& b, const Lattice& lat) {
  if (a.size() != b.size()) throw std::invalid_argument("start and target have different robot counts");
  if (!model::is_feasible(a) || !model::is_feasible(b)) throw std::invalid_argument("infeasible start or target");
  Problem pb;
  pb.k = a.size();
  pb.lat = lat;
  for (std::size_t i = 0; i < pb.k; ++i)
    for (std::size_t j = i + 1; j < pb.k; ++j) {
      auto g = model::pair_gap(a.shapes[i], a.shapes[j]);
      pb.gx.push_back(to_units(g.wx, lat.step, "robot width sum"));
      pb.gy.push_back(to_units(g.wy, lat.step, "robot height sum"));
    }
  for (std::size_t r = 0; r < pb.k; ++r) {
    pb.start.push_back(lat.index(a.points[r]));
    pb.target.push_back(lat.index(b.points[r]));
  }
  pb.allowed.assign(pb.k, std::vector<char>(lat.size(), 1));
  pb.cover.assign(pb.k, std::vector<int>(lat.size(), -1));
  return pb;
}

void attach_shapes(GridResult& res, const Configuration& a) {
  for (auto& c : res.path) c = Configuration(c.points, a.shapes);
}

}  // namespace

GridResult grid_cmp(const Configuration& a, const Configuration& b, Objective objective, const GridOptions& options) {
  Configuration bb(b.points, a.shapes);
  Problem pb = make_problem(a, bb, make_lattice(window_around(a, bb, options), options.step));
  bool reached = false;
  GridResult res = run(pb, objective == Objective::Makespan ? Cost::Tick : Cost::Moves, options.max_states, reached);
  if (!reached) throw Unreachable("target not reachable inside the search window");
  attach_shapes(res, a);
  return res;
}

std::optional<GridResult> grid_feasibility(const geom::PolygonalDomain& domain, const Configuration& a,
                                           const Configuration& b, const GridOptions& options) {
  Configuration bb(b.points, a.shapes);
  Window win;
  if (options.window) {
    win = *options.window;
  } else {
    win = {domain.outer[0].x, domain.outer[0].y, domain.outer[0].x, domain.outer[0].y};
    for (const auto& p : domain.outer) {
      win.x0 = min(win.x0, p.x);
      win.y0 = min(win.y0, p.y);
      win.x1 = max(win.x1, p.x);
      win.y1 = max(win.y1, p.y);
    }
    const Point& ref = a.points[0];
    win.x0 = floor_to(win.x0, ref.x, options.step);
    win.y0 = floor_to(win.y0, ref.y, options.step);
    win.x1 = floor_to(win.x1, ref.x, options.step);
    win.y1 = floor_to(win.y1, ref.y, options.step);
  }
  Problem pb = make_problem(a, bb, make_lattice(win, options.step));
  for (std::size_t r = 0; r < pb.k; ++r)
    for (int i = 0; i < pb.lat.size(); ++i) pb.allowed[r][i] = geom::box_inside(domain, pb.lat.point(i), a.shapes[r]);
  for (std::size_t r = 0; r < pb.k; ++r)
    if (!pb.allowed[r][pb.start[r]] || !pb.allowed[r][pb.target[r]])
      throw std::invalid_argument("robot " + std::to_string(r) + " starts or ends outside the domain");
  bool reached = false;
  GridResult res = run(pb, Cost::Tick, options.max_states, reached);
  if (!reached) return std::nullopt;
  attach_shapes(res, a);
  return res;
}

GridResult grid_exposure(const Configuration& a, const Configuration& b, const std::vector<geom::PolygonalDomain>& cover,
                         const GridOptions& options) {
  Configuration bb(b.points, a.shapes);
  Problem pb = make_problem(a, bb, make_lattice(window_around(a, bb, options), options.step));
  for (std::size_t r = 0; r < pb.k; ++r)
    for (int i = 0; i < pb.lat.size(); ++i) {
      Point p = pb.lat.point(i);
      for (std::size_t d = 0; d < cover.size(); ++d)
        if (geom::box_inside(cover[d], p, a.shapes[r])) {
          pb.cover[r][i] = static_cast<int>(d);
          break;
        }
    }
  bool reached = false;
  GridResult res = run(pb, Cost::Exposure, options.max_states, reached);
  if (!reached) throw Unreachable("target not reachable inside the search window");
  attach_shapes(res, a);
  return res;
}

model::Schedule path_schedule(const std::vector<Configuration>& path, const Rational& step) {
  if (path.empty()) throw std::invalid_argument("empty path");
  model::Schedule s(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) s.append(path[i].points, step);
  return s;
}

}  // namespace l1plan::oracle
