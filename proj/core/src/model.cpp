#include "l1plan/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace l1plan::model {

using geom::PolygonalDomain;

Configuration::Configuration(std::vector<Point> pts)
    : points(std::move(pts)), shapes(points.size(), RobotShape{}) {}

Configuration::Configuration(std::vector<Point> pts, std::vector<RobotShape> sh)
    : points(std::move(pts)), shapes(std::move(sh)) {
  if (shapes.size() != points.size()) throw std::invalid_argument("configuration: shapes and points differ in size");
}

PairGap pair_gap(const RobotShape& a, const RobotShape& b) {
  return {a.half_width + b.half_width, a.half_height + b.half_height};
}

bool separated(const Configuration& c, std::size_t i, std::size_t j) {
  auto g = pair_gap(c.shapes[i], c.shapes[j]);
  return abs(c.points[i].x - c.points[j].x) >= g.wx || abs(c.points[i].y - c.points[j].y) >= g.wy;
}

bool is_feasible(const Configuration& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!separated(c, i, j)) return false;
  return true;
}

Rational diameter(const Configuration& a, const Configuration& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = max(d, geom::l1_dist(a.points[i], b.points[i]));
  return d;
}

Rational distance_sum(const Configuration& a, const Configuration& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += geom::l1_dist(a.points[i], b.points[i]);
  return d;
}

// --- trajectories -------------------------------------------------------------

Point Trajectory::position_at(const Rational& t) const {
  if (t <= points.front().t) return points.front().p;
  if (t >= points.back().t) return points.back().p;
  auto it = std::upper_bound(points.begin(), points.end(), t,
                             [](const Rational& v, const Breakpoint& b) { return v < b.t; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  Rational f = (t - lo.t) / (hi.t - lo.t);
  return lo.p + f * (hi.p - lo.p);
}

Rational Trajectory::length() const {
  Rational s = 0;
  for (std::size_t k = 1; k < points.size(); ++k) s += geom::l1_dist(points[k - 1].p, points[k].p);
  return s;
}

Rational Trajectory::length_between(const Rational& a, const Rational& b) const {
  Rational s = 0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const auto& p = points[k - 1];
    const auto& q = points[k];
    Rational lo = max(a, p.t), hi = min(b, q.t);
    if (lo >= hi) continue;
    s += geom::l1_dist(p.p, q.p) * (hi - lo) / (q.t - p.t);
  }
  return s;
}

// --- schedules ------------------------------------------------------------------

Schedule::Schedule(const Configuration& start, const Rational& t0) : shapes(start.shapes) {
  for (const auto& p : start.points) trajectories.push_back(Trajectory{{Breakpoint{t0, p}}});
}

Rational Schedule::t0() const {
  if (trajectories.empty()) return 0;
  return trajectories.front().t0();
}

Rational Schedule::t1() const {
  if (trajectories.empty()) return 0;
  return trajectories.front().t1();
}

Configuration Schedule::at(const Rational& t) const {
  std::vector<Point> pts;
  for (const auto& tr : trajectories) pts.push_back(tr.position_at(t));
  return Configuration(std::move(pts), shapes);
}

Schedule& Schedule::append(const std::vector<Point>& targets, const Rational& duration) {
  if (targets.size() != trajectories.size()) throw std::invalid_argument("append: wrong number of targets");
  if (duration <= 0) throw std::invalid_argument("append: duration must be positive");
  Rational end = t1() + duration;
  for (std::size_t i = 0; i < targets.size(); ++i) trajectories[i].points.push_back({end, targets[i]});
  return *this;
}

Schedule& Schedule::move_one(std::size_t robot, const Point& target) {
  const Point& from = trajectories.at(robot).points.back().p;
  Rational d = geom::l1_dist(from, target);
  if (d == 0) return *this;
  std::vector<Point> targets;
  for (const auto& tr : trajectories) targets.push_back(tr.points.back().p);
  targets[robot] = target;
  return append(targets, d);
}

Schedule& Schedule::then(const Schedule& next) {
  if (next.robots() != robots()) throw std::invalid_argument("then: robot count mismatch");
  Rational shift = t1() - next.t0();
  for (std::size_t i = 0; i < robots(); ++i) {
    const auto& np = next.trajectories[i].points;
    if (np.front().p != trajectories[i].points.back().p)
      throw std::invalid_argument("then: schedules do not meet for robot " + std::to_string(i));
    for (std::size_t k = 1; k < np.size(); ++k) trajectories[i].points.push_back({np[k].t + shift, np[k].p});
  }
  // Robots without motion in `next` still need the common end time.
  Rational end = next.t1() + shift;
  for (auto& tr : trajectories)
    if (tr.points.back().t < end) tr.points.push_back({end, tr.points.back().p});
  return *this;
}

Schedule Schedule::reversed() const {
  Schedule r;
  r.shapes = shapes;
  Rational a = t0(), b = t1();
  for (const auto& tr : trajectories) {
    Trajectory rt;
    for (auto it = tr.points.rbegin(); it != tr.points.rend(); ++it) rt.points.push_back({a + b - it->t, it->p});
    r.trajectories.push_back(std::move(rt));
  }
  return r;
}

std::vector<Rational> Schedule::breakpoint_times() const {
  std::vector<Rational> ts;
  for (const auto& tr : trajectories)
    for (const auto& b : tr.points) ts.push_back(b.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Schedule& Schedule::simplify() {
  for (auto& tr : trajectories) {
    auto& pts = tr.points;
    std::vector<Breakpoint> out;
    for (const auto& b : pts) {
      if (!out.empty() && out.back().t == b.t) {
        out.back() = b;
        continue;
      }
      if (out.size() >= 2) {
        const auto& p0 = out[out.size() - 2];
        const auto& p1 = out.back();
        Point v0 = p1.p - p0.p, v1 = b.p - p1.p;
        Rational d0 = p1.t - p0.t, d1 = b.t - p1.t;
        if (v0.x * d1 == v1.x * d0 && v0.y * d1 == v1.y * d0) out.pop_back();
      }
      out.push_back(b);
    }
    pts = std::move(out);
  }
  return *this;
}

Rational measure_makespan(const Schedule& m) { return m.t1() - m.t0(); }

Rational measure_sum(const Schedule& m) {
  Rational s = 0;
  for (const auto& tr : m.trajectories) s += tr.length();
  return s;
}

// --- coverage -------------------------------------------------------------------

namespace {

bool in_any(const std::vector<PolygonalDomain>& regions, const Point& p) {
  return std::any_of(regions.begin(), regions.end(), [&](const auto& r) { return geom::contains_closed(r, p); });
}

void edge_params(const Point& a, const Point& d, const Point& p, const Point& q, std::vector<Rational>& out) {
  Point e = q - p;
  Point ap = p - a;
  Rational denom = d.x * e.y - d.y * e.x;
  if (denom != 0) {
    Rational s = (ap.x * e.y - ap.y * e.x) / denom;
    Rational u = (ap.x * d.y - ap.y * d.x) / denom;
    if (u >= 0 && u <= 1 && s > 0 && s < 1) out.push_back(s);
    return;
  }
  if (ap.x * d.y - ap.y * d.x != 0) return;  // parallel, not collinear
  Rational dd = d.x * d.x + d.y * d.y;
  for (const Point& v : {p, q}) {
    Point av = v - a;
    Rational s = (av.x * d.x + av.y * d.y) / dd;
    if (s > 0 && s < 1) out.push_back(s);
  }
}

void ring_params(const Point& a, const Point& d, const geom::Ring& ring, std::vector<Rational>& out) {
  for (std::size_t i = 0; i < ring.size(); ++i) edge_params(a, d, ring[i], ring[(i + 1) % ring.size()], out);
}

std::vector<Interval> merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Rational lo = max(a[i].lo, b[j].lo), hi = min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::vector<Interval> covered_times(const Trajectory& tr, const std::vector<PolygonalDomain>& regions) {
  std::vector<Interval> out;
  if (tr.points.size() == 1) {
    if (in_any(regions, tr.points[0].p)) out.push_back({tr.points[0].t, tr.points[0].t});
    return out;
  }
  for (std::size_t k = 1; k < tr.points.size(); ++k) {
    const auto& p = tr.points[k - 1];
    const auto& q = tr.points[k];
    Rational dt = q.t - p.t;
    for (const auto& iv : inside_parameters(p.p, q.p, regions)) out.push_back({p.t + iv.lo * dt, p.t + iv.hi * dt});
  }
  return merge(std::move(out));
}

}  // namespace

std::vector<Interval> inside_parameters(const Point& a, const Point& b, const std::vector<PolygonalDomain>& regions) {
  if (a == b) {
    if (in_any(regions, a)) return {{Rational(0), Rational(1)}};
    return {};
  }
  Point d = b - a;
  std::vector<Rational> crit{0, 1};
  for (const auto& r : regions) {
    ring_params(a, d, r.outer, crit);
    for (const auto& h : r.holes) ring_params(a, d, h, crit);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  auto at = [&](const Rational& s) { return a + s * d; };
  std::vector<Interval> out;
  bool open = false;
  Rational start;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    bool here = in_any(regions, at(crit[i]));
    if (here && !open) {
      open = true;
      start = crit[i];
    }
    if (!here && open) {
      out.push_back({start, crit[i - 1]});
      open = false;
    }
    if (i + 1 == crit.size()) break;
    bool mid = in_any(regions, at((crit[i] + crit[i + 1]) / 2));
    if (mid && !open) {
      open = true;
      start = crit[i];
    }
    if (!mid && open) {
      out.push_back({start, crit[i]});
      open = false;
    }
  }
  if (open) out.push_back({start, crit.back()});
  return out;
}

CoverRegions erode_cover(const std::vector<PolygonalDomain>& cover, const RobotShape& shape) {
  CoverRegions r{shape, {}};
  for (const auto& s : cover)
    for (auto& c : geom::inner_minkowski(s, shape)) r.components.push_back(std::move(c));
  return r;
}

bool is_covered(const Configuration& c, const std::vector<PolygonalDomain>& cover) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    bool inside = std::any_of(cover.begin(), cover.end(),
                              [&](const auto& s) { return geom::box_inside(s, c.points[i], c.shapes[i]); });
    if (!inside) return false;
  }
  return true;
}

namespace {

struct ShapeLess {
  bool operator()(const RobotShape& a, const RobotShape& b) const {
    if (a.half_width != b.half_width) return a.half_width < b.half_width;
    return a.half_height < b.half_height;
  }
};

}  // namespace

ExposureMeasure measure_exposure_detail(const Schedule& m, const std::vector<PolygonalDomain>& cover) {
  ExposureMeasure out;
  const Rational T0 = m.t0(), T1 = m.t1();
  std::map<RobotShape, CoverRegions, ShapeLess> eroded;
  std::vector<Interval> covered{{T0, T1}};
  for (std::size_t i = 0; i < m.robots(); ++i) {
    auto it = eroded.find(m.shapes[i]);
    if (it == eroded.end()) it = eroded.emplace(m.shapes[i], erode_cover(cover, m.shapes[i])).first;
    covered = intersect(covered, covered_times(m.trajectories[i], it->second.components));
  }
  Rational cursor = T0;
  bool first = true;
  for (const auto& iv : covered) {
    if (iv.lo > cursor || (first && iv.lo > T0)) out.exposed.push_back({cursor, iv.lo});
    cursor = iv.hi;
    first = false;
  }
  if (cursor < T1 || (covered.empty() && T1 > T0)) out.exposed.push_back({cursor, T1});
  for (const auto& iv : out.exposed) {
    Rational worst = 0;
    for (const auto& tr : m.trajectories) worst = max(worst, tr.length_between(iv.lo, iv.hi));
    out.by_length += worst;
    out.elapsed += iv.hi - iv.lo;
  }
  return out;
}

// --- validation -----------------------------------------------------------------

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Collision: return "collision";
    case Violation::Kind::Speed: return "speed";
    case Violation::Kind::LeavesDomain: return "leaves-domain";
    case Violation::Kind::Endpoint: return "endpoint";
  }
  return "?";
}

namespace {

// {s : |a + b s| < w} as an open interval; `all` when b == 0 and |a| < w.
struct OpenSet {
  bool empty = false;
  bool all = false;
  Rational lo, hi;
};

OpenSet below(const Rational& a, const Rational& b, const Rational& w) {
  OpenSet o;
  if (b == 0) {
    if (abs(a) < w) {
      o.all = true;
    } else {
      o.empty = true;
    }
    return o;
  }
  Rational r1 = (-w - a) / b, r2 = (w - a) / b;
  o.lo = min(r1, r2);
  o.hi = max(r1, r2);
  return o;
}

// Infimum of {s in [0,1] : |dx(s)| < wx and |dy(s)| < wy}, if the set is nonempty.
std::optional<Rational> first_overlap(const Point& d0, const Point& d1, const PairGap& g) {
  OpenSet sx = below(d0.x, d1.x - d0.x, g.wx);
  OpenSet sy = below(d0.y, d1.y - d0.y, g.wy);
  if (sx.empty || sy.empty) return std::nullopt;
  std::optional<Rational> lo, hi;
  for (const OpenSet* s : {&sx, &sy}) {
    if (s->all) continue;
    lo = lo ? max(*lo, s->lo) : s->lo;
    hi = hi ? min(*hi, s->hi) : s->hi;
  }
  if (!lo) return Rational(0);
  if (*lo >= *hi || *lo >= 1 || *hi <= 0) return std::nullopt;
  return max(*lo, Rational(0));
}

void record(ValidationReport& rep, Violation v) {
  if (rep.ok || v.time < rep.first->time) rep.first = std::move(v);
  rep.ok = false;
}

}  // namespace

ValidationReport validate_schedule(const Schedule& m, const ValidationOptions& options) {
  ValidationReport rep;
  if (m.robots() == 0) return rep;
  if (m.shapes.size() != m.robots()) throw std::invalid_argument("schedule: shapes and trajectories differ in size");
  const Rational T0 = m.t0(), T1 = m.t1();
  for (const auto& tr : m.trajectories) {
    if (tr.points.empty() || tr.t0() != T0 || tr.t1() != T1)
      throw std::invalid_argument("schedule: trajectories do not share a common time interval");
  }
  rep.makespan = measure_makespan(m);
  rep.sum = measure_sum(m);

  for (std::size_t i = 0; i < m.robots(); ++i) {
    const auto& pts = m.trajectories[i].points;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      Rational dt = pts[k].t - pts[k - 1].t;
      if (dt <= 0) throw std::invalid_argument("schedule: breakpoint times must strictly increase");
      if (geom::l1_dist(pts[k - 1].p, pts[k].p) > dt)
        record(rep, {Violation::Kind::Speed, i, i, pts[k - 1].t,
                     "robot " + std::to_string(i) + " exceeds unit speed after t=" + l1plan::to_string(pts[k - 1].t)});
    }
  }

  auto times = m.breakpoint_times();
  if (times.size() == 1) times.push_back(times.front());
  for (std::size_t s = 0; s + 1 < times.size(); ++s) {
    const Rational& a = times[s];
    const Rational& b = times[s + 1];
    Configuration ca = m.at(a), cb = m.at(b);
    for (std::size_t i = 0; i < m.robots(); ++i)
      for (std::size_t j = i + 1; j < m.robots(); ++j) {
        PairCheck pc{i, j, a, b, true, {}};
        auto hit = first_overlap(ca.points[i] - ca.points[j], cb.points[i] - cb.points[j],
                                 pair_gap(m.shapes[i], m.shapes[j]));
        if (hit) {
          pc.ok = false;
          pc.first_violation = a + *hit * (b - a);
          record(rep, {Violation::Kind::Collision, i, j, pc.first_violation,
                       "robots " + std::to_string(i) + " and " + std::to_string(j) + " overlap from t=" +
                           l1plan::to_string(pc.first_violation)});
        }
        rep.pair_checks.push_back(std::move(pc));
      }
  }

  auto check_end = [&](const Configuration* c, const Rational& t, const char* which) {
    if (!c) return;
    auto at = m.at(t);
    for (std::size_t i = 0; i < m.robots() && i < c->size(); ++i)
      if (at.points[i] != c->points[i])
        record(rep, {Violation::Kind::Endpoint, i, i, t,
                     std::string(which) + " position of robot " + std::to_string(i) + " is " +
                         geom::to_string(at.points[i]) + ", expected " + geom::to_string(c->points[i])});
  };
  check_end(options.start, T0, "start");
  check_end(options.target, T1, "target");

  if (options.domain) {
    std::map<RobotShape, std::vector<PolygonalDomain>, ShapeLess> eroded;
    for (std::size_t i = 0; i < m.robots(); ++i) {
      auto it = eroded.find(m.shapes[i]);
      if (it == eroded.end()) it = eroded.emplace(m.shapes[i], geom::inner_minkowski(*options.domain, m.shapes[i])).first;
      const auto& pts = m.trajectories[i].points;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const Point& p = pts[k].p;
        const Point& q = k + 1 < pts.size() ? pts[k + 1].p : p;
        auto inside = inside_parameters(p, q, it->second);
        bool whole = inside.size() == 1 && inside[0].lo == 0 && inside[0].hi == 1;
        if (!whole) {
          Rational leave = inside.empty() || inside[0].lo > 0 ? Rational(0) : inside[0].hi;
          Rational t = k + 1 < pts.size() ? pts[k].t + leave * (pts[k + 1].t - pts[k].t) : pts[k].t;
          record(rep, {Violation::Kind::LeavesDomain, i, i, t,
                       "robot " + std::to_string(i) + " leaves the domain at t=" + l1plan::to_string(t)});
          break;
        }
      }
    }
  }

  if (options.cover) rep.exposure = measure_exposure_detail(m, *options.cover);
  return rep;
}

}  // namespace l1plan::model
