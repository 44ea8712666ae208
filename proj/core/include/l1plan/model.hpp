#pragma once

// Configurations, piecewise-linear schedules, objective measurement, and the
// exact schedule validator every planner result is checked against.

#include "l1plan/geom.hpp"
#include "l1plan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l1plan::model {

using geom::Point;
using RobotShape = geom::HalfExtents;

struct Configuration {
  std::vector<Point> points;
  std::vector<RobotShape> shapes;  // same length as points

  Configuration() = default;
  /// Unit squares at the given points.
  explicit Configuration(std::vector<Point> pts);
  Configuration(std::vector<Point> pts, std::vector<RobotShape> sh);

  std::size_t size() const { return points.size(); }
};

/// Combined half extents of a pair: boxes overlap iff |dx| < wx and |dy| < wy.
struct PairGap {
  Rational wx;
  Rational wy;
};
PairGap pair_gap(const RobotShape& a, const RobotShape& b);

/// Boxes i and j are interior disjoint.
bool separated(const Configuration& c, std::size_t i, std::size_t j);
bool is_feasible(const Configuration& c);

Rational diameter(const Configuration& a, const Configuration& b);
Rational distance_sum(const Configuration& a, const Configuration& b);

struct Breakpoint {
  Rational t;
  Point p;
};

/// Time-sorted breakpoints; linear motion in between.
struct Trajectory {
  std::vector<Breakpoint> points;

  const Rational& t0() const { return points.front().t; }
  const Rational& t1() const { return points.back().t; }
  Point position_at(const Rational& t) const;
  /// Polyline L1 length.
  Rational length() const;
  /// L1 length traveled during [a, b].
  Rational length_between(const Rational& a, const Rational& b) const;
};

class Schedule {
 public:
  Schedule() = default;
  /// Every robot sits at its start position at time t0.
  explicit Schedule(const Configuration& start, const Rational& t0 = 0);

  std::vector<Trajectory> trajectories;
  std::vector<RobotShape> shapes;

  std::size_t robots() const { return trajectories.size(); }
  Rational t0() const;
  Rational t1() const;
  Configuration at(const Rational& t) const;
  Configuration start() const { return at(t0()); }
  Configuration end() const { return at(t1()); }

  /// All robots move linearly to `targets` over `duration` (> 0).
  Schedule& append(const std::vector<Point>& targets, const Rational& duration);
  /// One robot moves at unit speed along a straight line while the others wait.
  Schedule& move_one(std::size_t robot, const Point& target);
  /// Appends `next`, which must start where this schedule ends.
  Schedule& then(const Schedule& next);

  /// Time-reversed schedule over the same interval.
  Schedule reversed() const;
  /// Distinct breakpoint times of all robots, sorted.
  std::vector<Rational> breakpoint_times() const;
  /// Drops redundant breakpoints (same velocity on both sides).
  Schedule& simplify();
};

Rational measure_makespan(const Schedule& m);
Rational measure_sum(const Schedule& m);

/// Closed parameter intervals of a moving point (a -> b, s in [0,1]) that lie
/// inside the union of closed regions.
struct Interval {
  Rational lo;
  Rational hi;
};
std::vector<Interval> inside_parameters(const Point& a, const Point& b,
                                        const std::vector<geom::PolygonalDomain>& regions);

/// Erosions of each cover domain for one robot shape; robot covered iff its
/// reference point lies in one of them.
struct CoverRegions {
  RobotShape shape;
  std::vector<geom::PolygonalDomain> components;
};
CoverRegions erode_cover(const std::vector<geom::PolygonalDomain>& cover, const RobotShape& shape);

bool is_covered(const Configuration& c, const std::vector<geom::PolygonalDomain>& cover);

struct ExposureMeasure {
  /// Sum over maximal exposed intervals of the longest distance any robot
  /// travels in that interval.
  Rational by_length;
  /// Total exposed time.
  Rational elapsed;
  std::vector<Interval> exposed;  // maximal exposed time intervals (open in the interior)
};
ExposureMeasure measure_exposure_detail(const Schedule& m, const std::vector<geom::PolygonalDomain>& cover);
inline Rational measure_exposure(const Schedule& m, const std::vector<geom::PolygonalDomain>& cover) {
  return measure_exposure_detail(m, cover).by_length;
}

struct PairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational t0;
  Rational t1;
  bool ok = true;
  /// Infimum of the violating times when !ok.
  Rational first_violation;
};

struct Violation {
  enum class Kind { Collision, Speed, LeavesDomain, Endpoint };
  Kind kind = Kind::Collision;
  std::size_t robot = 0;
  std::size_t other = 0;
  Rational time;
  std::string message;
};

const char* to_string(Violation::Kind kind);

struct ValidationReport {
  bool ok = true;
  std::optional<Violation> first;
  std::vector<PairCheck> pair_checks;
  Rational makespan;
  Rational sum;
  std::optional<ExposureMeasure> exposure;
};

struct ValidationOptions {
  const Configuration* start = nullptr;  // expected endpoints, if any
  const Configuration* target = nullptr;
  /// Robots must stay inside this domain (closed containment of their boxes).
  const geom::PolygonalDomain* domain = nullptr;
  /// When set, exposure is measured and reported.
  const std::vector<geom::PolygonalDomain>* cover = nullptr;
};

/// Exact check of collision freedom and unit speed. Throws
/// std::invalid_argument when trajectories do not share one time interval.
ValidationReport validate_schedule(const Schedule& m, const ValidationOptions& options = {});

}  // namespace l1plan::model
