#pragma once

// Exact rational 2-D kernel: points, polygonal domains with holes, box
// erosion (inner Minkowski sums), trapezoidal decompositions, and the
// convex-hull / box-fit tests used by the exposure state graph.

#include "l1plan/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace l1plan::geom {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  // mpq_class(6, 2) is not reduced, and GMP equality assumes reduced values.
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
};

std::string to_string(const Point& p);

struct Segment {
  Point a;
  Point b;
};

using Ring = std::vector<Point>;

/// Outer ring counterclockwise, holes clockwise (after canonicalize()).
struct PolygonalDomain {
  Ring outer;
  std::vector<Ring> holes;
  int id = 0;
};

/// Half side lengths of an axis-aligned box; the unit square is (1/2, 1/2).
struct HalfExtents {
  Rational half_width{1, 2};
  Rational half_height{1, 2};

  friend bool operator==(const HalfExtents& a, const HalfExtents& b) {
    return a.half_width == b.half_width && a.half_height == b.half_height;
  }
};

/// a*x + b*y <= c
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
};

enum class Location { Inside, Boundary, Outside };

// --- metrics and predicates -------------------------------------------------

Rational l1_dist(const Point& p, const Point& q);
Rational linf_dist(const Point& p, const Point& q);

Rational cross(const Point& o, const Point& a, const Point& b);
int orientation(const Point& o, const Point& a, const Point& b);
bool on_segment(const Point& p, const Segment& s);
/// Closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);
/// Segments cross at a single point interior to both.
bool segments_cross_properly(const Segment& s, const Segment& t);

Rational signed_area2(const Ring& ring);
Rational area(const PolygonalDomain& d);

Location locate_in_ring(const Point& p, const Ring& ring);
Location locate_in_domain(const Point& p, const PolygonalDomain& d);
inline bool contains_closed(const PolygonalDomain& d, const Point& p) {
  return locate_in_domain(p, d) != Location::Outside;
}

// --- polygon hygiene ----------------------------------------------------------

/// Drops repeated and collinear vertices (including zero-width spikes).
Ring canonical_ring(const Ring& ring);

/// Canonicalizes rings and fixes orientations (outer CCW, holes CW).
PolygonalDomain canonicalize(PolygonalDomain d);

/// Throws std::invalid_argument when rings are degenerate or self-intersecting,
/// a hole is not strictly inside the outer ring, or holes overlap.
void validate(const PolygonalDomain& d);

/// True when the two domains share interior points.
bool interiors_overlap(const PolygonalDomain& a, const PolygonalDomain& b);

std::vector<HalfPlane> half_planes(const Ring& convex_ccw);

/// Counterclockwise convex hull without collinear points.
Ring convex_hull(std::vector<Point> points);

// --- erosion --------------------------------------------------------------------

/// Reference points whose box of the given half extents fits inside S, as a
/// list of connected polygonal components (possibly empty). Lower-dimensional
/// leftovers (segments or isolated points) are not reported.
std::vector<PolygonalDomain> inner_minkowski(const PolygonalDomain& s, const HalfExtents& extents = {});

/// Closed-box containment tested directly against S, independent of the
/// erosion polygon.
bool box_inside(const PolygonalDomain& s, const Point& center, const HalfExtents& extents = {});

// --- trapezoids -----------------------------------------------------------------

/// Horizontal trapezoids are swept along y and bounded left/right by region
/// edges; vertical ones are swept along x and bounded below/above.
enum class Axis { Horizontal, Vertical };

const char* to_string(Axis axis);

struct Trapezoid {
  int id = -1;
  Axis axis = Axis::Horizontal;
  /// Extent along the sweep coordinate (y for horizontal, x for vertical).
  Rational lo;
  Rational hi;
  /// Region edges bounding the trapezoid across the sweep direction, in world
  /// coordinates: left/right for horizontal, bottom/top for vertical.
  Segment low_side;
  Segment high_side;
  int parent_domain = 0;
  int parent_region = 0;

  Rational low_at(const Rational& sweep) const;
  Rational high_at(const Rational& sweep) const;

  /// Distinct corners, counterclockwise.
  Ring corners() const;
  bool contains(const Point& p) const;
  std::vector<HalfPlane> half_planes() const;
  /// Membership as half-planes built from the sweep extent and the side
  /// lines; unlike half_planes() this stays exact for degenerate trapezoids
  /// such as single points.
  std::vector<HalfPlane> constraints() const;
  Rational area() const;
};

/// Degenerate horizontal trapezoid holding exactly one point.
Trapezoid point_trapezoid(const Point& p, int id = -1);

struct Decomposition {
  Axis axis = Axis::Horizontal;
  std::vector<Trapezoid> trapezoids;
  /// Pairs (lower id, higher id) sharing a cut of positive length.
  std::vector<std::pair<int, int>> adjacency;
  /// Cut endpoints that are not vertices of the region.
  std::vector<Point> steiner_vertices;
  /// Shared sides between adjacent trapezoids.
  std::vector<Segment> cuts;

  /// Smallest id whose closed trapezoid contains p.
  std::optional<int> locate(const Point& p) const;
};

Decomposition decompose(const PolygonalDomain& region, Axis axis);
/// Decomposes several disjoint components; parent_region is the index in `regions`.
Decomposition decompose(std::span<const PolygonalDomain> regions, Axis axis);

struct Hull {
  Ring polygon;  // CCW; fewer than three points when degenerate
  Rational width;
  Rational height;
};

Hull hull_of_two_trapezoids(const Trapezoid& x, const Trapezoid& y);

/// True iff an axis-aligned box of the given half extents fits inside the
/// convex polygon; decided exactly by a two-variable feasibility program.
bool contains_box(const Ring& convex_ccw, const HalfExtents& extents);
inline bool contains_unit_square(const Ring& convex_ccw) { return contains_box(convex_ccw, HalfExtents{}); }

}  // namespace l1plan::geom
