#include "l1plan/geom.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace l1plan;
using namespace l1plan::geom;
using l1plan::testing::P;
using l1plan::testing::R;
using l1plan::testing::rect;
using l1plan::testing::rect_ring;
using l1plan::testing::RationalGen;

namespace {

PolygonalDomain make_domain(Ring outer, std::vector<Ring> holes = {}, int id = 0) {
  PolygonalDomain d;
  d.outer = std::move(outer);
  d.holes = std::move(holes);
  d.id = id;
  return canonicalize(d);
}

bool in_any(const std::vector<PolygonalDomain>& comps, const Point& p) {
  return std::any_of(comps.begin(), comps.end(), [&](const auto& c) { return contains_closed(c, p); });
}

Rational total_area(const std::vector<PolygonalDomain>& comps) {
  Rational a = 0;
  for (const auto& c : comps) a += area(c);
  return a;
}

// Star-shaped polygon from random integer points sorted by angle around a center.
std::optional<PolygonalDomain> random_star(RationalGen& gen) {
  const int n = gen.integer(4, 9);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    double ang = 2 * M_PI * (i + 0.2 + 0.6 * gen.integer(0, 100) / 100.0) / n;
    double rad = gen.integer(3, 8);
    pts.push_back(P(std::lround(rad * std::cos(ang)), std::lround(rad * std::sin(ang))));
  }
  PolygonalDomain d;
  d.outer = pts;
  if (gen.coin()) d.holes.push_back(rect_ring(R(-1), R(-1), gen.grid(0, 1, 2) + R(1, 2), R(1, 2)));
  try {
    d = canonicalize(d);
    validate(d);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return d;
}

// Union of random cells of a 6x6 half-unit-scaled grid, traced as a staircase
// ("histogram") polygon: columns of random heights over a common base.
PolygonalDomain random_histogram(RationalGen& gen) {
  const int cols = gen.integer(2, 6);
  Ring r;
  Rational x = 0;
  r.push_back(P(R(0), R(0)));
  std::vector<std::pair<Rational, Rational>> tops;
  for (int c = 0; c < cols; ++c) {
    Rational w = gen.grid(1, 3, 2);
    Rational h = gen.grid(1, 5, 2);
    tops.push_back({x, h});
    x += w;
    tops.push_back({x, h});
  }
  r.push_back(P(x, R(0)));
  for (auto it = tops.rbegin(); it != tops.rend(); ++it) r.push_back(P(it->first, it->second));
  return make_domain(r);
}

}  // namespace

TEST(Geom, Distances) {
  EXPECT_EQ(l1_dist(P(0, 0), P(0, 0)), 0);
  EXPECT_EQ(l1_dist(P(0, 0), P(3, 4)), 7);
  EXPECT_EQ(l1_dist(P(-1, 2), P(2, -2)), 7);
  EXPECT_EQ(linf_dist(P(0, 0), P(0, 0)), 0);
  EXPECT_EQ(linf_dist(P(0, 0), P(3, 4)), 4);
  EXPECT_EQ(linf_dist(P(1, 1), P(2, 0)), 1);
}

TEST(Geom, ParsesRationals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2.25"), Rational(-9, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(8, 4)), "2");
}

TEST(Geom, CanonicalizeDropsCollinearAndFixesOrientation) {
  PolygonalDomain d;
  d.outer = {P(0, 0), P(0, 2), P(2, 2), P(2, 1), P(2, 0), P(1, 0), P(1, 0)};
  d = canonicalize(d);
  EXPECT_EQ(d.outer.size(), 4u);
  EXPECT_GT(signed_area2(d.outer), 0);
  EXPECT_EQ(area(d), 4);
}

TEST(Geom, CanonicalizeKeepsRepeatedCorner) {
  PolygonalDomain d;
  d.outer = {P(0, 0), P(2, 0), P(2, 0), P(2, 2), P(0, 2), P(0, 0)};
  d = canonicalize(d);
  EXPECT_EQ(d.outer, (Ring{P(0, 0), P(2, 0), P(2, 2), P(0, 2)}));
}

TEST(Geom, ValidateRejectsBadDomains) {
  PolygonalDomain bow;
  bow.outer = {P(0, 0), P(2, 2), P(2, 0), P(0, 2)};
  EXPECT_THROW(validate(bow), std::invalid_argument);

  auto outside_hole = make_domain(rect_ring(R(0), R(0), R(4), R(4)), {rect_ring(R(3), R(3), R(5), R(5))});
  EXPECT_THROW(validate(outside_hole), std::invalid_argument);

  auto touching_hole = make_domain(rect_ring(R(0), R(0), R(4), R(4)), {rect_ring(R(0), R(1), R(1), R(2))});
  EXPECT_THROW(validate(touching_hole), std::invalid_argument);

  auto overlapping = make_domain(rect_ring(R(0), R(0), R(8), R(8)),
                                 {rect_ring(R(1), R(1), R(3), R(3)), rect_ring(R(2), R(2), R(4), R(4))});
  EXPECT_THROW(validate(overlapping), std::invalid_argument);

  EXPECT_NO_THROW(validate(make_domain(rect_ring(R(0), R(0), R(4), R(4)), {rect_ring(R(1), R(1), R(2), R(2))})));
}

TEST(Geom, PointLocation) {
  auto d = make_domain(rect_ring(R(0), R(0), R(4), R(4)), {rect_ring(R(1), R(1), R(2), R(2))});
  EXPECT_EQ(locate_in_domain(P(3, 3), d), Location::Inside);
  EXPECT_EQ(locate_in_domain(P(4, 2), d), Location::Boundary);
  EXPECT_EQ(locate_in_domain(P(R(3, 2), R(3, 2)), d), Location::Outside);
  EXPECT_EQ(locate_in_domain(P(2, 1), d), Location::Boundary);
  EXPECT_EQ(locate_in_domain(P(5, 0), d), Location::Outside);
}

TEST(Geom, InteriorsOverlap) {
  EXPECT_FALSE(interiors_overlap(rect(R(0), R(0), R(2), R(2)), rect(R(2), R(0), R(4), R(2))));
  EXPECT_TRUE(interiors_overlap(rect(R(0), R(0), R(2), R(2)), rect(R(1), R(1), R(3), R(3))));
  EXPECT_TRUE(interiors_overlap(rect(R(0), R(0), R(4), R(4)), rect(R(1), R(1), R(2), R(2))));
  auto framed = make_domain(rect_ring(R(0), R(0), R(6), R(6)), {rect_ring(R(1), R(1), R(5), R(5))});
  EXPECT_FALSE(interiors_overlap(framed, rect(R(2), R(2), R(3), R(3))));
}

TEST(Erosion, SquareShrinksUniformly) {
  auto comps = inner_minkowski(rect(R(0), R(0), R(4), R(4)));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].outer, canonical_ring(rect_ring(R(1, 2), R(1, 2), R(7, 2), R(7, 2))));
  EXPECT_TRUE(comps[0].holes.empty());
}

TEST(Erosion, DumbbellCorridorDisconnects) {
  auto s = make_domain({P(0, 0), P(4, 0), P(R(4), R("1.6")), P(R(6), R("1.6")), P(6, 0), P(10, 0), P(10, 4),
                        P(6, 4), P(R(6), R("2.4")), P(R(4), R("2.4")), P(4, 4), P(0, 4)});
  validate(s);
  auto comps = inner_minkowski(s);
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& c : comps) {
    EXPECT_EQ(area(c), 9);
    EXPECT_EQ(c.outer.size(), 4u);
  }
  EXPECT_TRUE(in_any(comps, P(2, 2)));
  EXPECT_TRUE(in_any(comps, P(8, 2)));
  EXPECT_FALSE(in_any(comps, P(5, 2)));
}

TEST(Erosion, LShapeMatchesSamplingOracle) {
  auto s = make_domain({P(0, 0), P(4, 0), P(4, 2), P(2, 2), P(2, 4), P(0, 4)});
  auto comps = inner_minkowski(s);
  ASSERT_EQ(comps.size(), 1u);
  for (int i = 0; i <= 64; ++i)
    for (int j = 0; j <= 64; ++j) {
      Point p(Rational(i, 16), Rational(j, 16));
      ASSERT_EQ(contains_closed(comps[0], p), box_inside(s, p)) << to_string(p);
    }
  // Frozen from the sampling comparison above.
  EXPECT_EQ(comps[0].outer.size(), 6u);
  EXPECT_EQ(area(comps[0]), 5);
}

TEST(Erosion, HoleGrowsAndRectangularRobot) {
  auto s = make_domain(rect_ring(R(0), R(0), R(6), R(4)), {rect_ring(R(2), R(1), R(3), R(2))});
  const HalfExtents ext{R(3, 4), R(1, 4)};
  auto comps = inner_minkowski(s, ext);
  ASSERT_EQ(comps.size(), 1u);
  ASSERT_EQ(comps[0].holes.size(), 1u);
  EXPECT_EQ(area(comps[0]), R(9, 2) * R(7, 2) - R(5, 2) * R(3, 2));
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; j <= 40; ++j) {
      Point p(Rational(i, 10), Rational(j, 10));
      ASSERT_EQ(contains_closed(comps[0], p), box_inside(s, p, ext)) << to_string(p);
    }
}

TEST(Erosion, TooNarrowGivesEmpty) {
  EXPECT_TRUE(inner_minkowski(rect(R(0), R(0), R(5), R("0.9"))).empty());
}

TEST(ErosionProperty, SoundOnRandomStarPolygons) {
  RationalGen gen(11);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    auto s = random_star(gen);
    if (!s) continue;
    auto comps = inner_minkowski(*s);
    for (int k = 0; k < 1000; ++k) {
      Point p(gen.grid(-8, 8, 97), gen.grid(-8, 8, 97));
      ASSERT_EQ(in_any(comps, p), box_inside(*s, p)) << "iteration " << iter << " at " << to_string(p);
      ++checked;
    }
  }
  EXPECT_GE(checked, 10000);
}

TEST(ErosionProperty, SoundOnRandomHistograms) {
  RationalGen gen(5);
  for (int iter = 0; iter < 40; ++iter) {
    auto s = random_histogram(gen);
    auto comps = inner_minkowski(s);
    // The 1/97 shift keeps samples off the half-integer lines where 1-D
    // leftovers can sit.
    for (int k = 0; k < 1000; ++k) {
      Point p(gen.grid(0, 18, 7) + R(1, 97), gen.grid(0, 5, 7) + R(1, 97));
      ASSERT_EQ(in_any(comps, p), box_inside(s, p)) << "iteration " << iter << " at " << to_string(p);
    }
  }
}

TEST(Decompose, RectangleIsOneTrapezoid) {
  auto r = rect(R(0), R(0), R(3), R(2));
  for (auto axis : {Axis::Horizontal, Axis::Vertical}) {
    auto d = decompose(r, axis);
    ASSERT_EQ(d.trapezoids.size(), 1u);
    EXPECT_EQ(d.trapezoids[0].area(), 6);
    EXPECT_EQ(d.locate(P(R(3, 2), R(1))), 0);
    EXPECT_FALSE(d.locate(P(5, 5)).has_value());
    EXPECT_TRUE(d.steiner_vertices.empty());
  }
}

TEST(Decompose, SquareWithHoleHasFourTrapezoids) {
  auto r = make_domain(rect_ring(R(1, 2), R(1, 2), R(7, 2), R(7, 2)),
                       {rect_ring(R(3, 2), R(3, 2), R(5, 2), R(5, 2))});
  for (auto axis : {Axis::Horizontal, Axis::Vertical}) {
    auto d = decompose(r, axis);
    ASSERT_EQ(d.trapezoids.size(), 4u) << to_string(axis);
    Rational sum = 0;
    for (const auto& t : d.trapezoids) sum += t.area();
    EXPECT_EQ(sum, area(r));
    EXPECT_EQ(sum, 8);
    EXPECT_EQ(d.adjacency.size(), 4u);
    EXPECT_EQ(d.steiner_vertices.size(), 4u);
  }
}

TEST(Decompose, TriangleIsOneTrapezoid) {
  auto r = make_domain({P(0, 0), P(4, 0), P(0, 4)});
  auto d = decompose(r, Axis::Horizontal);
  ASSERT_EQ(d.trapezoids.size(), 1u);
  EXPECT_EQ(d.trapezoids[0].area(), 8);
  EXPECT_EQ(d.trapezoids[0].corners().size(), 3u);
}

TEST(Decompose, CutPointGoesToLowerId) {
  auto r = make_domain(rect_ring(R(1, 2), R(1, 2), R(7, 2), R(7, 2)),
                       {rect_ring(R(3, 2), R(3, 2), R(5, 2), R(5, 2))});
  auto d = decompose(r, Axis::Horizontal);
  Point on_cut(R(1), R(3, 2));
  std::vector<int> holders;
  for (const auto& t : d.trapezoids)
    if (t.contains(on_cut)) holders.push_back(t.id);
  ASSERT_EQ(holders.size(), 2u);
  EXPECT_EQ(d.locate(on_cut), *std::min_element(holders.begin(), holders.end()));
}

TEST(DecomposeProperty, PartitionAndLocate) {
  RationalGen gen(23);
  int regions = 0;
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<PolygonalDomain> comps;
    if (iter % 2 == 0) {
      auto s = random_star(gen);
      if (!s) continue;
      comps = inner_minkowski(*s);
    } else {
      comps = inner_minkowski(random_histogram(gen));
    }
    if (comps.empty()) continue;
    ++regions;
    for (auto axis : {Axis::Horizontal, Axis::Vertical}) {
      auto d = decompose(std::span<const PolygonalDomain>(comps), axis);
      Rational sum = 0;
      for (const auto& t : d.trapezoids) {
        sum += t.area();
        EXPECT_GT(t.area(), 0);
        const auto& home = comps.at(t.parent_region);
        for (const auto& c : t.corners()) EXPECT_TRUE(contains_closed(home, c));
        // Random strictly interior point.
        auto corners = t.corners();
        Point q(0, 0);
        Rational wsum = 0;
        for (const auto& c : corners) {
          Rational w = gen.grid(1, 5, 3);
          q = q + w * c;
          wsum += w;
        }
        q = Point(q.x / wsum, q.y / wsum);
        EXPECT_EQ(locate_in_domain(q, home), Location::Inside);
        EXPECT_EQ(d.locate(q), t.id) << "iteration " << iter;
        for (const auto& u : d.trapezoids)
          if (u.id != t.id) EXPECT_FALSE(u.contains(q) && locate_in_ring(q, u.corners()) == Location::Inside);
      }
      EXPECT_EQ(sum, total_area(comps)) << "iteration " << iter << " " << to_string(axis);
    }
  }
  EXPECT_GT(regions, 20);
}

TEST(Hull, TwoTrapezoidExamples) {
  auto d1 = decompose(rect(R(0), R(0), R(2), R(1)), Axis::Horizontal);
  auto h = hull_of_two_trapezoids(d1.trapezoids[0], d1.trapezoids[0]);
  EXPECT_EQ(h.polygon.size(), 4u);
  EXPECT_EQ(h.width, 2);
  EXPECT_EQ(h.height, 1);

  auto x = decompose(rect(R(0), R(0), R(1), R(1)), Axis::Horizontal).trapezoids[0];
  auto y = decompose(rect(R(3), R(0), R(4), R(1)), Axis::Horizontal).trapezoids[0];
  h = hull_of_two_trapezoids(x, y);
  EXPECT_EQ(h.polygon, canonical_ring(rect_ring(R(0), R(0), R(4), R(1))));
  EXPECT_EQ(h.width, 4);
  EXPECT_EQ(h.height, 1);

  x = decompose(rect(R(0), R(0), R(1), R("0.4")), Axis::Horizontal).trapezoids[0];
  y = decompose(rect(R(2), R("0.6"), R(3), R(1)), Axis::Horizontal).trapezoids[0];
  h = hull_of_two_trapezoids(x, y);
  // Independent check: every corner outside the hull polygon would be a bug,
  // and the hull vertices are a subset of the 8 corners.
  std::vector<Point> all = x.corners();
  for (const auto& c : y.corners()) all.push_back(c);
  for (const auto& v : h.polygon) EXPECT_NE(std::find(all.begin(), all.end(), v), all.end());
  for (const auto& c : all) EXPECT_NE(locate_in_ring(c, h.polygon), Location::Outside);
  EXPECT_EQ(h.polygon.size(), 6u);
  EXPECT_EQ(h.width, 3);
  EXPECT_EQ(h.height, 1);
}

TEST(UnitSquare, Examples) {
  EXPECT_TRUE(contains_unit_square(rect_ring(R(0), R(0), R(2), R(2))));
  EXPECT_FALSE(contains_unit_square(rect_ring(R(0), R(0), R(5), R("0.9"))));
  Ring tri{P(0, 0), P(3, 0), P(0, 3)};
  EXPECT_TRUE(contains_unit_square(tri));
  // Explicit placement: the box centered at (1/2, 1/2) fits.
  EXPECT_TRUE(box_inside(make_domain(tri), P(R(1, 2), R(1, 2))));
  EXPECT_FALSE(contains_unit_square({P(0, 0), P(2, 0), P(0, 2)}) &&
               !box_inside(make_domain({P(0, 0), P(2, 0), P(0, 2)}), P(R(1, 2), R(1, 2))));
  EXPECT_TRUE(contains_unit_square(rect_ring(R(0), R(0), R(1), R(1))));
  EXPECT_FALSE(contains_unit_square({P(0, 0), P(R(19, 10), R(0)), P(0, R(19, 10))}));
}

TEST(UnitSquareProperty, AgreesWithErosionAndIsMonotone) {
  RationalGen gen(31);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Point> pts;
    const int n = gen.integer(3, 6);
    for (int i = 0; i < n; ++i) pts.emplace_back(gen.grid(0, 3, 2), gen.grid(0, 3, 2));
    Ring z = convex_hull(pts);
    if (z.size() < 3) continue;
    bool fits = contains_unit_square(z);
    // Second route: the feasible centers form the intersection of the shifted
    // half-planes; if nonempty it has a vertex where two shifted lines meet.
    auto dom = make_domain(z);
    auto hp = half_planes(z);
    bool found = false;
    for (std::size_t a = 0; a < hp.size() && !found; ++a)
      for (std::size_t b = a + 1; b < hp.size() && !found; ++b) {
        Rational ca = hp[a].c - (abs(hp[a].a) + abs(hp[a].b)) / 2;
        Rational cb = hp[b].c - (abs(hp[b].a) + abs(hp[b].b)) / 2;
        Rational det = hp[a].a * hp[b].b - hp[a].b * hp[b].a;
        if (det == 0) continue;
        Point c((ca * hp[b].b - cb * hp[a].b) / det, (hp[a].a * cb - hp[b].a * ca) / det);
        found = box_inside(dom, c);
      }
    EXPECT_EQ(fits, found) << "iteration " << iter;
    if (!inner_minkowski(dom).empty()) EXPECT_TRUE(fits);
    for (int extra = 0; extra < 3; ++extra) pts.emplace_back(gen.grid(-1, 4, 2), gen.grid(-1, 4, 2));
    Ring bigger = convex_hull(pts);
    if (fits) EXPECT_TRUE(contains_unit_square(bigger)) << "iteration " << iter;
  }
}
