#include "l1plan/feas2.hpp"
#include "l1plan/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace l1plan;
using namespace l1plan::feas2;
using l1plan::testing::P;
using l1plan::testing::R;
using l1plan::testing::RationalGen;
using l1plan::testing::rect;
using l1plan::testing::rect_ring;
using l1plan::testing::ring_domain;

namespace {

int node(const FeasibilityStructure& f, long x2, long y2) { return f.node_ids.at(P(R(x2, 2), R(y2, 2))); }

void expect_in_domain(const model::Schedule& m, const geom::PolygonalDomain& d, const Configuration& a,
                      const Configuration& b) {
  model::ValidationOptions opt;
  opt.start = &a;
  opt.target = &b;
  opt.domain = &d;
  auto rep = model::validate_schedule(m, opt);
  EXPECT_TRUE(rep.ok) << (rep.first ? rep.first->message : "");
}

// At most one robot changes position between consecutive breakpoints.
bool decoupled(const model::Schedule& m) {
  auto ts = m.breakpoint_times();
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    auto c0 = m.at(ts[i]), c1 = m.at(ts[i + 1]);
    int moving = 0;
    for (std::size_t r = 0; r < c0.size(); ++r) moving += c0.points[r] != c1.points[r];
    if (moving > 1) return false;
  }
  return true;
}

}  // namespace

TEST(BuildFeasibility, WideCorridorConnectsBothOrders) {
  auto f = build_feasibility(rect(R(0), R(0), R(10), R(3)));
  ASSERT_EQ(f.eroded.size(), 1u);
  int l = node(f, 1, 1), r = node(f, 19, 1);
  ASSERT_NE(f.label(l, r), -1);
  EXPECT_EQ(f.label(l, r), f.label(r, l));
  EXPECT_EQ(f.component_count, 1);
}

TEST(BuildFeasibility, NarrowCorridorKeepsOrder) {
  auto f = build_feasibility(rect(R(0), R(0), R(10), R(3, 2)));
  int l = node(f, 1, 1), r = node(f, 19, 1);
  EXPECT_NE(f.label(l, r), f.label(r, l));
  EXPECT_EQ(f.component_count, 2);
}

TEST(BuildFeasibility, HoleSplitsErosion) {
  auto s = ring_domain(rect_ring(R(0), R(0), R(10), R(3)), {rect_ring(R(4), R(1, 2), R(6), R(5, 2))});
  auto f = build_feasibility(s);
  ASSERT_EQ(f.eroded.size(), 2u);
  int l = node(f, 1, 1), r = node(f, 19, 1);
  EXPECT_NE(f.label(l, r), f.label(r, l));
  // Two robots inside one side can still trade places there.
  int l2 = node(f, 7, 1), l3 = node(f, 1, 5);
  EXPECT_EQ(f.label(l, l2), f.label(l2, l));
  EXPECT_EQ(f.label(l3, r), f.label(l, r));
}

TEST(BuildFeasibility, ArrangementIncludesCuts) {
  // L shape: the reflex corner adds cut endpoints on the opposite walls.
  auto s = ring_domain({P(0, 0), P(6, 0), P(6, 2), P(2, 2), P(2, 6), P(0, 6)});
  auto f = build_feasibility(s);
  EXPECT_GT(f.nodes.size(), f.region_vertex_count);
  EXPECT_TRUE(f.node_ids.count(P(R(3, 2), R(1, 2))));
  EXPECT_TRUE(f.node_ids.count(P(R(1, 2), R(3, 2))));
  for (std::size_t v = 0; v < f.nodes.size(); ++v) EXPECT_LE(f.adjacency[v].size(), 4u);
}

TEST(BuildFeasibility, EmptyErosionThrows) {
  EXPECT_THROW(build_feasibility(rect(R(0), R(0), R(4, 5), R(5))), EmptyErosion);
}

TEST(Normalize, CornerIsFixed) {
  auto f = build_feasibility(rect(R(0), R(0), R(10), R(3)));
  Configuration p({P(R(1, 2), R(1, 2)), P(R(19, 2), R(5, 2))});
  auto c = normalize_to_corner(f, p);
  EXPECT_EQ(c.configuration(f).points, p.points);
  EXPECT_EQ(model::measure_sum(c.schedule), 0);
}

TEST(Normalize, HorizontalSeparationPushesOutward) {
  auto s = rect(R(0), R(0), R(10), R(3));
  auto f = build_feasibility(s);
  Configuration p({P(R(2), R(3, 2)), P(R(5), R(3, 2))});
  auto c = normalize_to_corner(f, p);
  EXPECT_EQ(c.axis, geom::Axis::Vertical);
  auto q = c.configuration(f);
  EXPECT_EQ(q.points[0].x, R(1, 2));
  EXPECT_EQ(q.points[1].x, R(19, 2));
  expect_in_domain(c.schedule, s, p, q);
  for (const auto& tr : c.schedule.trajectories) EXPECT_LE(l1plan::testing::count_turns(tr), 1);
}

TEST(Normalize, TieUsesHorizontalSeparator) {
  auto s = rect(R(0), R(0), R(10), R(5));
  auto f = build_feasibility(s);
  Configuration p({P(1, 1), P(3, 3)});
  auto c = normalize_to_corner(f, p);
  EXPECT_EQ(c.axis, geom::Axis::Horizontal);
  auto q = c.configuration(f);
  EXPECT_EQ(q.points[0].y, R(1, 2));
  EXPECT_EQ(q.points[1].y, R(9, 2));
  expect_in_domain(c.schedule, s, p, q);
}

TEST(Normalize, SlantedEdgeSlidesAway) {
  // Pushing right hits the slanted side; the robot then slides down-right.
  auto s = ring_domain({P(0, 0), P(8, 0), P(4, 4), P(0, 4)});
  auto f = build_feasibility(s);
  Configuration p({P(1, 2), P(3, 2)});
  auto c = normalize_to_corner(f, p);
  auto q = c.configuration(f);
  EXPECT_TRUE(f.is_region_vertex(c.a));
  EXPECT_TRUE(f.is_region_vertex(c.b));
  EXPECT_GT(q.points[1].x, R(3));
  expect_in_domain(c.schedule, s, p, q);
}

TEST(Normalize, Errors) {
  auto f = build_feasibility(rect(R(0), R(0), R(10), R(3)));
  EXPECT_THROW(normalize_to_corner(f, Configuration({P(0, 0), P(5, 1)})), NotInDomain);
  EXPECT_THROW(normalize_to_corner(f, Configuration({P(2, 1), P(R(5, 2), R(1))})), InfeasibleConfiguration);
}

TEST(Query, Examples) {
  auto wide = build_feasibility(rect(R(0), R(0), R(10), R(3)));
  auto narrow = build_feasibility(rect(R(0), R(0), R(10), R(3, 2)));
  Configuration a({P(2, 1), P(5, 1)}), b({P(5, 1), P(2, 1)});
  EXPECT_TRUE(query_feasible(wide, a, a));
  EXPECT_TRUE(query_feasible(wide, a, b));
  EXPECT_TRUE(query_feasible(narrow, a, a));
  EXPECT_FALSE(query_feasible(narrow, a, b));
}

TEST(Reconstruct, SameConfigurationIsStationary) {
  auto s = rect(R(0), R(0), R(10), R(3));
  auto f = build_feasibility(s);
  Configuration a({P(2, 1), P(5, 1)});
  auto m = reconstruct_zero_exposure_schedule(f, a, a);
  EXPECT_EQ(model::measure_sum(m), 0);
}

TEST(Reconstruct, SingleEdgeMove) {
  auto s = rect(R(0), R(0), R(10), R(3));
  auto f = build_feasibility(s);
  Configuration a({P(R(1, 2), R(1, 2)), P(R(19, 2), R(1, 2))}), b({P(R(1, 2), R(5, 2)), P(R(19, 2), R(1, 2))});
  auto m = reconstruct_zero_exposure_schedule(f, a, b);
  expect_in_domain(m, s, a, b);
  EXPECT_EQ(model::measure_sum(m), 2);
}

TEST(Reconstruct, WideCorridorSwap) {
  auto s = rect(R(0), R(0), R(10), R(3));
  auto f = build_feasibility(s);
  Configuration a({P(2, 1), P(5, 1)}), b({P(5, 1), P(2, 1)});
  auto m = reconstruct_zero_exposure_schedule(f, a, b);
  expect_in_domain(m, s, a, b);
  EXPECT_TRUE(decoupled(m));
}

TEST(Reconstruct, NarrowCorridorThrows) {
  auto f = build_feasibility(rect(R(0), R(0), R(10), R(3, 2)));
  EXPECT_THROW(reconstruct_zero_exposure_schedule(f, Configuration({P(2, 1), P(5, 1)}),
                                                  Configuration({P(5, 1), P(2, 1)})),
               NotReachable);
}

TEST(FeasibilityProperty, NormalizationKeepsChosenSeparator) {
  RationalGen gen(7);
  for (int iter = 0; iter < 40; ++iter) {
    auto s = l1plan::testing::random_rectilinear(gen);
    auto f = build_feasibility(s);
    auto p = l1plan::testing::random_placement(gen, s);
    if (!p) continue;
    auto c = normalize_to_corner(f, *p);
    expect_in_domain(c.schedule, s, *p, c.configuration(f));
    bool vertical = c.axis == geom::Axis::Vertical;
    auto sep = [&](const Configuration& q) {
      Rational d = vertical ? q.points[1].x - q.points[0].x : q.points[1].y - q.points[0].y;
      Rational d0 = vertical ? p->points[1].x - p->points[0].x : p->points[1].y - p->points[0].y;
      return d * (d0 > 0 ? 1 : -1) >= 1;
    };
    for (const auto& t : c.schedule.breakpoint_times()) EXPECT_TRUE(sep(c.schedule.at(t)));
  }
}

TEST(FeasibilityProperty, AgreesWithLatticeSearch) {
  RationalGen gen(2024);
  int checked = 0, reachable = 0;
  for (int iter = 0; iter < 40; ++iter) {
    auto s = l1plan::testing::random_rectilinear(gen);
    auto f = build_feasibility(s);
    auto query = l1plan::testing::random_query(gen, s);
    if (!query) continue;
    const auto& [a, b] = *query;
    bool q = query_feasible(f, a, b);
    bool g = oracle::grid_feasibility(s, a, b).has_value();
    EXPECT_EQ(q, g) << "iteration " << iter;
    ++checked;
    if (q) {
      ++reachable;
      auto m = reconstruct_zero_exposure_schedule(f, a, b);
      expect_in_domain(m, s, a, b);
      EXPECT_TRUE(decoupled(m));
    }
  }
  EXPECT_GE(checked, 30);
  EXPECT_GT(reachable, 0);
  EXPECT_LT(reachable, checked);
}
