// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. All comparisons are exact; the only frozen numbers are recorded
// below next to the criterion that uses them.

#include "exposure_counts.hpp"
#include "l1plan/exposure.hpp"
#include "l1plan/feas2.hpp"
#include "l1plan/oracle.hpp"
#include "l1plan/planner2.hpp"
#include "l1plan/plannerk.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace l1plan;
using namespace l1plan::testing;
using model::Configuration;

namespace {

// Criterion 2: share of the 300 instances where plan_sum2 equals the lattice
// sum, recorded on the first run (seed 2002).
constexpr int kFrozenSumEqualities = 300;
// Criterion 4(c): lattice exposure for gaps 1..4.
const Rational kGapFamily[] = {2, 3, 4, 5};

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string str(const Rational& r) { return to_string(r); }

bool valid(const model::Schedule& m, const Configuration& a, const Configuration& b,
           const geom::PolygonalDomain* domain = nullptr) {
  model::ValidationOptions opt;
  opt.start = &a;
  opt.target = &b;
  opt.domain = domain;
  return model::validate_schedule(m, opt).ok;
}

Configuration random_rational(RationalGen& gen, std::size_t k) {
  for (;;) {
    std::vector<geom::Point> pts;
    for (std::size_t i = 0; i < k; ++i) pts.emplace_back(gen.any(-20, 20, 12), gen.any(-20, 20, 12));
    Configuration c(pts);
    if (model::is_feasible(c)) return c;
  }
}

// Shifts d right by dx and tags it with a cover index.
geom::PolygonalDomain shifted(const geom::PolygonalDomain& d, const Rational& dx, int id) {
  geom::PolygonalDomain o;
  o.id = id;
  for (const auto& p : d.outer) o.outer.push_back(P(p.x + dx, p.y));
  for (const auto& h : d.holes) {
    geom::Ring r;
    for (const auto& p : h) r.push_back(P(p.x + dx, p.y));
    o.holes.push_back(r);
  }
  return geom::canonicalize(o);
}

void same_ordering(Result& r) {
  RationalGen gen(1001);
  for (std::size_t k : {2u, 3u}) {
    int n = 0, at_diameter = 0;
    while (n < 1000) {
      auto a = random_rational(gen, k);
      auto b = random_rational(gen, k);
      if (!planner2::commonly_ordered(a, b)) continue;
      ++n;
      Rational diam = model::diameter(a, b);
      bool tight = gen.coin();
      Rational d = tight ? diam : Rational(diam + gen.any(0, 10, 6));
      at_diameter += tight;
      auto m = planner2::same_ordering_schedule(a, b, d);
      std::string tag = "k=" + std::to_string(k) + " instance " + std::to_string(n);
      r.check(valid(m, a, b), tag + " invalid");
      r.check(model::measure_makespan(m) == d, tag + " makespan != d");
      for (const auto& tr : m.trajectories) r.check(count_turns(tr) <= 1, tag + " has a second turn");
      if (tight && k == 3) {
        auto mk = plannerk::same_ordering_schedule_k(a, b);
        r.check(valid(mk, a, b) && model::measure_makespan(mk) == diam, tag + " k-robot schedule");
      }
    }
    r.detail << "k=" << k << ": " << n << " instances (" << at_diameter << " at d = diameter); ";
  }
}

void two_robot_optimality(Result& r) {
  RationalGen gen(2002);
  int equal_sum = 0, equal_mk = 0;
  for (int i = 0; i < 300; ++i) {
    auto a = random_feasible(gen, 2, 0, 8, 2), b = random_feasible(gen, 2, 0, 8, 2);
    auto s = planner2::plan_sum2(a, b), m = planner2::plan_makespan2(a, b);
    auto gs = oracle::grid_cmp(a, b, planner2::Objective::Sum);
    auto gm = oracle::grid_cmp(a, b, planner2::Objective::Makespan);
    std::string tag = "instance " + std::to_string(i);
    r.check(s.value <= gs.value, tag + " sum above lattice");
    r.check(m.value <= gm.value, tag + " makespan above lattice");
    r.check(m.value >= model::diameter(a, b), tag + " makespan below diameter");
    equal_sum += s.value == gs.value;
    equal_mk += m.value == gm.value;
  }
  r.detail << "sum equal on " << equal_sum << "/300 (frozen " << kFrozenSumEqualities << "), makespan equal on "
           << equal_mk << "/300; ";
  r.check(equal_sum >= kFrozenSumEqualities, "sum equality share dropped");
  for (long d = 1; d <= 6; ++d) {
    Configuration a({P(0, 0), P(d, 0)}), b({P(d, 0), P(0, 0)});
    auto m = planner2::plan_makespan2(a, b), s = planner2::plan_sum2(a, b);
    r.check(m.value == d + 1, "SWAP(" + std::to_string(d) + ") makespan " + str(m.value));
    r.check(s.value == 2 * d + 2, "SWAP(" + std::to_string(d) + ") sum " + str(s.value));
  }
  r.detail << "SWAP(1..6) checked";
}

void feasibility_equivalence(Result& r) {
  RationalGen gen(3003);
  int checked = 0, feasible = 0;
  while (checked < 200) {
    auto s = random_rectilinear(gen);
    auto query = random_query(gen, s);
    if (!query) continue;
    const auto& [a, b] = *query;
    auto f = feas2::build_feasibility(s);
    bool q = feas2::query_feasible(f, a, b);
    bool g = oracle::grid_feasibility(s, a, b).has_value();
    std::string tag = "domain " + std::to_string(checked);
    r.check(q == g, tag + " disagrees with lattice search");
    if (q) {
      ++feasible;
      r.check(valid(feas2::reconstruct_zero_exposure_schedule(f, a, b), a, b, &s), tag + " schedule invalid");
    }
    ++checked;
  }
  r.detail << checked << " domains, " << feasible << " feasible";
}

void min_exposure(Result& r) {
  RationalGen gen(4004);
  int zero = 0, positive = 0;
  for (int i = 0; i < 40; ++i) {
    int m = gen.integer(0, 2);
    std::vector<geom::PolygonalDomain> cover;
    Rational x = 0;
    for (int j = 0; j < m; ++j) {
      auto d = random_rectilinear(gen);
      Rational w = 0;
      for (const auto& p : d.outer) w = std::max(w, p.x);
      cover.push_back(shifted(d, x, j));
      x += w + gen.grid(0, 3, 2);
    }
    long hi = std::max<long>(2, static_cast<long>(to_double(x)));
    auto pick = [&] {
      for (;;) {
        Configuration c({P(gen.grid(-1, hi, 2), gen.grid(-1, 5, 2)), P(gen.grid(-1, hi, 2), gen.grid(-1, 5, 2))});
        if (model::is_feasible(c)) return c;
      }
    };
    Configuration a = pick(), b = pick();
    if (m > 0 && gen.coin())
      if (auto q = random_placement(gen, cover[0])) a = *q;
    if (m > 0 && gen.coin())
      if (auto q = random_placement(gen, cover[m - 1])) b = *q;
    auto p = exposure::plan_exposure2(a, b, cover);
    auto g = oracle::grid_exposure(a, b, cover);
    std::string tag = "instance " + std::to_string(i);
    r.check((p.value == 0) == (g.value == 0), tag + " (a) zero mismatch");
    r.check(p.value <= planner2::plan_makespan2(a, b).value, tag + " (b) above makespan");
    r.check(valid(p.schedule, a, b), tag + " schedule invalid");
    r.check(p.exposure_measured <= p.value, tag + " measured above value");
    (p.value == 0 ? zero : positive)++;
  }
  r.detail << "(a,b) 40 covers, " << zero << " zero; (c)";
  for (long g = 1; g <= 4; ++g) {
    std::vector<geom::PolygonalDomain> cover{rect(R(0), R(0), R(3), R(3), 0), rect(R(3 + g), R(0), R(6 + g), R(3), 1)};
    Configuration a({P(1, 1), P(2, 2)}), b({P(4 + g, 1), P(5 + g, 2)});
    auto p = exposure::plan_exposure2(a, b, cover);
    r.detail << " gap " << g << ": value " << str(p.value) << " measured " << str(p.exposure_measured) << ";";
    r.check(p.value == kGapFamily[g - 1], "gap " + std::to_string(g) + " value");
    r.check(p.exposure_measured <= p.value, "gap " + std::to_string(g) + " measured above value");
    r.check(valid(p.schedule, a, b), "gap " + std::to_string(g) + " schedule invalid");
  }
  for (int i = 0; i < 50; ++i) {
    auto a = random_feasible(gen, 2, -10, 10, 4), b = random_feasible(gen, 2, -10, 10, 4);
    auto p = exposure::plan_exposure2(a, b, {});
    r.check(p.value == planner2::plan_makespan2(a, b).value, "(d) empty cover instance " + std::to_string(i));
  }
  r.detail << " (d) 50 empty-cover instances";
}

void k_robot_consistency(Result& r) {
  RationalGen gen(5005);
  for (int i = 0; i < 500; ++i) {
    auto a = random_feasible(gen, 2, -10, 10, 4), b = random_feasible(gen, 2, -10, 10, 4);
    std::string tag = "instance " + std::to_string(i);
    r.check(plannerk::plan_makespan_k(a, b).value == planner2::plan_makespan2(a, b).value, tag + " makespan");
    r.check(plannerk::plan_sum_k(a, b).value == planner2::plan_sum2(a, b).value, tag + " sum");
  }
  for (long d = 1; d <= 6; ++d) {
    Configuration a({P(0, 0), P(d, 0), P(20, 20)}), b({P(d, 0), P(0, 0), P(20, 20)});
    auto p = plannerk::plan_makespan_k(a, b);
    r.check(p.value == d + 1, "bystander D=" + std::to_string(d) + " value " + str(p.value));
    r.check(p.exactness == plannerk::Exactness::Exact, "bystander D=" + std::to_string(d) + " not exact");
  }
  r.detail << "500 two-robot instances, both objectives; bystander D=1..6";
}

void graph_size(Result& r) {
  std::vector<std::pair<std::string, std::vector<Piece>>> covers;
  for (int m = 1; m <= 4; ++m) {
    std::vector<Piece> ps;
    for (int i = 0; i < m; ++i) ps.push_back(strip(8 * i, i));
    covers.push_back({std::to_string(m) + " strips", ps});
  }
  covers.push_back({"3 squares", {square(0, 0), square(5, 1), square(10, 2)}});
  covers.push_back({"room", {room(0, 0)}});
  covers.push_back({"room+strip", {room(0, 0), strip(12, 1)}});
  covers.push_back({"room+square+2 strips", {room(0, 0), square(11, 1), strip(16, 2), strip(24, 3)}});
  for (const auto& [name, pieces] : covers) {
    auto want = derive(pieces);
    std::size_t edges = 0;
    auto got = library_counts(pieces, false, &edges);
    r.check(got == want && edges == want.zero + want.positive, name);
    r.detail << name << ": V=" << got.vertices << " E0=" << got.zero << " E+=" << got.positive << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria = {
      {"1 same-ordering schedules (k=2,3)", same_ordering},
      {"2 two-robot optimality vs lattice", two_robot_optimality},
      {"3 feasibility vs lattice", feasibility_equivalence},
      {"4 min-exposure", min_exposure},
      {"5 k-robot consistency", k_robot_consistency},
      {"6 exposure graph size", graph_size},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(r);
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%s] %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.str().c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
