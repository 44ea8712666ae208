#include "cli/cli.hpp"
#include "cli/io.hpp"
#include "l1plan/planner2.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace l1plan;
using namespace l1plan::cli;
using l1plan::testing::P;
using l1plan::testing::R;
using l1plan::testing::RationalGen;

namespace {

namespace fs = std::filesystem;

std::string instance(const std::string& name) { return std::string(L1PLAN_INSTANCE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = fs::temp_directory_path() / ("l1plan_test_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, PlanSwap3) {
  auto r = run({"plan", instance("swap3.json"), "--objective", "makespan"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["value"], "4");
  EXPECT_EQ(j["makespan_measured"], "4");
  r = run({"plan", instance("swap3.json"), "--objective", "sum"});
  EXPECT_EQ(json::parse(r.out)["value"], "8");
}

TEST(Cli, PlanThreeRobots) {
  auto r = run({"plan", instance("bystander.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["value"], "3");
  EXPECT_EQ(j["exactness"], "exact");
}

TEST(Cli, GeneralPlannerAgreesAtTwoRobots) {
  auto a = json::parse(run({"plan", instance("swap3.json")}).out);
  auto b = json::parse(run({"plan", instance("swap3.json"), "--general"}).out);
  EXPECT_EQ(a["value"], b["value"]);
}

TEST(Cli, ExposureWithEmptyCoverIsMakespan) {
  auto m = json::parse(run({"plan", instance("swap3.json")}).out);
  auto e = run({"plan", instance("swap3.json"), "--objective", "exposure"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out)["value"], m["value"]);
}

TEST(Cli, RoundTripVerifies) {
  const std::pair<const char*, const char*> cases[] = {{"swap3.json", "makespan"},
                                                       {"swap3.json", "sum"},
                                                       {"mixed_shapes.json", "makespan"},
                                                       {"diagonal.json", "sum"},
                                                       {"bystander.json", "sum"},
                                                       {"cover_gap.json", "exposure"}};
  for (const auto& [file, objective] : cases) {
    auto p = run({"plan", instance(file), "--objective", objective});
    ASSERT_EQ(p.code, 0) << file << ": " << p.err;
    auto path = temp_file("plan.json", p.out);
    auto v = run({"verify", instance(file), path});
    EXPECT_EQ(v.code, 0) << file << " " << objective << ": " << v.out;
    auto j = json::parse(v.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["measured"], json::parse(p.out)["value"]) << file << " " << objective;
    fs::remove(path);
  }
}

TEST(Cli, VerifyRejectsTamperedSchedule) {
  auto p = json::parse(run({"plan", instance("swap3.json")}).out);
  // Teleport robot 1's last breakpoint onto robot 0's target.
  p["schedule"]["trajectories"][1].back()["x"] = "3";
  auto path = temp_file("tampered.json", p.dump());
  auto v = run({"verify", instance("swap3.json"), path});
  EXPECT_EQ(v.code, 2);
  EXPECT_FALSE(json::parse(v.out)["ok"].get<bool>());
  fs::remove(path);
}

TEST(Cli, Deterministic) {
  for (const char* file : {"swap3.json", "cover_gap.json"}) {
    std::vector<std::string> args{"plan", instance(file), "--objective", "exposure"};
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, Feasibility) {
  auto narrow = run({"feasibility", instance("narrow_corridor.json")});
  EXPECT_EQ(narrow.code, 2);
  EXPECT_FALSE(json::parse(narrow.out)["feasible"].get<bool>());
  auto pocket = run({"feasibility", instance("corridor_with_pocket.json")});
  ASSERT_EQ(pocket.code, 0) << pocket.err;
  auto j = json::parse(pocket.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_TRUE(j.contains("schedule"));
}

TEST(Cli, Oracle) {
  auto r = run({"oracle", instance("swap3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"], "4");
  auto f = run({"oracle", instance("narrow_corridor.json"), "--objective", "feasibility"});
  EXPECT_EQ(f.code, 2);
  auto b = run({"oracle", instance("swap3.json"), "--max-states", "10"});
  EXPECT_EQ(b.code, 1);
}

TEST(Cli, RenderAndGraph) {
  auto r = run({"render", instance("cover_gap.json"), "--objective", "exposure"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("#d62728"), std::string::npos);  // exposed stretch drawn
  auto g = run({"graph", instance("swap3.json")});
  ASSERT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("graph transitions"), std::string::npos);
  auto e = run({"graph", instance("cover_gap.json"), "--kind", "exposure", "--graph-budget", "1"});
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.err.find("warning"), std::string::npos);
  EXPECT_NE(e.out.find("style=dashed"), std::string::npos);
}

TEST(Cli, InputErrors) {
  auto missing = run({"plan", "/nonexistent/instance.json"});
  EXPECT_EQ(missing.code, 1);
  auto broken = temp_file("broken.json", "{\"robots\": [\n  {\"start\": [\"0\", \"0\"]\n");
  auto r = run({"plan", broken});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  auto floaty = temp_file("floaty.json", R"({"robots": [{"start": ["0", "0"], "target": [1.5, 0]}]})");
  r = run({"plan", floaty});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("robots[0].target[0]"), std::string::npos);
  auto overlap = temp_file("overlap.json", R"({"robots": [{"start": ["0", "0"], "target": ["5", "0"]},
                                                            {"start": ["1/2", "0"], "target": ["0", "0"]}]})");
  EXPECT_EQ(run({"plan", overlap}).code, 1);
  EXPECT_EQ(run({"plan", instance("swap3.json"), "--objective", "bogus"}).code, 1);
  EXPECT_EQ(run({"plan", instance("bystander.json"), "--objective", "exposure"}).code, 1);
  for (const auto& f : {broken, floaty, overlap}) fs::remove(f);
}

TEST(CliIo, RationalRoundTrip) {
  RationalGen gen(5);
  for (int i = 0; i < 200; ++i) {
    Rational q = gen.any(-50, 50, 12);
    EXPECT_EQ(rational_from(to_json(q), "q"), q);
  }
  EXPECT_EQ(rational_from(json("-1.25"), "q"), R(-5, 4));
  EXPECT_EQ(rational_from(json(7), "q"), R(7));
  EXPECT_EQ(to_json(R(6, 4)), "3/2");
  EXPECT_THROW(rational_from(json("1/0x"), "q"), InputError);
}

TEST(CliIo, ScheduleRoundTrip) {
  model::Configuration a({P(0, 0), P(3, 0)}), b({P(3, 0), P(0, 0)});
  auto m = planner2::plan_sum2(a, b).schedule;
  auto back = schedule_from(to_json(m), "m");
  ASSERT_EQ(back.trajectories.size(), m.trajectories.size());
  for (std::size_t r = 0; r < m.trajectories.size(); ++r) {
    ASSERT_EQ(back.trajectories[r].points.size(), m.trajectories[r].points.size());
    for (std::size_t i = 0; i < m.trajectories[r].points.size(); ++i) {
      EXPECT_EQ(back.trajectories[r].points[i].t, m.trajectories[r].points[i].t);
      EXPECT_EQ(back.trajectories[r].points[i].p, m.trajectories[r].points[i].p);
    }
  }
  EXPECT_EQ(to_json(back), to_json(m));
}

TEST(CliIo, DomainIsCanonicalized) {
  // Duplicate and collinear vertices are dropped at parse time.
  auto j = json::parse(R"({"outer": [["0","0"], ["1","0"], ["2","0"], ["2","0"], ["2","2"], ["0","2"]]})");
  auto d = domain_from(j, "d");
  EXPECT_EQ(d.outer.size(), 4u);
  auto self = json::parse(R"({"outer": [["0","0"], ["2","2"], ["2","0"], ["0","2"]]})");
  EXPECT_THROW(domain_from(self, "d"), InputError);
}
