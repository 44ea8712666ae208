#include "cli/cli.hpp"

#include "cli/io.hpp"
#include "cli/render.hpp"
#include "l1plan/errors.hpp"
#include "l1plan/exposure.hpp"
#include "l1plan/feas2.hpp"
#include "l1plan/oracle.hpp"
#include "l1plan/orderings.hpp"
#include "l1plan/planner2.hpp"
#include "l1plan/plannerk.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace l1plan::cli {

namespace {

struct Inputs {
  std::string instance;
  std::string cover;
  std::string shapes;
};

Instance load(const Inputs& in) {
  Instance inst = instance_from(read_json(in.instance));
  if (!in.cover.empty()) inst.cover = cover_from(read_json(in.cover), in.cover);
  if (!in.shapes.empty()) {
    auto shapes = parse_shapes(in.shapes);
    if (shapes.size() == 1) shapes.assign(inst.robots.size(), shapes[0]);
    if (shapes.size() != inst.robots.size()) throw InputError("--shapes: expected one shape per robot");
    for (std::size_t r = 0; r < shapes.size(); ++r) inst.robots[r].shape = shapes[r];
    if (!model::is_feasible(inst.start()) || !model::is_feasible(inst.target()))
      throw InputError("--shapes: robots overlap with these shapes");
  }
  return inst;
}

void require_two(const Instance& inst, const char* what) {
  if (inst.robots.size() != 2) throw InputError(std::string(what) + " needs exactly two robots");
}

void require_unit(const Instance& inst, const char* what) {
  for (const auto& r : inst.robots)
    if (!(r.shape == model::RobotShape{})) throw InputError(std::string(what) + " needs unit-square robots");
}

void warn_graph_size(const std::vector<geom::PolygonalDomain>& cover, std::size_t budget, std::ostream& err) {
  auto w = exposure::index_cover(cover).W.size();
  if (w * w > budget)
    err << "warning: " << w << " cover trapezoids give up to " << w * w * 4
        << " candidate states (budget " << budget << ")\n";
}

json plan_json(const std::string& objective, const Rational& value, const model::Schedule& m) {
  return {{"objective", objective},
          {"value", to_json(value)},
          {"schedule", to_json(m)},
          {"makespan_measured", to_json(model::measure_makespan(m))},
          {"sum_measured", to_json(model::measure_sum(m))}};
}

json run_plan(const Instance& inst, const std::string& objective, std::size_t max_len, bool general,
              std::size_t budget, std::ostream& err) {
  auto a = inst.start(), b = inst.target();
  if (objective == "exposure") {
    require_two(inst, "exposure planning");
    require_unit(inst, "exposure planning");
    warn_graph_size(inst.cover, budget, err);
    auto p = exposure::plan_exposure2(a, b, inst.cover);
    auto out = plan_json(objective, p.value, p.schedule);
    out["exposure_measured"] = to_json(p.exposure_measured);
    out["vertices"] = p.vertex_count;
    out["exposed_links"] = p.exposed_links;
    return out;
  }
  auto obj = objective == "sum" ? planner2::Objective::Sum : planner2::Objective::Makespan;
  if (inst.robots.size() == 1) {
    Rational d = model::diameter(a, b);
    return plan_json(objective, d, planner2::same_ordering_schedule(a, b, d));
  }
  if (inst.robots.size() == 2 && !general) {
    auto p = planner2::plan2(a, b, obj);
    return plan_json(objective, p.value, p.schedule);
  }
  plannerk::Options opt;
  opt.max_len = max_len;
  opt.max_k = std::max<std::size_t>(opt.max_k, inst.robots.size());
  auto p = plannerk::plan_k(a, b, obj, opt);
  auto out = plan_json(objective, p.value, p.schedule);
  out["exactness"] = plannerk::to_string(p.exactness);
  out["lower_bound"] = to_json(p.lower_bound);
  out["paths_solved"] = p.paths_solved;
  return out;
}

// A bare schedule or the output of `plan`.
model::Schedule schedule_of(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("schedule")) return schedule_from(j["schedule"], where + ".schedule");
  return schedule_from(j, where);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact L1 motion planning for square robots"};
  app.name("l1plan");
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (planning is currently single-threaded)")
      ->check(CLI::PositiveNumber);

  Inputs in;
  auto instance_arg = [&](CLI::App* sub) {
    sub->add_option("instance", in.instance, "Instance JSON file, - for stdin")->required();
  };

  std::string objective = "makespan";
  std::size_t max_len = 4, budget = 5000;
  bool general = false;
  auto* plan = app.add_subcommand("plan", "Plan a schedule");
  instance_arg(plan);
  plan->add_option("--objective", objective)->check(CLI::IsMember({"makespan", "sum", "exposure"}));
  plan->add_option("--max-path-len", max_len, "Longest ordering route searched for k >= 3");
  plan->add_option("--cover", in.cover, "Cover JSON, replaces the instance's cover");
  plan->add_option("--shapes", in.shapes, "Robot sizes, e.g. 1x1,3/2x1");
  plan->add_flag("--general", general, "Use the k-robot planner even for two robots");
  plan->add_option("--graph-budget", budget, "Warn when |W|^2 exceeds this");

  std::string domain_file;
  bool no_schedule = false;
  auto* feas = app.add_subcommand("feasibility", "Can two robots move between configurations inside a domain?");
  instance_arg(feas);
  feas->add_option("--domain", domain_file, "Domain JSON, replaces the instance's domain");
  feas->add_flag("--no-schedule", no_schedule);

  std::string schedule_file;
  auto* verify = app.add_subcommand("verify", "Check a schedule against an instance");
  instance_arg(verify);
  verify->add_option("schedule", schedule_file, "Schedule or plan output JSON")->required();
  verify->add_option("--cover", in.cover);

  std::string oracle_objective = "makespan", step = "1/2";
  std::size_t max_states = 4'000'000;
  auto* orc = app.add_subcommand("oracle", "Brute-force lattice search");
  instance_arg(orc);
  orc->add_option("--objective", oracle_objective)
      ->check(CLI::IsMember({"makespan", "sum", "exposure", "feasibility"}));
  orc->add_option("--step", step, "Lattice step");
  orc->add_option("--max-states", max_states);
  orc->add_option("--cover", in.cover);
  orc->add_option("--domain", domain_file);

  std::string out_file, render_objective;
  auto* render = app.add_subcommand("render", "SVG of an instance and optional schedule");
  instance_arg(render);
  render->add_option("--schedule", schedule_file, "Schedule or plan output JSON");
  render->add_option("--objective", render_objective, "Plan first with this objective")
      ->check(CLI::IsMember({"makespan", "sum", "exposure"}));
  render->add_option("--cover", in.cover);
  render->add_option("-o,--output", out_file);

  std::string kind = "transition";
  bool no_weights = false;
  auto* graph = app.add_subcommand("graph", "DOT dump of the transition or exposure graph");
  instance_arg(graph);
  graph->add_option("--kind", kind)->check(CLI::IsMember({"transition", "exposure"}));
  graph->add_option("--cover", in.cover);
  graph->add_option("--shapes", in.shapes);
  graph->add_option("--graph-budget", budget);
  graph->add_flag("--no-weights", no_weights, "Skip solving positive edge weights");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (plan->parsed()) {
      emit(out, run_plan(load(in), objective, max_len, general, budget, err));
      return 0;
    }

    if (feas->parsed()) {
      auto inst = load(in);
      require_two(inst, "feasibility");
      require_unit(inst, "feasibility");
      if (!domain_file.empty()) inst.domain = domain_from(read_json(domain_file), domain_file);
      if (!inst.domain) throw InputError("instance.domain: missing (or pass --domain)");
      auto a = inst.start(), b = inst.target();
      for (const auto* c : {&a, &b})
        for (const auto& p : c->points)
          if (!geom::box_inside(*inst.domain, p)) throw InputError("instance.robots: a robot starts or ends outside the domain");
      json j = {{"feasible", false}};
      feas2::FeasibilityStructure f;
      try {
        f = feas2::build_feasibility(*inst.domain);
      } catch (const feas2::EmptyErosion&) {
        emit(out, j);
        return 2;
      }
      j["components"] = f.component_count;
      j["nodes"] = f.nodes.size();
      if (!feas2::query_feasible(f, a, b)) {
        emit(out, j);
        return 2;
      }
      j["feasible"] = true;
      if (!no_schedule) j["schedule"] = to_json(feas2::reconstruct_zero_exposure_schedule(f, a, b));
      emit(out, j);
      return 0;
    }

    if (verify->parsed()) {
      auto inst = load(in);
      auto sj = read_json(schedule_file);
      auto m = schedule_of(sj, schedule_file);
      auto a = inst.start(), b = inst.target();
      model::ValidationOptions opt;
      opt.start = &a;
      opt.target = &b;
      if (inst.domain) opt.domain = &*inst.domain;
      bool exposure = sj.is_object() && sj.value("objective", "") == "exposure";
      if (!inst.cover.empty() || exposure) opt.cover = &inst.cover;
      auto rep = model::validate_schedule(m, opt);
      json j = to_json(rep);
      bool matches = true;
      if (sj.is_object() && sj.contains("value") && sj.contains("objective")) {
        std::string o = sj["objective"].get<std::string>();
        Rational claimed = rational_from(sj["value"], schedule_file + ".value");
        Rational measured = o == "sum"        ? rep.sum
                            : o == "exposure" ? rep.exposure->by_length
                                              : rep.makespan;
        // The exposure of a reconstructed schedule may only undercut the plan.
        matches = o == "exposure" ? measured <= claimed : measured == claimed;
        j["objective"] = o;
        j["claimed"] = to_json(claimed);
        j["measured"] = to_json(measured);
        j["value_matches"] = matches;
      }
      emit(out, j);
      return rep.ok && matches ? 0 : 2;
    }

    if (orc->parsed()) {
      auto inst = load(in);
      oracle::GridOptions opt;
      opt.step = parse_rational(step);
      opt.max_states = max_states;
      if (opt.step <= 0) throw InputError("--step: must be positive");
      auto a = inst.start(), b = inst.target();
      std::optional<oracle::GridResult> g;
      if (oracle_objective == "feasibility") {
        if (!domain_file.empty()) inst.domain = domain_from(read_json(domain_file), domain_file);
        if (!inst.domain) throw InputError("instance.domain: missing (or pass --domain)");
        g = oracle::grid_feasibility(*inst.domain, a, b, opt);
        if (!g) {
          emit(out, {{"objective", oracle_objective}, {"feasible", false}});
          return 2;
        }
      } else if (oracle_objective == "exposure") {
        g = oracle::grid_exposure(a, b, inst.cover, opt);
      } else {
        auto obj = oracle_objective == "sum" ? planner2::Objective::Sum : planner2::Objective::Makespan;
        g = oracle::grid_cmp(a, b, obj, opt);
      }
      json j = {{"objective", oracle_objective},
                {"value", to_json(g->value)},
                {"states_visited", g->states_visited},
                {"ticks", g->path.size() - 1},
                {"schedule", to_json(oracle::path_schedule(g->path, opt.step))}};
      if (oracle_objective == "feasibility") j["feasible"] = true;
      emit(out, j);
      return 0;
    }

    if (render->parsed()) {
      auto inst = load(in);
      std::optional<model::Schedule> m;
      if (!schedule_file.empty()) m = schedule_of(read_json(schedule_file), schedule_file);
      else if (!render_objective.empty())
        m = schedule_from(run_plan(inst, render_objective, max_len, false, budget, err)["schedule"], "plan");
      auto svg = render_svg(inst, m ? &*m : nullptr, inst.cover);
      if (out_file.empty()) {
        out << svg;
      } else {
        std::ofstream f(out_file);
        if (!f) throw InputError(out_file + ": cannot write");
        f << svg;
      }
      return 0;
    }

    if (graph->parsed()) {
      auto inst = load(in);
      if (kind == "transition") {
        out << orderings::to_dot(orderings::build_transition_graph(inst.robots.size(), inst.shapes(),
                                                                   std::max<std::size_t>(4, inst.robots.size())));
      } else {
        warn_graph_size(inst.cover, budget, err);
        out << to_dot(exposure::build_exposure_graph(inst.cover, !no_weights));
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const feas2::NotReachable& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const oracle::Unreachable& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const StateInfeasible& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceBound& e) {
    err << "error: search budget exhausted: " << e.what() << '\n';
    return 1;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: search budget exhausted: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace l1plan::cli
