#include "cli/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace l1plan::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

geom::Ring ring_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of points");
  geom::Ring r;
  for (std::size_t i = 0; i < j.size(); ++i) r.push_back(point_from(j[i], where + "[" + std::to_string(i) + "]"));
  return r;
}

json ring_json(const geom::Ring& r) {
  json out = json::array();
  for (const auto& p : r) out.push_back(to_json(p));
  return out;
}

model::RobotShape shape_from(const json& j, const std::string& where) {
  model::RobotShape s;
  s.half_width = rational_from(field(j, "width", where), where + ".width") / 2;
  s.half_height = rational_from(field(j, "height", where), where + ".height") / 2;
  if (s.half_width <= 0 || s.half_height <= 0) fail(where, "shape sides must be positive");
  return s;
}

json shape_json(const model::RobotShape& s) {
  return {{"width", to_json(Rational(s.half_width * 2))}, {"height", to_json(Rational(s.half_height * 2))}};
}

}  // namespace

model::Configuration Instance::start() const {
  std::vector<geom::Point> pts;
  for (const auto& r : robots) pts.push_back(r.start);
  return model::Configuration(pts, shapes());
}

model::Configuration Instance::target() const {
  std::vector<geom::Point> pts;
  for (const auto& r : robots) pts.push_back(r.target);
  return model::Configuration(pts, shapes());
}

std::vector<model::RobotShape> Instance::shapes() const {
  std::vector<model::RobotShape> out;
  for (const auto& r : robots) out.push_back(r.shape);
  return out;
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const geom::Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json to_json(const geom::PolygonalDomain& d) {
  json holes = json::array();
  for (const auto& h : d.holes) holes.push_back(ring_json(h));
  return {{"outer", ring_json(d.outer)}, {"holes", holes}};
}

json to_json(const model::Schedule& m) {
  json trajs = json::array();
  for (const auto& tr : m.trajectories) {
    json pts = json::array();
    for (const auto& b : tr.points) pts.push_back({{"t", to_json(b.t)}, {"x", to_json(b.p.x)}, {"y", to_json(b.p.y)}});
    trajs.push_back(pts);
  }
  json shapes = json::array();
  for (const auto& s : m.shapes) shapes.push_back(shape_json(s));
  return {{"trajectories", trajs}, {"shapes", shapes}};
}

json to_json(const model::ValidationReport& r) {
  json out = {{"ok", r.ok}, {"makespan", to_json(r.makespan)}, {"sum", to_json(r.sum)}};
  if (r.first) {
    out["violation"] = {{"kind", model::to_string(r.first->kind)},
                        {"robot", r.first->robot},
                        {"other", r.first->other},
                        {"time", to_json(r.first->time)},
                        {"message", r.first->message}};
  }
  if (r.exposure) {
    json intervals = json::array();
    for (const auto& iv : r.exposure->exposed) intervals.push_back({to_json(iv.lo), to_json(iv.hi)});
    out["exposure"] = {{"value", to_json(r.exposure->by_length)},
                       {"elapsed", to_json(r.exposure->elapsed)},
                       {"intervals", intervals}};
  }
  return out;
}

json to_json(const Instance& inst) {
  json robots = json::array();
  for (const auto& r : inst.robots)
    robots.push_back({{"start", to_json(r.start)}, {"target", to_json(r.target)}, {"shape", shape_json(r.shape)}});
  json out = {{"robots", robots}, {"metadata", inst.metadata}};
  if (!inst.cover.empty()) {
    out["cover"] = json::array();
    for (const auto& d : inst.cover) out["cover"].push_back(to_json(d));
  }
  if (inst.domain) out["domain"] = to_json(*inst.domain);
  return out;
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) fail(where, "floating-point numbers are not exact; write the value as a string");
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

geom::Point point_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
  return geom::Point(rational_from(j[0], where + "[0]"), rational_from(j[1], where + "[1]"));
}

geom::PolygonalDomain domain_from(const json& j, const std::string& where, int id) {
  geom::PolygonalDomain d;
  d.id = id;
  d.outer = ring_from(field(j, "outer", where), where + ".outer");
  if (auto it = j.find("holes"); it != j.end()) {
    if (!it->is_array()) fail(where + ".holes", "expected an array of rings");
    for (std::size_t i = 0; i < it->size(); ++i)
      d.holes.push_back(ring_from((*it)[i], where + ".holes[" + std::to_string(i) + "]"));
  }
  try {
    d = geom::canonicalize(std::move(d));
    geom::validate(d);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return d;
}

std::vector<geom::PolygonalDomain> cover_from(const json& j, const std::string& where) {
  const json* arr = &j;
  std::string at = where;
  if (j.is_object()) arr = &field(j, "cover", where), at = where + ".cover";
  if (!arr->is_array()) fail(at, "expected an array of polygons");
  std::vector<geom::PolygonalDomain> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(domain_from((*arr)[i], at + "[" + std::to_string(i) + "]", static_cast<int>(i)));
  return out;
}

model::Schedule schedule_from(const json& j, const std::string& where) {
  const auto& trajs = field(j, "trajectories", where);
  if (!trajs.is_array() || trajs.empty()) fail(where + ".trajectories", "expected a non-empty array");
  model::Schedule m;
  for (std::size_t r = 0; r < trajs.size(); ++r) {
    std::string at = where + ".trajectories[" + std::to_string(r) + "]";
    if (!trajs[r].is_array() || trajs[r].empty()) fail(at, "expected a non-empty breakpoint list");
    model::Trajectory tr;
    for (std::size_t i = 0; i < trajs[r].size(); ++i) {
      std::string bt = at + "[" + std::to_string(i) + "]";
      const auto& b = trajs[r][i];
      tr.points.push_back({rational_from(field(b, "t", bt), bt + ".t"),
                           geom::Point(rational_from(field(b, "x", bt), bt + ".x"),
                                       rational_from(field(b, "y", bt), bt + ".y"))});
      if (i > 0 && tr.points[i].t <= tr.points[i - 1].t) fail(bt + ".t", "times must increase");
    }
    m.trajectories.push_back(std::move(tr));
  }
  if (auto it = j.find("shapes"); it != j.end() && !it->empty()) {
    if (!it->is_array() || it->size() != trajs.size()) fail(where + ".shapes", "expected one shape per trajectory");
    for (std::size_t r = 0; r < it->size(); ++r)
      m.shapes.push_back(shape_from((*it)[r], where + ".shapes[" + std::to_string(r) + "]"));
  } else {
    m.shapes.assign(trajs.size(), model::RobotShape{});
  }
  return m;
}

Instance instance_from(const json& j) {
  Instance inst;
  const auto& robots = field(j, "robots", "instance");
  if (!robots.is_array() || robots.empty()) fail("instance.robots", "expected a non-empty array");
  for (std::size_t i = 0; i < robots.size(); ++i) {
    std::string at = "instance.robots[" + std::to_string(i) + "]";
    RobotSpec r;
    r.start = point_from(field(robots[i], "start", at), at + ".start");
    r.target = point_from(field(robots[i], "target", at), at + ".target");
    if (auto it = robots[i].find("shape"); it != robots[i].end()) r.shape = shape_from(*it, at + ".shape");
    inst.robots.push_back(std::move(r));
  }
  if (auto it = j.find("cover"); it != j.end()) inst.cover = cover_from(*it, "instance.cover");
  if (auto it = j.find("domain"); it != j.end()) inst.domain = domain_from(*it, "instance.domain");
  if (auto it = j.find("metadata"); it != j.end()) inst.metadata = *it;
  if (!model::is_feasible(inst.start())) fail("instance.robots", "start configuration has overlapping robots");
  if (!model::is_feasible(inst.target())) fail("instance.robots", "target configuration has overlapping robots");
  return inst;
}

std::vector<model::RobotShape> parse_shapes(const std::string& text) {
  std::vector<model::RobotShape> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto x = item.find('x');
    if (x == std::string::npos) fail("--shapes", "expected WxH, got \"" + item + "\"");
    model::RobotShape s;
    try {
      s.half_width = parse_rational(item.substr(0, x)) / 2;
      s.half_height = parse_rational(item.substr(x + 1)) / 2;
    } catch (const std::invalid_argument& e) {
      fail("--shapes", e.what());
    }
    if (s.half_width <= 0 || s.half_height <= 0) fail("--shapes", "shape sides must be positive");
    out.push_back(s);
  }
  return out;
}

json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InputError(path + ": cannot open file");
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace l1plan::cli
