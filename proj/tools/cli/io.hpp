#pragma once

// JSON for instances, polygons, schedules and reports. Coordinates are
// "p/q" or decimal strings (plain JSON integers are accepted on input);
// output always uses canonical "p/q".

#include "l1plan/geom.hpp"
#include "l1plan/model.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1plan::cli {

using nlohmann::json;

/// Bad input. what() starts with the offending field path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RobotSpec {
  geom::Point start;
  geom::Point target;
  model::RobotShape shape;
};

struct Instance {
  std::vector<RobotSpec> robots;
  std::vector<geom::PolygonalDomain> cover;
  std::optional<geom::PolygonalDomain> domain;
  json metadata = json::object();

  model::Configuration start() const;
  model::Configuration target() const;
  std::vector<model::RobotShape> shapes() const;
};

json to_json(const Rational& r);
json to_json(const geom::Point& p);
json to_json(const geom::PolygonalDomain& d);
json to_json(const model::Schedule& m);
json to_json(const model::ValidationReport& r);
json to_json(const Instance& inst);

Rational rational_from(const json& j, const std::string& where);
geom::Point point_from(const json& j, const std::string& where);
/// Canonicalized and validated.
geom::PolygonalDomain domain_from(const json& j, const std::string& where, int id = 0);
/// Either an array of polygons or an object with a "cover" array.
std::vector<geom::PolygonalDomain> cover_from(const json& j, const std::string& where);
model::Schedule schedule_from(const json& j, const std::string& where);
Instance instance_from(const json& j);

/// "WxH" items separated by commas, full side lengths ("1x1,3/2x1").
std::vector<model::RobotShape> parse_shapes(const std::string& text);

/// Reads a file ("-" for stdin); parse errors carry line and column.
json read_json(const std::string& path);

}  // namespace l1plan::cli
