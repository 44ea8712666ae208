#pragma once

#include "cli/io.hpp"
#include "l1plan/exposure.hpp"
#include "l1plan/model.hpp"

#include <string>

namespace l1plan::cli {

/// Plan view plus a timeline. Cover regions are shaded; when a cover is
/// given, trajectory pieces where a robot's box is not covered are drawn
/// red, and so are the matching timeline intervals.
std::string render_svg(const Instance& inst, const model::Schedule* schedule,
                       const std::vector<geom::PolygonalDomain>& cover);

/// Zero edges solid, positive edges dashed and labelled with their weight.
std::string to_dot(const exposure::ExposureGraph& g);

}  // namespace l1plan::cli
