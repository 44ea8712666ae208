#include "cli/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace l1plan::cli {

namespace {

constexpr double kScale = 40;
constexpr double kMargin = 20;
constexpr double kRow = 18;

const char* const kColors[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

struct View {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;

  void add(const geom::Point& p, double rx = 0, double ry = 0) {
    double x = to_double(p.x), y = to_double(p.y);
    x0 = std::min(x0, x - rx), x1 = std::max(x1, x + rx);
    y0 = std::min(y0, y - ry), y1 = std::max(y1, y + ry);
  }
  double px(double x) const { return kMargin + (x - x0) * kScale; }
  double py(double y) const { return kMargin + (y1 - y) * kScale; }
  double width() const { return (x1 - x0) * kScale + 2 * kMargin; }
  double height() const { return (y1 - y0) * kScale + 2 * kMargin; }
};

std::string ring_path(const View& v, const geom::Ring& r) {
  std::ostringstream s;
  for (std::size_t i = 0; i < r.size(); ++i)
    s << (i ? " L " : "M ") << num(v.px(to_double(r[i].x))) << ' ' << num(v.py(to_double(r[i].y)));
  s << " Z";
  return s.str();
}

std::string domain_path(const View& v, const geom::PolygonalDomain& d) {
  std::string s = ring_path(v, d.outer);
  for (const auto& h : d.holes) s += ' ' + ring_path(v, h);
  return s;
}

void box(std::ostream& out, const View& v, const geom::Point& c, const model::RobotShape& sh, const char* color,
         bool dashed) {
  double w = to_double(sh.half_width), h = to_double(sh.half_height);
  double x = to_double(c.x), y = to_double(c.y);
  out << "<rect x=\"" << num(v.px(x - w)) << "\" y=\"" << num(v.py(y + h)) << "\" width=\"" << num(2 * w * kScale)
      << "\" height=\"" << num(2 * h * kScale) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
      << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
}

// Time intervals in which robot r is not covered.
std::vector<model::Interval> exposed_times(const model::Trajectory& tr, const model::CoverRegions& regions) {
  std::vector<model::Interval> out;
  auto push = [&](Rational lo, Rational hi) {
    if (hi <= lo) return;
    if (!out.empty() && out.back().hi == lo) out.back().hi = hi;
    else out.push_back({std::move(lo), std::move(hi)});
  };
  for (std::size_t i = 0; i + 1 < tr.points.size(); ++i) {
    const auto& a = tr.points[i];
    const auto& b = tr.points[i + 1];
    Rational dt = b.t - a.t;
    Rational s = 0;
    for (const auto& iv : model::inside_parameters(a.p, b.p, regions.components)) {
      push(Rational(a.t + s * dt), Rational(a.t + iv.lo * dt));
      s = iv.hi;
    }
    push(Rational(a.t + s * dt), b.t);
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& inst, const model::Schedule* schedule,
                       const std::vector<geom::PolygonalDomain>& cover) {
  View v;
  v.x0 = v.y0 = 1e300, v.x1 = v.y1 = -1e300;
  for (const auto& d : cover)
    for (const auto& p : d.outer) v.add(p);
  if (inst.domain)
    for (const auto& p : inst.domain->outer) v.add(p);
  for (const auto& r : inst.robots) {
    double w = to_double(r.shape.half_width), h = to_double(r.shape.half_height);
    v.add(r.start, w, h);
    v.add(r.target, w, h);
  }
  if (schedule)
    for (std::size_t r = 0; r < schedule->trajectories.size(); ++r) {
      const auto& sh = schedule->shapes[r];
      for (const auto& b : schedule->trajectories[r].points)
        v.add(b.p, to_double(sh.half_width), to_double(sh.half_height));
    }

  const std::size_t k = inst.robots.size();
  const bool timeline = schedule && schedule->t1() > schedule->t0();
  const double plan_h = v.height();
  const double total_h = plan_h + (timeline ? kRow * (k + 2) + kMargin : 0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(v.width()) << "\" height=\"" << num(total_h)
      << "\" viewBox=\"0 0 " << num(v.width()) << ' ' << num(total_h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& d : cover)
    out << "<path d=\"" << domain_path(v, d)
        << "\" fill=\"#d8ecd8\" fill-rule=\"evenodd\" stroke=\"#7fb07f\" stroke-width=\"1\"/>\n";
  if (inst.domain)
    out << "<path d=\"" << domain_path(v, *inst.domain)
        << "\" fill=\"none\" fill-rule=\"evenodd\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (std::size_t r = 0; r < k; ++r) {
    const char* color = kColors[r % std::size(kColors)];
    box(out, v, inst.robots[r].start, inst.robots[r].shape, color, false);
    box(out, v, inst.robots[r].target, inst.robots[r].shape, color, true);
  }

  if (schedule) {
    for (std::size_t r = 0; r < schedule->trajectories.size(); ++r) {
      const auto& tr = schedule->trajectories[r];
      const char* color = kColors[r % std::size(kColors)];
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (const auto& b : tr.points) out << num(v.px(to_double(b.p.x))) << ',' << num(v.py(to_double(b.p.y))) << ' ';
      out << "\"/>\n";
      if (cover.empty()) continue;
      auto regions = model::erode_cover(cover, schedule->shapes[r]);
      for (const auto& iv : exposed_times(tr, regions)) {
        // Overlay the exposed stretch of the path, sampled at breakpoints.
        out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\" points=\"";
        auto emit = [&](const geom::Point& p) {
          out << num(v.px(to_double(p.x))) << ',' << num(v.py(to_double(p.y))) << ' ';
        };
        emit(tr.position_at(iv.lo));
        for (const auto& b : tr.points)
          if (b.t > iv.lo && b.t < iv.hi) emit(b.p);
        emit(tr.position_at(iv.hi));
        out << "\"/>\n";
      }
    }
  }

  if (timeline) {
    double t0 = to_double(schedule->t0()), t1 = to_double(schedule->t1());
    double span = v.width() - 2 * kMargin - 60;
    auto tx = [&](const Rational& t) { return kMargin + 60 + (to_double(t) - t0) / (t1 - t0) * span; };
    double y = plan_h;
    auto row = [&](const std::string& label, const char* base, const std::vector<model::Interval>& red) {
      out << "<text x=\"" << num(kMargin) << "\" y=\"" << num(y + kRow * 0.7)
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << label << "</text>\n";
      out << "<rect x=\"" << num(kMargin + 60) << "\" y=\"" << num(y + 3) << "\" width=\"" << num(span)
          << "\" height=\"" << num(kRow - 6) << "\" fill=\"" << base << "\"/>\n";
      for (const auto& iv : red)
        out << "<rect x=\"" << num(tx(iv.lo)) << "\" y=\"" << num(y + 3) << "\" width=\""
            << num(std::max(1.0, tx(iv.hi) - tx(iv.lo))) << "\" height=\"" << num(kRow - 6)
            << "\" fill=\"#d62728\"/>\n";
      y += kRow;
    };
    for (std::size_t r = 0; r < schedule->trajectories.size(); ++r) {
      std::vector<model::Interval> red;
      if (!cover.empty()) red = exposed_times(schedule->trajectories[r], model::erode_cover(cover, schedule->shapes[r]));
      row("robot " + std::to_string(r), "#d8ecd8", red);
    }
    if (!cover.empty()) row("exposed", "#eeeeee", model::measure_exposure_detail(*schedule, cover).exposed);
    out << "<text x=\"" << num(kMargin + 60) << "\" y=\"" << num(y + 12)
        << "\" font-family=\"sans-serif\" font-size=\"11\">t = " << to_string(schedule->t0()) << " .. "
        << to_string(schedule->t1()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_dot(const exposure::ExposureGraph& g) {
  std::ostringstream out;
  out << "graph exposure {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& s = g.vertices[i].state;
    out << "  v" << i << " [label=\"X" << s.X.id << " Y" << s.Y.id << " s=" << s.sigma << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.u << " -- v" << e.v;
    if (e.zero) out << " [label=\"0\"];\n";
    else out << " [style=dashed, label=\"" << to_string(e.weight) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace l1plan::cli
