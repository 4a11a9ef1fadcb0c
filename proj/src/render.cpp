#include "mipbs/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace mipbs {

namespace {

const char* fill_of(DiskRole role) {
  switch (role) {
    case DiskRole::kD: return "#4e79a7";
    case DiskRole::kDprime: return "#a0cbe8";
    case DiskRole::kA: return "#e15759";
    case DiskRole::kB: return "#f28e2b";
    case DiskRole::kAprime: return "#ff9d9a";
    case DiskRole::kBprime: return "#ffbe7d";
    case DiskRole::kCorridor: return "#59a14f";
  }
  return "#999999";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

void render_svg(std::ostream& out, const MbsInstance& inst, const RenderOptions& options) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](double x, double y, double r) {
    lo_x = std::min(lo_x, x - r);
    lo_y = std::min(lo_y, y - r);
    hi_x = std::max(hi_x, x + r);
    hi_y = std::max(hi_y, y + r);
  };
  for (const Disk& d : inst.disks) {
    grow(to_double(d.center.x), to_double(d.center.y), to_double(d.radius));
  }
  grow(to_double(inst.x.x), to_double(inst.x.y), 0);
  grow(to_double(inst.y.x), to_double(inst.y.y), 0);
  for (const Point& m : inst.markers) grow(to_double(m.x), to_double(m.y), 0);
  if (inst.disks.empty() && inst.markers.empty()) lo_x = lo_y = hi_x = hi_y = 0;

  const double lambda = std::max(to_double(inst.lambda), 1e-9);
  const double pad = lambda;
  const double font = lambda * 0.8;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  // SVG y grows downwards; flip so the drawing matches the coordinates.
  auto sx = [&](const Rational& v) { return num(to_double(v)); };
  auto sy = [&](const Rational& v) { return num(-to_double(v)); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(lo_x) << ' '
      << num(-hi_y) << ' ' << num(hi_x - lo_x) << ' ' << num(hi_y - lo_y) << "\">\n"
      << "<rect x=\"" << num(lo_x) << "\" y=\"" << num(-hi_y) << "\" width=\"" << num(hi_x - lo_x)
      << "\" height=\"" << num(hi_y - lo_y) << "\" fill=\"white\"/>\n<g fill-opacity=\"0.35\" stroke-width=\""
      << num(lambda * 0.05) << "\">\n";
  for (const Disk& d : inst.disks) {
    out << "<circle id=\"" << d.id << "\" cx=\"" << sx(d.center.x) << "\" cy=\"" << sy(d.center.y)
        << "\" r=\"" << sx(d.radius) << "\" fill=\"" << fill_of(d.role) << "\" stroke=\""
        << fill_of(d.role) << "\"/>\n";
  }
  out << "</g>\n<g stroke=\"black\" stroke-width=\"" << num(lambda * 0.25) << "\">\n";
  const auto pairs = overlapping_pairs(inst.disks);
  for (auto [i, j] : pairs) {
    const Disk& a = inst.disks[i];
    const Disk& b = inst.disks[j];
    if (compare_penetration(a, b, inst.lambda) < 0) continue;
    out << "<line x1=\"" << sx(a.center.x) << "\" y1=\"" << sy(a.center.y) << "\" x2=\""
        << sx(b.center.x) << "\" y2=\"" << sy(b.center.y) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"" << num(font) << "\" text-anchor=\"middle\">\n";
  auto label = [&](const Point& p, const std::string& text) {
    out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << num(lambda * 0.3)
        << "\" fill=\"black\"/>\n<text x=\"" << sx(p.x) << "\" y=\"" << num(-to_double(p.y) - font)
        << "\">" << text << "</text>\n";
  };
  label(inst.x, "x");
  label(inst.y, "y");
  for (std::size_t i = 0; i < inst.markers.size(); ++i) label(inst.markers[i], "y" + std::to_string(i + 1));
  if (options.annotate) {
    for (auto [i, j] : pairs) {
      const Disk& a = inst.disks[i];
      const Disk& b = inst.disks[j];
      const double mx = (to_double(a.center.x) + to_double(b.center.x)) / 2;
      const double my = (to_double(a.center.y) + to_double(b.center.y)) / 2;
      out << "<text x=\"" << num(mx) << "\" y=\"" << num(-my) << "\" font-size=\"" << num(font * 0.6)
          << "\">" << num(penetration_depth(a, b) / lambda) << "&#955;</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
}

}  // namespace mipbs
