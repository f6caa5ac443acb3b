#include "ell3/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace ell3 {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(std::span<const PlanePoint> points, std::span<const std::optional<Color>> coloring,
                       const SvgOptions& options) {
  const double s = options.scale, margin = 0.5 * s;
  std::vector<std::pair<double, double>> xy;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  if (!points.empty()) {
    minx = miny = std::numeric_limits<double>::max();
    maxx = maxy = std::numeric_limits<double>::lowest();
  }
  for (const auto& p : points) {
    const double x = fs_approx(p.x), y = fs_approx(p.y);
    xy.emplace_back(x, y);
    minx = std::min(minx, x), maxx = std::max(maxx, x);
    miny = std::min(miny, y), maxy = std::max(maxy, y);
  }
  // SVG y grows downwards.
  auto px = [&](double x) { return fixed6((x - minx) * s + margin); };
  auto py = [&](double y) { return fixed6((maxy - y) * s + margin); };
  const double width = (maxx - minx) * s + 2 * margin, height = (maxy - miny) * s + 2 * margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(width) << "\" height=\"" << fixed6(height)
      << "\" viewBox=\"0 0 " << fixed6(width) << ' ' << fixed6(height) << "\">\n";
  if (!options.title.empty()) out << "  <title>" << escape(options.title) << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (options.unit_edges) {
    out << "  <g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (classify_pair(points[i], points[j]) == PairClass::Unit)
          out << "    <line x1=\"" << px(xy[i].first) << "\" y1=\"" << py(xy[i].second) << "\" x2=\""
              << px(xy[j].first) << "\" y2=\"" << py(xy[j].second) << "\"/>\n";
    out << "  </g>\n";
  }
  const double r = 0.08 * s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::optional<Color> color;
    if (i < coloring.size()) color = coloring[i];
    out << "  <circle cx=\"" << px(xy[i].first) << "\" cy=\"" << py(xy[i].second) << '"';
    if (!color)
      out << " r=\"" << fixed6(r / 2) << "\" fill=\"#888888\"/>\n";
    else if (*color == Color::Red)
      out << " r=\"" << fixed6(r) << "\" fill=\"#d62728\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    else
      out << " r=\"" << fixed6(r) << "\" fill=\"white\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
    if (options.labels && !points[i].label.empty())
      out << "  <text x=\"" << px(xy[i].first + 0.1) << "\" y=\"" << py(xy[i].second + 0.1)
          << "\" font-family=\"sans-serif\" font-size=\"" << fixed6(0.15 * s) << "\">" << escape(points[i].label)
          << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ell3
