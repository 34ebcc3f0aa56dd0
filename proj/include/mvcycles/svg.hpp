#pragma once

// Plane drawing of rank-2 (n = 3) polytopes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvcycles/polytope.hpp"

namespace mv {

struct SvgOptions {
  double scale = 40.0;
  bool labels = true;
};

/// x = c_1 α_1 + c_2 α_2 + const with c_1 = x_1, c_2 = x_1 + x_2; the simple
/// roots are drawn at 120° to each other, α_1 pointing right.
inline std::pair<double, double> plane_point(const Coweight& x) {
  const double c1 = x[0], c2 = x[0] + x[1];
  return {c1 - 0.5 * c2, -std::sqrt(3.0) / 2.0 * c2};
}

inline std::string render_svg(const MVPolytope& P, const SvgOptions& opt = {}) {
  if (P.n != 3) throw std::invalid_argument("SVG output needs n = 3");
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : P.vertices) pts.push_back(plane_point(v));
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) cx += x, cy += y;
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(pts[a].second - cy, pts[a].first - cx) < std::atan2(pts[b].second - cy, pts[b].first - cx);
  });
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (auto [x, y] : pts) {
    minx = std::min(minx, x), maxx = std::max(maxx, x);
    miny = std::min(miny, y), maxy = std::max(maxy, y);
  }
  const double s = opt.scale, pad = 2.0;
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto X = [&](double x) { return fmt((x - minx + pad) * s); };
  auto Y = [&](double y) { return fmt((y - miny + pad) * s); };
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt((maxx - minx + 2 * pad) * s) +
                    "\" height=\"" + fmt((maxy - miny + 2 * pad) * s) + "\">\n";
  out += "  <polygon fill=\"#dde6f0\" stroke=\"#224\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += " ";
    out += X(pts[idx[k]].first) + "," + Y(pts[idx[k]].second);
  }
  out += "\"/>\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    out += "  <circle cx=\"" + X(pts[k].first) + "\" cy=\"" + Y(pts[k].second) + "\" r=\"3\" fill=\"#224\"/>\n";
    if (opt.labels)
      out += "  <text x=\"" + X(pts[k].first + 0.15) + "\" y=\"" + Y(pts[k].second - 0.15) +
             "\" font-size=\"12\" font-family=\"monospace\">" + P.vertices[k].str() + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mv
