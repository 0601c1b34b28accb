#pragma once

// Deterministic SVG 1.1 pictures of the norm unit ball and of the convex hull
// of basic classes. Geometry is exact up to the final conversion to
// coordinates, which are printed with exactly six decimals.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "splicenorm/laurent.hpp"
#include "splicenorm/polytope.hpp"

namespace splicenorm {

namespace svg {

class EmptyData : public Error {
 public:
  explicit EmptyData(const std::string& what) : Error("cli.EmptyData", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("cli.IoError", what) {}
};

inline constexpr double kSize = 600.0;
inline constexpr double kRadius = 240.0;

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // no "-0.000000"
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string header(const std::string& title) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kSize) << "\" height=\""
     << fmt(kSize) << "\" viewBox=\"0 0 " << fmt(kSize) << ' ' << fmt(kSize) << "\">\n"
     << "<title>" << escape(title) << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize) << "\" fill=\"white\"/>\n"
     << "<line x1=\"0\" y1=\"" << fmt(kSize / 2) << "\" x2=\"" << fmt(kSize) << "\" y2=\"" << fmt(kSize / 2)
     << "\" stroke=\"#cccccc\"/>\n"
     << "<line x1=\"" << fmt(kSize / 2) << "\" y1=\"0\" x2=\"" << fmt(kSize / 2) << "\" y2=\"" << fmt(kSize)
     << "\" stroke=\"#cccccc\"/>\n";
  return os.str();
}

struct Pt {
  double x, y;
};

// Data y grows upward, SVG y grows downward.
inline Pt to_canvas(double x, double y, double scale) { return {kSize / 2 + x * scale, kSize / 2 - y * scale}; }

}  // namespace svg

/// Ball polygon through primitive/norm for each signed ray, rays drawn from
/// the origin and labeled by their primitive. With `log_scale` each vertex
/// keeps its direction and gets radius log(1 + rho / rho_min).
inline std::string render_ball_svg(const NormBall& ball, const std::string& title, bool log_scale = false) {
  if (ball.faces.empty() || ball.rays.empty()) throw svg::EmptyData("norm ball has no faces");
  std::vector<svg::Pt> pts;
  for (const auto& r : ball.rays) {
    if (r.norm <= 0) throw polytope::DegenerateBall("ray " + to_string(r.primitive) + " has zero norm");
    const Rational x = make_rational(r.primitive.m1, r.norm);
    const Rational y = make_rational(r.primitive.m2, r.norm);
    pts.push_back({x.convert_to<double>(), y.convert_to<double>()});
  }
  if (log_scale) {
    double rmin = INFINITY;
    for (const auto& p : pts) rmin = std::min(rmin, std::hypot(p.x, p.y));
    for (auto& p : pts) {
      const double rho = std::hypot(p.x, p.y);
      const double target = std::log1p(rho / rmin);
      p = {p.x / rho * target, p.y / rho * target};
    }
  }
  double extent = 0;
  for (const auto& p : pts) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  const double scale = svg::kRadius / (extent * 1.25);

  std::ostringstream os;
  os << svg::header(title);
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto c = svg::to_canvas(pts[i].x, pts[i].y, scale);
    os << (i ? " " : "") << svg::fmt(c.x) << ',' << svg::fmt(c.y);
  }
  os << "\" fill=\"#dde8f6\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto o = svg::to_canvas(0, 0, scale);
    const auto end = svg::to_canvas(pts[i].x * 1.15, pts[i].y * 1.15, scale);
    const auto lab = svg::to_canvas(pts[i].x * 1.22, pts[i].y * 1.22, scale);
    os << "<line x1=\"" << svg::fmt(o.x) << "\" y1=\"" << svg::fmt(o.y) << "\" x2=\"" << svg::fmt(end.x)
       << "\" y2=\"" << svg::fmt(end.y) << "\" stroke=\"#8c1f1f\" stroke-dasharray=\"4,3\"/>\n";
    os << "<text x=\"" << svg::fmt(lab.x) << "\" y=\"" << svg::fmt(lab.y)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
       << svg::escape(to_string(ball.rays[i].primitive)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// Convex hull of the support with hull vertices labeled by their exponent
/// pair. Support points are drawn as dots while there are at most
/// `max_dots` of them.
inline std::string render_hull_svg(const LaurentPoly& p, const std::string& title, std::size_t max_dots = 10000) {
  if (p.is_zero()) throw svg::EmptyData("polynomial is zero");
  const auto hull = newton_polygon(p);
  double extent = 0;
  for (const auto& v : hull) extent = std::max({extent, std::abs(double(v.e1)), std::abs(double(v.e2))});
  if (extent == 0) extent = 1;
  const double scale = svg::kRadius / (extent * 1.1);

  std::ostringstream os;
  os << svg::header(title);
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto c = svg::to_canvas(double(hull[i].e1), double(hull[i].e2), scale);
    os << (i ? " " : "") << svg::fmt(c.x) << ',' << svg::fmt(c.y);
  }
  os << "\" fill=\"#f6efdd\" stroke=\"#8c6a1f\" stroke-width=\"1.5\"/>\n";
  if (p.size() <= max_dots) {
    for (const auto& e : p.support()) {
      const auto c = svg::to_canvas(double(e.e1), double(e.e2), scale);
      os << "<circle cx=\"" << svg::fmt(c.x) << "\" cy=\"" << svg::fmt(c.y) << "\" r=\"1.5\" fill=\"#444444\"/>\n";
    }
  }
  for (const auto& v : hull) {
    const auto c = svg::to_canvas(double(v.e1) * 1.08, double(v.e2) * 1.08, scale);
    os << "<text x=\"" << svg::fmt(c.x) << "\" y=\"" << svg::fmt(c.y)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">(" << v.e1 << ',' << v.e2
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw svg::IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw svg::IoError("write to '" + path + "' failed");
}

}  // namespace splicenorm
