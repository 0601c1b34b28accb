#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with an argument vector and string streams.
//
// Exit codes: 0 success, 1 usage error, 2 computation or I/O error (the
// module-qualified error name is printed on the error stream).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "splicenorm/invariants.hpp"
#include "splicenorm/laurent.hpp"
#include "splicenorm/orbits.hpp"
#include "splicenorm/polytope.hpp"
#include "splicenorm/report.hpp"
#include "splicenorm/splice.hpp"
#include "splicenorm/svg.hpp"
#include "splicenorm/swtheory.hpp"

namespace splicenorm::cli {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("cli.UsageError", what) {}
};

inline CohomClass parse_class(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("expected a class 'a,b', got '" + s + "'");
  auto a = detail::parse_int(m[1].str());
  auto b = detail::parse_int(m[2].str());
  if (!a || !b) throw UsageError("class coordinates out of range: '" + s + "'");
  return {*a, *b};
}

/// Delta as a product of symmetric trinomials x + 1 + x^-1 when d is a K^(2n)
/// diagram, x running over the boundary-vertex forms; expanded otherwise.
inline std::string alexander_text(const SpliceDiagram& d, const LaurentPoly& delta) {
  if (!recognize_k2n(d)) return to_string(delta);
  LaurentPoly product = LaurentPoly::constant(1);
  std::string text;
  for (const auto& f : virtual_forms(d)) {
    if (f.kind != VertexKind::BoundaryVertex) continue;
    const ExponentPair x{f.lk1, f.lk2};
    const LaurentPoly tri = LaurentPoly::from_terms({{x, 1}, {{0, 0}, 1}, {-x, 1}});
    product = product * tri;
    text += "(" + to_string(tri) + ")";
  }
  return product == delta ? text : to_string(delta);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool color;

  std::string bold(const std::string& s) const { return color ? "\033[1m" + s + "\033[0m" : s; }
};

inline SpliceDiagram load_diagram(const std::string& file, const std::optional<int>& family) {
  if (family && !file.empty()) throw UsageError("give either a diagram FILE or --family, not both");
  if (family) {
    if (*family < 1) throw UsageError("--family needs n >= 1");
    return build_k2n(*family);
  }
  if (file.empty()) throw UsageError("missing diagram FILE (or --family N)");
  std::ifstream in(file, std::ios::binary);
  if (!in) throw svg::IoError("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

inline void print_report(const Context& c, const SpliceDiagram& d, const Report& r) {
  auto& o = c.out;
  o << c.bold("diagram") << ' ' << r.diagram;
  if (r.family_n) o << "  (K^(2n), n=" << *r.family_n << ')';
  o << '\n';
  o << c.bold("linking number") << " lk(K1,K2) = " << r.lk12 << '\n';
  o << c.bold("linking forms") << '\n';
  for (const auto& f : r.forms)
    o << "  " << f.id << ' ' << keyword(f.kind) << " degree=" << f.degree << " lk(K1)=" << f.lk1
      << " lk(K2)=" << f.lk2 << '\n';
  o << c.bold("non-fibered rays") << '\n';
  for (const auto& ray : r.rays) o << "  " << to_string(ray.primitive) << " norm " << ray.norm << '\n';
  o << c.bold("fibered faces") << '\n';
  for (std::size_t i = 0; i < r.ball.faces.size(); ++i) {
    const auto& f = r.ball.faces[i];
    o << "  [" << i << "] " << to_string(f.ray_lo.primitive) << " -> " << to_string(f.ray_hi.primitive)
      << "  dual " << to_string(f.dual_vertex) << "  orbit " << r.orbit_labels[i] << '\n';
  }
  o << c.bold("alexander") << ' ' << alexander_text(d, r.alexander) << '\n';
  o << c.bold("sw basic classes") << ' ' << r.sw.size() << '\n';
  o << c.bold("canonical classes") << '\n';
  for (const auto& k : r.canonical)
    o << "  face " << k.face << ": " << k.klass << " divisibility " << k.divisibility << '\n';
  o << c.bold("orbit count") << ' ' << r.orbit_count << '\n';
  o << c.bold("distinct divisibilities") << ' ' << r.divisibility_count << '\n';
  o << c.bold("homotopy K3") << ' ' << (r.homotopy_k3 ? "true" : "false") << '\n';
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
  Context ctx{out, err, color};
  CLI::App app{"Invariants of 2-component graph links given by splice diagrams", "splicenorm"};
  app.require_subcommand(1);

  std::string file, class_text, json_path, svg_path, out_path;
  std::optional<int> family;
  int gen_n = 0;
  bool log_scale = false;

  auto with_source = [&](CLI::App* sub) {
    sub->add_option("file", file, "diagram file in splice DSL");
    sub->add_option("--family", family, "use the built-in K^(2n) diagram");
    return sub;
  };
  auto with_class = [&](CLI::App* sub) {
    sub->add_option("-m,--class", class_text, "cohomology class as a,b")->required()->allow_extra_args(false);
    return sub;
  };

  auto* gen = app.add_subcommand("gen", "write the K^(2n) diagram");
  gen->add_option("--n", gen_n, "family index n")->required();
  gen->add_option("-o,--output", out_path, "output file (default: stdout)");
  auto* lk = with_source(app.add_subcommand("lk", "linking numbers"));
  auto* fibered = with_class(with_source(app.add_subcommand("fibered", "is the class fibered")));
  auto* norm = with_class(with_source(app.add_subcommand("norm", "Thurston norm of a class")));
  auto* slopes = with_class(with_source(app.add_subcommand("slopes", "boundary slopes of a class")));
  auto* alex = with_source(app.add_subcommand("alex", "Alexander polynomial"));
  auto* ball = with_source(app.add_subcommand("ball", "norm unit ball and fibered faces"));
  ball->add_option("--svg", svg_path, "write the ball as SVG");
  ball->add_flag("--log-scale", log_scale, "log-radial compression in the SVG");
  auto* hull = with_source(app.add_subcommand("hull", "Newton polygon of the Alexander polynomial"));
  hull->add_option("--svg", svg_path, "write the hull as SVG");
  auto* sw = with_source(app.add_subcommand("sw", "Seiberg-Witten basic and canonical classes"));
  auto* orb = with_source(app.add_subcommand("orbits", "orbits of fibered faces under lattice symmetries"));
  auto* report = with_source(app.add_subcommand("report", "full invariant report"));
  report->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  static char prog[] = "splicenorm";
  argv.push_back(prog);
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (gen->parsed()) {
      if (gen_n < 1) throw UsageError("--n must be >= 1");
      const auto text = render_diagram(build_k2n(gen_n));
      if (out_path.empty())
        out << text;
      else
        write_text_file(out_path, text);
      return 0;
    }

    std::optional<CohomClass> m;
    for (auto* sub : {fibered, norm, slopes})
      if (sub->parsed()) m = parse_class(class_text);
    const SpliceDiagram d = load_diagram(file, family);

    if (lk->parsed()) {
      out << "lk(K1,K2) " << link_linking_number(d) << '\n';
      for (const auto& f : virtual_forms(d))
        out << f.id << ' ' << keyword(f.kind) << ' ' << f.lk1 << ' ' << f.lk2 << '\n';
    } else if (fibered->parsed()) {
      out << (is_fibered(d, *m) ? "true" : "false") << '\n';
    } else if (norm->parsed()) {
      out << thurston_norm(d, *m) << '\n';
    } else if (slopes->parsed()) {
      for (int i : {1, 2}) {
        const auto s = boundary_slope(d, *m, i);
        out << "sigma_" << i << " = " << s.meridian_coeff << " mu + " << s.longitude_coeff << " lambda  d=" << s.divisibility
            << "  beta=(" << s.beta_primitive.first << ',' << s.beta_primitive.second << ")\n";
      }
    } else if (alex->parsed()) {
      out << alexander_text(d, alexander_polynomial(d)) << '\n';
    } else if (ball->parsed()) {
      const auto b = unit_ball(d);
      for (std::size_t i = 0; i < b.faces.size(); ++i) {
        const auto& f = b.faces[i];
        out << "face " << i << ' ' << to_string(f.ray_lo.primitive) << " [" << f.ray_lo.norm << "] -> "
            << to_string(f.ray_hi.primitive) << " [" << f.ray_hi.norm << "] dual " << to_string(f.dual_vertex) << '\n';
      }
      if (!svg_path.empty()) write_text_file(svg_path, render_ball_svg(b, "Norm unit ball of " + d.name(), log_scale));
    } else if (hull->parsed()) {
      const auto delta = alexander_polynomial(d);
      for (const auto& v : newton_polygon(delta)) out << v << '\n';
      if (!svg_path.empty()) write_text_file(svg_path, render_hull_svg(delta, "Convex hull of basic classes of " + d.name()));
    } else if (sw->parsed()) {
      const auto swp = sw_polynomial(alexander_polynomial(d));
      out << "SW " << to_string(swp) << '\n';
      out << "basic classes " << swp.size() << '\n';
      for (const auto& k : canonical_classes(unit_ball(d)))
        out << "canonical " << k.klass << " divisibility " << k.divisibility << '\n';
      out << "homotopy_k3 " << (homotopy_k3_check(d) ? "true" : "false") << '\n';
    } else if (orb->parsed()) {
      out << min_structure_count(d) << '\n';
    } else if (report->parsed()) {
      const auto r = build_report(d);
      const std::string js = to_json(r).dump(2) + "\n";
      if (json_path == "-") {
        out << js;
      } else {
        print_report(ctx, d, r);
        if (!json_path.empty()) write_text_file(json_path, js);
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  }
}

/// Bold headers only on a terminal and only when NO_COLOR is unset.
inline bool want_color() { return ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr; }

}  // namespace splicenorm::cli
