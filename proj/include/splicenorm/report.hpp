#pragma once

// Full invariant chain for one diagram, plus its JSON form.
//
// JSON keys: diagram, family_n, lk, rays, faces, alexander, sw_basic_classes,
// canonical_classes, orbit_count, divisibility_count, homotopy_k3. Integers
// that can grow with the diagram (linking numbers, norms, coefficients,
// divisibilities, dual coordinates) are decimal strings. Polynomials are
// arrays of [e1, e2, "coefficient"] in increasing graded-lex order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "splicenorm/invariants.hpp"
#include "splicenorm/laurent.hpp"
#include "splicenorm/orbits.hpp"
#include "splicenorm/polytope.hpp"
#include "splicenorm/splice.hpp"
#include "splicenorm/swtheory.hpp"

namespace splicenorm {

struct Report {
  std::string diagram;
  std::optional<int> family_n;
  std::int64_t lk12 = 0;
  std::vector<VirtualForm> forms;
  std::vector<Ray> rays;
  NormBall ball;
  LaurentPoly alexander;
  LaurentPoly sw;
  std::vector<CanonicalClass> canonical;
  std::vector<std::size_t> orbit_labels;
  std::size_t orbit_count = 0;
  std::size_t divisibility_count = 0;
  bool homotopy_k3 = false;
};

inline bool operator==(const VirtualForm& a, const VirtualForm& b) {
  return a.id == b.id && a.kind == b.kind && a.degree == b.degree && a.lk1 == b.lk1 && a.lk2 == b.lk2;
}

inline bool operator==(const Report& a, const Report& b) {
  return a.diagram == b.diagram && a.family_n == b.family_n && a.lk12 == b.lk12 && a.forms == b.forms &&
         a.rays == b.rays && a.ball == b.ball && a.alexander == b.alexander && a.sw == b.sw &&
         a.canonical == b.canonical && a.orbit_labels == b.orbit_labels && a.orbit_count == b.orbit_count &&
         a.divisibility_count == b.divisibility_count && a.homotopy_k3 == b.homotopy_k3;
}

inline Report build_report(const SpliceDiagram& d) {
  Report r;
  r.diagram = d.name();
  r.family_n = recognize_k2n(d);
  r.lk12 = link_linking_number(d);
  r.forms = virtual_forms(d);
  r.rays = nonfibered_rays(r.forms);
  r.ball = unit_ball(r.forms);
  r.alexander = alexander_polynomial(d);
  r.sw = sw_polynomial(r.alexander);
  r.canonical = canonical_classes(r.ball);
  const auto part = face_orbits(r.ball, lattice_symmetries(r.ball));
  r.orbit_labels = part.face_labels;
  r.orbit_count = part.orbit_count;
  r.divisibility_count = distinct_divisibilities(r.canonical);
  r.homotopy_k3 = homotopy_k3_check(d);
  return r;
}

namespace json_io {

using nlohmann::json;

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("cli.JsonFormatError", what) {}
};

inline std::string s(std::int64_t v) { return std::to_string(v); }

inline std::int64_t i64(const json& j) {
  const auto str = j.get<std::string>();
  auto v = detail::parse_int(str);
  if (!v) throw FormatError("not a 64-bit integer string: " + str);
  return *v;
}

inline Rational rat(const json& j) {
  const auto str = j.get<std::string>();
  try {
    return Rational(str);
  } catch (const std::exception&) {
    throw FormatError("not a rational string: " + str);
  }
}

inline json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e.e1, e.e2, c.str()});
  return arr;
}

inline LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term({t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>()}, BigInt(t.at(2).get<std::string>()));
  return p;
}

inline json class_to_json(const CohomClass& m) { return {s(m.m1), s(m.m2)}; }
inline CohomClass class_from_json(const json& j) { return {i64(j.at(0)), i64(j.at(1))}; }

inline json ray_to_json(const Ray& r) { return {{"primitive", class_to_json(r.primitive)}, {"norm", s(r.norm)}}; }
inline Ray ray_from_json(const json& j) { return {class_from_json(j.at("primitive")), i64(j.at("norm"))}; }

inline VertexKind kind_from_string(const std::string& k) {
  if (k == "node") return VertexKind::Node;
  if (k == "bvertex") return VertexKind::BoundaryVertex;
  if (k == "arrow") return VertexKind::Arrowhead;
  throw FormatError("unknown vertex kind " + k);
}

}  // namespace json_io

inline nlohmann::json to_json(const Report& r) {
  using namespace json_io;
  json j;
  j["diagram"] = r.diagram;
  j["family_n"] = r.family_n ? json(*r.family_n) : json(nullptr);

  json forms = json::array();
  for (const auto& f : r.forms)
    forms.push_back({{"id", f.id}, {"kind", std::string(keyword(f.kind))}, {"degree", f.degree}, {"K1", s(f.lk1)}, {"K2", s(f.lk2)}});
  j["lk"] = {{"K1K2", s(r.lk12)}, {"virtual", forms}};

  json rays = json::array();
  for (const auto& ray : r.rays) rays.push_back(ray_to_json(ray));
  j["rays"] = rays;

  json faces = json::array();
  for (std::size_t i = 0; i < r.ball.faces.size(); ++i) {
    const auto& f = r.ball.faces[i];
    faces.push_back({{"ray_lo", ray_to_json(f.ray_lo)},
                     {"ray_hi", ray_to_json(f.ray_hi)},
                     {"dual", {to_string(f.dual_vertex.x), to_string(f.dual_vertex.y)}},
                     {"orbit", i < r.orbit_labels.size() ? r.orbit_labels[i] : 0}});
  }
  j["faces"] = faces;
  j["alexander"] = poly_to_json(r.alexander);
  j["sw_basic_classes"] = poly_to_json(r.sw);

  json canon = json::array();
  for (const auto& c : r.canonical)
    canon.push_back({{"face", c.face}, {"class", {c.klass.e1, c.klass.e2}}, {"divisibility", s(c.divisibility)}});
  j["canonical_classes"] = canon;
  j["orbit_count"] = r.orbit_count;
  j["divisibility_count"] = r.divisibility_count;
  j["homotopy_k3"] = r.homotopy_k3;
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  using namespace json_io;
  try {
    Report r;
    r.diagram = j.at("diagram").get<std::string>();
    if (!j.at("family_n").is_null()) r.family_n = j.at("family_n").get<int>();
    r.lk12 = i64(j.at("lk").at("K1K2"));
    for (const auto& f : j.at("lk").at("virtual"))
      r.forms.push_back({f.at("id").get<std::string>(), kind_from_string(f.at("kind").get<std::string>()),
                         f.at("degree").get<std::size_t>(), i64(f.at("K1")), i64(f.at("K2"))});
    for (const auto& ray : j.at("rays")) r.rays.push_back(ray_from_json(ray));
    for (const auto& f : j.at("faces")) {
      FibredFace face{ray_from_json(f.at("ray_lo")), ray_from_json(f.at("ray_hi")),
                      {rat(f.at("dual").at(0)), rat(f.at("dual").at(1))}};
      r.ball.rays.push_back(face.ray_lo);
      r.ball.faces.push_back(face);
      r.orbit_labels.push_back(f.at("orbit").get<std::size_t>());
    }
    r.alexander = poly_from_json(j.at("alexander"));
    r.sw = poly_from_json(j.at("sw_basic_classes"));
    for (const auto& c : j.at("canonical_classes"))
      r.canonical.push_back({c.at("face").get<std::size_t>(),
                             {c.at("class").at(0).get<std::int64_t>(), c.at("class").at(1).get<std::int64_t>()},
                             i64(c.at("divisibility"))});
    r.orbit_count = j.at("orbit_count").get<std::size_t>();
    r.divisibility_count = j.at("divisibility_count").get<std::size_t>();
    r.homotopy_k3 = j.at("homotopy_k3").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw json_io::FormatError(e.what());
  }
}

}  // namespace splicenorm
