#pragma once

// Lattice symmetries of the norm ball and the orbits they induce on fibered
// faces. The orbit count is a lower bound on the number of inequivalent
// fibrations: every diffeomorphism acts through such a symmetry, but not every
// symmetry need be realized.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

#include "splicenorm/invariants.hpp"
#include "splicenorm/numeric.hpp"
#include "splicenorm/polytope.hpp"
#include "splicenorm/splice.hpp"

namespace splicenorm {

/// Integer matrix (a b; c d) acting on column vectors (m1, m2).
struct LatticeMap {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
  friend auto operator<=>(const LatticeMap&, const LatticeMap&) = default;

  static LatticeMap identity() { return {1, 0, 0, 1}; }

  std::int64_t determinant() const { return checked::sub(checked::mul(a, d), checked::mul(b, c)); }

  CohomClass apply(const CohomClass& m) const {
    return {checked::dot(a, b, m.m1, m.m2), checked::dot(c, d, m.m1, m.m2)};
  }

  /// (*this) after o.
  LatticeMap compose(const LatticeMap& o) const {
    return {checked::dot(a, b, o.a, o.c), checked::dot(a, b, o.b, o.d), checked::dot(c, d, o.a, o.c),
            checked::dot(c, d, o.b, o.d)};
  }

  /// Inverse; only valid for determinant +-1.
  LatticeMap inverse() const {
    const std::int64_t det = determinant();
    return {d * det, -b * det, -c * det, a * det};
  }
};

inline std::ostream& operator<<(std::ostream& os, const LatticeMap& m) {
  return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
}

struct OrbitPartition {
  std::vector<std::size_t> face_labels;  // orbit index per face, numbered by first appearance
  std::size_t orbit_count = 0;
};

namespace orbits {

class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what) : Error("orbits.NotAGroup", what) {}
};

}  // namespace orbits

namespace detail {

struct BallVertex {
  Rational x, y;
  friend bool operator==(const BallVertex&, const BallVertex&) = default;
};

inline std::vector<BallVertex> ball_vertices(const NormBall& ball) {
  std::vector<BallVertex> out;
  for (const auto& r : ball.rays) {
    if (r.norm <= 0) throw polytope::DegenerateBall("ray " + to_string(r.primitive) + " has zero norm");
    out.push_back({make_rational(r.primitive.m1, r.norm), make_rational(r.primitive.m2, r.norm)});
  }
  return out;
}

/// Solves A [p q] = [u v] for a 2x2 rational A; nullopt if [p q] is singular
/// or A is not an integer matrix.
inline std::optional<LatticeMap> solve_map(const BallVertex& p, const BallVertex& q, const BallVertex& u,
                                           const BallVertex& v) {
  const Rational det = p.x * q.y - q.x * p.y;
  if (det == 0) return std::nullopt;
  // [p q]^-1 = (1/det) [[q.y, -q.x], [-p.y, p.x]]
  const Rational a = (u.x * q.y - v.x * p.y) / det;
  const Rational b = (v.x * p.x - u.x * q.x) / det;
  const Rational c = (u.y * q.y - v.y * p.y) / det;
  const Rational d = (v.y * p.x - u.y * q.x) / det;
  for (const auto* e : {&a, &b, &c, &d})
    if (!is_integral(*e)) return std::nullopt;
  return LatticeMap{to_int64(a), to_int64(b), to_int64(c), to_int64(d)};
}

inline BallVertex image(const LatticeMap& m, const BallVertex& v) {
  return {Rational(m.a) * v.x + Rational(m.b) * v.y, Rational(m.c) * v.x + Rational(m.d) * v.y};
}

}  // namespace detail

/// All unimodular integer maps carrying the vertex set of the ball onto
/// itself, sorted by entries.
///
/// A linear map is fixed by the images of two independent vertices, and a
/// ball symmetry sends adjacent vertices to adjacent vertices, so it suffices
/// to try every adjacent pair (in both orders) as the image of vertices 0, 1.
inline std::vector<LatticeMap> lattice_symmetries(const NormBall& ball) {
  if (ball.rays.size() < 2) throw polytope::DegenerateBall("need at least two rays");
  const auto verts = detail::ball_vertices(ball);
  const std::size_t k = verts.size();

  std::vector<LatticeMap> out;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    for (auto [u, v] : {std::pair{i, j}, std::pair{j, i}}) {
      auto m = detail::solve_map(verts[0], verts[1], verts[u], verts[v]);
      if (!m) continue;
      const std::int64_t det = m->determinant();
      if (det != 1 && det != -1) continue;
      const bool preserves = std::all_of(verts.begin(), verts.end(), [&](const detail::BallVertex& x) {
        return std::find(verts.begin(), verts.end(), detail::image(*m, x)) != verts.end();
      });
      if (preserves) out.push_back(*m);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::optional<std::size_t> find_face(const NormBall& ball, const CohomClass& p, const CohomClass& q) {
  for (std::size_t i = 0; i < ball.faces.size(); ++i) {
    const auto& lo = ball.faces[i].ray_lo.primitive;
    const auto& hi = ball.faces[i].ray_hi.primitive;
    if ((lo == p && hi == q) || (lo == q && hi == p)) return i;
  }
  return std::nullopt;
}

}  // namespace detail

inline void verify_group(const std::vector<LatticeMap>& maps) {
  auto member = [&](const LatticeMap& m) { return std::find(maps.begin(), maps.end(), m) != maps.end(); };
  if (!member(LatticeMap::identity())) throw orbits::NotAGroup("identity missing");
  for (const auto& f : maps) {
    const auto det = f.determinant();
    if (det != 1 && det != -1) throw orbits::NotAGroup("map is not unimodular");
    if (!member(f.inverse())) throw orbits::NotAGroup("inverse missing");
    for (const auto& g : maps)
      if (!member(f.compose(g))) throw orbits::NotAGroup("not closed under composition");
  }
}

/// Union-find of faces under the maps; each face is joined to the face
/// spanned by the images of its two bounding rays.
inline OrbitPartition face_orbits(const NormBall& ball, const std::vector<LatticeMap>& maps) {
  verify_group(maps);
  const std::size_t nf = ball.faces.size();
  std::vector<std::size_t> parent(nf);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < nf; ++i) {
    for (const auto& m : maps) {
      const auto lo = m.apply(ball.faces[i].ray_lo.primitive);
      const auto hi = m.apply(ball.faces[i].ray_hi.primitive);
      auto j = detail::find_face(ball, lo, hi);
      if (!j) throw orbits::NotAGroup("map does not permute the fibered faces");
      parent[find(i)] = find(*j);
    }
  }
  OrbitPartition out;
  std::vector<std::size_t> root_label(nf, nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const auto r = find(i);
    if (root_label[r] == nf) root_label[r] = out.orbit_count++;
    out.face_labels.push_back(root_label[r]);
  }
  return out;
}

/// Orbit count of fibered faces under the full lattice symmetry group.
inline std::size_t min_structure_count(const SpliceDiagram& d) {
  const NormBall ball = unit_ball(d);
  return face_orbits(ball, lattice_symmetries(ball)).orbit_count;
}

}  // namespace splicenorm
