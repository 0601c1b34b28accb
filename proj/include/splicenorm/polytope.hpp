#pragma once

// Exact planar geometry of the norm unit ball in H^1 = Z^2.
//
// The Thurston norm is linear on each cone between consecutive non-fibered
// rays, so each such fibered face is supported by a single dual vertex
// (x, y) with 2 <r, (x, y)> = ||r|| for both bounding rays r.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "splicenorm/invariants.hpp"
#include "splicenorm/laurent.hpp"
#include "splicenorm/numeric.hpp"
#include "splicenorm/splice.hpp"

namespace splicenorm {

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  RationalPoint operator-() const { return {-x, -y}; }
  bool is_integral() const { return splicenorm::is_integral(x) && splicenorm::is_integral(y); }
  ExponentPair to_exponent() const { return {to_int64(x), to_int64(y)}; }
};

inline std::string to_string(const RationalPoint& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

struct FibredFace {
  Ray ray_lo;
  Ray ray_hi;
  RationalPoint dual_vertex;
  friend bool operator==(const FibredFace&, const FibredFace&) = default;
};

/// Signed non-fibered rays in counterclockwise order starting from the
/// smallest angle in (-pi, pi]; face i lies between rays[i] and rays[i+1].
struct NormBall {
  std::vector<Ray> rays;
  std::vector<FibredFace> faces;
  friend bool operator==(const NormBall&, const NormBall&) = default;
};

namespace polytope {

class SingularSystem : public Error {
 public:
  SingularSystem() : Error("polytope.SingularSystem", "bounding rays are linearly dependent") {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("polytope.ZeroVector", "divisibility of the zero vector") {}
};

class NonIntegerDual : public Error {
 public:
  explicit NonIntegerDual(const RationalPoint& p)
      : Error("polytope.NonIntegerDual", "dual vertex " + to_string(p) + " is not a lattice point") {}
};

class DegenerateBall : public Error {
 public:
  explicit DegenerateBall(const std::string& what) : Error("polytope.DegenerateBall", what) {}
};

}  // namespace polytope

inline Rational pairing(const CohomClass& m, const RationalPoint& p) {
  return Rational(m.m1) * p.x + Rational(m.m2) * p.y;
}

/// Solves [[a1,a2],[b1,b2]] (x,y)^T = (na/2, nb/2)^T exactly.
inline RationalPoint dual_vertex(const CohomClass& a, std::int64_t na, const CohomClass& b, std::int64_t nb) {
  const BigInt det = BigInt(a.m1) * b.m2 - BigInt(a.m2) * b.m1;
  if (det == 0) throw polytope::SingularSystem();
  const Rational ha = make_rational(na, 2), hb = make_rational(nb, 2);
  const Rational x = (ha * Rational(b.m2) - Rational(a.m2) * hb) / Rational(det);
  const Rational y = (Rational(a.m1) * hb - Rational(b.m1) * ha) / Rational(det);
  return {x, y};
}

inline NormBall unit_ball(const std::vector<VirtualForm>& forms) {
  const auto lines = nonfibered_rays(forms);
  if (lines.empty()) throw polytope::DegenerateBall("no non-fibered rays: the norm has no fibered faces to bound");
  NormBall ball;
  for (const auto& r : lines) {
    ball.rays.push_back(r);
    ball.rays.push_back(-r);
  }
  std::sort(ball.rays.begin(), ball.rays.end(),
            [](const Ray& a, const Ray& b) { return angle_less(a.primitive, b.primitive); });
  const std::size_t k = ball.rays.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Ray& lo = ball.rays[i];
    const Ray& hi = ball.rays[(i + 1) % k];
    ball.faces.push_back({lo, hi, dual_vertex(lo.primitive, lo.norm, hi.primitive, hi.norm)});
  }
  return ball;
}

inline NormBall unit_ball(const SpliceDiagram& d) { return unit_ball(virtual_forms(d)); }

/// Support width max<m,e> - min<m,e> over the support of delta.
inline std::int64_t alexander_norm(const LaurentPoly& delta, const CohomClass& m) {
  if (delta.is_zero()) throw laurent::ZeroPolynomial("alexander_norm");
  bool first = true;
  std::int64_t lo = 0, hi = 0;
  for (const auto& [e, c] : delta.terms()) {
    const std::int64_t v = checked::dot(m.m1, m.m2, e.e1, e.e2);
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return checked::sub(hi, lo);
}

inline std::int64_t divisibility(std::int64_t v1, std::int64_t v2) {
  if (v1 == 0 && v2 == 0) throw polytope::ZeroVector();
  return gcd64(v1, v2);
}

inline std::int64_t divisibility(const ExponentPair& v) { return divisibility(v.e1, v.e2); }

/// Dual vertices of the ball as lattice points, in face order.
inline std::vector<ExponentPair> integral_duals(const NormBall& ball) {
  std::vector<ExponentPair> out;
  for (const auto& f : ball.faces) {
    if (!f.dual_vertex.is_integral()) throw polytope::NonIntegerDual(f.dual_vertex);
    out.push_back(f.dual_vertex.to_exponent());
  }
  return out;
}

/// True iff the dual vertices of the ball and the given hull vertices are the
/// same point set, one-to-one.
inline bool check_duality(const NormBall& ball, std::vector<ExponentPair> hull) {
  auto duals = integral_duals(ball);
  if (duals.size() != hull.size()) return false;
  std::sort(duals.begin(), duals.end());
  std::sort(hull.begin(), hull.end());
  return duals == hull;
}

}  // namespace splicenorm
