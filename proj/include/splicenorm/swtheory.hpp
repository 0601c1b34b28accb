#pragma once

// Seiberg-Witten data of the link-surgery manifold E(2,K), as far as it is
// determined by the Alexander polynomial: SW = Delta(t1^2, t2^2).
// A class phi in H_2 is represented by its first two coordinates (m1, m2);
// the SW norm does not see the rest.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "splicenorm/invariants.hpp"
#include "splicenorm/laurent.hpp"
#include "splicenorm/polytope.hpp"
#include "splicenorm/splice.hpp"

namespace splicenorm {

struct BasicClassSet {
  std::vector<ExponentPair> classes;
  std::vector<BigInt> coefficients;
  friend bool operator==(const BasicClassSet&, const BasicClassSet&) = default;
};

struct CanonicalClass {
  std::size_t face = 0;  // index into NormBall::faces
  ExponentPair klass;
  std::int64_t divisibility = 1;
  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

inline LaurentPoly sw_polynomial(const LaurentPoly& delta) { return normalize_sign(substitute_power(delta, 2)); }

inline BasicClassSet basic_classes(const LaurentPoly& sw) {
  if (sw.is_zero()) throw laurent::ZeroPolynomial("basic_classes");
  BasicClassSet out;
  for (const auto& [e, c] : sw.terms()) {
    out.classes.push_back(e);
    out.coefficients.push_back(c);
  }
  return out;
}

/// max over basic classes k of <k, m>.
inline std::int64_t sw_norm(const BasicClassSet& bcs, const CohomClass& m) {
  if (bcs.classes.empty()) throw laurent::ZeroPolynomial("sw_norm");
  std::int64_t best = checked::dot(m.m1, m.m2, bcs.classes.front().e1, bcs.classes.front().e2);
  for (const auto& k : bcs.classes) best = std::max(best, checked::dot(m.m1, m.m2, k.e1, k.e2));
  return best;
}

/// lk(K1,K2) odd and every SW exponent even.
inline bool homotopy_k3_check(const SpliceDiagram& d) {
  if (link_linking_number(d) % 2 == 0) return false;
  const auto sw = sw_polynomial(alexander_polynomial(d));
  return std::all_of(sw.terms().begin(), sw.terms().end(),
                     [](const auto& t) { return t.first.e1 % 2 == 0 && t.first.e2 % 2 == 0; });
}

/// One class per fibered face: twice its dual vertex, signed to pair
/// positively with the face's open cone.
inline std::vector<CanonicalClass> canonical_classes(const NormBall& ball) {
  std::vector<CanonicalClass> out;
  for (std::size_t i = 0; i < ball.faces.size(); ++i) {
    const auto& f = ball.faces[i];
    if (!f.dual_vertex.is_integral()) throw polytope::NonIntegerDual(f.dual_vertex);
    ExponentPair k = f.dual_vertex.to_exponent();
    k = {checked::mul(2, k.e1), checked::mul(2, k.e2)};
    const CohomClass inside{checked::add(f.ray_lo.primitive.m1, f.ray_hi.primitive.m1),
                            checked::add(f.ray_lo.primitive.m2, f.ray_hi.primitive.m2)};
    if (checked::dot(inside.m1, inside.m2, k.e1, k.e2) < 0) k = -k;
    out.push_back({i, k, divisibility(k)});
  }
  return out;
}

/// Number of distinct divisibilities among the canonical classes; an
/// independent lower bound next to the orbit count.
inline std::size_t distinct_divisibilities(const std::vector<CanonicalClass>& cs) {
  std::vector<std::int64_t> ds;
  for (const auto& c : cs) ds.push_back(c.divisibility);
  std::sort(ds.begin(), ds.end());
  return static_cast<std::size_t>(std::unique(ds.begin(), ds.end()) - ds.begin());
}

}  // namespace splicenorm
