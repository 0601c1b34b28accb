#pragma once

// Invariants of a 2-component graph link, all driven by the
// linking forms (lk(K1,v), lk(K2,v)) of the virtual components v.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "splicenorm/laurent.hpp"
#include "splicenorm/numeric.hpp"
#include "splicenorm/splice.hpp"

namespace splicenorm {

/// A class m = (m1, m2) in H^1 of the link exterior.
struct CohomClass {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;

  friend bool operator==(const CohomClass&, const CohomClass&) = default;
  friend auto operator<=>(const CohomClass&, const CohomClass&) = default;

  bool is_zero() const { return m1 == 0 && m2 == 0; }
  CohomClass operator-() const { return {checked::neg(m1), checked::neg(m2)}; }
  CohomClass scaled(std::int64_t k) const { return {checked::mul(k, m1), checked::mul(k, m2)}; }
};

inline std::ostream& operator<<(std::ostream& os, const CohomClass& m) {
  return os << '(' << m.m1 << ',' << m.m2 << ')';
}

inline std::string to_string(const CohomClass& m) {
  return "(" + std::to_string(m.m1) + "," + std::to_string(m.m2) + ")";
}

/// Primitive generator of a non-fibered line together with its norm.
struct Ray {
  CohomClass primitive;
  std::int64_t norm = 0;
  friend bool operator==(const Ray&, const Ray&) = default;
  Ray operator-() const { return {-primitive, norm}; }
};

struct BoundarySlope {
  int component_index = 1;
  std::int64_t meridian_coeff = 0;
  std::int64_t longitude_coeff = 0;
  std::int64_t divisibility = 1;
  std::pair<std::int64_t, std::int64_t> beta_primitive{0, 0};
  friend bool operator==(const BoundarySlope&, const BoundarySlope&) = default;
};

namespace invariants {

class DegenerateForm : public Error {
 public:
  explicit DegenerateForm(const std::string& id)
      : Error("invariants.DegenerateForm", "virtual component '" + id + "' has a zero linking form") {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("invariants.IndexOutOfRange", what) {}
};

class ZeroSlope : public Error {
 public:
  ZeroSlope() : Error("invariants.ZeroSlope", "boundary slope is zero") {}
};

}  // namespace invariants

inline std::int64_t pair_form(const VirtualForm& f, const CohomClass& m) {
  return checked::dot(m.m1, m.m2, f.lk1, f.lk2);
}

/// m is fibered iff it pairs nontrivially with every node and boundary
/// vertex form. The zero class is not fibered.
inline bool is_fibered(const std::vector<VirtualForm>& forms, const CohomClass& m) {
  if (m.is_zero()) return false;
  return std::all_of(forms.begin(), forms.end(), [&](const VirtualForm& f) { return pair_form(f, m) != 0; });
}

inline bool is_fibered(const SpliceDiagram& d, const CohomClass& m) { return is_fibered(virtual_forms(d), m); }

/// sum over virtual components of (degree - 2) |<m, lk form>|.
inline std::int64_t thurston_norm(const std::vector<VirtualForm>& forms, const CohomClass& m) {
  std::int64_t total = 0;
  for (const auto& f : forms) {
    const auto weight = static_cast<std::int64_t>(f.degree) - 2;
    total = checked::add(total, checked::mul(weight, checked::abs(pair_form(f, m))));
  }
  return total;
}

inline std::int64_t thurston_norm(const SpliceDiagram& d, const CohomClass& m) {
  return thurston_norm(virtual_forms(d), m);
}

/// Divides out the gcd and makes the first nonzero coordinate positive.
inline CohomClass primitive_of(CohomClass m) {
  if (m.is_zero()) return m;
  const std::int64_t g = gcd64(m.m1, m.m2);
  m = {m.m1 / g, m.m2 / g};
  if (m.m1 < 0 || (m.m1 == 0 && m.m2 < 0)) m = -m;
  return m;
}

namespace detail {

/// 0 for angles in (-pi, 0), 1 for [0, pi].
inline int half_plane(const CohomClass& v) { return v.m2 < 0 ? 0 : 1; }

inline __int128 cross(const CohomClass& a, const CohomClass& b) {
  return static_cast<__int128>(a.m1) * b.m2 - static_cast<__int128>(a.m2) * b.m1;
}

}  // namespace detail

/// Strict order by polar angle in (-pi, pi], exact.
inline bool angle_less(const CohomClass& a, const CohomClass& b) {
  const int ha = detail::half_plane(a), hb = detail::half_plane(b);
  if (ha != hb) return ha < hb;
  if (ha == 1 && a.m2 == 0 && b.m2 == 0) return a.m1 > 0 && b.m1 < 0;
  return detail::cross(a, b) > 0;
}

/// Kernel lines of the linking forms, one primitive per line (first nonzero
/// coordinate positive), norms attached, ordered by decreasing angle so that
/// the K^(2n) family lists P_1..P_n, Q_{n+1}..Q_{2n}.
inline std::vector<Ray> nonfibered_rays(const std::vector<VirtualForm>& forms) {
  std::vector<CohomClass> prims;
  for (const auto& f : forms) {
    if (f.lk1 == 0 && f.lk2 == 0) throw invariants::DegenerateForm(f.id);
    const CohomClass p = primitive_of({f.lk2, checked::neg(f.lk1)});
    if (std::find(prims.begin(), prims.end(), p) == prims.end()) prims.push_back(p);
  }
  std::sort(prims.begin(), prims.end(), [](const auto& a, const auto& b) { return angle_less(b, a); });
  std::vector<Ray> rays;
  rays.reserve(prims.size());
  for (const auto& p : prims) rays.push_back({p, thurston_norm(forms, p)});
  return rays;
}

inline std::vector<Ray> nonfibered_rays(const SpliceDiagram& d) { return nonfibered_rays(virtual_forms(d)); }

namespace detail {

/// t1^a t2^b - 1
inline LaurentPoly binomial(std::int64_t a, std::int64_t b) {
  LaurentPoly p = LaurentPoly::monomial({a, b});
  p.add_term({0, 0}, -1);
  return p;
}

}  // namespace detail

/// Product over virtual components of (t1^lk1 t2^lk2 - 1)^(degree - 2),
/// symmetrized and sign-normalized. Factors with negative exponent are
/// divided out one at a time.
inline LaurentPoly alexander_polynomial(const SpliceDiagram& d) {
  const auto forms = virtual_forms(d);
  LaurentPoly numerator = LaurentPoly::constant(1);
  std::vector<LaurentPoly> denominators;
  for (const auto& f : forms) {
    if (f.lk1 == 0 && f.lk2 == 0) throw invariants::DegenerateForm(f.id);
    const auto power = static_cast<std::int64_t>(f.degree) - 2;
    const LaurentPoly factor = detail::binomial(f.lk1, f.lk2);
    for (std::int64_t k = 0; k < power; ++k) numerator = numerator * factor;
    for (std::int64_t k = 0; k < -power; ++k) denominators.push_back(factor);
  }
  LaurentPoly q = numerator;
  for (const auto& den : denominators) q = exact_divide(q, den);
  return normalize_sign(symmetrize(q).poly);
}

/// P_i (i <= n) or Q_i (i > n) of K^(2n) with the closed-form norm.
inline Ray closed_form_ray_norm(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n)
    throw invariants::IndexOutOfRange("closed_form_ray_norm: need 1 <= i <= 2n, got n=" + std::to_string(n) +
                                      " i=" + std::to_string(i));
  using checked::add;
  using checked::mul;
  using checked::pow;
  using checked::sub;
  if (i <= n) {
    const std::int64_t norm =
        add(sub(sub(add(add(pow(3, 4 * n - 2 * i + 1), pow(3, 2 * n - 2 * i + 1)), pow(3, 2 * n)),
                    mul(2, pow(3, 2 * n - i))),
                mul(2, pow(3, 2 * n - i + 1))),
            1);
    return {{pow(3, 2 * n + 1 - 2 * i), -1}, norm};
  }
  const std::int64_t norm =
      add(sub(sub(add(add(pow(3, 2 * i - 1), pow(3, 2 * i - 2 * n - 1)), pow(3, 2 * n)), mul(2, pow(3, i))),
              mul(2, pow(3, i - 1))),
          1);
  return {{1, checked::neg(pow(3, 2 * i - 1 - 2 * n))}, norm};
}

/// sigma_i = -(m_j lk(K1,K2)) mu(K_i) + m_i lambda(K_i), j != i, split as
/// d_i * beta_i with d_i > 0.
inline BoundarySlope boundary_slope(const SpliceDiagram& d, const CohomClass& m, int i) {
  if (i != 1 && i != 2) throw invariants::IndexOutOfRange("boundary_slope: component index must be 1 or 2");
  const std::int64_t lk = link_linking_number(d);
  const std::int64_t mi = i == 1 ? m.m1 : m.m2;
  const std::int64_t mj = i == 1 ? m.m2 : m.m1;
  BoundarySlope s;
  s.component_index = i;
  s.meridian_coeff = checked::neg(checked::mul(mj, lk));
  s.longitude_coeff = mi;
  if (s.meridian_coeff == 0 && s.longitude_coeff == 0) throw invariants::ZeroSlope();
  s.divisibility = gcd64(s.meridian_coeff, s.longitude_coeff);
  s.beta_primitive = {s.meridian_coeff / s.divisibility, s.longitude_coeff / s.divisibility};
  return s;
}

}  // namespace splicenorm
