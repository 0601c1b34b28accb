#pragma once

// Sparse bivariate Laurent polynomials over Z in t1, t2.
//
// Terms are kept in a map ordered by graded lexicographic order on the
// exponent pair: first by total degree e1 + e2, then by e1. The largest key
// is the leading term. This order is a total order compatible with monomial
// multiplication, which is what exact division relies on.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "splicenorm/numeric.hpp"

namespace splicenorm {

struct ExponentPair {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  // Plain lexicographic order (used for sorting point sets, not for division).
  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

  ExponentPair operator+(const ExponentPair& o) const {
    return {checked::add(e1, o.e1), checked::add(e2, o.e2)};
  }
  ExponentPair operator-(const ExponentPair& o) const {
    return {checked::sub(e1, o.e1), checked::sub(e2, o.e2)};
  }
  ExponentPair operator-() const { return {checked::neg(e1), checked::neg(e2)}; }
};

inline std::ostream& operator<<(std::ostream& os, const ExponentPair& e) {
  return os << '(' << e.e1 << ',' << e.e2 << ')';
}

/// Graded lexicographic order: total degree first, then e1.
struct GradedLexLess {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const {
    // Compare degrees in 128 bits so extreme exponents cannot wrap.
    const __int128 da = static_cast<__int128>(a.e1) + a.e2;
    const __int128 db = static_cast<__int128>(b.e1) + b.e2;
    if (da != db) return da < db;
    return a.e1 < b.e1;
  }
};

namespace laurent {

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error("laurent.NotDivisible", what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("laurent.DivisionByZero", "division by the zero polynomial") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& op)
      : Error("laurent.ZeroPolynomial", op + ": polynomial is zero") {}
};

}  // namespace laurent

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentPair, BigInt, GradedLexLess>;

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c) { return monomial({0, 0}, c); }

  static LaurentPoly monomial(ExponentPair e, const BigInt& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  static LaurentPoly from_terms(const std::vector<std::pair<ExponentPair, BigInt>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Graded-lex largest term. Precondition: nonzero.
  const std::pair<const ExponentPair, BigInt>& leading_term() const {
    if (is_zero()) throw laurent::ZeroPolynomial("leading_term");
    return *terms_.rbegin();
  }
  const std::pair<const ExponentPair, BigInt>& trailing_term() const {
    if (is_zero()) throw laurent::ZeroPolynomial("trailing_term");
    return *terms_.begin();
  }

  std::vector<ExponentPair> support() const {
    std::vector<ExponentPair> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  void add_term(const ExponentPair& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

inline LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) r.add_term(ep + eq, cp * cq);
  return r;
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

/// Multiplies by the monomial t1^s.e1 t2^s.e2.
inline LaurentPoly shift(const LaurentPoly& p, const ExponentPair& s) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e + s, c);
  return r;
}

struct BoundingBox {
  std::int64_t min1, max1, min2, max2;
};

inline BoundingBox bounding_box(const LaurentPoly& p) {
  if (p.is_zero()) throw laurent::ZeroPolynomial("bounding_box");
  const auto& first = p.terms().begin()->first;
  BoundingBox b{first.e1, first.e1, first.e2, first.e2};
  for (const auto& [e, c] : p.terms()) {
    b.min1 = std::min(b.min1, e.e1);
    b.max1 = std::max(b.max1, e.e1);
    b.min2 = std::min(b.min2, e.e2);
    b.max2 = std::max(b.max2, e.e2);
  }
  return b;
}

/// Exact quotient p / q by leading-term elimination in graded-lex order.
///
/// If q divides p then the Newton polygon of p is the Minkowski sum of those
/// of the quotient and q, so every quotient exponent lies in the box
/// [min(p) - min(q), max(p) - max(q)] per coordinate. A candidate term outside
/// that box (or a non-integral coefficient ratio) proves non-divisibility and
/// bounds the loop.
inline LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw laurent::DivisionByZero();
  if (p.is_zero()) return {};

  const BoundingBox bp = bounding_box(p);
  const BoundingBox bq = bounding_box(q);
  const std::int64_t lo1 = checked::sub(bp.min1, bq.min1), hi1 = checked::sub(bp.max1, bq.max1);
  const std::int64_t lo2 = checked::sub(bp.min2, bq.min2), hi2 = checked::sub(bp.max2, bq.max2);

  const auto& [q_lead, q_coef] = q.leading_term();
  LaurentPoly remainder = p;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [r_lead, r_coef] = remainder.leading_term();
    const ExponentPair e = r_lead - q_lead;
    if (e.e1 < lo1 || e.e1 > hi1 || e.e2 < lo2 || e.e2 > hi2)
      throw laurent::NotDivisible("quotient term falls outside the Newton bounding box");
    if (r_coef % q_coef != 0)
      throw laurent::NotDivisible("leading coefficient is not divisible over Z");
    const BigInt c = r_coef / q_coef;
    quotient.add_term(e, c);
    for (const auto& [eq, cq] : q.terms()) remainder.add_term(eq + e, -(c * cq));
  }
  return quotient;
}

/// Replaces every exponent (a, b) by (k a, k b).
inline LaurentPoly substitute_power(const LaurentPoly& p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({checked::mul(k, e.e1), checked::mul(k, e.e2)}, c);
  return r;
}

/// p(t1^-1, t2^-1).
inline LaurentPoly invert_variables(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

/// p(t2, t1).
inline LaurentPoly swap_variables(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({e.e2, e.e1}, c);
  return r;
}

/// Negates p if its graded-lex leading coefficient is negative.
inline LaurentPoly normalize_sign(const LaurentPoly& p) {
  if (p.is_zero() || p.leading_term().second > 0) return p;
  return -p;
}

struct Symmetrized {
  LaurentPoly poly;
  ExponentPair shift;
};

namespace laurent {

class OddSpan : public Error {
 public:
  // Half-integer shift is reported as twice its value.
  OddSpan(LaurentPoly p, ExponentPair twice_shift)
      : Error("laurent.OddSpan", "centering shift is not integral"),
        polynomial(std::move(p)),
        doubled_shift(twice_shift) {}
  LaurentPoly polynomial;
  ExponentPair doubled_shift;
};

}  // namespace laurent

/// Centers the support so that max_i = -min_i in each variable.
inline Symmetrized symmetrize(const LaurentPoly& p) {
  if (p.is_zero()) throw laurent::ZeroPolynomial("symmetrize");
  const BoundingBox b = bounding_box(p);
  const ExponentPair twice{checked::add(b.max1, b.min1), checked::add(b.max2, b.min2)};
  if (twice.e1 % 2 != 0 || twice.e2 % 2 != 0) throw laurent::OddSpan(p, twice);
  const ExponentPair s{twice.e1 / 2, twice.e2 / 2};
  return {shift(p, -s), s};
}

namespace detail {

inline Rational rational_pow(const Rational& base, std::int64_t exp) {
  Rational b = exp < 0 ? Rational(1) / base : base;
  std::uint64_t n = exp < 0 ? static_cast<std::uint64_t>(-(exp + 1)) + 1 : static_cast<std::uint64_t>(exp);
  Rational r = 1;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

}  // namespace detail

inline Rational evaluate(const LaurentPoly& p, const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("evaluate: evaluation point must be nonzero");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms())
    sum += Rational(c) * detail::rational_pow(a, e.e1) * detail::rational_pow(b, e.e2);
  return sum;
}

namespace detail {

inline __int128 cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b) {
  return static_cast<__int128>(a.e1 - o.e1) * (b.e2 - o.e2) -
         static_cast<__int128>(a.e2 - o.e2) * (b.e1 - o.e1);
}

}  // namespace detail

/// Convex hull of a point set: counterclockwise, starting at the
/// lexicographically smallest point, collinear boundary points dropped.
inline std::vector<ExponentPair> convex_hull(std::vector<ExponentPair> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<ExponentPair> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower chain
    while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline std::vector<ExponentPair> newton_polygon(const LaurentPoly& p) {
  if (p.is_zero()) throw laurent::ZeroPolynomial("newton_polygon");
  return convex_hull(p.support());
}

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = e.e1 == 0 && e.e2 == 0;
    bool need_star = false;
    if (mag != 1 || unit) {
      os << mag;
      need_star = true;
    }
    auto var = [&](const char* name, std::int64_t k) {
      if (k == 0) return;
      if (need_star) os << '*';
      os << name;
      if (k != 1) os << '^' << k;
      need_star = true;
    };
    var("t1", e.e1);
    var("t2", e.e2);
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace splicenorm
