#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "splicenorm/laurent.hpp"

using namespace splicenorm;

namespace {

LaurentPoly trinomial(std::int64_t a, std::int64_t b) {
  return LaurentPoly::from_terms({{{a, b}, 1}, {{0, 0}, 1}, {{-a, -b}, 1}});
}

LaurentPoly from_dense(const oracle::DensePoly& d) {
  LaurentPoly p;
  for (const auto& [e, c] : d) p.add_term({e.first, e.second}, c);
  return p;
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int span = 5, int coef = 7) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(-span, span), co(-coef, coef);
  LaurentPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term({ex(rng), ex(rng)}, co(rng));
  return p;
}

}  // namespace

TEST(Laurent, MultiplyTrinomialsGivesNineTermDeltaK2) {
  const auto p = multiply(trinomial(1, 3), trinomial(3, 1));
  EXPECT_EQ(p.size(), 9u);
  EXPECT_EQ(p, from_dense(oracle::k2n_trinomial_product(1)));
  for (const auto& [e, c] : p.terms()) EXPECT_EQ(c, 1) << e;
}

TEST(Laurent, MultiplyIdentityAndZero) {
  const auto p = trinomial(2, -5);
  EXPECT_EQ(p * LaurentPoly::constant(1), p);
  EXPECT_TRUE((p * LaurentPoly{}).is_zero());
}

TEST(Laurent, ZeroCoefficientsAreDropped) {
  LaurentPoly p = LaurentPoly::from_terms({{{1, 0}, 2}, {{1, 0}, -2}, {{0, 0}, 0}});
  EXPECT_TRUE(p.is_zero());
  // (t1 - 1)(t1 + 1) = t1^2 - 1
  const auto q = LaurentPoly::from_terms({{{1, 0}, 1}, {{0, 0}, -1}}) * LaurentPoly::from_terms({{{1, 0}, 1}, {{0, 0}, 1}});
  EXPECT_EQ(q, LaurentPoly::from_terms({{{2, 0}, 1}, {{0, 0}, -1}}));
}

TEST(Laurent, ExactDivideCyclotomicFactor) {
  // x = t1 t2^3; (x^3 - 1) / (x - 1) = x^2 + x + 1
  const auto num = LaurentPoly::from_terms({{{3, 9}, 1}, {{0, 0}, -1}});
  const auto den = LaurentPoly::from_terms({{{1, 3}, 1}, {{0, 0}, -1}});
  const auto q = exact_divide(num, den);
  EXPECT_EQ(q, LaurentPoly::from_terms({{{2, 6}, 1}, {{1, 3}, 1}, {{0, 0}, 1}}));
  EXPECT_EQ(q * den, num);
}

TEST(Laurent, ExactDivideSelfIsOne) {
  const auto p = trinomial(4, 7) * trinomial(-1, 2);
  EXPECT_EQ(exact_divide(p, p), LaurentPoly::constant(1));
}

TEST(Laurent, ExactDivideRejectsNonDivisor) {
  const auto p = LaurentPoly::from_terms({{{1, 0}, 1}, {{0, 0}, 1}});
  const auto q = LaurentPoly::from_terms({{{0, 1}, 1}, {{0, 0}, 1}});
  EXPECT_THROW(exact_divide(p, q), laurent::NotDivisible);
  // Divisible over Q but not over Z.
  EXPECT_THROW(exact_divide(LaurentPoly::constant(3), LaurentPoly::constant(2)), laurent::NotDivisible);
  // x^2 + 1 is not a multiple of x - 1 (remainder 2).
  EXPECT_THROW(exact_divide(LaurentPoly::from_terms({{{2, 0}, 1}, {{0, 0}, 1}}),
                            LaurentPoly::from_terms({{{1, 0}, 1}, {{0, 0}, -1}})),
               laurent::NotDivisible);
  EXPECT_THROW(exact_divide(p, LaurentPoly{}), laurent::DivisionByZero);
}

TEST(Laurent, SubstitutePower) {
  const auto d2 = trinomial(1, 3) * trinomial(3, 1);
  const auto sw = substitute_power(d2, 2);
  EXPECT_EQ(sw.coefficient({8, 8}), 1);
  EXPECT_EQ(sw.coefficient({4, -4}), 1);
  EXPECT_EQ(substitute_power(d2, 1), d2);
  EXPECT_EQ(substitute_power(LaurentPoly::monomial({1, -1}), 3), LaurentPoly::monomial({3, -3}));
}

TEST(Laurent, SymmetrizeCentersSupport) {
  const auto p = LaurentPoly::from_terms({{{2, 6}, 1}, {{1, 3}, 1}, {{0, 0}, 1}});
  const auto s = symmetrize(p);
  EXPECT_EQ(s.poly, trinomial(1, 3));
  EXPECT_EQ(s.shift, (ExponentPair{1, 3}));

  const auto sym = trinomial(5, 2);
  const auto same = symmetrize(sym);
  EXPECT_EQ(same.poly, sym);
  EXPECT_EQ(same.shift, (ExponentPair{0, 0}));
}

TEST(Laurent, SymmetrizeOddSpan) {
  const auto p = LaurentPoly::from_terms({{{1, 0}, 1}, {{0, 0}, 1}});
  try {
    symmetrize(p);
    FAIL() << "expected OddSpan";
  } catch (const laurent::OddSpan& e) {
    EXPECT_EQ(e.polynomial, p);
    EXPECT_EQ(e.doubled_shift, (ExponentPair{1, 0}));
    EXPECT_EQ(e.name(), "laurent.OddSpan");
  }
}

TEST(Laurent, EvaluateAtOne) {
  const auto d2 = from_dense(oracle::k2n_trinomial_product(1));
  const auto d4 = from_dense(oracle::k2n_trinomial_product(2));
  EXPECT_EQ(evaluate(d2, 1, 1), 9);
  EXPECT_EQ(evaluate(d4, 1, 1), 81);
  EXPECT_EQ(evaluate(LaurentPoly{}, Rational(2, 3), 5), 0);
  // t1^-2 t2 at (1/2, 3) = 4 * 3
  EXPECT_EQ(evaluate(LaurentPoly::monomial({-2, 1}), Rational(1, 2), 3), 12);
}

TEST(Laurent, NewtonPolygonDeltaK4Vertices) {
  const auto d4 = from_dense(oracle::k2n_trinomial_product(2));
  const std::vector<ExponentPair> expected{{-40, -40}, {-14, 38}, {-38, 14}, {-32, 32}};
  const auto hull = newton_polygon(d4);
  ASSERT_EQ(hull.size(), 8u);
  // Counterclockwise from the lexicographically smallest vertex.
  const std::vector<ExponentPair> ccw{{-40, -40}, {14, -38}, {32, -32}, {38, -14},
                                      {40, 40},   {-14, 38}, {-32, 32}, {-38, 14}};
  EXPECT_EQ(hull, ccw);
  for (const auto& v : expected) EXPECT_NE(std::find(hull.begin(), hull.end(), v), hull.end()) << v;
}

TEST(Laurent, NewtonPolygonDeltaK2AgainstBruteForce) {
  const auto d2 = from_dense(oracle::k2n_trinomial_product(1));
  const auto hull = newton_polygon(d2);
  // Hand expansion: (1,3) and (3,1) lie on edges, so only four vertices.
  const std::vector<ExponentPair> expected{{-4, -4}, {2, -2}, {4, 4}, {-2, 2}};
  EXPECT_EQ(hull, expected);

  std::vector<oracle::Point> pts;
  for (const auto& e : d2.support()) pts.emplace_back(e.e1, e.e2);
  auto brute = oracle::brute_force_hull_vertices(pts);
  auto sorted = hull;
  std::sort(sorted.begin(), sorted.end());
  ASSERT_EQ(brute.size(), sorted.size());
  for (std::size_t i = 0; i < brute.size(); ++i) EXPECT_EQ((ExponentPair{brute[i].first, brute[i].second}), sorted[i]);
}

TEST(Laurent, NewtonPolygonDegenerateCases) {
  EXPECT_EQ(newton_polygon(LaurentPoly::monomial({3, -7}, 5)), (std::vector<ExponentPair>{{3, -7}}));
  // collinear support: only the endpoints survive
  const auto line = LaurentPoly::from_terms({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
  EXPECT_EQ(newton_polygon(line), (std::vector<ExponentPair>{{0, 0}, {2, 2}}));
  EXPECT_THROW(newton_polygon(LaurentPoly{}), laurent::ZeroPolynomial);
}

TEST(LaurentProperty, RingLawsAndDivision) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    if (!q.is_zero()) EXPECT_EQ(exact_divide(p * q, q), p);
  }
}

TEST(LaurentProperty, EvaluateIsMultiplicative) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng);
    int an = num(rng), bn = num(rng);
    if (an == 0) an = 1;
    if (bn == 0) bn = -1;
    const Rational a(an, den(rng)), b(bn, den(rng));
    EXPECT_EQ(evaluate(p * q, a, b), evaluate(p, a, b) * evaluate(q, a, b));
  }
}

TEST(LaurentProperty, NewtonPolygonScalesWithSubstitution) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 10, 6);
    if (p.is_zero()) continue;
    for (std::int64_t k : {2, 3}) {
      auto scaled = newton_polygon(p);
      for (auto& v : scaled) v = {k * v.e1, k * v.e2};
      EXPECT_EQ(newton_polygon(substitute_power(p, k)), scaled);
    }
  }
}

TEST(LaurentProperty, HullAgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = random_poly(rng, 12, 4);
    if (p.is_zero()) continue;
    auto hull = newton_polygon(p);
    std::sort(hull.begin(), hull.end());
    std::vector<oracle::Point> pts;
    for (const auto& e : p.support()) pts.emplace_back(e.e1, e.e2);
    const auto brute = oracle::brute_force_hull_vertices(pts);
    ASSERT_EQ(hull.size(), brute.size());
    for (std::size_t i = 0; i < hull.size(); ++i) EXPECT_EQ(hull[i], (ExponentPair{brute[i].first, brute[i].second}));
  }
}

TEST(LaurentProperty, SymmetrizedCentrallySymmetricSupportIsInvariantUnderInversion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ex(-6, 6), sh(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    // Palindromic by construction, then translated.
    LaurentPoly p;
    for (int i = 0; i < 4; ++i) {
      const ExponentPair e{ex(rng), ex(rng)};
      p.add_term(e, 1);
      p.add_term(-e, 1);
    }
    if (p.is_zero()) continue;
    const auto translated = shift(p, {sh(rng), sh(rng)});
    const auto s = symmetrize(translated).poly;
    EXPECT_EQ(invert_variables(s), s);
  }
}

TEST(Laurent, GradedLexLeadingTerm) {
  const auto p = LaurentPoly::from_terms({{{5, -5}, 1}, {{0, 1}, 2}, {{-3, 3}, 4}});
  // degrees 0, 1, 0: (0,1) leads
  EXPECT_EQ(p.leading_term().first, (ExponentPair{0, 1}));
  EXPECT_EQ(p.trailing_term().first, (ExponentPair{-3, 3}));
  EXPECT_EQ(normalize_sign(-p), p);
}

TEST(Laurent, ToString) {
  EXPECT_EQ(to_string(LaurentPoly{}), "0");
  EXPECT_EQ(to_string(LaurentPoly::from_terms({{{1, 3}, 1}, {{0, 0}, 1}, {{-1, -3}, -2}})), "t1*t2^3 + 1 - 2*t1^-1*t2^-3");
}
