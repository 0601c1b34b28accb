#include <gtest/gtest.h>

#include <map>
#include <set>

#include "splicenorm/orbits.hpp"
#include "splicenorm/swtheory.hpp"

using namespace splicenorm;

namespace {

const std::vector<LatticeMap> kDiagonalGroup{{-1, 0, 0, -1}, {0, -1, -1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};

std::size_t face_between(const NormBall& b, CohomClass lo, CohomClass hi) {
  for (std::size_t i = 0; i < b.faces.size(); ++i)
    if (b.faces[i].ray_lo.primitive == lo && b.faces[i].ray_hi.primitive == hi) return i;
  ADD_FAILURE() << "no face " << lo << " -> " << hi;
  return 0;
}

}  // namespace

TEST(Orbits, SymmetriesK4AreReflectionsThroughDiagonals) {
  EXPECT_EQ(lattice_symmetries(unit_ball(build_k2n(2))), kDiagonalGroup);
}

TEST(Orbits, SymmetriesK2) { EXPECT_EQ(lattice_symmetries(unit_ball(build_k2n(1))), kDiagonalGroup); }

TEST(Orbits, SymmetriesContainPlusMinusIdentity) {
  for (int n = 1; n <= 5; ++n) {
    const auto g = lattice_symmetries(unit_ball(build_k2n(n)));
    EXPECT_NE(std::find(g.begin(), g.end(), LatticeMap::identity()), g.end());
    EXPECT_NE(std::find(g.begin(), g.end(), LatticeMap{-1, 0, 0, -1}), g.end());
    EXPECT_EQ(g.size(), 4u) << n;
  }
}

TEST(Orbits, SquareBallHasDihedralSymmetry) {
  // |m1| + |m2|: rays along the axes, norm 2 each. The full symmetry group
  // of the square that preserves Z^2 has order 8.
  NormBall b;
  b.rays = {{{0, -1}, 2}, {{1, 0}, 2}, {{0, 1}, 2}, {{-1, 0}, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& lo = b.rays[i];
    const auto& hi = b.rays[(i + 1) % 4];
    b.faces.push_back({lo, hi, dual_vertex(lo.primitive, lo.norm, hi.primitive, hi.norm)});
  }
  const auto g = lattice_symmetries(b);
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(face_orbits(b, g).orbit_count, 1u);
}

TEST(Orbits, FaceOrbitsK4) {
  const auto b = unit_ball(build_k2n(2));
  const auto part = face_orbits(b, lattice_symmetries(b));
  EXPECT_EQ(part.orbit_count, 3u);
  const CohomClass p1{27, -1}, p2{3, -1}, q3{1, -3}, q4{1, -27};
  const auto diag = face_between(b, p1, -q4);  // contains (1,1)
  const auto p1p2 = face_between(b, p2, p1);
  const auto q3q4 = face_between(b, q4, q3);
  const auto p2q3 = face_between(b, q3, p2);
  const auto& L = part.face_labels;
  EXPECT_EQ(L[diag], L[face_between(b, -p1, q4)]);
  EXPECT_EQ(L[p1p2], L[q3q4]);
  EXPECT_EQ(L[p1p2], L[face_between(b, -p2, -p1)]);
  EXPECT_EQ(L[p2q3], L[face_between(b, -q3, -p2)]);
  EXPECT_NE(L[diag], L[p1p2]);
  EXPECT_NE(L[diag], L[p2q3]);
  EXPECT_NE(L[p1p2], L[p2q3]);
}

TEST(Orbits, IdentityOnlyGivesSingletons) {
  for (int n = 1; n <= 3; ++n) {
    const auto b = unit_ball(build_k2n(n));
    EXPECT_EQ(face_orbits(b, {LatticeMap::identity()}).orbit_count, static_cast<std::size_t>(4 * n));
  }
}

TEST(Orbits, FaceOrbitsK2) {
  const auto b = unit_ball(build_k2n(1));
  EXPECT_EQ(face_orbits(b, lattice_symmetries(b)).orbit_count, 2u);
}

TEST(Orbits, NotAGroup) {
  const auto b = unit_ball(build_k2n(2));
  EXPECT_THROW(face_orbits(b, {LatticeMap::identity(), {0, 1, 1, 0}, {-1, 0, 0, -1}}), orbits::NotAGroup);
  EXPECT_THROW(face_orbits(b, {{0, 1, 1, 0}}), orbits::NotAGroup);
  // a group, but not one acting on this ball
  EXPECT_THROW(face_orbits(b, {LatticeMap::identity(), {0, -1, 1, 0}, {-1, 0, 0, -1}, {0, 1, -1, 0}}),
               orbits::NotAGroup);
}

TEST(Orbits, MinStructureCount) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(min_structure_count(build_k2n(n)), static_cast<std::size_t>(n + 1)) << n;
}

TEST(OrbitsProperty, SymmetriesPreserveNormAndRays) {
  for (int n = 1; n <= 4; ++n) {
    const auto forms = virtual_forms(build_k2n(n));
    const auto ball = unit_ball(forms);
    const auto group = lattice_symmetries(ball);
    for (const auto& g : group) {
      for (int a = -50; a <= 50; ++a)
        for (int b = -50; b <= 50; ++b) EXPECT_EQ(thurston_norm(forms, g.apply({a, b})), thurston_norm(forms, {a, b}));
      for (const auto& r : ball.rays) {
        const auto img = g.apply(r.primitive);
        auto it = std::find_if(ball.rays.begin(), ball.rays.end(), [&](const Ray& x) { return x.primitive == img; });
        ASSERT_NE(it, ball.rays.end());
        EXPECT_EQ(it->norm, r.norm);
      }
    }
  }
}

TEST(OrbitsProperty, OrbitSizesDivideGroupOrderAndDivisibilityIsConstant) {
  for (int n = 1; n <= 5; ++n) {
    const auto ball = unit_ball(build_k2n(n));
    const auto group = lattice_symmetries(ball);
    const auto part = face_orbits(ball, group);
    const auto canon = canonical_classes(ball);
    std::map<std::size_t, std::size_t> sizes;
    std::map<std::size_t, std::set<std::int64_t>> divs;
    for (std::size_t i = 0; i < part.face_labels.size(); ++i) {
      ++sizes[part.face_labels[i]];
      divs[part.face_labels[i]].insert(canon[i].divisibility);
    }
    EXPECT_EQ(sizes.size(), part.orbit_count);
    for (const auto& [label, size] : sizes) EXPECT_EQ(group.size() % size, 0u);
    for (const auto& [label, ds] : divs) EXPECT_EQ(ds.size(), 1u);
  }
}

TEST(Orbits, LatticeMapAlgebra) {
  const LatticeMap s{0, 1, 1, 0}, r{0, -1, 1, 0};
  EXPECT_EQ(s.determinant(), -1);
  EXPECT_EQ(r.compose(r.inverse()), LatticeMap::identity());
  EXPECT_EQ(s.compose(s), LatticeMap::identity());
  EXPECT_EQ(r.apply({1, 0}), (CohomClass{0, 1}));
}
