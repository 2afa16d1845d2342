#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toric/divisor_theory.hpp"
#include "toric/error.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

ToricDivisor principal(const Fan& f, const ZVector& m) {
  QVector c;
  for (const auto& v : f.rays()) c.emplace_back(dot(m, v));
  return ToricDivisor(c);
}

Fan fake_plane() {
  return validate_fan(RawFan{2, {zvec({2, -1}), zvec({-1, 2}), zvec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}});
}

const Wall& wall_at(const Fan& f, ConeIndices shared) { return f.walls()[*find_wall(f, shared)]; }

}  // namespace

TEST(ClassGroup, Degrees) {
  EXPECT_EQ(class_group(fixture_fan("p2")).free_projection(), (IntMatrix{{1, 1, 1}}));
  EXPECT_EQ(class_group(fixture_fan("p112")).free_projection(), (IntMatrix{{1, 1, 2}}));
  auto f2 = class_group(fixture_fan("f2"));
  EXPECT_EQ(f2.rank(), 2u);
  // rows are (F, E) coordinates of D_1..D_4
  EXPECT_EQ(f2.free_projection(), (IntMatrix{{1, 0, 1, 2}, {0, 1, 0, 1}}));
  EXPECT_TRUE(f2.torsion().empty());
}

TEST(ClassGroup, RankAndTorsionMatchSmithInvariants) {
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    auto cl = class_group(f);
    EXPECT_EQ(cl.rank(), f.num_rays() - f.dim()) << name;
    ZVector tors;
    for (const auto& d : oracle::snf_invariants_by_minors(f.ray_matrix()))
      if (d > 1) tors.push_back(d);
    EXPECT_EQ(cl.torsion(), tors) << name;
  }
}

TEST(ClassGroup, TorsionQuotientOfPlane) {
  Fan f = fake_plane();
  auto cl = class_group(f);
  EXPECT_EQ(cl.rank(), 1u);
  EXPECT_EQ(cl.torsion(), zvec({3}));
  EXPECT_EQ(cl.torsion_elements().size(), 3u);
  // principal divisors have trivial class; primes generate the torsion
  auto zero = cl.class_of(principal(f, zvec({1, 0})));
  EXPECT_TRUE(is_zero(zero.free));
  EXPECT_TRUE(is_zero(zero.torsion));
  auto d0 = cl.class_of(ToricDivisor::prime(3, 0));
  EXPECT_FALSE(is_zero(d0.torsion));
  EXPECT_EQ(cl.class_of(cl.representative(d0)), d0);
}

TEST(ClassGroup, ProjectionKillsCharacters) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    auto cl = class_group(f);
    for (int t = 0; t < 5; ++t) {
      ZVector m;
      for (std::size_t i = 0; i < f.dim(); ++i) m.emplace_back(entry(rng));
      auto c = cl.class_of(principal(f, m));
      EXPECT_TRUE(is_zero(c.free)) << name;
      EXPECT_TRUE(is_zero(c.torsion)) << name;
    }
    for (std::size_t i = 0; i < f.num_rays(); ++i) {
      auto c = cl.class_of(ToricDivisor::prime(f.num_rays(), i));
      EXPECT_EQ(cl.class_of(cl.representative(c)), c) << name;
      EXPECT_TRUE(cl.representative(c).is_integral()) << name;
    }
  }
}

TEST(Cartier, Examples) {
  Fan p2 = fixture_fan("p2");
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(is_cartier(p2, ToricDivisor::prime(3, i)));
  Fan p112 = fixture_fan("p112");
  EXPECT_EQ(cartier_index(p112, ToricDivisor::prime(3, 0)), 2);
  EXPECT_EQ(cartier_index(p112, ToricDivisor::anticanonical(3)), 1);
  Fan p1112 = fixture_fan("p1112");
  EXPECT_EQ(cartier_index(p1112, ToricDivisor::anticanonical(4)), 2);
  auto u = cartier_data(p112, ToricDivisor::anticanonical(3));
  EXPECT_EQ(u[0], qvec({-1, 1}));
}

TEST(SectionPolytope, Examples) {
  Fan p2 = fixture_fan("p2");
  for (long d = 0; d <= 4; ++d) {
    auto p = section_polytope(p2, ToricDivisor::from_integers({d, 0, 0}));
    EXPECT_EQ(polytope_volume(p), q(d * d, 2));
    EXPECT_EQ(count_lattice_points(p), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  }
  EXPECT_TRUE(section_polytope(p2, ToricDivisor::from_integers({-1, 0, 0})).empty());
  Fan f2 = fixture_fan("f2");
  auto p = section_polytope(f2, ToricDivisor::from_integers({0, 2, 2, 0}));
  std::vector<ZVector> expected = {zvec({0, -1}), zvec({0, 0}), zvec({1, 0}), zvec({2, 0})};
  EXPECT_EQ(lattice_points(p), expected);
}

TEST(H0, RuledSurfaceCounts) {
  auto f2 = fixture("f2");
  EXPECT_EQ(h0(f2.fan(), f2.divisor("L_b1")), 4);
  EXPECT_EQ(h0(f2.fan(), f2.divisor("L_b2")), 9);
  EXPECT_EQ(h0(f2.fan(), f2.divisor("L_b3")), 16);
  auto quad = fixture("p1xp1");
  EXPECT_EQ(h0(quad.fan(), quad.divisor("L_b1")), 3);
  EXPECT_EQ(h0(quad.fan(), quad.divisor("L_b2")), 8);
  EXPECT_EQ(h0(quad.fan(), quad.divisor("L_b3")), 15);
  EXPECT_EQ(h0(fixture_fan("p2"), ToricDivisor::from_integers({3, 0, 0})), 10);
}

TEST(H0, RejectsNonIntegral) {
  auto f2 = fixture("f2");
  try {
    h0(f2.fan(), f2.divisor("half_E"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralDivisor);
  }
}

TEST(H0, InvariantUnderPrincipalShifts) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    Fan f = doc.fan();
    for (const auto& [label, d] : doc.divisors) {
      if (!d.is_integral()) continue;
      Integer base = h0(f, d);
      for (int t = 0; t < 3; ++t) {
        ZVector m;
        for (std::size_t i = 0; i < f.dim(); ++i) m.emplace_back(entry(rng));
        EXPECT_EQ(h0(f, d + principal(f, m)), base) << name << " " << label;
      }
    }
  }
}

TEST(CurveIntersection, Examples) {
  Fan f2 = fixture_fan("f2");
  const Wall& e = wall_at(f2, {1});
  EXPECT_EQ(curve_intersection(f2, ToricDivisor::anticanonical(4), e), 0);
  EXPECT_EQ(curve_intersection(f2, ToricDivisor::prime(4, 1), e), -2);
  Fan p2 = fixture_fan("p2");
  for (const auto& w : p2.walls()) EXPECT_EQ(curve_intersection(p2, ToricDivisor::prime(3, 0), w), 1);
}

TEST(CurveIntersection, SmoothFansMatchRelationCoefficients) {
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    if (!f.is_smooth()) continue;
    for (const auto& w : f.walls())
      for (std::size_t i = 0; i < f.num_rays(); ++i)
        EXPECT_EQ(curve_intersection(f, ToricDivisor::prime(f.num_rays(), i), w), Rational(w.relation[i])) << name;
  }
}

TEST(CurveIntersection, WeightedPlane) {
  // on P(1,1,2) every curve class is a multiple of the line class
  Fan f = fixture_fan("p112");
  for (const auto& w : f.walls()) {
    Rational d0 = curve_intersection(f, ToricDivisor::prime(3, 0), w);
    EXPECT_EQ(curve_intersection(f, ToricDivisor::prime(3, 1), w), d0);
    EXPECT_EQ(curve_intersection(f, ToricDivisor::prime(3, 2), w), 2 * d0);
  }
  EXPECT_EQ(top_self_intersection(f, ToricDivisor::prime(3, 0)), q(1, 2));
}

TEST(CurveIntersection, LinearAndVanishesOnPrincipal) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    const std::size_t r = f.num_rays();
    for (const auto& w : f.walls()) {
      ZVector m;
      for (std::size_t i = 0; i < f.dim(); ++i) m.emplace_back(entry(rng));
      EXPECT_EQ(curve_intersection(f, principal(f, m), w), 0) << name;
      QVector a, b;
      for (std::size_t i = 0; i < r; ++i) {
        a.emplace_back(entry(rng));
        b.emplace_back(entry(rng));
      }
      ToricDivisor da(a), db(b);
      EXPECT_EQ(curve_intersection(f, da + q(3, 2) * db, w),
                curve_intersection(f, da, w) + q(3, 2) * curve_intersection(f, db, w))
          << name;
    }
  }
}

TEST(Degree, Examples) {
  Fan p2 = fixture_fan("p2");
  auto H = ToricDivisor::from_integers({1, 0, 0});
  for (long d = 1; d <= 4; ++d) EXPECT_EQ(degree(p2, ToricDivisor::from_integers({d, 0, 0}), H), d);
  auto f2 = fixture("f2");
  Fan f = f2.fan();
  auto A = f2.divisor("H");
  QVector degs;
  for (std::size_t i = 0; i < 4; ++i) degs.push_back(degree(f, ToricDivisor::prime(4, i), A));
  EXPECT_EQ(degs, qvec({1, 1, 1, 3}));
  // (2E + 4F).(E + 3F) with E^2 = -2, E.F = 1, F^2 = 0
  EXPECT_EQ(degree(f, ToricDivisor::anticanonical(4), A), 6);
  try {
    degree(f, A, f2.divisor("E"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HNotNef);
  }
}

TEST(Volume, Examples) {
  Fan p2 = fixture_fan("p2");
  for (long d = 0; d <= 4; ++d) EXPECT_EQ(volume(p2, ToricDivisor::from_integers({d, 0, 0})), d * d);
  auto f2 = fixture("f2");
  Fan f = f2.fan();
  EXPECT_EQ(volume(f, f2.divisor("E2F")), 2);
  EXPECT_EQ(top_self_intersection(f, f2.divisor("E2F")), 2);
  EXPECT_EQ(volume(f, f2.divisor("L_b1")), 2);
  EXPECT_EQ(top_self_intersection(f, f2.divisor("L_b1")), 0);
  EXPECT_EQ(top_self_intersection(f, f2.divisor("E")), -2);
  EXPECT_EQ(volume(f, f2.divisor("E")), 0);
}

TEST(Volume, ThreefoldIntersectionNumbers) {
  Fan p3 = fixture_fan("p3");
  EXPECT_EQ(top_self_intersection(p3, ToricDivisor::prime(4, 0)), 1);
  Fan cube = fixture_fan("p1xp1xp1");
  EXPECT_EQ(top_self_intersection(cube, ToricDivisor::anticanonical(6)), 48);
  Fan p1112 = fixture_fan("p1112");
  // (-K)^3 = 5^3 / 2 on P(1,1,1,2)
  EXPECT_EQ(top_self_intersection(p1112, ToricDivisor::anticanonical(4)), q(125, 2));
  EXPECT_EQ(volume(p1112, ToricDivisor::anticanonical(4)), q(125, 2));
}

TEST(Volume, NefDivisorsAgreeWithTopPower) {
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    Fan f = doc.fan();
    for (const auto& [label, d] : doc.divisors) {
      if (!is_nef(f, d)) continue;
      EXPECT_EQ(volume(f, d), top_self_intersection(f, d)) << name << " " << label;
    }
    EXPECT_EQ(volume(f, ToricDivisor::anticanonical(f.num_rays())),
              top_self_intersection(f, ToricDivisor::anticanonical(f.num_rays())))
        << name;
  }
}

TEST(Ample, DocumentsAndGeneratedDivisorsAreAmple) {
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    Fan f = doc.fan();
    if (doc.ample) EXPECT_TRUE(is_ample(f, doc.divisor(*doc.ample))) << name;
    auto a = ample_divisor(f);
    EXPECT_TRUE(is_ample(f, a)) << name;
    EXPECT_TRUE(a.is_integral()) << name;
    EXPECT_GT(volume(f, a), 0) << name;
  }
}
