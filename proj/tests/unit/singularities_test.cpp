#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/singularities.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

ToricDivisor zero_on(const Fan& f) { return ToricDivisor::zero(f.num_rays()); }

IntMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  IntMatrix U = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int step = 0; step < 8; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    U.add_row(a, b, Integer(factor(rng)));
  }
  if (rng() % 2) U.negate_row(0);
  return U;
}

Fan rebased(const Fan& f, const IntMatrix& U) {
  RawFan raw{f.dim(), {}, f.max_cones()};
  for (const auto& v : f.rays()) raw.rays.push_back(U * v);
  return validate_fan(raw);
}

}  // namespace

TEST(LogDiscrepancy, Examples) {
  Fan p2 = fixture_fan("p2");
  EXPECT_EQ(log_discrepancy(p2, zero_on(p2), zvec({1, 1})), 2);
  EXPECT_EQ(log_discrepancy(p2, zero_on(p2), zvec({1, 0})), 1);

  Fan p112 = fixture_fan("p112");
  DiscrepancyFunction A(p112, zero_on(p112));
  EXPECT_EQ(A.covector(0), qvec({1, -1}));
  EXPECT_EQ(log_discrepancy(p112, zero_on(p112), zvec({0, -1})), 1);

  auto doc = fixture("f2");
  Fan f2 = doc.fan();
  EXPECT_EQ(log_discrepancy(f2, doc.divisor("half_E"), zvec({1, 1})), q(3, 2));
}

TEST(LogDiscrepancy, RejectsNonPrimitive) {
  Fan p2 = fixture_fan("p2");
  try {
    log_discrepancy(p2, zero_on(p2), zvec({2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPrimitive);
  }
}

TEST(LogDiscrepancy, ContinuousAcrossWalls) {
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    Fan f = doc.fan();
    std::vector<ToricDivisor> boundaries = {zero_on(f)};
    for (const auto& [label, d] : doc.divisors) boundaries.push_back(d);
    for (const auto& d : boundaries) {
      DiscrepancyFunction A(f, d);
      for (const auto& w : f.walls())
        for (auto i : w.shared) {
          EXPECT_EQ(dot(A.covector(w.cones[0]), f.ray(i)), dot(A.covector(w.cones[1]), f.ray(i))) << name;
          EXPECT_EQ(dot(A.covector(w.cones[0]), f.ray(i)), 1 - d[i]) << name;
        }
    }
  }
}

TEST(ClassifyPair, ProjectivePlane) {
  Fan p2 = fixture_fan("p2");
  auto c = classify_pair(p2, zero_on(p2));
  EXPECT_TRUE(c.terminal && c.canonical && c.klt && c.log_canonical);
  ASSERT_TRUE(c.min_exceptional);
  EXPECT_EQ(*c.min_exceptional, 2);
  // the infimum also runs over the toric prime divisors themselves
  ASSERT_TRUE(c.mld);
  EXPECT_EQ(*c.mld, 1);
}

TEST(ClassifyPair, QuadricCone) {
  Fan p112 = fixture_fan("p112");
  auto c = classify_pair(p112, zero_on(p112));
  EXPECT_TRUE(c.canonical);
  EXPECT_FALSE(c.terminal);
  ASSERT_TRUE(c.mld);
  EXPECT_EQ(*c.mld, 1);
  EXPECT_EQ(*c.min_exceptional, 1);
}

TEST(ClassifyPair, HalfQuotientThreefold) {
  Fan f = fixture_fan("p1112");
  auto c = classify_pair(f, zero_on(f));
  EXPECT_TRUE(c.terminal);
  EXPECT_EQ(gorenstein_index(f, zero_on(f)), 2);
  EXPECT_FALSE(f.is_smooth());
}

TEST(ClassifyPair, BoundaryCoefficientOne) {
  Fan p2 = fixture_fan("p2");
  auto c = classify_pair(p2, ToricDivisor::from_integers({1, 0, 0}));
  EXPECT_TRUE(c.boundary_coefficient_at_least_one);
  EXPECT_TRUE(c.log_canonical);
  EXPECT_FALSE(c.klt);
  EXPECT_TRUE(c.floor_condition);
  EXPECT_FALSE(c.canonical);
  EXPECT_EQ(*c.mld, 0);

  auto big = classify_pair(p2, ToricDivisor::from_integers({2, 0, 0}));
  EXPECT_FALSE(big.log_canonical);
  EXPECT_FALSE(big.mld.has_value());
}

TEST(ClassifyPair, NegativeBoundaryFailsFloorCondition) {
  Fan p2 = fixture_fan("p2");
  auto c = classify_pair(p2, ToricDivisor(QVector{q(-1, 2), 0, 0}));
  EXPECT_TRUE(c.klt);
  EXPECT_FALSE(c.floor_condition);
  EXPECT_FALSE(c.canonical);
}

TEST(ClassifyPair, HierarchyOnCorpus) {
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    Fan f = doc.fan();
    std::vector<ToricDivisor> boundaries = {zero_on(f)};
    for (const auto& [label, d] : doc.divisors)
      if (d.is_effective()) boundaries.push_back(d);
    for (const auto& d : boundaries) {
      auto c = classify_pair(f, d);
      if (c.terminal) EXPECT_TRUE(c.canonical) << name;
      bool below_one = std::all_of(d.coefficients.begin(), d.coefficients.end(), [](const Rational& x) { return x < 1; });
      if (c.canonical && below_one) EXPECT_TRUE(c.klt) << name;
      if (c.klt) EXPECT_TRUE(c.log_canonical) << name;
    }
  }
}

TEST(OneCanonical, Examples) {
  Fan p2 = fixture_fan("p2");
  EXPECT_TRUE(is_one_canonical(p2, zero_on(p2)));
  Fan p112 = fixture_fan("p112");
  EXPECT_FALSE(is_one_canonical(p112, zero_on(p112)));
  Fan f2 = fixture_fan("f2");
  EXPECT_TRUE(is_one_canonical(f2, zero_on(f2)));
}

TEST(OneCanonical, TerminalGorensteinImpliesOneCanonical) {
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    auto c = classify_pair(f, zero_on(f));
    if (c.terminal && gorenstein_index(f, zero_on(f)) == 1) EXPECT_TRUE(is_one_canonical(f, zero_on(f))) << name;
  }
}

TEST(GorensteinIndex, Examples) {
  EXPECT_EQ(gorenstein_index(fixture_fan("p2"), ToricDivisor::zero(3)), 1);
  EXPECT_EQ(gorenstein_index(fixture_fan("p112"), ToricDivisor::zero(3)), 1);
  EXPECT_EQ(gorenstein_index(fixture_fan("p1112"), ToricDivisor::zero(4)), 2);
}

TEST(SimplexTerminal, AgreesWithScanOnCorpus) {
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    auto pts = exceptional_points(f, zero_on(f), Rational(1));
    bool all_cones = true;
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) all_cones = all_cones && simplex_terminal(f, c);
    EXPECT_EQ(all_cones, classify_pair(f, zero_on(f)).terminal) << name;
    EXPECT_EQ(all_cones, pts.empty()) << name;
  }
}

TEST(Rebasing, ClassificationInvariant) {
  std::mt19937 rng(99);
  for (const auto& name : fixture_names()) {
    Fan f = fixture_fan(name);
    auto base = classify_pair(f, zero_on(f));
    for (int t = 0; t < 5; ++t) {
      Fan g = rebased(f, random_unimodular(f.dim(), rng));
      auto c = classify_pair(g, zero_on(g));
      EXPECT_EQ(c.terminal, base.terminal) << name;
      EXPECT_EQ(c.canonical, base.canonical) << name;
      EXPECT_EQ(c.mld, base.mld) << name;
      EXPECT_EQ(c.min_exceptional, base.min_exceptional) << name;
      EXPECT_EQ(gorenstein_index(g, zero_on(g)), gorenstein_index(f, zero_on(f))) << name;
    }
  }
}
