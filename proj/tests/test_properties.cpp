// Cross-module invariants: splittings are invariant under both group actions,
// constructed witnesses re-analyze to their declared types, and records
// survive serialization.

#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "ncurve/construct.hpp"
#include "ncurve/io.hpp"
#include "ncurve/strata.hpp"
#include "ncurve/syzygy.hpp"

using namespace ncurve;

TEST(Property, SplittingInvariantUnderActions) {
  gen::Gen g(81);
  const Field F = Field::prime();
  for (int trial = 0; trial < 25; ++trial) {
    const int n = g.uniform(3, 5);
    const auto k = g.exponents(n, g.uniform(n + 1, n + 7), true);
    const CurveMap f = monomial_curve(F, k);
    const SplittingType N = normal_splitting(f), T = tangent_splitting(f);
    const CurveMap moved = apply_reparam(apply_ambient(f, g.invertible(F, n + 1)), g.gl2(F));
    EXPECT_EQ(normal_splitting(moved), N);
    EXPECT_EQ(tangent_splitting(moved), T);
  }
}

TEST(Property, WitnessesReanalyze) {
  gen::Gen g(82);
  const Field F = Field::prime();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = g.uniform(3, 6);
    std::vector<int> d(static_cast<std::size_t>(n - 1));
    for (auto& x : d) x = g.uniform(1, 3);
    d.front() = 1;
    int inner = 0, top = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) inner += d[i] + d[i + 1];
    const auto b0 = twists_from_deltas(100, d);
    for (std::size_t i = 0; i + 1 < b0.size(); ++i) top = std::max(top, b0[i]);
    const int e = std::max(n, (inner + top + 3) / 2) + g.uniform(0, 2);
    const Witness w = from_delta_sequence(F, n, e, d, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(normal_splitting(w.curve), w.declared);
    for (const auto& a : w.relations) EXPECT_TRUE(verify_relation(w.curve, a));
    const CurveMap back = curve_from_json(ojson::parse(witness_to_json(w).dump()));
    EXPECT_EQ(normal_splitting(back), w.declared);
  }
}

TEST(Property, DualityBetweenBundles) {
  // normal twists sum to 2e-2, tangent twists to e
  gen::Gen g(83);
  const Field F = Field::prime();
  for (int trial = 0; trial < 15; ++trial) {
    const int n = g.uniform(3, 5), e = g.uniform(n + 1, n + 6);
    const CurveMap f = g.good_curve(F, n, e);
    EXPECT_EQ(normal_splitting(f).total(), 2 * e - 2);
    EXPECT_EQ(tangent_splitting(f).total(), e);
    EXPECT_EQ(normal_splitting(f).rank(), n - 1);
    EXPECT_EQ(tangent_splitting(f).rank(), n);
  }
}

TEST(Property, GenericIsBalanced) {
  gen::Gen g(84);
  const Field F = Field::prime();
  for (int trial = 0; trial < 15; ++trial) {
    const int n = g.uniform(3, 6), e = g.uniform(n, n + 8);
    const CurveMap f = g.good_curve(F, n, e);
    EXPECT_TRUE(normal_splitting(f).is_balanced());
    EXPECT_EQ(h1_end(normal_splitting(f)), 0);
  }
}
