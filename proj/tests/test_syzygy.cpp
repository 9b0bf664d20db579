#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "ncurve/construct.hpp"
#include "ncurve/error.hpp"
#include "ncurve/syzygy.hpp"
#include "oracle.hpp"

using namespace ncurve;

namespace {

CurveMap from_int_rows(const Field& F, const std::vector<std::vector<long long>>& rows) {
  std::vector<HomPoly> comps;
  for (const auto& r : rows) {
    std::vector<FieldElem> c;
    for (long long x : r) c.push_back(F.from_int(x));
    comps.emplace_back(F, std::move(c));
  }
  return CurveMap(F, std::move(comps));
}

std::vector<oracle::Form> to_oracle(const CurveMap& f) {
  std::vector<oracle::Form> out;
  for (const auto& c : f.components()) {
    oracle::Form v;
    for (const auto& x : c.coeffs()) v.push_back(f.field().residue(x));
    out.push_back(v);
  }
  return out;
}

std::vector<oracle::Form> to_oracle(const std::vector<std::vector<long long>>& rows) {
  std::vector<oracle::Form> out;
  for (const auto& r : rows) {
    oracle::Form v;
    for (long long x : r) v.push_back(oracle::reduce(x));
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<long long>> monomial_rows(const std::vector<int>& k) {
  std::vector<std::vector<long long>> rows;
  for (int ki : k) {
    std::vector<long long> r(static_cast<std::size_t>(k.front() + 1), 0);
    r[static_cast<std::size_t>(k.front() - ki)] = 1;
    rows.push_back(r);
  }
  return rows;
}

// Values computed once with the evaluation oracle and frozen.
struct Frozen {
  const char* name;
  std::vector<std::vector<long long>> rows;
  std::vector<int> r;  // r(0), r(1), ...
  std::vector<int> normal;
  std::vector<int> tangent;
};

std::vector<Frozen> frozen() {
  return {
      {"twisted_cubic", monomial_rows({3, 2, 1, 0}), {0, 0, 2, 4, 6}, {2, 2}, {1, 1, 1}},
      {"mono_54210", monomial_rows({5, 4, 2, 1, 0}), {0, 0, 1, 4, 7, 10}, {2, 3, 3}, {1, 1, 1, 2}},
      {"quartic_4310", monomial_rows({4, 3, 1, 0}), {0, 0, 0, 2, 4, 6}, {3, 3}, {1, 1, 2}},
      {"mono_p9_e11", monomial_rows({11, 10, 8, 7, 5, 4, 3, 2, 1, 0}), {0, 0, 4, 12, 20, 28},
       {2, 2, 2, 2, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 2, 2}},
      {"quintic_p3",
       {{1, 0, 0, 0, 0, 1}, {0, 1, 0, 2, 0, 0}, {0, 0, 1, 0, -1, 0}, {0, 0, 0, 1, 3, 1}},
       {0, 0, 0, 0, 2, 4, 6},
       {4, 4},
       {1, 2, 2}},
      {"sextic_p4",
       {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 2, 0, 0}, {0, 0, 0, 1, 0, -1, 0}, {1, 0, 0, 0, 0, 1, 1}},
       {0, 0, 0, 2, 5, 8, 11},
       {3, 3, 4},
       {1, 1, 2, 2}},
      {"sextic_p4_unbalanced",
       {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1}},
       {0, 0, 1, 2, 5, 8, 11, 14},
       {2, 4, 4},
       {1, 1, 1, 3}},
  };
}

}  // namespace

TEST(Syzygy, FrozenValuesMatchOracle) {
  for (const auto& fz : frozen()) {
    const auto f = to_oracle(fz.rows);
    for (std::size_t b = 0; b < fz.r.size(); ++b) EXPECT_EQ(oracle::normal_r(f, static_cast<int>(b)), fz.r[b]) << fz.name;
    EXPECT_EQ(oracle::normal_twists(f), fz.normal) << fz.name;
    EXPECT_EQ(oracle::tangent_twists(f), fz.tangent) << fz.name;
  }
}

TEST(Syzygy, FrozenValuesOverBothFields) {
  for (const Field& F : {Field::rationals(), Field::prime()}) {
    for (const auto& fz : frozen()) {
      const CurveMap f = from_int_rows(F, fz.rows);
      for (std::size_t b = 0; b < fz.r.size(); ++b) EXPECT_EQ(relation_space_dim(f, static_cast<int>(b)), fz.r[b]) << fz.name;
      EXPECT_EQ(normal_splitting(f).twists, fz.normal) << fz.name;
      EXPECT_EQ(tangent_splitting(f).twists, fz.tangent) << fz.name;
    }
  }
}

TEST(Syzygy, TwistedCubicConics) {
  const Field Q = Field::rationals();
  const CurveMap f = monomial_curve(Q, {3, 2, 1, 0});
  const auto basis = relation_basis(f, 2);
  ASSERT_EQ(basis.size(), 2u);
  const HomPoly s2 = HomPoly::monomial(Q, 2, 0), st = HomPoly::monomial(Q, 1, 1, -2), t2 = HomPoly::monomial(Q, 0, 2);
  const HomPoly z(Q, 2);
  const Relation c1 = Relation::from_entries({t2, st, s2, z}), c2 = Relation::from_entries({z, t2, st, s2});
  EXPECT_TRUE(verify_relation(f, c1));
  EXPECT_TRUE(verify_relation(f, c2));
  // both conics lie in the span of the computed basis
  IncrementalBasis span(Q, relation_to_vector(c1).size());
  for (const auto& a : basis) {
    EXPECT_TRUE(verify_relation(f, a));
    span.insert(relation_to_vector(a));
  }
  EXPECT_TRUE(span.contains(relation_to_vector(c1)));
  EXPECT_TRUE(span.contains(relation_to_vector(c2)));
}

TEST(Syzygy, ConicOnPlaneConic) {
  const Field Q = Field::rationals();
  const CurveMap f(Q, {HomPoly::monomial(Q, 2, 0), HomPoly::monomial(Q, 1, 1), HomPoly::monomial(Q, 0, 2)});
  const Relation a = Relation::from_entries(
      {HomPoly::monomial(Q, 0, 2), HomPoly::monomial(Q, 1, 1, -2), HomPoly::monomial(Q, 2, 0)});
  EXPECT_TRUE(verify_relation(f, a));
  EXPECT_TRUE(dual_relation_check(f, a));
}

TEST(Syzygy, DualCheckRejectsNonRelation) {
  const Field Q = Field::rationals();
  const CurveMap f = monomial_curve(Q, {3, 2, 1, 0});
  const Relation a = Relation::from_entries(
      {HomPoly::monomial(Q, 2, 0), HomPoly(Q, 2), HomPoly(Q, 2), HomPoly(Q, 2)});
  EXPECT_FALSE(verify_relation(f, a));
  try {
    dual_relation_check(f, a);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
  }
  const Relation short_tuple = Relation::from_entries({HomPoly::monomial(Q, 2, 0), HomPoly(Q, 2)});
  EXPECT_THROW(verify_relation(f, short_tuple), Error);
}

TEST(Syzygy, ConstantRelationsOnlyForDegenerate) {
  const Field Q = Field::rationals();
  EXPECT_EQ(relation_space_dim(monomial_curve(Q, {4, 3, 1, 0}), 0), 0);
  const HomPoly a = HomPoly::monomial(Q, 3, 0), b = HomPoly::monomial(Q, 0, 3);
  const CurveMap flat(Q, {a, HomPoly::monomial(Q, 2, 1), b, a + b});
  EXPECT_EQ(relation_space_dim(flat, 0), 1);
}

TEST(Syzygy, Classification) {
  const Field Q = Field::rationals();
  const HomPoly z(Q, 2);
  const HomPoly s2 = HomPoly::monomial(Q, 2, 0), t2 = HomPoly::monomial(Q, 0, 2);
  const HomPoly st = HomPoly::monomial(Q, 1, 1);
  EXPECT_EQ(classify_degree2_relation(Relation::from_entries({s2, t2, z, z, z})), ConicClass::DoubleLine);
  EXPECT_EQ(classify_degree2_relation(Relation::from_entries({t2, poly_scale(st, Q.from_int(-2)), s2, z, z})),
            ConicClass::SmoothConic);
  // s times independent linear forms
  const HomPoly s = HomPoly::monomial(Q, 1, 0), t = HomPoly::monomial(Q, 0, 1);
  EXPECT_EQ(classify_degree2_relation(Relation::from_entries({s * s, s * t, s * (s + t), z})),
            ConicClass::CommonRootDegenerate);
  EXPECT_EQ(coefficient_span_rank(Relation::from_entries({s2, t2, z})), 2);
}

TEST(Syzygy, SacchieroRelationsHold) {
  const Field F = Field::prime();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Witness w = sacchiero(F, 5, 8, {2, 3, 4, 5}, seed);
    ASSERT_FALSE(w.relations.empty());
    for (const auto& a : w.relations) {
      EXPECT_TRUE(verify_relation(w.curve, a));
      EXPECT_TRUE(dual_relation_check(w.curve, a));
    }
  }
}

TEST(Syzygy, MonomialMinimalGeneratorsAreThreeTerm) {
  const Field Q = Field::rationals();
  const CurveMap f = monomial_curve(Q, {9, 8, 6, 3, 1, 0});
  for (const auto& a : minimal_generators(f)) {
    int nonzero = 0;
    for (const auto& x : a.entries) nonzero += x.is_zero() ? 0 : 1;
    EXPECT_LE(nonzero, 3);
  }
}

TEST(SyzygyProperty, OracleAgreementOnRandomCurves) {
  const Field F = Field::prime();
  gen::Gen g(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = g.uniform(3, 5), e = g.uniform(n, n + 4);
    const CurveMap f = g.good_curve(F, n, e);
    const auto o = to_oracle(f);
    const KernelProfile prof = normal_profile(f);
    for (std::size_t b = 0; b < prof.dims.size(); ++b) EXPECT_EQ(prof.dims[b], oracle::normal_r(o, static_cast<int>(b)));
    EXPECT_EQ(prof.splitting.twists, oracle::normal_twists(o));
    EXPECT_EQ(tangent_splitting(f).twists, oracle::tangent_twists(o));
  }
}

TEST(SyzygyProperty, OracleAgreementOnMonomialCurves) {
  const Field F = Field::prime();
  gen::Gen g(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.uniform(3, 6), e = g.uniform(n + 1, 13);
    const auto k = g.exponents(n, e, g.coin());
    const CurveMap f = monomial_curve(F, k);
    const auto o = oracle::monomial(k);
    EXPECT_EQ(normal_splitting(f).twists, oracle::normal_twists(o));
    EXPECT_EQ(tangent_splitting(f).twists, oracle::tangent_twists(o));
  }
}

// r(b) = sum_i max(0, b - b_i + 1) for a free kernel
TEST(SyzygyProperty, FreeModuleRamp) {
  const Field F = Field::prime();
  gen::Gen g(43);
  std::vector<CurveMap> curves;
  for (int trial = 0; trial < 10; ++trial) curves.push_back(g.good_curve(F, g.uniform(3, 5), g.uniform(5, 9)));
  curves.push_back(sacchiero(F, 5, 9, {2, 3, 4, 7}, 1).curve);
  curves.push_back(conics_witness(F, 8, 11, 3, 2, 0).curve);
  for (const auto& f : curves) {
    const SplittingType s = normal_splitting(f);
    for (int b = 0; b <= s.twists.back() + 3; ++b) {
      int want = 0;
      for (int bi : s.twists) want += std::max(0, b - bi + 1);
      EXPECT_EQ(relation_space_dim(f, b), want);
    }
  }
}

TEST(SyzygyProperty, TwistSumsAndLowerBound) {
  const Field F = Field::prime();
  gen::Gen g(44);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.uniform(2, 6), e = g.uniform(n, n + 5);
    const CurveMap f = g.good_curve(F, n, e);
    const SplittingType N = normal_splitting(f), T = tangent_splitting(f);
    EXPECT_EQ(N.rank(), n - 1);
    EXPECT_EQ(N.total(), 2 * e - 2);
    EXPECT_EQ(T.rank(), n);
    EXPECT_EQ(T.total(), e);
    EXPECT_GE(N.twists.front(), 2);
    EXPECT_GE(T.twists.front(), 1);
  }
}

TEST(SyzygyProperty, MinimalGeneratorsAndDualIdentities) {
  const Field F = Field::prime();
  gen::Gen g(45);
  for (int trial = 0; trial < 20; ++trial) {
    const CurveMap f = g.good_curve(F, g.uniform(3, 5), g.uniform(5, 9));
    const auto gens = minimal_generators(f);
    const SplittingType N = normal_splitting(f);
    ASSERT_EQ(static_cast<int>(gens.size()), N.rank());
    std::vector<int> degs;
    for (const auto& a : gens) {
      degs.push_back(a.degree);
      EXPECT_TRUE(verify_relation(f, a));
      EXPECT_TRUE(dual_relation_check(f, a));
    }
    EXPECT_EQ(degs, N.twists);
  }
}

TEST(SyzygyProperty, ShiftedRelationsStayRelations) {
  const Field F = Field::prime();
  gen::Gen g(46);
  const CurveMap f = g.good_curve(F, 4, 7);
  for (const auto& a : minimal_generators(f)) {
    const Relation sa = shift_relation(a, g.uniform(0, 3), g.uniform(0, 3));
    EXPECT_TRUE(verify_relation(f, sa));
    EXPECT_EQ(relation_to_vector(vector_to_relation(F, relation_to_vector(sa), 4, sa.degree)), relation_to_vector(sa));
  }
}
