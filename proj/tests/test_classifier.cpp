#include <gtest/gtest.h>

#include "jtype/classifier.hpp"

using namespace jtype;

namespace {

JordanType jt(const char* text, int p) { return JordanType::parse(text, p); }

CohomologyClassDescriptor even_nilpotent(int p, Int dim) {
  CohomologyClassDescriptor d;
  d.p = p;
  d.degree = 2;
  d.nilpotent = true;
  d.dim_L = dim;
  return d;
}

CohomologyClassDescriptor odd(int p, OddBehavior b, int srk) {
  CohomologyClassDescriptor d;
  d.p = p;
  d.degree = 3;
  d.odd_behavior = b;
  d.ambient.srk = srk;
  return d;
}

}  // namespace

TEST(CarlsonSets, EvenNilpotent) {
  auto set = carlson_type_set(even_nilpotent(5, 15));
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set[0].full(), jt("[1]+[4]+2[5]", 5));
  EXPECT_EQ(set_str(set), "{2[5]+[4]+[1]}");
}

TEST(CarlsonSets, EvenNonNilpotent) {
  CohomologyClassDescriptor d;
  d.p = 3;
  d.degree = 2;
  d.dim_L = 6;
  auto set = carlson_type_set(d);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].full(), jt("2[3]", 3));
  EXPECT_EQ(set[1].full(), jt("[1]+[2]+[3]", 3));
}

TEST(CarlsonSets, SymbolicCounts) {
  CohomologyClassDescriptor d;
  d.p = 5;
  d.degree = 4;
  auto set = carlson_type_set(d);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].str(), "d/p[5]");
  EXPECT_EQ(set[1].str(), "[4]+[1]+n[5]");
  EXPECT_THROW(set[1].full(), ValidationError);
}

TEST(CarlsonSets, OddBehaviours) {
  auto mixed = carlson_type_set(odd(5, OddBehavior::Mixed, 1));
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0].str(), "2[4]+m[5]");
  EXPECT_EQ(mixed[1].str(), "[3]+n[5]");
  auto all = carlson_type_set(odd(5, OddBehavior::AllVanish, 1));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].stable, jt("2[4]", 5));
  auto none = carlson_type_set(odd(5, OddBehavior::NoneVanish, 1));
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].stable, jt("[3]", 5));
}

TEST(CarlsonSets, Divisibility) {
  EXPECT_THROW(carlson_type_set(even_nilpotent(5, 14)), ValidationError);
  EXPECT_THROW(carlson_type_set(even_nilpotent(5, 3)), ValidationError);
  EXPECT_THROW(carlson_type_set(even_nilpotent(2, 3)), ValidationError);
}

TEST(Verdicts, RuleTable) {
  Verdict v = carlson_indecomposability(even_nilpotent(5, 15));
  EXPECT_EQ(v.kind, Verdict::Kind::Indecomposable);
  EXPECT_EQ(v.rule, "CNED1");

  EXPECT_EQ(carlson_indecomposability(odd(5, OddBehavior::Mixed, 0)).rule, "COD1.2");
  EXPECT_EQ(carlson_indecomposability(odd(5, OddBehavior::AllVanish, 2)).rule, "COD3");

  auto quotient = odd(5, OddBehavior::AllVanish, 3);
  quotient.ambient.srk_quotient = 1;
  EXPECT_EQ(carlson_indecomposability(quotient).kind, Verdict::Kind::Unknown);
  quotient.ambient.srk_quotient = 2;
  quotient.ambient.srk = 1;
  EXPECT_EQ(carlson_indecomposability(quotient).rule, "COD3");

  auto finite = odd(5, OddBehavior::AllVanish, 1);
  finite.ambient.is_finite_group = true;
  EXPECT_EQ(carlson_indecomposability(finite).rule, "COD5");

  auto none = odd(5, OddBehavior::AllVanish, 1);
  EXPECT_EQ(carlson_indecomposability(none).kind, Verdict::Kind::Unknown);
  EXPECT_EQ(carlson_indecomposability(none).rule, "");
}

TEST(Verdicts, DimensionTest) {
  // nullcone of gl_n: dim = n^2 - n, ambient n^2
  for (int n = 2; n <= 6; ++n) {
    CohomologyClassDescriptor d;
    d.p = 7;
    d.degree = 2;
    d.ambient.equidim = true;
    d.ambient.variety_dim = n * n - n;
    d.ambient.ambient_dim = n * n;
    Verdict v = carlson_indecomposability(d);
    bool fires = 2 * (n * n - n) >= n * n + 3;
    EXPECT_EQ(v.kind == Verdict::Kind::Indecomposable, fires) << n;
    if (fires) EXPECT_EQ(v.rule, "CNN1");
  }
  CohomologyClassDescriptor alt;
  alt.p = 5;
  alt.degree = 2;
  alt.ambient.ambient_dim = 5;
  alt.ambient.min_component_dim = 4;
  EXPECT_EQ(carlson_indecomposability(alt).rule, "CNN1");
  alt.ambient.min_component_dim = 3;
  EXPECT_EQ(carlson_indecomposability(alt).kind, Verdict::Kind::Unknown);
}

TEST(EndoTrivial, Detection) {
  EXPECT_TRUE(endo_trivial({jt("[1]+3[5]", 5)}));
  EXPECT_FALSE(endo_trivial({jt("[2]+3[5]", 5)}));
  EXPECT_TRUE(endo_trivial({jt("[4]", 5), jt("[4]+2[5]", 5)}));
  EXPECT_FALSE(endo_trivial({jt("[4]", 5), jt("[1]", 5)}));
  EXPECT_THROW(endo_trivial({}), ValidationError);
}

TEST(EndoTrivial, Sl2Syzygies) {
  // Omega^n of the 1- and (p-1)-dimensional simples have stable types [1] or [p-1]
  const int p = 5;
  for (int size : {1, p - 1}) {
    JordanType t = JordanType::block(p, size);
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(endo_trivial({t}));
      t = syzygy(t);
    }
  }
}

TEST(EndoTrivial, ComponentPlacement) {
  EXPECT_TRUE(endo_trivial_on_component(TreeClass::parse("A_inf"), 1));
  EXPECT_FALSE(endo_trivial_on_component(TreeClass::parse("A_inf"), 2));
  EXPECT_TRUE(endo_trivial_on_component(TreeClass::parse("A~12"), 1));
}

TEST(Benson, Constraint) {
  EXPECT_EQ(benson_constraint(jt("[3]+2[7]", 7), true).status, BensonCheck::Status::Violation);
  EXPECT_EQ(benson_constraint(jt("[1]", 7), true).status, BensonCheck::Status::Ok);
  EXPECT_EQ(benson_constraint(jt("[2]", 7), false).status, BensonCheck::Status::OkWithCaveat);
  EXPECT_THROW(benson_constraint(jt("2[2]", 7), true), ValidationError);
}

TEST(Sl2Families, PinnedSets) {
  EXPECT_EQ(sl2_family_types(Sl2Family::SL2_1, 5, 0, 2, 3),
            (std::vector<JordanType>{jt("3[5]", 5), jt("[2]+[3]+2[5]", 5)}));
  EXPECT_EQ(sl2_family_types(Sl2Family::SL2_1, 5, 1, 4, 9), (std::vector<JordanType>{jt("[4]+[5]", 5)}));
  EXPECT_EQ(sl2_family_types(Sl2Family::SL2_1_Tr, 5, 0, 2, 10),
            (std::vector<JordanType>{jt("2[5]", 5), jt("[2]+[3]+[5]", 5)}));
  EXPECT_THROW(sl2_family_types(Sl2Family::SL2_1_Tr, 5, 0, 2, 11), ValidationError);
  EXPECT_THROW(sl2_family_types(Sl2Family::SL2_1, 5, 0, 3, 2), ValidationError);
}

TEST(Sl2Families, AllBlocksAtFive) {
  const int p = 5;
  for (int i = 1; i <= (p - 1) / 2; ++i) {
    for (Int ql = 1; ql <= 4; ++ql) {
      auto types = sl2_family_types(Sl2Family::SL2_1, p, 0, i, ql);
      ASSERT_EQ(types.size(), 2u);
      EXPECT_EQ(dimension(types[0]), p * ql);
      EXPECT_EQ(dimension(types[1]), p * ql);
      EXPECT_EQ(stable_part(types[1]), JordanType::block(p, i) + JordanType::block(p, p - i));
    }
  }
}
