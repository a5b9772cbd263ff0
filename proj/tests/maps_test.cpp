#include <gtest/gtest.h>

#include "metaleib/maps.hpp"
#include "metaleib/parse.hpp"
#include "metaleib/random.hpp"
#include "metaleib/render.hpp"

using namespace metaleib;

namespace {
LeibnizElement E(const char* text, std::size_t n) { return parse_element(text, n); }
}  // namespace

TEST(Annihilator, Examples) {
  EXPECT_TRUE(is_in_annihilator(E("[x1,x1]", 2)));
  EXPECT_TRUE(is_in_annihilator(E("[x1,x2] + [x2,x1]", 2)));
  EXPECT_FALSE(is_in_annihilator(E("[x1,x2]", 2)));
  // [x1, b_12] = a_1 r2 - b_12 r1
  EXPECT_EQ(bracket(generator(1, 2), E("[x1,x2]", 2)), E("[x1,x1].r2 - [x1,x2].r1", 2));
  EXPECT_TRUE(is_in_annihilator(E("[x1,x2].r3 + [x2,x3].r1 + [x3,x1].r2", 3)));
  for (int m = 1; m <= 3; ++m)
    EXPECT_TRUE(bracket(generator(m, 3), E("[x1,x2].r3 + [x2,x3].r1 + [x3,x1].r2", 3)).is_zero());
  EXPECT_FALSE(is_in_annihilator(E("x1", 2)));
  EXPECT_TRUE(is_in_annihilator(LeibnizElement::zero(3)));
}

TEST(Annihilator, Constructors) {
  auto x1 = generator(1, 2), x2 = generator(2, 2);
  EXPECT_EQ(ann_constructor(AnnKind::square, x1, x1), E("[x1,x1]", 2));
  EXPECT_EQ(ann_constructor(AnnKind::sym_sum, x1, x2), E("[x1,x2] + [x2,x1]", 2));
  EXPECT_EQ(ann_constructor(AnnKind::square, x1 + x2, x1), E("[x1,x1] + [x2,x2] + [x1,x2] + [x2,x1]", 2));
  EXPECT_THROW(ann_constructor(AnnKind::sym_sum, x1, generator(1, 3)), RankMismatch);
  RandomSource rng(9);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto v = rng.element(n, 3), w = rng.element(n, 3);
    EXPECT_TRUE(is_in_annihilator(ann_constructor(AnnKind::square, v, v)));
    EXPECT_TRUE(is_in_annihilator(ann_constructor(AnnKind::sym_sum, v, w)));
    int i = rng.index(n);
    EXPECT_TRUE(is_in_annihilator(LeibnizElement::quad_term(i, i, rng.poly(n, 3))));
  }
}

TEST(InnerAuto, MakeAndApply) {
  auto psi = inner_make(E("[x1,x2]", 2));
  EXPECT_EQ(psi.generator(), E("[x1,x2]", 2));
  auto id = inner_make(LeibnizElement::zero(3));
  EXPECT_EQ(inner_apply(id, E("x1 + [x2,x3]", 3)), E("x1 + [x2,x3]", 3));
  EXPECT_THROW(inner_make(generator(1, 2)), DomainError);

  EXPECT_EQ(inner_apply(inner_make(E("[x1,x1]", 2)), generator(2, 2)), generator(2, 2));
  EXPECT_EQ(inner_apply(inner_make(E("[x1,x2]", 3)), generator(3, 3)), E("x3 + [x3,x1].r2 - [x3,x2].r1", 3));
  RandomSource rng(4);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto c = rng.commutator(n, 4);
    EXPECT_EQ(inner_apply(inner_make(rng.commutator(n, 4)), c), c);
  }
  EXPECT_THROW(inner_apply(psi, generator(1, 3)), RankMismatch);
}

TEST(InnerAuto, ComposeAndInverse) {
  auto p12 = inner_make(E("[x1,x2]", 2)), p21 = inner_make(E("[x2,x1]", 2));
  auto both = inner_compose(p12, p21);
  EXPECT_EQ(both.generator(), E("[x1,x2] + [x2,x1]", 2));
  EXPECT_TRUE(both.acts_as_identity());
  EXPECT_EQ(inner_apply(both, E("3*x1 - x2", 2)), E("3*x1 - x2", 2));
  EXPECT_EQ(inner_compose(p12, inner_inverse(p12)), InnerAuto::identity(2));
  EXPECT_EQ(inner_compose(p12, p21), inner_compose(p21, p12));
  EXPECT_THROW(inner_compose(p12, InnerAuto::identity(3)), RankMismatch);
}

TEST(PreservesSymmetric, Examples) {
  EXPECT_TRUE(preserves_symmetric(E("[x1,x2] + [x2,x1]", 2)));
  EXPECT_FALSE(preserves_symmetric(E("[x1,x2]", 2)));
  EXPECT_FALSE(is_in_annihilator(E("[x1,x2] - [x2,x1]", 2)));
  auto s = E("x1 + x2", 2);
  EXPECT_FALSE(is_symmetric(inner_apply(inner_make(E("[x1,x2]", 2)), s)));
  EXPECT_TRUE(preserves_symmetric(symmetrize(E("[x1,x2].r3", 3))));
  EXPECT_TRUE(preserves_symmetric(E("[x1,x1]", 3)));
  EXPECT_THROW(preserves_symmetric(E("x1", 2)), DomainError);
}

TEST(DecomposePreserving, Examples) {
  auto u = E("[x1,x2] + [x2,x1]", 2);
  auto parts = decompose_preserving(u);
  EXPECT_TRUE(parts.annihilator_part.is_zero());
  EXPECT_EQ(parts.symmetric_part, u);

  auto a1 = E("[x1,x1]", 2);
  auto split = decompose_preserving(a1);
  EXPECT_EQ(split.symmetric_part, E("1/2*[x1,x1] + 1/2*[x2,x2]", 2));
  EXPECT_EQ(split.annihilator_part, E("1/2*[x1,x1] - 1/2*[x2,x2]", 2));
  EXPECT_TRUE(is_in_annihilator(split.annihilator_part));
  EXPECT_TRUE(is_symmetric(split.symmetric_part));

  EXPECT_THROW(decompose_preserving(E("[x1,x2]", 2)), NotSymmetric);
}

class MapProperties : public ::testing::Test {
 protected:
  RandomSource rng{31};
};

TEST_F(MapProperties, EndomorphismAndGroupLaws) {
  for (int it = 0; it < 200; ++it) {
    std::size_t n = rng.uniform(1, 4);
    InnerAuto psi(rng.commutator(n, 4)), chi(rng.commutator(n, 4)), phi(rng.commutator(n, 4));
    auto v = rng.element(n, 4), w = rng.element(n, 4);
    EXPECT_EQ(psi(bracket(v, w)), bracket(psi(v), psi(w)));
    EXPECT_EQ((psi * chi)(v), psi(chi(v)));
    EXPECT_EQ((psi * chi) * phi, psi * (chi * phi));
    EXPECT_EQ(psi * chi, chi * psi);
    EXPECT_EQ(psi.inverse()(psi(v)), v);
  }
}

TEST_F(MapProperties, AnnihilatorIsAnIdeal) {
  for (int it = 0; it < 150; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto a = rng.annihilator(n, 4);
    auto v = rng.element(n, 3);
    ASSERT_TRUE(is_in_annihilator(a));
    EXPECT_TRUE(bracket(v, a).is_zero());
    EXPECT_TRUE(is_in_annihilator(bracket(a, v)));
    EXPECT_TRUE(is_in_annihilator(act(rng.permutation(n), a)));
  }
}

TEST_F(MapProperties, PreservationCriterionBothDirections) {
  for (int it = 0; it < 100; ++it) {
    std::size_t n = rng.uniform(2, 4);
    auto u = rng.annihilator(n, 4) + synthesize(rng.symmetric_data(n, 2, false));
    ASSERT_TRUE(preserves_symmetric(u)) << u;
    InnerAuto psi(u);
    for (int k = 0; k < 10; ++k) EXPECT_TRUE(is_symmetric(psi(synthesize(rng.symmetric_data(n, 2)))));
    auto parts = decompose_preserving(u);
    EXPECT_EQ(parts.annihilator_part + parts.symmetric_part, u);
    EXPECT_TRUE(is_in_annihilator(parts.annihilator_part));
    EXPECT_TRUE(is_symmetric(parts.symmetric_part));

    auto bad = rng.commutator(n, 4);
    if (preserves_symmetric(bad)) continue;
    SymmetricData lin(n);
    lin.alpha = Scalar(1);
    EXPECT_FALSE(is_symmetric(InnerAuto(bad)(synthesize(lin)))) << bad;
  }
}
