#include <gtest/gtest.h>

#include "metaleib/element.hpp"
#include "metaleib/expr.hpp"
#include "metaleib/parse.hpp"
#include "metaleib/random.hpp"
#include "metaleib/render.hpp"
#include "word_oracle.hpp"

using namespace metaleib;

namespace {

LeibnizElement E(const char* text, std::size_t n) { return parse_element(text, n); }
LeibnizElement x(int i, std::size_t n) { return LeibnizElement::generator(i, n); }
CommPoly P(const char* text, std::size_t n) { return parse_poly(text, n); }
LeibnizElement q(int i, int j, const char* poly, std::size_t n) { return LeibnizElement::quad_term(i, j, P(poly, n)); }

LeibnizElement oracle_bracket(const LeibnizElement& u, const LeibnizElement& v) {
  return test::to_element(test::bracket_sums(test::from_element(u), test::from_element(v)), u.rank());
}

}  // namespace

TEST(Generator, Examples) {
  auto x1 = generator(1, 2);
  EXPECT_EQ(x1.linear(1), Scalar(1));
  EXPECT_EQ(x1.linear(2), Scalar(0));
  EXPECT_TRUE(x1.quad().empty());
  EXPECT_EQ(to_text(generator(3, 3)), "x3");
  EXPECT_THROW(generator(4, 3), IndexOutOfRange);
  EXPECT_THROW(generator(0, 3), IndexOutOfRange);
}

TEST(Bracket, Examples) {
  const std::size_t n4 = 4;
  EXPECT_EQ(bracket(x(1, 2), x(1, 2)), LeibnizElement::pair(1, 1, 2));
  EXPECT_EQ(bracket(bracket(x(1, 3), x(2, 3)), x(3, 3)), q(1, 2, "r3", 3));
  EXPECT_EQ(bracket(x(1, 3), bracket(x(2, 3), x(3, 3))), q(1, 2, "r3", 3) - q(1, 3, "r2", 3));
  EXPECT_TRUE(bracket(bracket(x(1, n4), x(2, n4)), bracket(x(3, n4), x(4, n4))).is_zero());
  EXPECT_TRUE(bracket(x(1, 2), LeibnizElement::pair(2, 2, 2)).is_zero());
  EXPECT_THROW(bracket(x(1, 2), x(1, 3)), RankMismatch);
}

TEST(Bracket, SquareOfGeneratorKillsDiagonalByWordExpansion) {
  // [x1, [x2, x2]] unfolds to [[x1,x2],x2] - [[x1,x2],x2] = 0 without the hard-coded rule.
  auto a2 = LeibnizElement::pair(2, 2, 2);
  EXPECT_TRUE(oracle_bracket(x(1, 2), a2).is_zero());
  EXPECT_TRUE(oracle_bracket(x(1, 3), q(2, 2, "r1r3", 3)).is_zero());
  EXPECT_EQ(oracle_bracket(x(1, 3), LeibnizElement::pair(2, 3, 3)), q(1, 2, "r3", 3) - q(1, 3, "r2", 3));
}

TEST(Bracket, AgreesWithWordExpansionOracle) {
  RandomSource rng(11);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto u = rng.element(n, 4), v = rng.element(n, 4);
    EXPECT_EQ(bracket(u, v), oracle_bracket(u, v)) << "u = " << u << ", v = " << v;
  }
}

TEST(RightAct, Examples) {
  const std::size_t n = 3;
  auto b12 = LeibnizElement::pair(1, 2, n);
  EXPECT_EQ(right_act(b12, P("r3", n)), q(1, 2, "r3", n));
  auto u = q(1, 2, "r1 - 2*r3", n) + q(3, 3, "1/2", n);
  EXPECT_EQ(right_act(u, CommPoly::one(n)), u);
  EXPECT_EQ(right_act(b12, P("r1 + r2", n)), bracket(b12, x(1, n)) + bracket(b12, x(2, n)));
  EXPECT_THROW(right_act(x(1, n), P("r1", n)), DomainError);
  EXPECT_THROW(right_act(b12, P("r1", 2)), RankMismatch);
}

TEST(ElementAct, Examples) {
  auto s12 = Permutation::transposition(1, 2, 2);
  EXPECT_EQ(act(s12, LeibnizElement::pair(1, 2, 2)), LeibnizElement::pair(2, 1, 2));
  EXPECT_EQ(act(s12, q(1, 1, "r2", 2)), q(2, 2, "r1", 2));
  auto u = E("3*x1 + [x1,x2].r1.r2 - [x2,x2]", 2);
  EXPECT_EQ(act(Permutation::identity(2), u), u);
  EXPECT_THROW(act(Permutation::identity(3), u), RankMismatch);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(E("[x1+x2, x1]", 2), LeibnizElement::pair(1, 1, 2) + LeibnizElement::pair(2, 1, 2));
  EXPECT_TRUE(E("[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]", 3).is_zero());
  EXPECT_TRUE(E("[x1,x2] + [x2,x1] - [x1+x2,x1+x2] + [x1,x1] + [x2,x2]", 2).is_zero());
  EXPECT_THROW(normalize(BracketExpr::gen(3), 2), IndexOutOfRange);
  EXPECT_THROW(normalize(BracketExpr::right_adj(BracketExpr::gen(1), 5), 2), IndexOutOfRange);
}

TEST(DegreeComponent, Examples) {
  auto u = x(1, 3) + q(1, 2, "r3", 3);
  EXPECT_EQ(u.degree_component(1), x(1, 3));
  EXPECT_EQ(u.degree_component(3), q(1, 2, "r3", 3));
  EXPECT_TRUE(LeibnizElement::pair(1, 1, 3).degree_component(5).is_zero());
}

class ElementProperties : public ::testing::Test {
 protected:
  RandomSource rng{3};
};

TEST_F(ElementProperties, LeibnizAndMetabelianIdentities) {
  for (int it = 0; it < 200; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto u = rng.element(n, 4), v = rng.element(n, 4), w = rng.element(n, 4);
    EXPECT_EQ(bracket(bracket(u, v), w), bracket(bracket(u, w), v) + bracket(u, bracket(v, w)));
    auto c1 = rng.commutator(n, 4), c2 = rng.commutator(n, 4);
    EXPECT_TRUE(bracket(c1, c2).is_zero());
    auto xm = x(rng.index(n), n);
    EXPECT_EQ(bracket(bracket(u, v), xm), bracket(bracket(u, xm), v) + bracket(u, bracket(v, xm)));
  }
}

TEST_F(ElementProperties, BilinearAndModuleAction) {
  for (int it = 0; it < 200; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto u = rng.element(n, 4), v = rng.element(n, 4), w = rng.element(n, 4);
    auto s = rng.scalar();
    EXPECT_EQ(bracket(u + v.scaled(s), w), bracket(u, w) + bracket(v, w).scaled(s));
    EXPECT_EQ(bracket(w, u + v.scaled(s)), bracket(w, u) + bracket(w, v).scaled(s));
    auto c = rng.commutator(n, 4);
    auto p = rng.poly(n, 2), r = rng.poly(n, 2);
    EXPECT_EQ(right_act(c, p * r), right_act(right_act(c, p), r));
    int m = rng.index(n);
    EXPECT_EQ(right_act(c, CommPoly::variable(m, n)), bracket(c, x(m, n)));
  }
}

TEST_F(ElementProperties, PermutationsActByAutomorphisms) {
  for (int it = 0; it < 200; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto u = rng.element(n, 4), v = rng.element(n, 4);
    auto s = rng.permutation(n), t = rng.permutation(n);
    EXPECT_EQ(act(s, bracket(u, v)), bracket(act(s, u), act(s, v)));
    EXPECT_EQ(act(s * t, u), act(s, act(t, u)));
  }
}

TEST_F(ElementProperties, DegreeComponentsSumBack) {
  for (int it = 0; it < 100; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto u = rng.element(n, 5);
    LeibnizElement sum(n);
    for (int d = 1; d <= u.max_degree(); ++d) sum += u.degree_component(d);
    EXPECT_EQ(sum, u);
  }
}

TEST_F(ElementProperties, EquivalentExpressionsNormalizeEqually) {
  for (int it = 0; it < 200; ++it) {
    std::size_t n = rng.uniform(1, 4);
    auto e = rng.expr(n, 3);
    auto e2 = rng.equivalent(e, n, 4);
    EXPECT_EQ(normalize(e, n), normalize(e2, n)) << e << " vs " << e2;
  }
}

TEST_F(ElementProperties, DistinctCoefficientMapsStayDistinct) {
  for (int it = 0; it < 100; ++it) {
    std::size_t n = rng.uniform(2, 4);
    auto u = rng.commutator(n, 4);
    auto v = u;
    v.add_quad(rng.index(n), rng.index(n), CommPoly::term(rng.monomial(n, rng.uniform(0, 2)), rng.scalar()));
    ASSERT_NE(u.quad(), v.quad());
    EXPECT_NE(normalize(parse_expr(to_text(u), n), n), normalize(parse_expr(to_text(v), n), n));
  }
}
