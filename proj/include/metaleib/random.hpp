#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/expr.hpp"
#include "metaleib/invariants.hpp"
#include "metaleib/maps.hpp"
#include "metaleib/permutation.hpp"
#include "metaleib/poly.hpp"

namespace metaleib {

/// Seeded generator of random algebra data for property checks. Deterministic
/// for a given seed and call sequence.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  /// Nonzero rational with small numerator and denominator.
  Scalar scalar() {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    return coin(0.7) ? Scalar(num) : Scalar(num, uniform(2, 4));
  }

  Monomial monomial(std::size_t n, std::uint32_t degree) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t k = 0; k < degree; ++k) ++e[uniform(0, static_cast<int>(n) - 1)];
    return Monomial(std::move(e));
  }

  /// Up to `terms` terms of degree <= max_degree.
  CommPoly poly(std::size_t n, int max_degree, int terms = 3) {
    CommPoly p(n);
    int count = uniform(1, terms);
    for (int t = 0; t < count; ++t)
      p.add_term(monomial(n, static_cast<std::uint32_t>(uniform(0, std::max(0, max_degree)))), scalar());
    return p;
  }

  Permutation permutation(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i + 1);
    std::shuffle(img.begin(), img.end(), engine_);
    return Permutation(std::move(img));
  }

  /// Element of L_n of degree <= max_degree (>= 1), usually with a linear part.
  LeibnizElement element(std::size_t n, int max_degree) {
    LeibnizElement u(n);
    for (int i = 1; i <= static_cast<int>(n); ++i)
      if (coin(0.6)) u.add_linear(i, scalar());
    if (max_degree >= 2) u += commutator(n, max_degree);
    return u;
  }

  /// Element of L_n' of degree <= max_degree (>= 2).
  LeibnizElement commutator(std::size_t n, int max_degree, int entries = 3) {
    LeibnizElement u(n);
    int count = uniform(1, entries);
    for (int t = 0; t < count; ++t)
      u.add_quad(index(n), index(n), poly(n, max_degree - 2, 2));
    return u;
  }

  /// Element of A_n (diagonal entries only).
  LeibnizElement diagonal(std::size_t n, int max_degree) {
    LeibnizElement u(n);
    for (int i = 1; i <= static_cast<int>(n); ++i)
      if (coin(0.7)) u.add_quad(i, i, poly(n, max_degree - 2));
    return u;
  }

  /// Element of B_n (off-diagonal entries only).
  LeibnizElement offdiagonal(std::size_t n, int max_degree) {
    LeibnizElement u(n);
    if (n < 2) return u;
    int count = uniform(1, 4);
    for (int t = 0; t < count; ++t) {
      int i = index(n), j = index(n);
      while (j == i) j = index(n);
      u.add_quad(i, j, poly(n, max_degree - 2));
    }
    return u;
  }

  /// Random combination of the orbit-sum basis fixed by the stabilizer of `fixed`,
  /// over degrees 0..max_degree.
  CommPoly stabilizer_invariant(const std::set<int>& fixed, std::size_t n, int max_degree) {
    CommPoly p(n);
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& b : stabilizer_invariant_basis(fixed, n, static_cast<std::uint32_t>(d)))
        if (coin(0.4)) p += b.scaled(scalar());
    return p;
  }

  /// Valid SymmetricData with f, g of degree <= max_poly_degree.
  SymmetricData symmetric_data(std::size_t n, int max_poly_degree, bool with_linear = true) {
    SymmetricData d(n);
    if (with_linear && coin()) d.alpha = scalar();
    d.f = stabilizer_invariant({1}, n, max_poly_degree);
    if (n >= 2) d.g = stabilizer_invariant({1, 2}, n, max_poly_degree);
    return d;
  }

  /// Symmetric element of A_n: a_i . (1 i) f with f fixed by the stabilizer of 1.
  LeibnizElement symmetric_diagonal(std::size_t n, int max_degree) {
    return synthesize(SymmetricData(Scalar(0), stabilizer_invariant({1}, n, max_degree - 2), CommPoly(n)));
  }

  /// Symmetric element of B_n built from g fixed by the stabilizer of {1, 2}.
  LeibnizElement symmetric_offdiagonal(std::size_t n, int max_degree) {
    if (n < 2) return LeibnizElement(n);
    return synthesize(SymmetricData(Scalar(0), CommPoly(n), stabilizer_invariant({1, 2}, n, max_degree - 2)));
  }

  /// Adds scalar . monomial to a single coefficient: a diagonal entry (i, i)
  /// when `diagonal`, otherwise an off-diagonal one.
  LeibnizElement perturbed(const LeibnizElement& u, bool diagonal, int max_degree) {
    const auto n = u.rank();
    int i = index(n), j = i;
    if (!diagonal)
      while (j == i) j = index(n);
    auto m = monomial(n, static_cast<std::uint32_t>(uniform(0, std::max(0, max_degree - 2))));
    LeibnizElement out = u;
    out.add_quad(i, j, CommPoly::term(m, scalar()));
    return out;
  }

  /// Annihilator element built from squares, symmetric sums and a_i . p terms.
  LeibnizElement annihilator(std::size_t n, int max_degree) {
    LeibnizElement u(n);
    int count = uniform(1, 3);
    for (int t = 0; t < count; ++t) {
      switch (uniform(0, 2)) {
        case 0: {
          auto v = element(n, std::max(1, max_degree / 2));
          u += ann_constructor(AnnKind::square, v, v).scaled(scalar());
          break;
        }
        case 1: {
          auto v = element(n, std::max(1, max_degree / 2));
          auto w = element(n, std::max(1, max_degree / 2));
          u += ann_constructor(AnnKind::sym_sum, v, w).scaled(scalar());
          break;
        }
        default: {
          int i = index(n);
          u.add_quad(i, i, poly(n, max_degree - 2));
        }
      }
    }
    return u;
  }

  /// Random bracket expression of the given nesting depth.
  BracketExpr expr(std::size_t n, int depth) {
    if (depth <= 0) return BracketExpr::gen(index(n));
    switch (uniform(0, 5)) {
      case 0:
        return BracketExpr::gen(index(n));
      case 1:
        return BracketExpr::scaled(scalar(), expr(n, depth - 1));
      case 2:
        return BracketExpr::sum({expr(n, depth - 1), expr(n, depth - 1)});
      case 3:
        return BracketExpr::right_adj(expr(n, depth - 1), index(n));
      default:
        return BracketExpr::bracket(expr(n, depth - 1), expr(n, depth - 1));
    }
  }

  /// Rewrites `e` into a different tree with the same value in L_n by applying
  /// the Leibniz identity in both directions, the square identity
  /// [x,y] = [x+y,x+y] - [x,x] - [y,y] - [y,x], and inserting metabelian zeros.
  BracketExpr equivalent(const BracketExpr& e, std::size_t n, int budget = 3) {
    int left = budget;
    return rewrite(e, n, left);
  }

  int index(std::size_t n) { return uniform(1, static_cast<int>(n)); }
  std::mt19937_64& engine() { return engine_; }

 private:
  BracketExpr rewrite(const BracketExpr& e, std::size_t n, int& budget) {
    using E = BracketExpr;
    return std::visit(
        [&](const auto& x) -> BracketExpr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, E::Generator>) {
            if (budget > 0 && coin(0.2)) {
              --budget;
              // x + [[a,b],[c,d]] with the metabelian zero
              auto zero = E::bracket(E::bracket(E::gen(index(n)), E::gen(index(n))),
                                     E::bracket(E::gen(index(n)), E::gen(index(n))));
              return E::sum({e, E::scaled(scalar(), zero)});
            }
            return e;
          } else if constexpr (std::is_same_v<T, E::Scaled>) {
            return E::scaled(x.coef, rewrite(x.inner, n, budget));
          } else if constexpr (std::is_same_v<T, E::Sum>) {
            std::vector<E> terms;
            for (const auto& t : x.terms) terms.push_back(rewrite(t, n, budget));
            return E::sum(std::move(terms));
          } else if constexpr (std::is_same_v<T, E::RightAdj>) {
            auto inner = rewrite(x.inner, n, budget);
            if (budget > 0 && coin(0.5)) {
              --budget;
              return E::bracket(inner, E::gen(x.adj));
            }
            return E::right_adj(inner, x.adj);
          } else {
            auto a = rewrite(x.left, n, budget);
            auto b = rewrite(x.right, n, budget);
            if (budget <= 0 || coin(0.3)) return E::bracket(a, b);
            --budget;
            const auto* right = std::get_if<E::Bracket>(&b.node());
            const auto* leftb = std::get_if<E::Bracket>(&a.node());
            int choice = uniform(0, 2);
            if (choice == 0 && right) {
              // [a,[y,z]] = [[a,y],z] - [[a,z],y]
              return E::sum({E::bracket(E::bracket(a, right->left), right->right),
                             E::scaled(Scalar(-1), E::bracket(E::bracket(a, right->right), right->left))});
            }
            if (choice == 1 && leftb) {
              // [[p,q],b] = [[p,b],q] + [p,[q,b]]
              return E::sum({E::bracket(E::bracket(leftb->left, b), leftb->right),
                             E::bracket(leftb->left, E::bracket(leftb->right, b))});
            }
            // [a,b] = [a+b,a+b] - [a,a] - [b,b] - [b,a]
            auto s = E::sum({a, b});
            return E::sum({E::bracket(s, s), E::scaled(Scalar(-1), E::bracket(a, a)),
                           E::scaled(Scalar(-1), E::bracket(b, b)), E::scaled(Scalar(-1), E::bracket(b, a))});
          }
        },
        e.node());
  }

  std::mt19937_64 engine_;
};

}  // namespace metaleib
