#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "metaleib/error.hpp"
#include "metaleib/permutation.hpp"
#include "metaleib/poly.hpp"
#include "metaleib/scalar.hpp"

namespace metaleib {

/// Ordered generator pair (i, j) of the free K[R_n]-module L_n'. The diagonal
/// pair (i, i) is a_i = [x_i, x_i]; (i, j) with i != j is b_ij = [x_i, x_j].
using QuadKey = std::pair<int, int>;

/// Element of the free metabelian Leibniz algebra L_n in normal form:
///   sum_i linear_i x_i + sum_{(i,j)} [x_i, x_j] . q_ij(r_1, ..., r_n).
/// The representation is unique, so structural equality is algebra equality.
class LeibnizElement {
 public:
  using Quad = std::map<QuadKey, CommPoly>;

  explicit LeibnizElement(std::size_t rank) : rank_(rank), linear_(rank) {}

  static LeibnizElement zero(std::size_t rank) { return LeibnizElement(rank); }

  static LeibnizElement generator(int i, std::size_t rank) {
    Permutation::check_index(i, rank);
    LeibnizElement e(rank);
    e.linear_[i - 1] = Scalar(1);
    return e;
  }

  /// [x_i, x_j] . p
  static LeibnizElement quad_term(int i, int j, const CommPoly& p) {
    LeibnizElement e(p.rank());
    e.add_quad(i, j, p);
    return e;
  }
  static LeibnizElement pair(int i, int j, std::size_t rank) {
    return quad_term(i, j, CommPoly::one(rank));
  }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Scalar>& linear() const noexcept { return linear_; }
  const Scalar& linear(int i) const {
    Permutation::check_index(i, rank_);
    return linear_[i - 1];
  }
  const Quad& quad() const noexcept { return quad_; }
  CommPoly quad(int i, int j) const {
    auto it = quad_.find({i, j});
    return it == quad_.end() ? CommPoly::zero(rank_) : it->second;
  }

  bool is_zero() const { return quad_.empty() && linear_is_zero(); }
  bool linear_is_zero() const {
    for (const auto& c : linear_)
      if (!c.is_zero()) return false;
    return true;
  }
  /// Member of the commutator ideal L_n'.
  bool in_commutator() const { return linear_is_zero(); }
  /// Member of the submodule A_n spanned by the a_i.
  bool in_diagonal_submodule() const {
    if (!linear_is_zero()) return false;
    for (const auto& [k, p] : quad_)
      if (k.first != k.second) return false;
    return true;
  }
  /// Member of the submodule B_n spanned by the b_ij, i != j.
  bool in_offdiagonal_submodule() const {
    if (!linear_is_zero()) return false;
    for (const auto& [k, p] : quad_)
      if (k.first == k.second) return false;
    return true;
  }

  void add_linear(int i, const Scalar& c) {
    Permutation::check_index(i, rank_);
    linear_[i - 1] += c;
  }

  void add_quad(int i, int j, const CommPoly& p) {
    Permutation::check_index(i, rank_);
    Permutation::check_index(j, rank_);
    if (p.rank() != rank_) throw RankMismatch(rank_, p.rank());
    if (p.is_zero()) return;
    auto [it, inserted] = quad_.try_emplace({i, j}, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) quad_.erase(it);
    }
  }

  LeibnizElement operator-() const { return scaled(Scalar(-1)); }
  LeibnizElement& operator+=(const LeibnizElement& o) {
    check_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) linear_[i] += o.linear_[i];
    for (const auto& [k, p] : o.quad_) add_quad(k.first, k.second, p);
    return *this;
  }
  LeibnizElement& operator-=(const LeibnizElement& o) { return *this += -o; }
  friend LeibnizElement operator+(LeibnizElement a, const LeibnizElement& b) { return a += b; }
  friend LeibnizElement operator-(LeibnizElement a, const LeibnizElement& b) { return a -= b; }

  LeibnizElement scaled(const Scalar& s) const {
    LeibnizElement out(rank_);
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < rank_; ++i) out.linear_[i] = linear_[i] * s;
    for (const auto& [k, p] : quad_) out.quad_.emplace(k, p.scaled(s));
    return out;
  }
  friend LeibnizElement operator*(const Scalar& s, const LeibnizElement& e) { return e.scaled(s); }

  friend bool operator==(const LeibnizElement& a, const LeibnizElement& b) {
    return a.rank_ == b.rank_ && a.linear_ == b.linear_ && a.quad_ == b.quad_;
  }

  /// Homogeneous part of degree d, where deg x_i = 1 and deg([x_i,x_j].m) = 2 + deg m.
  LeibnizElement degree_component(int d) const {
    LeibnizElement out(rank_);
    if (d == 1) out.linear_ = linear_;
    if (d >= 2) {
      for (const auto& [k, p] : quad_) {
        auto part = p.homogeneous_component(static_cast<std::uint32_t>(d - 2));
        if (!part.is_zero()) out.quad_.emplace(k, std::move(part));
      }
    }
    return out;
  }

  /// Highest degree present; 0 for the zero element.
  int max_degree() const {
    int d = linear_is_zero() ? 0 : 1;
    for (const auto& [k, p] : quad_) d = std::max(d, 2 + p.degree());
    return d;
  }

  void check_rank(const LeibnizElement& o) const {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
  }

 private:
  std::size_t rank_;
  std::vector<Scalar> linear_;
  Quad quad_;
};

inline LeibnizElement generator(int i, std::size_t rank) { return LeibnizElement::generator(i, rank); }

/// The bracket of L_n, computed on normal forms with the rules
///   [x_i, x_j]          = [x_i,x_j] . 1
///   [[x_j,x_k].p, x_m]  = [x_j,x_k] . p r_m
///   [x_m, [x_j,x_k].p]  = ([x_m,x_j] . r_k - [x_m,x_k] . r_j) p
///   [L_n', L_n']        = 0
inline LeibnizElement bracket(const LeibnizElement& u, const LeibnizElement& v) {
  u.check_rank(v);
  const std::size_t n = u.rank();
  LeibnizElement out(n);
  for (int m = 1; m <= static_cast<int>(n); ++m) {
    const Scalar& beta = v.linear(m);
    if (beta.is_zero()) continue;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      const Scalar& alpha = u.linear(i);
      if (!alpha.is_zero()) out.add_quad(i, m, CommPoly::constant(alpha * beta, n));
    }
    const auto rm = CommPoly::variable(m, n);
    for (const auto& [k, p] : u.quad()) out.add_quad(k.first, k.second, (p * rm).scaled(beta));
  }
  for (int m = 1; m <= static_cast<int>(n); ++m) {
    const Scalar& alpha = u.linear(m);
    if (alpha.is_zero()) continue;
    for (const auto& [key, p] : v.quad()) {
      auto [j, k] = key;
      if (j == k) continue;
      auto ap = p.scaled(alpha);
      out.add_quad(m, j, ap * CommPoly::variable(k, n));
      out.add_quad(m, k, -(ap * CommPoly::variable(j, n)));
    }
  }
  return out;
}

/// Right K[R_n]-module action on L_n': every coefficient polynomial is multiplied by p.
inline LeibnizElement right_act(const LeibnizElement& u, const CommPoly& p) {
  if (u.rank() != p.rank()) throw RankMismatch(u.rank(), p.rank());
  if (!u.in_commutator()) throw DomainError("right K[R_n] action needs an element of L_n' (zero linear part)");
  LeibnizElement out(u.rank());
  for (const auto& [k, q] : u.quad()) out.add_quad(k.first, k.second, q * p);
  return out;
}

/// S_n action x_i -> x_{sigma(i)}; an algebra automorphism of L_n.
inline LeibnizElement act(const Permutation& sigma, const LeibnizElement& u) {
  if (sigma.rank() != u.rank()) throw RankMismatch(sigma.rank(), u.rank());
  LeibnizElement out(u.rank());
  for (int i = 1; i <= static_cast<int>(u.rank()); ++i) {
    const auto& c = u.linear(i);
    if (!c.is_zero()) out.add_linear(sigma(i), c);
  }
  for (const auto& [k, p] : u.quad()) out.add_quad(sigma(k.first), sigma(k.second), act(sigma, p));
  return out;
}

}  // namespace metaleib
