#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "metaleib/error.hpp"
#include "metaleib/permutation.hpp"
#include "metaleib/scalar.hpp"

namespace metaleib {

/// Commutative monomial r_1^{e_1} ... r_n^{e_n}; exponent of r_i at position i - 1.
class Monomial {
 public:
  explicit Monomial(std::size_t rank) : exps_(rank, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(int i, std::size_t rank) {
    Permutation::check_index(i, rank);
    Monomial m(rank);
    m.exps_[i - 1] = 1;
    return m;
  }

  std::size_t rank() const noexcept { return exps_.size(); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint32_t exponent(int i) const { return exps_.at(i - 1); }
  std::uint32_t degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }
  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
    Monomial out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
    return out;
  }

  /// Exponent at position sigma(i) becomes the input exponent at i.
  Monomial permuted(const Permutation& sigma) const {
    if (sigma.rank() != rank()) throw RankMismatch(sigma.rank(), rank());
    Monomial out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.exps_[sigma.images()[i] - 1] = exps_[i];
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "r1^2r2"; the unit monomial renders as "1".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (exps_[i] == 0) continue;
      out += "r" + std::to_string(i + 1);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, highest term first: larger total degree
/// precedes, ties broken by the larger exponent of r_1, then r_2, ...
struct GradedLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

/// Exact polynomial in K[r_1..r_n] over the rationals. Never stores a zero coefficient.
class CommPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexFirst>;

  explicit CommPoly(std::size_t rank) : rank_(rank) {}

  static CommPoly zero(std::size_t rank) { return CommPoly(rank); }
  static CommPoly constant(const Scalar& c, std::size_t rank) {
    CommPoly p(rank);
    p.add_term(Monomial(rank), c);
    return p;
  }
  static CommPoly one(std::size_t rank) { return constant(Scalar(1), rank); }
  static CommPoly variable(int i, std::size_t rank) {
    CommPoly p(rank);
    p.add_term(Monomial::variable(i, rank), Scalar(1));
    return p;
  }
  static CommPoly term(const Monomial& m, const Scalar& c) {
    CommPoly p(m.rank());
    p.add_term(m, c);
    return p;
  }

  std::size_t rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (m.rank() != rank_) throw RankMismatch(rank_, m.rank());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CommPoly homogeneous_component(std::uint32_t degree) const {
    CommPoly out(rank_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
  }

  CommPoly operator-() const {
    CommPoly out(rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  CommPoly& operator+=(const CommPoly& o) {
    check_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    check_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    a.check_rank(b);
    CommPoly out(a.rank_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }

  CommPoly scaled(const Scalar& s) const {
    CommPoly out(rank_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Text form "3/2*r1^2r2 - r3"; zero prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool negative = c.sign() < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      Scalar mag = negative ? -c : c;
      if (m.is_one()) {
        out += mag.to_string();
      } else {
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += m.to_string();
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CommPoly& p) { return os << p.to_string(); }

  void check_rank(const CommPoly& o) const {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
  }

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Variable-permuting action: r_i -> r_{sigma(i)}. A ring automorphism of K[R_n].
inline CommPoly act(const Permutation& sigma, const CommPoly& p) {
  if (sigma.rank() != p.rank()) throw RankMismatch(sigma.rank(), p.rank());
  CommPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) out.add_term(m.permuted(sigma), c);
  return out;
}

enum class SymmetricKind { power_sum, elementary };

/// p_k = sum r_i^k or e_k = sum_{i_1 < ... < i_k} r_{i_1} ... r_{i_k}, for 1 <= k <= n.
inline CommPoly symmetric_generator(SymmetricKind kind, int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw DomainError("generator index k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  CommPoly out(n);
  if (kind == SymmetricKind::power_sum) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e(n, 0);
      e[i] = static_cast<std::uint32_t>(k);
      out.add_term(Monomial(e), Scalar(1));
    }
    return out;
  }
  // Elementary: iterate over 0/1 selection vectors with exactly k ones.
  std::vector<std::uint32_t> sel(n, 0);
  std::fill(sel.begin(), sel.begin() + k, 1u);
  do {
    out.add_term(Monomial(sel), Scalar(1));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

/// Adjacent transpositions of the complement of `fixed` (sorted). They generate
/// the pointwise stabilizer of `fixed` in S_n; empty when the complement has
/// fewer than two elements.
inline std::vector<Permutation> stabilizer_generators(const std::set<int>& fixed, std::size_t n) {
  std::vector<int> free;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    if (!fixed.contains(i)) free.push_back(i);
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k < free.size(); ++k)
    gens.push_back(Permutation::transposition(free[k - 1], free[k], n));
  return gens;
}

inline bool is_fixed_by(const CommPoly& p, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (act(g, p) != p) return false;
  return true;
}

/// All monomials of total degree d in n variables, in graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> e(n, 0);
  // Recursive composition enumeration, first coordinate largest first.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Orbit sums of degree-d monomials under the pointwise stabilizer of `fixed`.
/// They form a basis of the degree-d polynomials fixed by that subgroup.
inline std::vector<CommPoly> stabilizer_invariant_basis(const std::set<int>& fixed, std::size_t n,
                                                        std::uint32_t d) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!fixed.contains(static_cast<int>(i + 1))) free.push_back(i);
  std::vector<CommPoly> out;
  for (const auto& m : monomials_of_degree(n, d)) {
    std::vector<std::uint32_t> sub;
    for (auto i : free) sub.push_back(m.exponents()[i]);
    // One representative per orbit: exponents on the free positions non-increasing.
    if (!std::is_sorted(sub.begin(), sub.end(), std::greater<>())) continue;
    CommPoly orbit(n);
    std::sort(sub.begin(), sub.end());
    do {
      auto e = m.exponents();
      for (std::size_t k = 0; k < free.size(); ++k) e[free[k]] = sub[k];
      orbit.add_term(Monomial(e), Scalar(1));
    } while (std::next_permutation(sub.begin(), sub.end()));
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace metaleib
