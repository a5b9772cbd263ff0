#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/linalg.hpp"
#include "metaleib/permutation.hpp"
#include "metaleib/poly.hpp"
#include "metaleib/render.hpp"

namespace metaleib {

/// Largest rank accepted by symmetrize (cost n!).
inline constexpr std::size_t kDefaultSymmetrizeBound = 6;
/// Largest number of coordinates accepted by invariant_basis_oracle.
inline constexpr std::size_t kDefaultOracleBound = 4000;

/// Fixed by every permutation: it suffices to test the transpositions (1 k), k = 2..n.
inline bool is_symmetric(const LeibnizElement& u) {
  const auto n = u.rank();
  for (int k = 2; k <= static_cast<int>(n); ++k)
    if (act(Permutation::transposition(1, k, n), u) != u) return false;
  return true;
}

/// Orbit average (1/n!) sum_{sigma in S_n} sigma u. A linear projection onto L_n^{S_n}.
inline LeibnizElement symmetrize(const LeibnizElement& u, std::size_t max_rank = kDefaultSymmetrizeBound) {
  const auto n = u.rank();
  if (n > max_rank)
    throw CostBoundExceeded("symmetrize over S_" + std::to_string(n) + " exceeds bound n <= " + std::to_string(max_rank));
  LeibnizElement acc(n);
  std::size_t count = 0;
  for (const auto& sigma : all_permutations(n)) {
    acc += act(sigma, u);
    ++count;
  }
  return acc.scaled(Scalar(1, static_cast<long>(count)));
}

/// Symmetry test for u in A_n via its coefficients p_i of a_i: p_1 is fixed by
/// the stabilizer of 1 and p_i = (1 i) p_1 for i = 2..n.
inline bool theorem_A_check(const LeibnizElement& u) {
  if (!u.in_diagonal_submodule()) throw DomainError("theorem_A_check: element is not in A_n");
  const auto n = u.rank();
  const auto p1 = u.quad(1, 1);
  if (!is_fixed_by(p1, stabilizer_generators({1}, n))) return false;
  for (int i = 2; i <= static_cast<int>(n); ++i)
    if (u.quad(i, i) != act(Permutation::transposition(1, i, n), p1)) return false;
  return true;
}

/// Symmetry test for u in B_n via its coefficients q_ij of b_ij: q_12 is fixed
/// by the stabilizer of {1, 2} and q_ij = sigma q_12 for a sigma with 1 -> i, 2 -> j.
inline bool theorem_B_check(const LeibnizElement& u) {
  if (!u.in_offdiagonal_submodule()) throw DomainError("theorem_B_check: element is not in B_n");
  const auto n = u.rank();
  if (n < 2) return u.is_zero();
  const auto q12 = u.quad(1, 2);
  if (!is_fixed_by(q12, stabilizer_generators({1, 2}, n))) return false;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      if (i == j || (i == 1 && j == 2)) continue;
      if (u.quad(i, j) != act(Permutation::sending_12_to(i, j, n), q12)) return false;
    }
  return true;
}

/// Parameters (alpha, f, g) of a symmetric element. f must be fixed by the
/// stabilizer of 1, g by the stabilizer of {1, 2}; g is zero when n = 1.
struct SymmetricData {
  std::size_t rank;
  Scalar alpha;
  CommPoly f;
  CommPoly g;

  explicit SymmetricData(std::size_t n) : rank(n), f(n), g(n) {}
  SymmetricData(Scalar a, CommPoly f_, CommPoly g_)
      : rank(f_.rank()), alpha(std::move(a)), f(std::move(f_)), g(std::move(g_)) {
    if (g.rank() != rank) throw RankMismatch(rank, g.rank());
  }

  /// h = (1 2) g, the coefficient of b_21.
  CommPoly h() const { return rank < 2 ? CommPoly(rank) : act(Permutation::transposition(1, 2, rank), g); }

  void validate() const {
    if (f.rank() != rank) throw RankMismatch(rank, f.rank());
    if (g.rank() != rank) throw RankMismatch(rank, g.rank());
    if (!is_fixed_by(f, stabilizer_generators({1}, rank)))
      throw ConstraintViolation("f = " + f.to_string() + " is not fixed by the stabilizer of 1");
    if (rank < 2 && !g.is_zero()) throw ConstraintViolation("g must be zero when n = 1");
    if (!is_fixed_by(g, stabilizer_generators({1, 2}, rank)))
      throw ConstraintViolation("g = " + g.to_string() + " is not fixed by the stabilizer of {1,2}");
  }

  friend bool operator==(const SymmetricData&, const SymmetricData&) = default;
};

/// s = alpha sum x_i + sum_i a_i ((1 i) f) + sum_{i != j} b_ij (sigma_ij g),
/// sigma_ij any permutation with 1 -> i, 2 -> j.
inline LeibnizElement synthesize(const SymmetricData& d) {
  d.validate();
  const auto n = d.rank;
  LeibnizElement s(n);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    s.add_linear(i, d.alpha);
    s.add_quad(i, i, act(Permutation::transposition(1, i, n), d.f));
  }
  if (n >= 2 && !d.g.is_zero()) {
    for (int i = 1; i <= static_cast<int>(n); ++i)
      for (int j = 1; j <= static_cast<int>(n); ++j)
        if (i != j) s.add_quad(i, j, act(Permutation::sending_12_to(i, j, n), d.g));
  }
  return s;
}

/// Reads (alpha, f, g) off the coefficients of x_1, a_1 and b_12, then checks
/// that synthesize reproduces u exactly.
inline SymmetricData decompose_symmetric(const LeibnizElement& u) {
  const auto n = u.rank();
  SymmetricData d(u.linear(1), u.quad(1, 1), n >= 2 ? u.quad(1, 2) : CommPoly(n));
  LeibnizElement rebuilt(n);
  try {
    rebuilt = synthesize(d);
  } catch (const ConstraintViolation& e) {
    throw NotSymmetric(std::string("element is not symmetric: ") + e.what());
  }
  if (rebuilt == u) return d;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    if (rebuilt.linear(i) != u.linear(i))
      throw NotSymmetric("element is not symmetric: coefficient of x" + std::to_string(i) + " is " +
                         u.linear(i).to_string() + ", expected " + rebuilt.linear(i).to_string());
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j)
      if (rebuilt.quad(i, j) != u.quad(i, j))
        throw NotSymmetric("element is not symmetric: entry [x" + std::to_string(i) + ",x" + std::to_string(j) +
                           "] is " + u.quad(i, j).to_string() + ", expected " + rebuilt.quad(i, j).to_string());
  throw NotSymmetric("element is not symmetric");
}

/// Monomial basis of the degree-d homogeneous component of L_n.
inline std::vector<LeibnizElement> degree_basis(std::size_t n, int d) {
  std::vector<LeibnizElement> basis;
  if (d == 1) {
    for (int i = 1; i <= static_cast<int>(n); ++i) basis.push_back(LeibnizElement::generator(i, n));
    return basis;
  }
  if (d < 2) return basis;
  auto monos = monomials_of_degree(n, static_cast<std::uint32_t>(d - 2));
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j)
      for (const auto& m : monos) basis.push_back(LeibnizElement::quad_term(i, j, CommPoly::term(m, Scalar(1))));
  return basis;
}

/// Brute-force basis of the symmetric elements of degree d: solves
/// (1 k) v = v, k = 2..n, over the monomial basis by exact row reduction.
inline std::vector<LeibnizElement> invariant_basis_oracle(std::size_t n, int d,
                                                          std::size_t max_coords = kDefaultOracleBound) {
  if (n < 1 || d < 1) throw DomainError("invariant_basis_oracle needs n >= 1 and d >= 1");
  auto basis = degree_basis(n, d);
  if (basis.size() > max_coords)
    throw CostBoundExceeded("degree-" + std::to_string(d) + " component of L_" + std::to_string(n) + " has " +
                            std::to_string(basis.size()) + " coordinates, bound is " + std::to_string(max_coords));
  // Each basis vector maps to a basis vector under a permutation; record the target column.
  std::map<BasisKey, std::size_t> column;
  auto key_of = [](const LeibnizElement& e) {
    if (!e.linear_is_zero())
      for (int i = 1; i <= static_cast<int>(e.rank()); ++i)
        if (!e.linear(i).is_zero()) return BasisKey{true, {i, 0}, {}};
    const auto& [k, p] = *e.quad().begin();
    return BasisKey{false, k, p.terms().begin()->first.exponents()};
  };
  for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(key_of(basis[c]), c);

  const std::size_t gens = n >= 2 ? n - 1 : 0;
  RationalMatrix system(gens * basis.size(), basis.size());
  for (std::size_t g = 0; g < gens; ++g) {
    auto sigma = Permutation::transposition(1, static_cast<int>(g + 2), n);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      // Column c of (sigma - 1): +1 at the image coordinate, -1 at c.
      std::size_t target = column.at(key_of(act(sigma, basis[c])));
      system(g * basis.size() + target, c) += Scalar(1);
      system(g * basis.size() + c, c) -= Scalar(1);
    }
  }
  std::vector<LeibnizElement> out;
  for (const auto& v : system.nullspace()) {
    LeibnizElement e(n);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) e += basis[c].scaled(v[c]);
    out.push_back(std::move(e));
  }
  return out;
}

/// Spanning set of the degree-d symmetric elements produced by synthesize:
/// alpha sum x_i at d = 1, and one element per orbit-sum basis polynomial for f and g at d >= 2.
inline std::vector<LeibnizElement> synthesized_generators(std::size_t n, int d) {
  std::vector<LeibnizElement> out;
  if (d == 1) {
    SymmetricData data(n);
    data.alpha = Scalar(1);
    out.push_back(synthesize(data));
    return out;
  }
  if (d < 2) return out;
  auto deg = static_cast<std::uint32_t>(d - 2);
  for (auto& f : stabilizer_invariant_basis({1}, n, deg))
    out.push_back(synthesize(SymmetricData(Scalar(0), std::move(f), CommPoly(n))));
  if (n >= 2)
    for (auto& g : stabilizer_invariant_basis({1, 2}, n, deg))
      out.push_back(synthesize(SymmetricData(Scalar(0), CommPoly(n), std::move(g))));
  return out;
}

/// {"n": int, "alpha": "num/den", "f": <poly>, "g": <poly>}
inline Json to_json(const SymmetricData& d) {
  return Json{{"n", d.rank}, {"alpha", d.alpha.to_string()}, {"f", to_json(d.f)}, {"g", to_json(d.g)}};
}

inline SymmetricData symmetric_data_from_json(const Json& j) {
  auto n = j.at("n").get<std::size_t>();
  if (n < 1) throw DomainError("rank must be at least 1");
  const auto& a = j.at("alpha");
  Scalar alpha = a.is_string() ? Scalar::parse(a.get<std::string>()) : Scalar(a.get<long>());
  return SymmetricData(alpha, poly_from_json(j.at("f"), n), poly_from_json(j.at("g"), n));
}

}  // namespace metaleib
