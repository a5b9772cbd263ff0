#pragma once

#include <cstddef>
#include <utility>

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/invariants.hpp"
#include "metaleib/permutation.hpp"

namespace metaleib {

/// u lies in Ann(L_n) iff its right adjoint action vanishes. For u in L_n' it is
/// enough to test the generators x_m, since [L_n', u] = 0 already.
inline bool is_in_annihilator(const LeibnizElement& u) {
  if (!u.in_commutator()) return false;
  for (int m = 1; m <= static_cast<int>(u.rank()); ++m)
    if (!bracket(LeibnizElement::generator(m, u.rank()), u).is_zero()) return false;
  return true;
}

enum class AnnKind { square, sym_sum };

/// [v, v] or [v, w] + [w, v].
inline LeibnizElement ann_constructor(AnnKind kind, const LeibnizElement& v, const LeibnizElement& w) {
  if (kind == AnnKind::square) return bracket(v, v);
  v.check_rank(w);
  return bracket(v, w) + bracket(w, v);
}

/// psi_u = exp(ad u) = 1 + ad u for u in L_n', where ad u (v) = [v, u].
class InnerAuto {
 public:
  explicit InnerAuto(LeibnizElement u) : u_(std::move(u)) {
    if (!u_.in_commutator()) throw DomainError("inner automorphism needs u in L_n' (zero linear part)");
  }

  static InnerAuto identity(std::size_t n) { return InnerAuto(LeibnizElement(n)); }

  const LeibnizElement& generator() const noexcept { return u_; }
  std::size_t rank() const noexcept { return u_.rank(); }

  LeibnizElement operator()(const LeibnizElement& v) const { return v + bracket(v, u_); }

  /// psi_{u1} psi_{u2} = psi_{u1 + u2}.
  friend InnerAuto operator*(const InnerAuto& a, const InnerAuto& b) { return InnerAuto(a.u_ + b.u_); }
  InnerAuto inverse() const { return InnerAuto(-u_); }

  /// Same map on L_n: the generators differ by an annihilator element.
  bool acts_as(const InnerAuto& o) const { return is_in_annihilator(u_ - o.u_); }
  bool acts_as_identity() const { return is_in_annihilator(u_); }

  friend bool operator==(const InnerAuto&, const InnerAuto&) = default;

 private:
  LeibnizElement u_;
};

inline InnerAuto inner_make(const LeibnizElement& u) { return InnerAuto(u); }
inline LeibnizElement inner_apply(const InnerAuto& psi, const LeibnizElement& v) {
  psi.generator().check_rank(v);
  return psi(v);
}
inline InnerAuto inner_compose(const InnerAuto& a, const InnerAuto& b) {
  a.generator().check_rank(b.generator());
  return a * b;
}
inline InnerAuto inner_inverse(const InnerAuto& a) { return a.inverse(); }

/// psi_u maps L_n^{S_n} into itself iff u - (1 k) u lies in Ann(L_n) for k = 2..n.
inline bool preserves_symmetric(const LeibnizElement& u) {
  if (!u.in_commutator()) throw DomainError("preserves_symmetric needs u in L_n' (zero linear part)");
  const auto n = u.rank();
  for (int k = 2; k <= static_cast<int>(n); ++k)
    if (!is_in_annihilator(u - act(Permutation::transposition(1, k, n), u))) return false;
  return true;
}

struct PreservingSplit {
  LeibnizElement annihilator_part;
  LeibnizElement symmetric_part;
};

/// u = u_ann + u_sym with u_sym the orbit average of u and u_ann in Ann(L_n).
inline PreservingSplit decompose_preserving(const LeibnizElement& u) {
  if (!preserves_symmetric(u))
    throw NotSymmetric("psi_u does not preserve symmetric elements; no split into Ann + symmetric exists");
  auto sym = symmetrize(u);
  return PreservingSplit{u - sym, sym};
}

}  // namespace metaleib
