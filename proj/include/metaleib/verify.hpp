#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/expr.hpp"
#include "metaleib/invariants.hpp"
#include "metaleib/linalg.hpp"
#include "metaleib/maps.hpp"
#include "metaleib/random.hpp"
#include "metaleib/render.hpp"

namespace metaleib {

struct VerifyOptions {
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  std::size_t max_n = 4;
  int max_deg = 4;
};

/// Pass/fail tally of one property check, keeping the first counterexample.
struct CheckReport {
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++passed;
      return;
    }
    if (failed++ == 0) first_failure = describe();
  }
};

namespace detail {

inline std::size_t pick_rank(RandomSource& rng, std::size_t lo, std::size_t hi) {
  hi = std::max(lo, hi);
  return static_cast<std::size_t>(rng.uniform(static_cast<int>(lo), static_cast<int>(hi)));
}

inline std::string show(std::initializer_list<std::pair<const char*, const LeibnizElement*>> items) {
  std::string s;
  for (const auto& [name, e] : items) s += std::string(s.empty() ? "" : ", ") + name + " = " + to_text(*e);
  return s;
}

}  // namespace detail

/// Leibniz and metabelian identities, equivalent-expression normal forms,
/// module and S_n actions.
inline std::vector<CheckReport> verify_identities(const VerifyOptions& opt) {
  RandomSource rng(opt.seed);
  const int deg = std::max(1, opt.max_deg);
  CheckReport leibniz{"leibniz identity"}, metabelian{"metabelian identity"}, adjoint{"leibniz identity via r_z"},
      normal{"normal form of equivalent expressions"}, module{"right K[R_n] module action"},
      automorphism{"S_n acts by automorphisms"};
  for (std::size_t c = 0; c < opt.cases; ++c) {
    auto n = detail::pick_rank(rng, 1, opt.max_n);
    auto u = rng.element(n, deg), v = rng.element(n, deg), w = rng.element(n, deg);
    leibniz.record(bracket(bracket(u, v), w) == bracket(bracket(u, w), v) + bracket(u, bracket(v, w)),
                   [&] { return detail::show({{"u", &u}, {"v", &v}, {"w", &w}}); });

    auto s = rng.element(n, deg), t = rng.element(n, deg);
    metabelian.record(bracket(bracket(u, v), bracket(s, t)).is_zero(),
                      [&] { return detail::show({{"u", &u}, {"v", &v}, {"s", &s}, {"t", &t}}); });

    auto xm = LeibnizElement::generator(rng.index(n), n);
    adjoint.record(bracket(bracket(u, v), xm) == bracket(bracket(u, xm), v) + bracket(u, bracket(v, xm)),
                   [&] { return detail::show({{"u", &u}, {"v", &v}, {"x_m", &xm}}); });

    auto e = rng.expr(n, 3);
    auto e2 = rng.equivalent(e, n);
    auto ne = normalize(e, n), ne2 = normalize(e2, n);
    normal.record(ne == ne2, [&] { return e.debug_string() + " vs " + e2.debug_string(); });

    auto c1 = rng.commutator(n, deg);
    auto p = rng.poly(n, 2), q = rng.poly(n, 2);
    int m = rng.index(n);
    module.record(right_act(c1, p * q) == right_act(right_act(c1, p), q) &&
                      right_act(c1, CommPoly::variable(m, n)) == bracket(c1, LeibnizElement::generator(m, n)),
                  [&] { return "c = " + to_text(c1) + ", p = " + p.to_string() + ", q = " + q.to_string(); });

    auto sigma = rng.permutation(n);
    automorphism.record(act(sigma, bracket(u, v)) == bracket(act(sigma, u), act(sigma, v)),
                        [&] { return "sigma = " + sigma.to_string() + ", " + detail::show({{"u", &u}, {"v", &v}}); });
  }
  return {leibniz, metabelian, adjoint, normal, module, automorphism};
}

/// Symmetry criteria for A_n and B_n, the (alpha, f, g) decompose/synthesize
/// pair, symmetrize, and completeness against the brute-force oracle.
inline std::vector<CheckReport> verify_theorems(const VerifyOptions& opt) {
  RandomSource rng(opt.seed + 1);
  const int deg = std::max(2, opt.max_deg);
  const std::size_t max_n = std::clamp<std::size_t>(opt.max_n, 2, kDefaultSymmetrizeBound);
  CheckReport thm_a{"A_n symmetry criterion"}, thm_b{"B_n symmetry criterion"},
      roundtrip{"decompose/synthesize roundtrip"}, sym{"symmetrize is a projection onto symmetric elements"},
      oracle{"synthesized span equals oracle span"};

  for (std::size_t c = 0; c < opt.cases; ++c) {
    auto n = detail::pick_rank(rng, 2, max_n);
    // Even cases satisfy the criterion by construction, odd ones are perturbed in one coefficient.
    bool perturb = c % 2 == 1;

    auto a = rng.symmetric_diagonal(n, deg);
    if (perturb) a = rng.perturbed(a, true, deg);
    thm_a.record(is_symmetric(a) == theorem_A_check(a), [&] { return "n = " + std::to_string(n) + ", u = " + to_text(a); });

    auto b = rng.symmetric_offdiagonal(n, deg);
    if (perturb) b = rng.perturbed(b, false, deg);
    thm_b.record(is_symmetric(b) == theorem_B_check(b), [&] { return "n = " + std::to_string(n) + ", u = " + to_text(b); });

    auto data = rng.symmetric_data(n, deg - 2);
    auto s = synthesize(data);
    bool round_ok = is_symmetric(s) && decompose_symmetric(s) == data && synthesize(decompose_symmetric(s)) == s;
    roundtrip.record(round_ok, [&] { return "synthesized element " + to_text(s); });

    auto u = rng.element(n, deg);
    auto su = symmetrize(u);
    sym.record(is_symmetric(su) && symmetrize(su) == su && symmetrize(s) == s,
               [&] { return "u = " + to_text(u) + ", symmetrize(u) = " + to_text(su); });
  }

  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 3); ++n) {
    for (int d = 1; d <= std::max(1, opt.max_deg); ++d) {
      auto gens = synthesized_generators(n, d);
      auto basis = invariant_basis_oracle(n, d);
      bool ok = basis.size() == span_dimension(gens) && same_span(gens, basis) &&
                std::all_of(basis.begin(), basis.end(), [](const auto& e) { return is_symmetric(e); });
      oracle.record(ok, [&] {
        return "n = " + std::to_string(n) + ", d = " + std::to_string(d) + ": oracle dimension " +
               std::to_string(basis.size()) + ", synthesized span " + std::to_string(span_dimension(gens));
      });
    }
  }
  return {thm_a, thm_b, roundtrip, sym, oracle};
}

/// Inner automorphism laws, annihilator behaviour and the preservation criterion.
inline std::vector<CheckReport> verify_inner(const VerifyOptions& opt) {
  RandomSource rng(opt.seed + 2);
  const int deg = std::max(2, opt.max_deg);
  const std::size_t max_n = std::clamp<std::size_t>(opt.max_n, 2, kDefaultSymmetrizeBound);
  CheckReport endo{"psi_u is an endomorphism"}, group{"composition and inverse laws"},
      ann{"psi_u is the identity iff u in Ann"}, ideal{"Ann is an ideal"}, keep{"Ann + symmetric preserves symmetry"},
      broken{"criterion failure exhibits a non-symmetric image"}, split{"decompose_preserving postconditions"};

  // Low-degree symmetric test elements, the linear one first.
  auto probes = [&](std::size_t n) {
    std::vector<LeibnizElement> out;
    SymmetricData lin(n);
    lin.alpha = Scalar(1);
    out.push_back(synthesize(lin));
    for (int d = 2; d <= 3; ++d)
      for (const auto& g : synthesized_generators(n, d)) out.push_back(g);
    return out;
  };

  for (std::size_t c = 0; c < opt.cases; ++c) {
    auto n = detail::pick_rank(rng, 2, max_n);
    auto u = rng.commutator(n, deg);
    InnerAuto psi(u);
    auto v = rng.element(n, deg), w = rng.element(n, deg);
    endo.record(psi(bracket(v, w)) == bracket(psi(v), psi(w)),
                [&] { return detail::show({{"u", &u}, {"v", &v}, {"w", &w}}); });

    InnerAuto psi2(rng.commutator(n, deg)), psi3(rng.commutator(n, deg));
    bool laws = (psi * psi2)(v) == psi(psi2(v)) && psi * psi2 == psi2 * psi &&
                (psi * psi2) * psi3 == psi * (psi2 * psi3) && (psi * psi.inverse())(v) == v &&
                psi.inverse()(psi(v)) == v;
    group.record(laws, [&] { return detail::show({{"u", &u}, {"v", &v}}); });

    auto a = rng.annihilator(n, deg);
    bool ann_ok = is_in_annihilator(a) && InnerAuto(a)(v) == v && InnerAuto(a)(w) == w;
    // A non-Ann element moves some generator.
    bool moves = false;
    for (int m = 1; m <= static_cast<int>(n); ++m) moves |= psi(LeibnizElement::generator(m, n)) != generator(m, n);
    ann_ok = ann_ok && (is_in_annihilator(u) != moves);
    ann.record(ann_ok, [&] { return detail::show({{"a", &a}, {"u", &u}}); });

    ideal.record(bracket(v, a).is_zero() && is_in_annihilator(bracket(a, v)),
                 [&] { return detail::show({{"a", &a}, {"v", &v}}); });

    auto data = rng.symmetric_data(n, deg - 2, false);
    auto good = a + synthesize(data);
    bool keep_ok = preserves_symmetric(good);
    for (const auto& s : probes(n)) keep_ok = keep_ok && is_symmetric(InnerAuto(good)(s));
    keep.record(keep_ok, [&] { return "u = " + to_text(good); });

    auto split_ok = [&] {
      auto parts = decompose_preserving(good);
      return parts.annihilator_part + parts.symmetric_part == good && is_in_annihilator(parts.annihilator_part) &&
             is_symmetric(parts.symmetric_part);
    }();
    split.record(split_ok, [&] { return "u = " + to_text(good); });

    if (!preserves_symmetric(u)) {
      bool found = false;
      for (const auto& s : probes(n)) {
        if (!is_symmetric(psi(s))) {
          found = true;
          break;
        }
      }
      broken.record(found, [&] { return "u = " + to_text(u); });
    }
  }
  return {endo, group, ann, ideal, keep, broken, split};
}

inline std::vector<CheckReport> verify_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> r) { out.insert(out.end(), r.begin(), r.end()); };
  if (suite == "identities" || suite == "all") append(verify_identities(opt));
  if (suite == "theorems" || suite == "all") append(verify_theorems(opt));
  if (suite == "inner" || suite == "all") append(verify_inner(opt));
  if (out.empty()) throw DomainError("unknown suite '" + suite + "' (expected identities, theorems, inner or all)");
  return out;
}

}  // namespace metaleib
