#pragma once

// Test-only evaluator for L_n that never touches the normal-form rewrite
// rules. Elements are combinations of left-normed words [i1, i2, ..., ik];
// a bracket with a longer right argument is unfolded with the Leibniz identity
// [w, [v, x_m]] = [[w, v], x_m] - [[w, x_m], v] until only right
// multiplications by generators remain, brackets of two commutators are
// dropped, and the tail i3..ik is sorted.

#include <algorithm>
#include <map>
#include <vector>

#include "metaleib/element.hpp"

namespace metaleib::test {

using Word = std::vector<int>;
using WordSum = std::map<Word, Scalar>;

inline void add(WordSum& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  Word key = w;
  if (key.size() > 2) std::sort(key.begin() + 2, key.end());
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline WordSum bracket_words(const Word& w, const Word& v);

inline WordSum bracket_sums(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [w, cw] : a)
    for (const auto& [v, cv] : b)
      for (const auto& [r, cr] : bracket_words(w, v)) add(out, r, cw * cv * cr);
  return out;
}

inline WordSum bracket_words(const Word& w, const Word& v) {
  WordSum out;
  if (v.size() == 1) {
    Word r = w;
    r.push_back(v[0]);
    add(out, r, Scalar(1));
    return out;
  }
  if (w.size() >= 2) return out;  // [L', L'] = 0
  // v = [v', x_m]
  Word prefix(v.begin(), v.end() - 1);
  Word xm{v.back()};
  WordSum w_sum{{w, Scalar(1)}};
  WordSum first = bracket_sums(bracket_sums(w_sum, {{prefix, Scalar(1)}}), {{xm, Scalar(1)}});
  WordSum second = bracket_sums(bracket_sums(w_sum, {{xm, Scalar(1)}}), {{prefix, Scalar(1)}});
  for (const auto& [r, c] : first) add(out, r, c);
  for (const auto& [r, c] : second) add(out, r, -c);
  return out;
}

inline LeibnizElement to_element(const WordSum& s, std::size_t n) {
  LeibnizElement e(n);
  for (const auto& [w, c] : s) {
    if (w.size() == 1) {
      e.add_linear(w[0], c);
      continue;
    }
    Monomial m(n);
    for (std::size_t k = 2; k < w.size(); ++k) m = m * Monomial::variable(w[k], n);
    e.add_quad(w[0], w[1], CommPoly::term(m, c));
  }
  return e;
}

/// Expands an element into left-normed words (each r-monomial becomes a sorted tail).
inline WordSum from_element(const LeibnizElement& e) {
  WordSum s;
  for (int i = 1; i <= static_cast<int>(e.rank()); ++i) add(s, {i}, e.linear(i));
  for (const auto& [k, p] : e.quad())
    for (const auto& [m, c] : p.terms()) {
      Word w{k.first, k.second};
      for (int v = 1; v <= static_cast<int>(e.rank()); ++v)
        for (std::uint32_t t = 0; t < m.exponent(v); ++t) w.push_back(v);
      add(s, w, c);
    }
  return s;
}

}  // namespace metaleib::test
