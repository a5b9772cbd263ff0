#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metaleib/error.hpp"
#include "metaleib/expr.hpp"
#include "metaleib/poly.hpp"

namespace metaleib {

namespace detail {

// Recursive-descent reader for both the polynomial syntax and the bracket
// expression syntax. Whitespace is skipped between tokens.
class Reader {
 public:
  Reader(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {}

  // expr := ["+"|"-"] term { ("+"|"-") term }
  BracketExpr expr() {
    std::vector<BracketExpr> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = take() == '-';
    terms.push_back(term(negate));
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negate = take() == '-';
      terms.push_back(term(negate));
    }
    return terms.size() == 1 ? terms.front() : BracketExpr::sum(std::move(terms));
  }

  // poly := ["+"|"-"] pterm { ("+"|"-") pterm }
  CommPoly poly() {
    CommPoly out(rank_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = take() == '-';
    poly_term(out, negate);
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negate = take() == '-';
      poly_term(out, negate);
    }
    return out;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  // term := [rational "*"] factor { "." adj }   (a bare "0" denotes the zero element)
  BracketExpr term(bool negate) {
    skip_ws();
    Scalar coef(1);
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      std::size_t at = pos_;
      coef = rational();
      has_coef = true;
      skip_ws();
      if (peek() != '*') {
        if (coef.is_zero()) return BracketExpr::zero();
        fail_at(at, "a scalar alone is not an element of L_n");
      }
      take();
    }
    BracketExpr e = factor();
    while (true) {
      skip_ws();
      if (peek() != '.') break;
      take();
      e = adjoint(e);
    }
    if (negate) coef = -coef;
    if (has_coef || negate) return BracketExpr::scaled(coef, e);
    return e;
  }

  // factor := gen | "[" expr "," expr "]" | "(" expr ")"
  BracketExpr factor() {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      take();
      return BracketExpr::gen(index());
    }
    if (c == '[') {
      take();
      auto left = expr();
      expect(',');
      auto right = expr();
      expect(']');
      return BracketExpr::bracket(left, right);
    }
    if (c == '(') {
      take();
      auto inner = expr();
      expect(')');
      return inner;
    }
    fail(c == '\0' ? "unexpected end of input, expected a generator, '[' or '('"
                   : "expected a generator, '[' or '(' but found '" + std::string(1, c) + "'");
  }

  // adj := "r" index ["^" exponent] | "(" poly ")"
  BracketExpr adjoint(const BracketExpr& e) {
    skip_ws();
    if (peek() == 'r') {
      take();
      int m = index();
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        take();
        power = static_cast<int>(digits_value());
      }
      BracketExpr out = e;
      for (int k = 0; k < power; ++k) out = BracketExpr::right_adj(out, m);
      return out;
    }
    if (peek() == '(') {
      take();
      CommPoly p = poly();
      expect(')');
      // Spell the polynomial out as a sum of scaled right-adjoint chains.
      std::vector<BracketExpr> terms;
      for (const auto& [mono, c] : p.terms()) {
        BracketExpr chain = e;
        for (int v = 1; v <= static_cast<int>(rank_); ++v)
          for (std::uint32_t k = 0; k < mono.exponent(v); ++k) chain = BracketExpr::right_adj(chain, v);
        terms.push_back(c.is_one() ? chain : BracketExpr::scaled(c, chain));
      }
      return terms.size() == 1 ? terms.front() : BracketExpr::sum(std::move(terms));
    }
    fail("expected 'r<index>' or '(' after '.'");
  }

  // pterm := rational ["*" mono] | mono ;  mono := ("r" index ["^" exponent])+
  void poly_term(CommPoly& out, bool negate) {
    skip_ws();
    Scalar coef(1);
    bool need_mono = true;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      coef = rational();
      skip_ws();
      if (peek() == '*') {
        take();
      } else {
        need_mono = false;
      }
    }
    Monomial m(rank_);
    if (need_mono) {
      skip_ws();
      if (peek() != 'r') fail("expected 'r<index>' in polynomial term");
      while (true) {
        skip_ws();
        if (peek() != 'r') break;
        take();
        int v = index();
        std::uint32_t power = 1;
        skip_ws();
        if (peek() == '^') {
          take();
          power = static_cast<std::uint32_t>(digits_value());
        }
        for (std::uint32_t k = 0; k < power; ++k) m = m * Monomial::variable(v, rank_);
      }
    }
    out.add_term(m, negate ? -coef : coef);
  }

  Scalar rational() {
    skip_ws();
    std::size_t start = pos_;
    std::string s;
    if (peek() == '-') s += take();
    s += digits();
    skip_ws();
    if (peek() == '/') {
      take();
      s += '/';
      s += digits();
    }
    try {
      return Scalar::parse(s);
    } catch (const DomainError& e) {
      fail_at(start, e.what());
    }
  }

  int index() {
    std::size_t at = pos_;
    auto v = digits_value();
    if (v < 1 || v > rank_)
      fail_at(at, "index " + std::to_string(v) + " outside 1.." + std::to_string(rank_));
    return static_cast<int>(v);
  }

  std::size_t digits_value() {
    std::size_t at = pos_;
    auto d = digits();
    if (d.size() > 9) fail_at(at, "number too large");
    return std::stoul(d);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += take();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(peek() == '\0' ? "unexpected end of input, expected '" + std::string(1, c) + "'"
                          : "expected '" + std::string(1, c) + "' but found '" + std::string(1, peek()) + "'");
    }
    take();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the bracket-expression syntax, e.g. "[x1,x2].r3 - 1/2*[x2,x2].(r1^2)".
/// Indices must lie in 1..n.
inline BracketExpr parse_expr(std::string_view text, std::size_t n) {
  detail::Reader r(text, n);
  auto e = r.expr();
  r.expect_end();
  return e;
}

/// Parses the polynomial syntax, e.g. "3/2*r1^2r2 - r3".
inline CommPoly parse_poly(std::string_view text, std::size_t n) {
  detail::Reader r(text, n);
  auto p = r.poly();
  r.expect_end();
  return p;
}

/// parse_expr followed by normalize.
inline LeibnizElement parse_element(std::string_view text, std::size_t n) {
  return normalize(parse_expr(text, n), n);
}

}  // namespace metaleib
