#pragma once

#include <json.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/poly.hpp"

namespace metaleib {

/// Canonical text form: linear part first, then quad entries ordered by (i, j),
/// e.g. "x1 + [x1,x2].(r3) - 1/2*[x2,x2].(r1^2)". Single-term coefficient
/// polynomials have their rational hoisted in front of the bracket. Zero is "0".
/// The output parses back to the same element.
inline std::string to_text(const LeibnizElement& u) {
  std::string out;
  bool first = true;
  auto emit = [&](const Scalar& c, const std::string& body) {
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Scalar mag = negative ? -c : c;
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += body;
  };
  for (int i = 1; i <= static_cast<int>(u.rank()); ++i) {
    const auto& c = u.linear(i);
    if (!c.is_zero()) emit(c, "x" + std::to_string(i));
  }
  for (const auto& [k, p] : u.quad()) {
    std::string pair = "[x" + std::to_string(k.first) + ",x" + std::to_string(k.second) + "]";
    if (p.size() == 1) {
      const auto& [m, c] = *p.terms().begin();
      emit(c, m.is_one() ? pair : pair + ".(" + m.to_string() + ")");
    } else {
      emit(Scalar(1), pair + ".(" + p.to_string() + ")");
    }
  }
  return first ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const LeibnizElement& u) { return os << to_text(u); }

using Json = nlohmann::ordered_json;

/// [{"coef": "num/den", "exps": [e1..en]}, ...] in graded-lex order.
inline Json to_json(const CommPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"coef", c.to_string()}, {"exps", m.exponents()}});
  return arr;
}

inline CommPoly poly_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array of terms");
  CommPoly p(n);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("exps"))
      throw DomainError("polynomial term needs \"coef\" and \"exps\"");
    auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
    if (exps.size() != n)
      throw DomainError("exponent vector of length " + std::to_string(exps.size()) + " for rank " + std::to_string(n));
    const auto& coef = t.at("coef");
    Scalar c = coef.is_string() ? Scalar::parse(coef.get<std::string>()) : Scalar(coef.get<long>());
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

/// {"n": int, "linear": ["num/den", ...], "quad": [{"i", "j", "poly"}]} with quad sorted by (i, j).
inline Json to_json(const LeibnizElement& u) {
  Json linear = Json::array();
  for (const auto& c : u.linear()) linear.push_back(c.to_string());
  Json quad = Json::array();
  for (const auto& [k, p] : u.quad()) quad.push_back({{"i", k.first}, {"j", k.second}, {"poly", to_json(p)}});
  return Json{{"n", u.rank()}, {"linear", linear}, {"quad", quad}};
}

inline LeibnizElement element_from_json(const Json& j) {
  auto n = j.at("n").get<std::size_t>();
  if (n < 1) throw DomainError("rank must be at least 1");
  LeibnizElement u(n);
  const auto& linear = j.at("linear");
  if (linear.size() != n) throw DomainError("linear part must have n entries");
  for (std::size_t i = 0; i < n; ++i) u.add_linear(static_cast<int>(i + 1), Scalar::parse(linear[i].get<std::string>()));
  for (const auto& e : j.at("quad")) u.add_quad(e.at("i").get<int>(), e.at("j").get<int>(), poly_from_json(e.at("poly"), n));
  return u;
}

}  // namespace metaleib
