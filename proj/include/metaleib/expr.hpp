#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/scalar.hpp"

namespace metaleib {

struct ExprGenerator;
struct ExprScaled;
struct ExprSum;
struct ExprBracket;
struct ExprRightAdj;
struct ExprNode;

/// Raw, un-normalized bracket expression. Nodes are immutable and shared.
class BracketExpr {
 public:
  using Generator = ExprGenerator;
  using Scaled = ExprScaled;
  using Sum = ExprSum;
  using Bracket = ExprBracket;
  /// inner . r_adj, i.e. [inner, x_adj].
  using RightAdj = ExprRightAdj;
  using Node = std::variant<ExprGenerator, ExprScaled, ExprSum, ExprBracket, ExprRightAdj>;

  static BracketExpr gen(int i);
  static BracketExpr scaled(Scalar c, BracketExpr e);
  static BracketExpr sum(std::vector<BracketExpr> terms);
  static BracketExpr zero() { return sum({}); }
  static BracketExpr bracket(BracketExpr a, BracketExpr b);
  static BracketExpr right_adj(BracketExpr e, int m);

  const Node& node() const;

  friend bool operator==(const BracketExpr& a, const BracketExpr& b);

  /// Fully parenthesized debug form, e.g. "Sum(Scaled(1/2, Bracket(x1, x1)))".
  std::string debug_string() const;

 private:
  explicit BracketExpr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ExprGenerator {
  int index;
};
struct ExprScaled {
  Scalar coef;
  BracketExpr inner;
};
struct ExprSum {
  std::vector<BracketExpr> terms;
};
struct ExprBracket {
  BracketExpr left;
  BracketExpr right;
};
struct ExprRightAdj {
  BracketExpr inner;
  int adj;
};
struct ExprNode {
  BracketExpr::Node value;
};

inline const BracketExpr::Node& BracketExpr::node() const { return node_->value; }
inline BracketExpr BracketExpr::gen(int i) {
  return BracketExpr(std::make_shared<const ExprNode>(ExprNode{Generator{i}}));
}
inline BracketExpr BracketExpr::scaled(Scalar c, BracketExpr e) {
  return BracketExpr(std::make_shared<const ExprNode>(ExprNode{Scaled{std::move(c), std::move(e)}}));
}
inline BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
  return BracketExpr(std::make_shared<const ExprNode>(ExprNode{Sum{std::move(terms)}}));
}
inline BracketExpr BracketExpr::bracket(BracketExpr a, BracketExpr b) {
  return BracketExpr(std::make_shared<const ExprNode>(ExprNode{Bracket{std::move(a), std::move(b)}}));
}
inline BracketExpr BracketExpr::right_adj(BracketExpr e, int m) {
  return BracketExpr(std::make_shared<const ExprNode>(ExprNode{RightAdj{std::move(e), m}}));
}

inline bool operator==(const BracketExpr& a, const BracketExpr& b) {
  if (a.node_ == b.node_) return true;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T* y = std::get_if<T>(&b.node());
        if (!y) return false;
        if constexpr (std::is_same_v<T, BracketExpr::Generator>) return x.index == y->index;
        if constexpr (std::is_same_v<T, BracketExpr::Scaled>) return x.coef == y->coef && x.inner == y->inner;
        if constexpr (std::is_same_v<T, BracketExpr::Sum>) return x.terms == y->terms;
        if constexpr (std::is_same_v<T, BracketExpr::Bracket>) return x.left == y->left && x.right == y->right;
        if constexpr (std::is_same_v<T, BracketExpr::RightAdj>) return x.adj == y->adj && x.inner == y->inner;
      },
      a.node());
}

inline std::string BracketExpr::debug_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Generator>) return "x" + std::to_string(x.index);
        if constexpr (std::is_same_v<T, Scaled>) return "Scaled(" + x.coef.to_string() + ", " + x.inner.debug_string() + ")";
        if constexpr (std::is_same_v<T, Sum>) {
          std::string s = "Sum(";
          for (std::size_t i = 0; i < x.terms.size(); ++i) s += (i ? ", " : "") + x.terms[i].debug_string();
          return s + ")";
        }
        if constexpr (std::is_same_v<T, Bracket>)
          return "Bracket(" + x.left.debug_string() + ", " + x.right.debug_string() + ")";
        if constexpr (std::is_same_v<T, RightAdj>)
          return "RightAdj(" + x.inner.debug_string() + ", " + std::to_string(x.adj) + ")";
      },
      node());
}

inline std::ostream& operator<<(std::ostream& os, const BracketExpr& e) { return os << e.debug_string(); }

/// Evaluates a bracket expression in L_n by bottom-up recursion, expanding
/// bilinearly at Sum/Scaled nodes. Identity-equivalent expressions yield the
/// same normal form.
inline LeibnizElement normalize(const BracketExpr& e, std::size_t n) {
  return std::visit(
      [n](const auto& x) -> LeibnizElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BracketExpr::Generator>) {
          return LeibnizElement::generator(x.index, n);
        } else if constexpr (std::is_same_v<T, BracketExpr::Scaled>) {
          return normalize(x.inner, n).scaled(x.coef);
        } else if constexpr (std::is_same_v<T, BracketExpr::Sum>) {
          LeibnizElement acc(n);
          for (const auto& t : x.terms) acc += normalize(t, n);
          return acc;
        } else if constexpr (std::is_same_v<T, BracketExpr::Bracket>) {
          return bracket(normalize(x.left, n), normalize(x.right, n));
        } else {
          return bracket(normalize(x.inner, n), LeibnizElement::generator(x.adj, n));
        }
      },
      e.node());
}

}  // namespace metaleib
