#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/scalar.hpp"

namespace metaleib {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place Gauss-Jordan elimination to reduced row echelon form.
  /// Returns the pivot column of each nonzero row.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, row);
      Scalar inv = Scalar(1) / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        Scalar f = (*this)(r, col);
        if (f.is_zero()) continue;
        for (std::size_t c = col; c < cols_; ++c) {
          const Scalar& pv = (*this)(row, c);
          if (!pv.is_zero()) (*this)(r, c) -= f * pv;
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    RationalMatrix copy = *this;
    return copy.reduce().size();
  }

  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const {
    RationalMatrix m = *this;
    auto pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Scalar> v(cols_);
      v[free] = Scalar(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Coordinate of a normal-form basis vector: linear x_i (quad key unused) or [x_i,x_j].m.
struct BasisKey {
  bool linear;
  QuadKey pair;
  std::vector<std::uint32_t> exps;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Stacks elements as rows over the union of their supports.
inline RationalMatrix coordinate_matrix(const std::vector<LeibnizElement>& elems) {
  std::map<BasisKey, std::size_t> index;
  for (const auto& e : elems) {
    for (int i = 1; i <= static_cast<int>(e.rank()); ++i)
      if (!e.linear(i).is_zero()) index.try_emplace(BasisKey{true, {i, 0}, {}}, 0);
    for (const auto& [k, p] : e.quad())
      for (const auto& [m, c] : p.terms()) index.try_emplace(BasisKey{false, k, m.exponents()}, 0);
  }
  std::size_t col = 0;
  for (auto& [k, v] : index) v = col++;
  RationalMatrix mat(elems.size(), index.size());
  for (std::size_t r = 0; r < elems.size(); ++r) {
    const auto& e = elems[r];
    for (int i = 1; i <= static_cast<int>(e.rank()); ++i)
      if (!e.linear(i).is_zero()) mat(r, index.at(BasisKey{true, {i, 0}, {}})) = e.linear(i);
    for (const auto& [k, p] : e.quad())
      for (const auto& [m, c] : p.terms()) mat(r, index.at(BasisKey{false, k, m.exponents()})) = c;
  }
  return mat;
}

/// Dimension of the linear span of `elems`.
inline std::size_t span_dimension(const std::vector<LeibnizElement>& elems) {
  if (elems.empty()) return 0;
  return coordinate_matrix(elems).rank();
}

/// True iff span(a) == span(b): equal ranks and rank of the union unchanged.
inline bool same_span(const std::vector<LeibnizElement>& a, const std::vector<LeibnizElement>& b) {
  auto ra = span_dimension(a);
  auto rb = span_dimension(b);
  if (ra != rb) return false;
  std::vector<LeibnizElement> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_dimension(both) == ra;
}

}  // namespace metaleib
