#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "metaleib/error.hpp"

namespace metaleib {

/// Element of S_n acting on the indices 1..n. `images()[i - 1]` is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v - 1])
        throw DomainError("permutation images are not a bijection of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i + 1);
    return Permutation(std::move(img));
  }

  /// The transposition (i j); (i i) is the identity.
  static Permutation transposition(int i, int j, std::size_t n) {
    check_index(i, n);
    check_index(j, n);
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
  }

  /// Some permutation with 1 -> i and 2 -> j (i != j, n >= 2), namely (1 i)(2 j)
  /// adjusted for the overlapping cases i = 2 or j = 1.
  static Permutation sending_12_to(int i, int j, std::size_t n) {
    check_index(i, n);
    check_index(j, n);
    if (i == j || n < 2) throw DomainError("sending_12_to needs distinct targets");
    std::vector<int> img(n);
    for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<int>(k + 1);
    img[0] = i;
    img[1] = j;
    // Remaining slots take the values not yet used, in increasing order.
    std::vector<bool> used(n + 1, false);
    used[i] = used[j] = true;
    int next = 1;
    for (std::size_t k = 2; k < n; ++k) {
      while (used[next]) ++next;
      img[k] = next;
      used[next] = true;
    }
    return Permutation(std::move(img));
  }

  std::size_t rank() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }

  int operator()(int i) const {
    check_index(i, rank());
    return images_[i - 1];
  }

  /// Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
    std::vector<int> img(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) img[i] = a.images_[b.images_[i] - 1];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(rank());
    for (std::size_t i = 0; i < rank(); ++i) img[images_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(img));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (images_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const {
    std::string out;
    std::vector<bool> done(rank(), false);
    for (std::size_t s = 0; s < rank(); ++s) {
      if (done[s] || images_[s] == static_cast<int>(s + 1)) continue;
      out += "(";
      std::size_t k = s;
      bool first = true;
      while (!done[k]) {
        done[k] = true;
        if (!first) out += " ";
        out += std::to_string(k + 1);
        first = false;
        k = images_[k] - 1;
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

  static void check_index(int i, std::size_t n) {
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }

 private:
  std::vector<int> images_;
};

/// Every element of S_n in lexicographic order of image vectors. Cost n!.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i + 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace metaleib
