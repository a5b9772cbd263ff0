#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "metaleib/error.hpp"

namespace metaleib {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading '-'.
  static Scalar parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational");
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
      if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
      throw DomainError("malformed rational '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DomainError("zero denominator in '" + s + "'");
    return Scalar(mpq_class(n, d));
  }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  mpq_class value_{0};
};

}  // namespace metaleib
