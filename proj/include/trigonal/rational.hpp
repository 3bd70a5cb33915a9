#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace trigonal {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(widen(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Unevaluated integer expressions such as a * b.
  template <class Op>
  Rational(const __gmp_expr<mpz_t, Op>& expr) : value_(Integer(expr)) {}  // NOLINT(google-explicit-constructor)

  /// Throws ArithmeticError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p" or "p/q".  Throws InvalidArgument on malformed input.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Numerator when the value is integral; throws ArithmeticError otherwise.
  Integer to_integer() const;

  Rational inverse() const;
  Rational pow(int exponent) const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  template <std::integral I>
  static mpq_class widen(I value) {
    if constexpr (std::is_signed_v<I>) {
      return mpq_class(static_cast<long>(value));
    } else {
      return mpq_class(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline Rational inverse(const Rational& r) { return r.inverse(); }

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace trigonal
