#pragma once

#include "trigonal/rational.hpp"

#include <ostream>
#include <string>

namespace trigonal {

/// Element a + b*w of Q(w), where w is a primitive cube root of unity (w^2 = -1 - w).
///
/// The square root of -3 is fixed as i*sqrt(3) := 2w + 1, so i/sqrt(3) is (2w + 1)/3.
class Cyc3 {
public:
  Cyc3() = default;
  Cyc3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  Cyc3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Cyc3(I a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  static Cyc3 omega() { return {0, 1}; }
  static Cyc3 omega_bar() { return {-1, -1}; }
  /// 2w + 1, whose square is -3.
  static Cyc3 i_sqrt3() { return {1, 2}; }
  /// (2w + 1)/3.
  static Cyc3 i_over_sqrt3() { return {Rational(1, 3), Rational(2, 3)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Complex conjugation, w -> w^2.
  Cyc3 conj() const { return {a_ - b_, -b_}; }
  /// z * conj(z) = a^2 - ab + b^2.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  Cyc3 inverse() const;
  Cyc3 pow(int exponent) const;

  /// "a + b*w" with zero parts dropped.
  std::string to_string() const;

  Cyc3 operator-() const { return {-a_, -b_}; }
  Cyc3& operator+=(const Cyc3& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
  }
  Cyc3& operator-=(const Cyc3& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
  }
  Cyc3& operator*=(const Cyc3& rhs);
  Cyc3& operator/=(const Cyc3& rhs) { return *this *= rhs.inverse(); }

  friend Cyc3 operator+(Cyc3 lhs, const Cyc3& rhs) { return lhs += rhs; }
  friend Cyc3 operator-(Cyc3 lhs, const Cyc3& rhs) { return lhs -= rhs; }
  friend Cyc3 operator*(Cyc3 lhs, const Cyc3& rhs) { return lhs *= rhs; }
  friend Cyc3 operator/(Cyc3 lhs, const Cyc3& rhs) { return lhs /= rhs; }
  friend bool operator==(const Cyc3&, const Cyc3&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Cyc3& z) { return os << z.to_string(); }

private:
  Rational a_;
  Rational b_;
};

inline Cyc3 inverse(const Cyc3& z) { return z.inverse(); }

}  // namespace trigonal
