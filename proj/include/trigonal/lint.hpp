#pragma once

#include "trigonal/cyc3.hpp"

#include <ostream>
#include <string>

namespace trigonal {

/// c0 + c1*t1 + c2*t2 with coefficients in Q(w): the equivariant parameters up to degree one.
///
/// Products are only defined when at least one factor is a constant; anything else would
/// leave degree one and throws DegreeOverflow.
class LinT {
public:
  LinT() = default;
  LinT(Cyc3 c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LinT(I c0) : c0_(c0) {}  // NOLINT(google-explicit-constructor)
  LinT(Rational c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
  LinT(Cyc3 c0, Cyc3 c1, Cyc3 c2) : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

  static LinT t1() { return {0, 1, 0}; }
  static LinT t2() { return {0, 0, 1}; }

  const Cyc3& constant() const { return c0_; }
  const Cyc3& t1_coeff() const { return c1_; }
  const Cyc3& t2_coeff() const { return c2_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
  bool is_constant() const { return c1_.is_zero() && c2_.is_zero(); }

  /// Exchange t1 and t2.
  LinT swap_t() const { return {c0_, c2_, c1_}; }
  /// Restriction to t2 = -t1, returned in the t1 coordinate.
  LinT restrict_antidiagonal() const { return {c0_, c1_ - c2_, 0}; }
  /// Restriction to t1 = t2 = t, returned in the t1 coordinate.
  LinT restrict_diagonal() const { return {c0_, c1_ + c2_, 0}; }

  std::string to_string() const;

  LinT operator-() const { return {-c0_, -c1_, -c2_}; }
  LinT& operator+=(const LinT& rhs) {
    c0_ += rhs.c0_;
    c1_ += rhs.c1_;
    c2_ += rhs.c2_;
    return *this;
  }
  LinT& operator-=(const LinT& rhs) {
    c0_ -= rhs.c0_;
    c1_ -= rhs.c1_;
    c2_ -= rhs.c2_;
    return *this;
  }
  LinT& operator*=(const LinT& rhs);

  friend LinT operator+(LinT lhs, const LinT& rhs) { return lhs += rhs; }
  friend LinT operator-(LinT lhs, const LinT& rhs) { return lhs -= rhs; }
  friend LinT operator*(LinT lhs, const LinT& rhs) { return lhs *= rhs; }
  friend bool operator==(const LinT&, const LinT&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LinT& v) { return os << v.to_string(); }

private:
  Cyc3 c0_;
  Cyc3 c1_;
  Cyc3 c2_;
};

}  // namespace trigonal
