#pragma once

#include "trigonal/errors.hpp"
#include "trigonal/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace trigonal {

namespace detail {

inline void require_same_order(int lhs, int rhs, const char* what) {
  if (lhs != rhs) {
    throw OrderMismatch(std::string(what) + ": orders " + std::to_string(lhs) + " and " +
                        std::to_string(rhs) + " differ");
  }
}

inline void require_order(int order) {
  if (order < 0) {
    throw InvalidArgument("series order must be non-negative, got " + std::to_string(order));
  }
}

}  // namespace detail

/// Univariate power series c_0 + c_1 u + ... + c_N u^N, known modulo u^(N+1).
///
/// The order N is fixed at construction; combining series of different orders throws
/// OrderMismatch.  R must be a commutative ring constructible from 0 and 1.  Division
/// additionally needs a free `inverse(const R&)`.
template <class R>
class USeries {
public:
  explicit USeries(int order) : order_(order) {
    detail::require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, R(0));
  }

  /// Missing trailing coefficients are zero; extra coefficients are an error.
  USeries(int order, std::vector<R> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    detail::require_order(order);
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
      throw InvalidArgument("more coefficients than the truncation order allows");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1, R(0));
  }

  static USeries constant(int order, R value) {
    USeries out(order);
    out.coeffs_[0] = std::move(value);
    return out;
  }

  /// The series u (just 0 when order is 0).
  static USeries variable(int order) {
    USeries out(order);
    if (order >= 1) {
      out.coeffs_[1] = R(1);
    }
    return out;
  }

  int order() const { return order_; }
  const R& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!(c == R(0))) {
        return false;
      }
    }
    return true;
  }

  /// Drop to a lower order explicitly.
  USeries truncate(int order) const {
    if (order > order_) {
      throw OrderMismatch("cannot raise truncation order from " + std::to_string(order_) + " to " +
                          std::to_string(order));
    }
    return USeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// d/du; the result is known to order N - 1.
  USeries derivative() const {
    if (order_ < 1) {
      throw InvalidArgument("derivative of an order-0 series carries no information");
    }
    USeries out(order_ - 1);
    for (int k = 1; k <= order_; ++k) {
      out.coeffs_[k - 1] = coeffs_[k] * R(k);
    }
    return out;
  }

  /// f(c u).
  USeries scale_argument(const R& c) const {
    USeries out(order_);
    R power(1);
    for (int k = 0; k <= order_; ++k) {
      out.coeffs_[k] = coeffs_[k] * power;
      power = power * c;
    }
    return out;
  }

  /// f(inner(u)); needs inner(0) = 0.
  USeries compose(const USeries& inner) const {
    detail::require_same_order(order_, inner.order_, "compose");
    if (!(inner[0] == R(0))) {
      throw InvalidArgument("composition requires an inner series with zero constant term");
    }
    // Horner from the top coefficient.
    USeries out = constant(order_, coeffs_[order_]);
    for (int k = order_ - 1; k >= 0; --k) {
      out = out * inner;
      out.coeffs_[0] += coeffs_[k];
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> USeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      out.push_back(f(c));
    }
    return USeries<S>(order_, std::move(out));
  }

  USeries operator-() const {
    USeries out(order_);
    for (int k = 0; k <= order_; ++k) {
      out.coeffs_[k] = -coeffs_[k];
    }
    return out;
  }

  USeries& operator+=(const USeries& rhs) {
    detail::require_same_order(order_, rhs.order_, "series addition");
    for (int k = 0; k <= order_; ++k) {
      coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
  }

  USeries& operator-=(const USeries& rhs) {
    detail::require_same_order(order_, rhs.order_, "series subtraction");
    for (int k = 0; k <= order_; ++k) {
      coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
  }

  friend USeries operator+(USeries lhs, const USeries& rhs) { return lhs += rhs; }
  friend USeries operator-(USeries lhs, const USeries& rhs) { return lhs -= rhs; }

  friend USeries operator*(const USeries& lhs, const USeries& rhs) {
    detail::require_same_order(lhs.order_, rhs.order_, "series multiplication");
    USeries out(lhs.order_);
    for (int i = 0; i <= lhs.order_; ++i) {
      if (lhs.coeffs_[i] == R(0)) {
        continue;
      }
      for (int j = 0; i + j <= lhs.order_; ++j) {
        out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return out;
  }

  friend USeries operator*(const R& scalar, const USeries& s) {
    USeries out(s.order_);
    for (int k = 0; k <= s.order_; ++k) {
      out.coeffs_[k] = scalar * s.coeffs_[k];
    }
    return out;
  }

  /// Truncated quotient; throws ArithmeticError when the divisor's constant term is not a unit.
  friend USeries operator/(const USeries& num, const USeries& den) {
    detail::require_same_order(num.order_, den.order_, "series division");
    const R inv0 = inverse(den.coeffs_[0]);
    USeries out(num.order_);
    for (int k = 0; k <= num.order_; ++k) {
      R acc = num.coeffs_[k];
      for (int j = 1; j <= k; ++j) {
        acc -= den.coeffs_[j] * out.coeffs_[k - j];
      }
      out.coeffs_[k] = acc * inv0;
    }
    return out;
  }

  friend bool operator==(const USeries& lhs, const USeries& rhs) {
    detail::require_same_order(lhs.order_, rhs.order_, "series comparison");
    return lhs.coeffs_ == rhs.coeffs_;
  }

private:
  int order_;
  std::vector<R> coeffs_;
};

/// Bivariate power series in (x1, x2) truncated by total degree: coefficients (i, j) with
/// i + j <= N.
template <class R>
class BiSeries {
public:
  explicit BiSeries(int order) : order_(order) {
    detail::require_order(order);
    coeffs_.assign(slot(0, order + 1), R(0));
  }

  static BiSeries constant(int order, R value) {
    BiSeries out(order);
    out.at(0, 0) = std::move(value);
    return out;
  }

  int order() const { return order_; }

  /// Coefficient of x1^i x2^j.
  const R& at(int i, int j) const { return coeffs_.at(checked_slot(i, j)); }
  R& at(int i, int j) { return coeffs_.at(checked_slot(i, j)); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!(c == R(0))) {
        return false;
      }
    }
    return true;
  }

  BiSeries truncate(int order) const {
    if (order > order_) {
      throw OrderMismatch("cannot raise truncation order from " + std::to_string(order_) + " to " +
                          std::to_string(order));
    }
    BiSeries out(order);
    for (int d = 0; d <= order; ++d) {
      for (int i = 0; i <= d; ++i) {
        out.at(i, d - i) = at(i, d - i);
      }
    }
    return out;
  }

  /// d/dx1 (var = 1) or d/dx2 (var = 2); result known to order N - 1.
  BiSeries derivative(int var) const {
    if (var != 1 && var != 2) {
      throw InvalidArgument("bivariate derivative variable must be 1 or 2");
    }
    if (order_ < 1) {
      throw InvalidArgument("derivative of an order-0 series carries no information");
    }
    BiSeries out(order_ - 1);
    for (int d = 0; d < order_; ++d) {
      for (int i = 0; i <= d; ++i) {
        const int j = d - i;
        out.at(i, j) = var == 1 ? at(i + 1, j) * R(i + 1) : at(i, j + 1) * R(j + 1);
      }
    }
    return out;
  }

  /// f(x2, x1).
  BiSeries swap_variables() const {
    BiSeries out(order_);
    for (int d = 0; d <= order_; ++d) {
      for (int i = 0; i <= d; ++i) {
        out.at(i, d - i) = at(d - i, i);
      }
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> BiSeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    BiSeries<S> out(order_);
    for (int d = 0; d <= order_; ++d) {
      for (int i = 0; i <= d; ++i) {
        out.at(i, d - i) = f(at(i, d - i));
      }
    }
    return out;
  }

  BiSeries operator-() const {
    return map([](const R& c) { return -c; });
  }

  BiSeries& operator+=(const BiSeries& rhs) {
    detail::require_same_order(order_, rhs.order_, "bivariate addition");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
  }

  BiSeries& operator-=(const BiSeries& rhs) {
    detail::require_same_order(order_, rhs.order_, "bivariate subtraction");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
  }

  friend BiSeries operator+(BiSeries lhs, const BiSeries& rhs) { return lhs += rhs; }
  friend BiSeries operator-(BiSeries lhs, const BiSeries& rhs) { return lhs -= rhs; }

  friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
    detail::require_same_order(lhs.order_, rhs.order_, "bivariate multiplication");
    const int n = lhs.order_;
    BiSeries out(n);
    for (int d1 = 0; d1 <= n; ++d1) {
      for (int i1 = 0; i1 <= d1; ++i1) {
        const R& a = lhs.at(i1, d1 - i1);
        if (a == R(0)) {
          continue;
        }
        for (int d2 = 0; d1 + d2 <= n; ++d2) {
          for (int i2 = 0; i2 <= d2; ++i2) {
            out.at(i1 + i2, d1 - i1 + d2 - i2) += a * rhs.at(i2, d2 - i2);
          }
        }
      }
    }
    return out;
  }

  friend BiSeries operator*(const R& scalar, const BiSeries& s) {
    return s.map([&scalar](const R& c) { return scalar * c; });
  }

  /// Truncated quotient, solved degree by degree; needs a unit constant term in `den`.
  friend BiSeries operator/(const BiSeries& num, const BiSeries& den) {
    detail::require_same_order(num.order_, den.order_, "bivariate division");
    const int n = num.order_;
    const R inv0 = inverse(den.at(0, 0));
    BiSeries out(n);
    for (int d = 0; d <= n; ++d) {
      for (int i = 0; i <= d; ++i) {
        const int j = d - i;
        R acc = num.at(i, j);
        for (int a = 0; a <= i; ++a) {
          for (int b = 0; b <= j; ++b) {
            if (a == 0 && b == 0) {
              continue;
            }
            acc -= den.at(a, b) * out.at(i - a, j - b);
          }
        }
        out.at(i, j) = acc * inv0;
      }
    }
    return out;
  }

  friend bool operator==(const BiSeries& lhs, const BiSeries& rhs) {
    detail::require_same_order(lhs.order_, rhs.order_, "bivariate comparison");
    return lhs.coeffs_ == rhs.coeffs_;
  }

private:
  // Degree-major triangular layout: all monomials of total degree d precede degree d + 1.
  static std::size_t slot(int i, int d) {
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 + static_cast<std::size_t>(i);
  }

  std::size_t checked_slot(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) {
      throw InvalidArgument("monomial x1^" + std::to_string(i) + " x2^" + std::to_string(j) +
                            " outside truncation order " + std::to_string(order_));
    }
    return slot(i, i + j);
  }

  int order_;
  std::vector<R> coeffs_;
};

/// f(a x1 + b x2) truncated to total degree `order`; f must be known at least to that order.
template <class R>
BiSeries<R> compose_linear(const USeries<R>& f, const R& a, const R& b, int order) {
  detail::require_order(order);
  if (f.order() < order) {
    throw OrderMismatch("compose_linear: series of order " + std::to_string(f.order()) +
                        " cannot supply total degree " + std::to_string(order));
  }
  BiSeries<R> out(order);
  std::vector<R> a_pow{R(1)};
  std::vector<R> b_pow{R(1)};
  for (int k = 1; k <= order; ++k) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  for (int k = 0; k <= order; ++k) {
    if (f[k] == R(0)) {
      continue;
    }
    for (int i = 0; i <= k; ++i) {
      out.at(i, k - i) += f[k] * R(Rational(binomial(k, i))) * a_pow[i] * b_pow[k - i];
    }
  }
  return out;
}

}  // namespace trigonal
