#include "trigonal/cyc3.hpp"

#include "trigonal/errors.hpp"

namespace trigonal {

Cyc3& Cyc3::operator*=(const Cyc3& rhs) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
  const Rational bd = b_ * rhs.b_;
  Rational a = a_ * rhs.a_ - bd;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyc3 Cyc3::inverse() const {
  if (is_zero()) {
    throw ArithmeticError("inverse of zero in Q(w)");
  }
  const Rational n = norm();
  const Cyc3 c = conj();
  return {c.a() / n, c.b() / n};
}

Cyc3 Cyc3::pow(int exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  Cyc3 result(1);
  Cyc3 base = *this;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= base;
    }
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string Cyc3::to_string() const {
  if (b_.is_zero()) {
    return a_.to_string();
  }
  std::string w_part = b_ == Rational(1) ? "w" : (b_ == Rational(-1) ? "-w" : b_.to_string() + "*w");
  if (a_.is_zero()) {
    return w_part;
  }
  if (w_part[0] == '-') {
    return a_.to_string() + " - " + w_part.substr(1);
  }
  return a_.to_string() + " + " + w_part;
}

}  // namespace trigonal
