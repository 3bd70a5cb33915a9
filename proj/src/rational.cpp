#include "trigonal/rational.hpp"

#include "trigonal/errors.hpp"

#include <cctype>

namespace trigonal {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw ArithmeticError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

Integer Rational::to_integer() const {
  if (!is_integer()) {
    throw ArithmeticError("expected an integer, got " + to_string());
  }
  return value_.get_num();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw ArithmeticError("inverse of zero rational");
  }
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw ArithmeticError("division by zero rational");
  }
  value_ /= rhs.value_;
  return *this;
}

Integer factorial(int n) {
  if (n < 0) {
    throw InvalidArgument("factorial of negative number");
  }
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace trigonal
