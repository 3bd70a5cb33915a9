#include "trigonal/cycfield.hpp"

#include "trigonal/errors.hpp"

#include <numeric>

namespace trigonal {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) {
    p.pop_back();
  }
}

/// Exact quotient num / den; throws when the remainder is non-zero.
Poly exact_divide(Poly num, const Poly& den) {
  trim(num);
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) {
    throw ArithmeticError("polynomial division with degree deficit");
  }
  Poly quot(static_cast<std::size_t>(dn - dd + 1), Rational(0));
  for (int k = dn - dd; k >= 0; --k) {
    const Rational c = num[static_cast<std::size_t>(k + dd)] / den.back();
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j) {
      num[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& r : num) {
    if (!r.is_zero()) {
      throw ArithmeticError("non-exact polynomial division");
    }
  }
  return quot;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int m) {
  if (m < 1) {
    throw InvalidArgument("cyclotomic polynomial index must be positive");
  }
  Poly p(static_cast<std::size_t>(m) + 1, Rational(0));
  p[0] = Rational(-1);
  p.back() = Rational(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) {
      p = exact_divide(std::move(p), cyclotomic_polynomial(d));
    }
  }
  return p;
}

CycField::CycField(int m) : m_(m), modulus_(cyclotomic_polynomial(m)) {}

std::shared_ptr<const CycField> CycField::make(int m) {
  if (m < 1) {
    throw InvalidArgument("cyclotomic conductor must be positive");
  }
  return std::shared_ptr<const CycField>(new CycField(m));
}

CycElement CycField::reduce(std::vector<Rational> poly) const {
  const int deg = degree();
  // Phi_m is monic: fold x^k for k >= deg down by x^deg = -sum_{j<deg} c_j x^j.
  for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
    const Rational c = poly[static_cast<std::size_t>(k)];
    if (c.is_zero()) {
      continue;
    }
    poly[static_cast<std::size_t>(k)] = Rational(0);
    for (int j = 0; j < deg; ++j) {
      poly[static_cast<std::size_t>(k - deg + j)] -= c * modulus_[static_cast<std::size_t>(j)];
    }
  }
  poly.resize(static_cast<std::size_t>(deg), Rational(0));
  return CycElement(shared_from_this(), std::move(poly));
}

CycElement CycField::zero() const { return reduce({}); }
CycElement CycField::one() const { return reduce({Rational(1)}); }
CycElement CycField::from_rational(const Rational& r) const { return reduce({r}); }

CycElement CycField::zeta(int k) const {
  const int e = ((k % m_) + m_) % m_;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly.back() = Rational(1);
  return reduce(std::move(poly));
}

CycElement CycField::embed(const Cyc3& z) const {
  if (m_ % 3 != 0) {
    throw InvalidArgument("Q(w) embeds in Q(zeta_m) only when 3 divides m");
  }
  return from_rational(z.a()) + z.b() * zeta(m_ / 3);
}

bool CycElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

void CycElement::require_same_field(const CycElement& rhs) const {
  if (field_->conductor() != rhs.field_->conductor()) {
    throw InvalidArgument("cyclotomic elements from different fields");
  }
}

CycElement CycElement::galois(int a) const {
  const int m = field_->conductor();
  if (std::gcd(a, m) != 1) {
    throw InvalidArgument("Galois exponent must be coprime to the conductor");
  }
  CycElement out = field_->zero();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) {
      out += coeffs_[k] * field_->zeta(a * static_cast<int>(k));
    }
  }
  return out;
}

std::string CycElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    out += coeffs_[k].to_string();
    if (k > 0) {
      out += "*z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

CycElement CycElement::operator-() const {
  CycElement out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

CycElement& CycElement::operator+=(const CycElement& rhs) {
  require_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

CycElement& CycElement::operator-=(const CycElement& rhs) {
  require_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  return *this;
}

CycElement& CycElement::operator*=(const CycElement& rhs) {
  require_same_field(rhs);
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  *this = field_->reduce(std::move(prod));
  return *this;
}

bool operator==(const CycElement& lhs, const CycElement& rhs) {
  return lhs.field_->conductor() == rhs.field_->conductor() && lhs.coeffs_ == rhs.coeffs_;
}

}  // namespace trigonal
