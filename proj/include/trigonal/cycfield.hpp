#pragma once

#include "trigonal/cyc3.hpp"
#include "trigonal/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace trigonal {

/// Coefficients (low degree first) of the m-th cyclotomic polynomial, obtained by exact
/// division of x^m - 1 by Phi_d for every proper divisor d of m.
std::vector<Rational> cyclotomic_polynomial(int m);

class CycElement;

/// The field Q(zeta_m) = Q[x]/Phi_m(x), with zeta_m the class of x.
class CycField : public std::enable_shared_from_this<CycField> {
public:
  static std::shared_ptr<const CycField> make(int m);

  int conductor() const { return m_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }

  CycElement zero() const;
  CycElement one() const;
  CycElement from_rational(const Rational& r) const;
  /// zeta_m^k for any integer k.
  CycElement zeta(int k) const;
  /// Image of a + b*w, sending w to zeta_m^(m/3).  Needs 3 | m.
  CycElement embed(const Cyc3& z) const;
  /// Reduce an arbitrary polynomial in zeta_m.
  CycElement reduce(std::vector<Rational> poly) const;

private:
  explicit CycField(int m);

  int m_;
  std::vector<Rational> modulus_;
};

/// Residue class modulo Phi_m, stored as coefficients of 1, zeta, ..., zeta^(deg-1).
class CycElement {
public:
  const CycField& field() const { return *field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Galois action zeta -> zeta^a; needs gcd(a, m) = 1.
  CycElement galois(int a) const;

  std::string to_string() const;

  CycElement operator-() const;
  CycElement& operator+=(const CycElement& rhs);
  CycElement& operator-=(const CycElement& rhs);
  CycElement& operator*=(const CycElement& rhs);

  friend CycElement operator+(CycElement lhs, const CycElement& rhs) { return lhs += rhs; }
  friend CycElement operator-(CycElement lhs, const CycElement& rhs) { return lhs -= rhs; }
  friend CycElement operator*(CycElement lhs, const CycElement& rhs) { return lhs *= rhs; }
  friend CycElement operator*(const Rational& s, CycElement e) {
    for (auto& c : e.coeffs_) {
      c *= s;
    }
    return e;
  }
  friend bool operator==(const CycElement& lhs, const CycElement& rhs);

private:
  friend class CycField;
  CycElement(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  void require_same_field(const CycElement& rhs) const;

  std::shared_ptr<const CycField> field_;
  std::vector<Rational> coeffs_;
};

}  // namespace trigonal
