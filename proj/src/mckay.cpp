#include "trigonal/mckay.hpp"

#include "trigonal/errors.hpp"
#include "trigonal/potentials.hpp"

#include <numeric>

namespace trigonal {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

}  // namespace

const CycElement& DuValTransform::entry(int j, int k) const {
  if (j < 1 || j >= n || k < 1 || k >= n) {
    throw InvalidArgument("DuVal entry (" + std::to_string(j) + ", " + std::to_string(k) + ") out of range");
  }
  return matrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
}

CycElement DuValTransform::chi_rho(int k) const { return field->zeta(2 * k) + field->zeta(-2 * k); }

CycElement DuValTransform::chi(int j, int k) const { return field->zeta(2 * mod(j * k, n)); }

DuValTransform duval_transform(int n) {
  if (n < 2) {
    throw InvalidArgument("DuVal transform needs n >= 2, got " + std::to_string(n));
  }
  DuValTransform t;
  t.n = n;
  t.field = CycField::make(2 * n);
  const Rational inv_n(Integer(1), Integer(n));
  for (int j = 1; j < n; ++j) {
    std::vector<CycElement> row;
    for (int k = 1; k < n; ++k) {
      const CycElement root = t.field->zeta(k) - t.field->zeta(-k);
      row.push_back(inv_n * (root * t.chi(j, k)));
    }
    t.matrix.push_back(std::move(row));
    t.q_values.push_back(t.field->zeta(2));
  }
  return t;
}

bool entries_square_correctly(const DuValTransform& t) {
  const Rational n2(t.n * t.n);
  const CycElement two = t.field->from_rational(Rational(2));
  for (int j = 1; j < t.n; ++j) {
    for (int k = 1; k < t.n; ++k) {
      const CycElement& e = t.entry(j, k);
      const CycElement c = t.chi(j, k);
      if (!(n2 * (e * e) == (t.chi_rho(k) - two) * (c * c))) {
        return false;
      }
    }
  }
  return true;
}

bool galois_permutes_columns(const DuValTransform& t, int a) {
  if (std::gcd(a, 2 * t.n) != 1) {
    throw InvalidArgument("Galois exponent must be prime to " + std::to_string(2 * t.n));
  }
  for (int k = 1; k < t.n; ++k) {
    const int target = mod(a * k, t.n);
    // zeta_2n^(ak) = (-1)^((ak - target)/n) zeta_2n^target.
    const bool flip = ((mod(a * k, 2 * t.n) - target) / t.n) % 2 == 1;
    for (int j = 1; j < t.n; ++j) {
      const CycElement image = t.entry(j, k).galois(a);
      const CycElement& expected = t.entry(j, target);
      if (!(image == (flip ? -expected : expected))) {
        return false;
      }
    }
  }
  return true;
}

bool conjugation_pairs_rows(const DuValTransform& t) {
  for (int j = 1; j < t.n; ++j) {
    for (int k = 1; k < t.n; ++k) {
      if (!(t.entry(j, k).galois(-1) == -t.entry(t.n - j, k))) {
        return false;
      }
    }
  }
  return true;
}

bool galois_permutes_rows(const DuValTransform& t, int a) {
  for (int j = 1; j < t.n; ++j) {
    bool found = false;
    for (int target = 1; target < t.n && !found; ++target) {
      bool same = true;
      for (int k = 1; k < t.n && same; ++k) {
        same = t.entry(j, k).galois(a) == t.entry(target, k);
      }
      found = same;
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool check_n3_specialization() {
  const auto t = duval_transform(3);
  const auto cov = ChangeOfVars::standard();
  for (int j = 1; j <= 2; ++j) {
    for (int k = 1; k <= 2; ++k) {
      const auto& z = cov.jacobian[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      if (!(t.entry(j, k) == t.field->embed(z))) {
        return false;
      }
    }
  }
  for (std::size_t r = 0; r < 2; ++r) {
    if (!(t.q_values[r] == t.field->embed(cov.q_values[r]))) {
      return false;
    }
  }
  return true;
}

}  // namespace trigonal
