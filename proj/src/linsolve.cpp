#include "trigonal/linsolve.hpp"

#include "trigonal/errors.hpp"

#include <string>
#include <utility>

namespace trigonal {

std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                  const std::vector<Rational>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) {
    throw InvalidArgument("right-hand side length does not match the number of equations");
  }
  if (m == 0) {
    throw SingularSystem("empty linear system");
  }
  const std::size_t n = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw InvalidArgument("ragged coefficient matrix");
    }
  }

  // Augmented integer matrix, each row scaled by the lcm of its denominators.
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& v = j < n ? rows[i][j] : rhs[i];
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& v = j < n ? rows[i][j] : rhs[i];
      a[i][j] = v.numerator() * (scale / v.denominator());
    }
  }

  Integer prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < m && a[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == m) {
      throw SingularSystem("coefficient matrix has rank below " + std::to_string(n));
    }
    std::swap(a[c], a[pivot]);
    for (std::size_t i = c + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        Integer v = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  for (std::size_t i = n; i < m; ++i) {
    if (a[i][n] != 0) {
      throw InconsistentSystem("surplus equation " + std::to_string(i) + " is violated");
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(a[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) {
      acc -= Rational(a[k][j]) * x[j];
    }
    x[k] = acc / Rational(a[k][k]);
  }
  return x;
}

}  // namespace trigonal
