#pragma once

// The character-table change of variables for [C^2/Z_n]:
//   y_R = 1/n sum_g (chi_rho(g) - 2)^(1/2) chi_R(g) x_(g),   q_R = zeta_n^(n_R),
// with the square root fixed as zeta_2n^k - zeta_2n^-k on the class of gamma^k.

#include "trigonal/cycfield.hpp"

#include <memory>
#include <vector>

namespace trigonal {

struct DuValTransform {
  int n = 0;
  std::shared_ptr<const CycField> field;
  /// matrix[j-1][k-1] = coefficient of x_(gamma^k) in y_(R_j), 1 <= j, k <= n-1.
  std::vector<std::vector<CycElement>> matrix;
  /// q_values[j-1] = zeta_n (every n_R is 1 for A_(n-1)).
  std::vector<CycElement> q_values;

  const CycElement& entry(int j, int k) const;

  /// chi_rho(gamma^k) = zeta_n^k + zeta_n^-k in the ambient field.
  CycElement chi_rho(int k) const;
  /// chi_(R_j)(gamma^k) = zeta_n^(jk).
  CycElement chi(int j, int k) const;
};

/// Needs n >= 2.
DuValTransform duval_transform(int n);

/// Every entry e satisfies n^2 e^2 = (chi_rho - 2) chi_R^2.
bool entries_square_correctly(const DuValTransform& t);

/// For gcd(a, 2n) = 1, applying zeta -> zeta^a to column k gives column (a k mod n) up to a
/// common sign.
bool galois_permutes_columns(const DuValTransform& t, int a);

/// Complex conjugation sends row R_j to minus row R_(n-j).
bool conjugation_pairs_rows(const DuValTransform& t);

/// Whether zeta -> zeta^a maps every row onto some row (the literal row-permutation statement).
bool galois_permutes_rows(const DuValTransform& t, int a);

/// duval_transform(3) equals the standard jacobian entrywise (w -> zeta_6^2) and q = (w, w).
bool check_n3_specialization();

}  // namespace trigonal
