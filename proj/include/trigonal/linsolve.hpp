#pragma once

#include "trigonal/rational.hpp"

#include <vector>

namespace trigonal {

/// Solves rows * x = rhs exactly for a system with at least as many equations as unknowns.
///
/// Rows are cleared of denominators and reduced by fraction-free (Bareiss) elimination.
/// Throws SingularSystem when the coefficient matrix lacks full column rank and
/// InconsistentSystem when the surplus equations are not satisfied.
std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                  const std::vector<Rational>& rhs);

}  // namespace trigonal
