#pragma once

#include "trigonal/rational.hpp"
#include "trigonal/series.hpp"

namespace trigonal {

/// Maclaurin series of exp(u).
USeries<Rational> exp_series(int order);

/// Maclaurin series of tan(u), computed as sin(u)/cos(u).
USeries<Rational> tangent_series(int order);

/// The rational series tau(u) = sqrt(3) * tan(u / sqrt(12)).
///
/// The coefficient of u^(2k+1) is the tan coefficient times 3^-k 2^-(2k+1), so every
/// coefficient is rational and tau satisfies 6 tau' = 3 + tau^2.
USeries<Rational> tau_series(int order);

}  // namespace trigonal
