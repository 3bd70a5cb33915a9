#include "trigonal/special_series.hpp"

namespace trigonal {

USeries<Rational> exp_series(int order) {
  USeries<Rational> out(order);
  Rational term(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      term /= Rational(k);
    }
    out[k] = term;
  }
  return out;
}

USeries<Rational> tangent_series(int order) {
  USeries<Rational> sin_s(order);
  USeries<Rational> cos_s(order);
  const auto e = exp_series(order);
  for (int k = 0; k <= order; ++k) {
    // sin picks odd k with sign (-1)^((k-1)/2), cos even k with (-1)^(k/2).
    if (k % 2 == 1) {
      sin_s[k] = ((k - 1) / 2) % 2 == 0 ? e[k] : -e[k];
    } else {
      cos_s[k] = (k / 2) % 2 == 0 ? e[k] : -e[k];
    }
  }
  return sin_s / cos_s;
}

USeries<Rational> tau_series(int order) {
  const auto tan_s = tangent_series(order);
  USeries<Rational> out(order);
  for (int n = 1; n <= order; n += 2) {
    const int k = (n - 1) / 2;
    out[n] = tan_s[n] * Rational(3).pow(-k) * Rational(2).pow(-n);
  }
  return out;
}

}  // namespace trigonal
