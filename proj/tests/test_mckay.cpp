#include "doctest.h"

#include "trigonal/errors.hpp"
#include "trigonal/mckay.hpp"

#include <numeric>

using namespace trigonal;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST_CASE("n = 3 reproduces the change of variables") {
  const auto t = duval_transform(3);
  CHECK(t.matrix.size() == 2);
  CHECK(t.matrix[0].size() == 2);
  // (i/sqrt3) w = (2w + 1) w / 3 = (-2 - w)/3.
  const Cyc3 expected(q(-2, 3), q(-1, 3));
  CHECK(Cyc3::i_over_sqrt3() * Cyc3::omega() == expected);
  CHECK(t.entry(1, 1) == t.field->embed(expected));
  CHECK(t.entry(1, 2) == t.field->embed(Cyc3::i_over_sqrt3() * Cyc3::omega_bar()));
  CHECK(t.q_values[0] == t.field->embed(Cyc3::omega()));
  CHECK(t.q_values[1] == t.field->embed(Cyc3::omega()));
  CHECK(check_n3_specialization());
}

TEST_CASE("n = 2") {
  const auto t = duval_transform(2);
  CHECK(t.matrix.size() == 1);
  const auto root = t.field->zeta(1) - t.field->zeta(-1);
  CHECK(root * root == t.field->from_rational(-4));
  CHECK(t.entry(1, 1) == q(1, 2) * (root * t.field->from_rational(-1)));
  CHECK(t.entry(1, 1) == -t.field->zeta(1));
}

TEST_CASE("entry squares and Galois symmetry") {
  for (int n = 2; n <= 12; ++n) {
    INFO("n=" << n);
    const auto t = duval_transform(n);
    CHECK(entries_square_correctly(t));
    CHECK(conjugation_pairs_rows(t));
    for (int a = 1; a < 2 * n; ++a) {
      if (std::gcd(a, 2 * n) == 1) {
        CHECK(galois_permutes_columns(t, a));
      }
    }
  }
  CHECK_THROWS_AS(galois_permutes_columns(duval_transform(4), 2), InvalidArgument);
  CHECK_THROWS_AS(duval_transform(1), InvalidArgument);
  CHECK_THROWS_AS(duval_transform(3).entry(0, 1), InvalidArgument);
}

TEST_CASE("rows are not Galois-permuted in general") {
  // zeta -> zeta^3 on Z_5 rescales the square-root factor, so no row maps onto a row.
  CHECK(!galois_permutes_rows(duval_transform(5), 3));
  // Conjugation sends a row to the negative of its partner, not to the partner itself.
  CHECK(!galois_permutes_rows(duval_transform(3), 5));
  CHECK(galois_permutes_rows(duval_transform(5), 1));
}

TEST_CASE("a corrupted entry is detected") {
  auto t = duval_transform(4);
  t.matrix[0][1] = t.matrix[0][1] + t.field->one();
  CHECK(!entries_square_correctly(t));
}
