#include "doctest.h"
#include "generators.hpp"

#include "trigonal/errors.hpp"
#include "trigonal/hurwitz.hpp"
#include "trigonal/linsolve.hpp"

using namespace trigonal;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

USeries<Rational> one(int order) { return USeries<Rational>::constant(order, 1); }

}  // namespace

TEST_CASE("B values") {
  const auto closed = egf_values(b_closed(3));
  CHECK(closed[0] == 1);
  CHECK(closed[1] == q(2, 3));
  CHECK(closed[2] == q(2, 3));
  CHECK(closed[3] == q(10, 9));

  const auto rec = b_recursive(3);
  CHECK(rec == closed);
  // g = 2 instance worked by hand: 2/3 + 3 B_2 = 6 (2/3)^2.
  CHECK(q(2, 3) + Rational(3) * rec[2] == Rational(6) * q(2, 3) * q(2, 3));

  CHECK(b_recursive(30) == egf_values(b_closed(30)));
  CHECK_THROWS_AS(b_recursive(0), InvalidArgument);
}

TEST_CASE("B satisfies B' + 3BB'' = 6B'^2") {
  const int n = 24;
  const auto b = b_closed(n);
  const auto d1 = b.derivative().truncate(n - 2);
  const auto d2 = b.derivative().derivative();
  const auto b0 = b.truncate(n - 2);
  CHECK((d1 + Rational(3) * b0 * d2 - Rational(6) * d1 * d1).is_zero());
}

TEST_CASE("A bullet values") {
  const auto b = b_recursive(30);
  const auto ab = abullet_recursive(30, b);
  CHECK(ab[1] == q(1, 3));
  CHECK(ab[2] == q(2, 3));
  // g = 1: 1 + 3 A•_1 B_0 = 2 B_0^2.
  CHECK(Rational(1) + Rational(3) * ab[1] == Rational(2));

  const auto fn = abullet_functional(29);
  CHECK(fn[0] == q(1, 3));
  CHECK(fn[1] == q(2, 3));
  const auto vals = egf_values(fn);
  for (int g = 1; g <= 30; ++g) {
    CHECK(vals[static_cast<std::size_t>(g - 1)] == ab[static_cast<std::size_t>(g)]);
  }

  const auto bs = b_closed(29);
  CHECK((one(29) + Rational(3) * fn * bs - Rational(2) * bs * bs).is_zero());
  CHECK_THROWS_AS(abullet_recursive(5, b_recursive(2)), InvalidArgument);
}

TEST_CASE("A closed form") {
  const auto a = egf_values(a_closed(4));
  CHECK(a[0] == q(1, 3));
  CHECK(a[1] == q(2, 9));
  CHECK(a[2] == q(2, 27));
  CHECK(a[3] == q(2, 27));

  // (2/3)B - (1/3)B^-1 = (4/3)A(2u) - (1/3)A(-u).
  const int n = 25;
  const auto b = b_closed(n);
  const auto ac = a_closed(n);
  const auto lhs = q(2, 3) * b - q(1, 3) * (one(n) / b);
  const auto rhs = q(4, 3) * ac.scale_argument(Rational(2)) - q(1, 3) * ac.scale_argument(Rational(-1));
  CHECK(lhs == rhs);
}

TEST_CASE("gamma") {
  CHECK(gamma_formula(0) == 1);
  CHECK(gamma_formula(1) == 1);
  CHECK(gamma_formula(2) == 3);
  CHECK(gamma_bruteforce(0) == 1);
  CHECK(gamma_bruteforce(2) == 3);
  for (int g = 1; g <= 30; ++g) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(g + 1));
    CHECK(p == 2 * gamma_formula(g) + 2 * gamma_formula(g - 1));
  }
  for (int g = 0; g <= 18; ++g) {
    CHECK(gamma_bruteforce(g) == gamma_formula(g));
  }
  CHECK_THROWS_AS(gamma_bruteforce(21), InvalidArgument);
  CHECK_THROWS_AS(gamma_formula(-1), InvalidArgument);
}

TEST_CASE("delta") {
  CHECK(delta(2) == 6);
  CHECK(delta_direct(2) == 6);
  CHECK(delta(3) == 0);
  CHECK(delta(4) == -18);
  for (int g = 1; g <= 40; ++g) {
    CHECK(delta(g) == delta_direct(g));
  }
  CHECK(component_offset(4) == 0);
  CHECK(component_offset(5) == 2);
  CHECK(component_offset(3) == 1);
  CHECK_THROWS_AS(delta(0), InvalidArgument);
}

TEST_CASE("component labels") {
  CHECK(ComponentLabel::normalized(4, 6).l == 0);
  CHECK(ComponentLabel::normalized(4, 3).l == 3);
  CHECK(ComponentLabel::normalized(1, 0).l == 0);
  CHECK(ComponentLabel::normalized(1, 3).l == 0);
  CHECK_THROWS_AS(ComponentLabel::normalized(4, 1), InvalidLabel);
  CHECK_THROWS_AS(ComponentLabel::normalized(4, 7), InvalidLabel);
  CHECK_THROWS_AS(ComponentLabel::normalized(0, 0), InvalidLabel);

  testing::RandomRing rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int g = rng.integer(1, 40);
    const int l = rng.integer(0, g + 2);
    if ((l - (g + 2 - l)) % 3 == 0) {
      const auto a = ComponentLabel::normalized(g, l);
      const auto b = ComponentLabel::normalized(g, g + 2 - l);
      CHECK(a == b);
      CHECK(2 * a.l <= g + 2);
    } else {
      CHECK_THROWS_AS(ComponentLabel::normalized(g, l), InvalidLabel);
    }
  }
}

TEST_CASE("component solves at genus 4 and 5") {
  const auto table = HodgeTable::build(5);
  const auto s4 = solve_components(4, table);
  CHECK(s4.nu == 0);
  CHECK(s4.labels == std::vector<int>{0, 3, 6});
  CHECK(s4.constant);
  CHECK(s4.redundant_closure_holds);
  for (const auto& v : s4.values) {
    CHECK(v == q(2, 27));
  }

  const auto s5 = solve_components(5, table);
  CHECK(s5.nu == 2);
  CHECK(s5.labels == std::vector<int>{2, 5});
  CHECK(s5.constant);
  CHECK(s5.redundant_closure_holds);
  CHECK(s5.values.front() == egf_values(a_closed(4))[4]);

  CHECK(table.component(1, 0) == q(1, 3));
  CHECK(table.component(1, 3) == q(1, 3));
  CHECK(table.component(2, 2) == q(2, 9));
  CHECK(table.component(3, 1) == q(2, 27));
  CHECK(table.component(4, 6) == q(2, 27));
  CHECK_THROWS_AS(table.component(4, 2), InvalidLabel);
  CHECK_THROWS_AS(table.component(6, 1), InvalidLabel);
  CHECK_THROWS_AS(solve_components(3, table), InvalidArgument);
  CHECK_THROWS_AS(solve_components(7, table), InvalidArgument);
}

TEST_CASE("table invariants to genus 24") {
  const auto table = HodgeTable::build(24);
  for (const auto& c : table.checks()) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(table.all_checks_pass());
  const auto a = egf_values(a_closed(23));
  for (int g = 1; g <= 24; ++g) {
    CHECK(table.Abullet(g) == Rational(table.gamma(g)) * table.A(g));
    CHECK(table.A(g) == a[static_cast<std::size_t>(g - 1)]);
    const auto comps = table.components_of_genus(g);
    CHECK(!comps.empty());
    for (const auto& [label, value] : comps) {
      CHECK(label.genus == g);
      CHECK(value == table.A(g));
    }
  }
  CHECK_THROWS_AS(table.A(25), InvalidArgument);
  CHECK_THROWS_AS(table.Abullet(0), InvalidArgument);
}

TEST_CASE("theta difference") {
  const auto a = egf_values(a_closed(3));
  // (1,1): theta_0 = 2 A_1 A_3, theta_1 = A_2^2.
  CHECK(Rational(2) * a[0] * a[2] == q(4, 81));
  CHECK(a[1] * a[1] == q(4, 81));

  const auto th = theta_check(20);
  for (int r = 0; r <= 20; ++r) {
    for (int s = 0; r + s <= 20; ++s) {
      CHECK(th.at(r, s) == (r == 0 && s == 0 ? q(1, 9) : q(0)));
    }
  }

  const auto factored = theta_difference_factored(10);
  for (int r = 0; r <= 10; ++r) {
    for (int s = 0; r + s <= 10; ++s) {
      CHECK(factored.at(r, s) == Cyc3(th.at(r, s)));
    }
  }

  // A perturbed input must be detected.
  auto bad = egf_values(a_closed(6));
  bad[4] += q(1, 1000);
  const auto off = theta_difference(6, bad);
  bool any_nonzero = false;
  for (int r = 0; r <= 6; ++r) {
    for (int s = 0; r + s <= 6; ++s) {
      if (!(r == 0 && s == 0) && !off.at(r, s).is_zero()) {
        any_nonzero = true;
      }
    }
  }
  CHECK(any_nonzero);
  CHECK_THROWS_AS(theta_difference(6, std::vector<Rational>(3)), InvalidArgument);
}

TEST_CASE("exact linear solver") {
  const std::vector<std::vector<Rational>> rows{{q(1, 2), q(1, 3)}, {q(2), q(-1)}, {q(5, 2), q(-2, 3)}};
  const auto x = solve_exact(rows, {q(1), q(9, 4), q(13, 4)});
  CHECK(x[0] == q(3, 2));
  CHECK(x[1] == q(3, 4));
  CHECK_THROWS_AS(solve_exact(rows, {q(1), q(9, 4), q(4)}), InconsistentSystem);
  CHECK_THROWS_AS(solve_exact({{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(2)}), SingularSystem);

  testing::RandomRing rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 5);
    std::vector<Rational> truth(static_cast<std::size_t>(n));
    for (auto& t : truth) {
      t = rng.rational();
    }
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> b;
    for (int i = 0; i < n + 1; ++i) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      Rational acc;
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = rng.rational();
        acc += row[static_cast<std::size_t>(j)] * truth[static_cast<std::size_t>(j)];
      }
      m.push_back(row);
      b.push_back(acc);
    }
    try {
      CHECK(solve_exact(m, b) == truth);
    } catch (const SingularSystem&) {
      // random rank deficiency; skip
    }
  }
}
