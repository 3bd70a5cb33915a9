#include "doctest.h"

#include "trigonal/errors.hpp"
#include "trigonal/potentials.hpp"

using namespace trigonal;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

LinT lin(const Rational& c1, const Rational& c2) { return {Cyc3(), Cyc3(c1), Cyc3(c2)}; }

const HodgeTable& table() {
  static const HodgeTable t = HodgeTable::build(14);
  return t;
}

BiSeries<LinT> series(ThirdPartial p) { return std::get<BiSeries<LinT>>(std::move(p)); }
EquivariantScalar scalar(ThirdPartial p) { return std::get<EquivariantScalar>(std::move(p)); }

BiSeries<Cyc3> t_coefficient_on_diagonal(const BiSeries<LinT>& s) {
  return s.map([](const LinT& v) {
    CHECK(v.constant().is_zero());
    return v.restrict_diagonal().t1_coeff();
  });
}

}  // namespace

TEST_CASE("localization reproduces the triple intersections") {
  using enum ClassId;
  const EquivariantScalar one_one_one{LinT(), Cyc3(q(1, 3))};
  CHECK(triple_intersection(One, One, One) == one_one_one);
  CHECK(triple_intersection(One, One, One).to_string() == "1/(3*t1*t2)");
  CHECK(triple_intersection(One, One, C1).is_zero());
  CHECK(triple_intersection(One, One, C2).is_zero());
  CHECK(triple_intersection(One, C1, C1) == EquivariantScalar{LinT(q(-2, 3)), Cyc3()});
  CHECK(triple_intersection(One, C2, C2) == EquivariantScalar{LinT(q(-2, 3)), Cyc3()});
  CHECK(triple_intersection(One, C1, C2) == EquivariantScalar{LinT(q(-1, 3)), Cyc3()});
  CHECK(triple_intersection(C1, C1, C1).linear == lin(q(4, 3), q(2, 3)));
  CHECK(triple_intersection(C1, C1, C2).linear == lin(q(2, 3), q(1, 3)));
  CHECK(triple_intersection(C2, C2, C2).linear == lin(q(2, 3), q(4, 3)));
  CHECK(triple_intersection(C2, C2, C1).linear == lin(q(1, 3), q(2, 3)));
  // Order of insertions is irrelevant.
  CHECK(triple_intersection(C2, C1, C1) == triple_intersection(C1, C1, C2));

  auto bad = FixedPointData::standard();
  bad.tangent[1][0] = LinT(3) * LinT::t1() - LinT::t2();
  CHECK_THROWS_AS(triple_intersection(C1, C1, C1, bad), ArithmeticError);
  auto skewed = FixedPointData::standard();
  skewed.bundle[0][1] = -LinT::t1();
  CHECK_THROWS_AS(triple_intersection(One, One, C1, skewed), ArithmeticError);
}

TEST_CASE("multi-cover invariants") {
  CHECK(multicover_invariant(2, 2) == lin(q(1, 8), q(1, 8)));
  CHECK(multicover_invariant(1, 2).is_zero());
  CHECK(multicover_invariant(3, 0) == lin(q(1, 27), q(1, 27)));
  CHECK(multicover_invariant(0, 1) == lin(q(1), q(1)));
  CHECK_THROWS_AS(multicover_invariant(0, 0), InvalidArgument);
  CHECK_THROWS_AS(multicover_invariant(-1, 2), InvalidArgument);
}

TEST_CASE("orbifold invariants") {
  const auto& t = table();
  CHECK(orbifold_invariant(3, 0, t) == lin(q(1, 3), q(0)));
  CHECK(orbifold_invariant(0, 3, t) == lin(q(0), q(1, 3)));
  CHECK(orbifold_invariant(3, 1, t).is_zero());
  CHECK(orbifold_invariant(4, 1, t) == lin(q(1, 27), q(1, 27)));
  CHECK(orbifold_invariant(2, 2, t) == lin(q(-1, 9), q(-1, 9)));
  CHECK(orbifold_invariant(3, 0, 0, t) == EquivariantScalar{LinT(), Cyc3(q(1, 3))});
  CHECK(orbifold_invariant(1, 1, 1, t) == EquivariantScalar{LinT(q(1, 3)), Cyc3()});
  CHECK(orbifold_invariant(1, 2, 0, t).is_zero());
  CHECK(orbifold_invariant(1, 3, 0, t).is_zero());
  CHECK(orbifold_invariant(2, 2, 2, t).is_zero());
  CHECK_THROWS_AS(orbifold_invariant(1, 1, t), InvalidArgument);

  // Coefficients of the third partials are the invariants with the three extra insertions.
  const int order = 12;
  for (const auto& idx : PartialIndex::all()) {
    if (idx.has_zero()) {
      continue;
    }
    const auto& s = series(fx_third_partial(idx, t, order));
    for (int i = 0; i <= order - 3; ++i) {
      for (int j = 0; i + j <= order - 3; ++j) {
        const LinT expected = orbifold_invariant(i + idx.count(1), j + idx.count(2), t);
        const Rational scale = Rational(factorial(i) * factorial(j));
        CHECK(s.at(i, j) * LinT(scale) == expected);
      }
    }
  }
}

TEST_CASE("change of variables data") {
  const auto cov = ChangeOfVars::standard();
  const Cyc3 c = Cyc3::i_over_sqrt3();
  CHECK(c * c == Cyc3(q(-1, 3)));
  CHECK(cov.jacobian[0][0] == Cyc3(q(-2, 3), q(-1, 3)));
  CHECK(cov.jacobian[0][1] == c * Cyc3::omega_bar());
  CHECK(cov.jacobian[1][0] == cov.jacobian[0][1]);
  CHECK(cov.q_values[0] == Cyc3::omega());
}

TEST_CASE("partial indices") {
  CHECK(PartialIndex(2, 1, 1).to_string() == "112");
  CHECK(PartialIndex::all().size() == 10);
  CHECK(PartialIndex(1, 1, 2).swapped().to_string() == "122");
  CHECK(PartialIndex(0, 1, 1).swapped().to_string() == "022");
  CHECK(PartialIndex(0, 2, 1).count(1) == 1);
  CHECK_THROWS_AS(PartialIndex(0, 3, 1), InvalidArgument);
}

TEST_CASE("geometric kernel") {
  const Cyc3 w = Cyc3::omega();
  const auto g = geometric_kernel(w, 13);
  CHECK(g[0] == (w - Cyc3(1)) / Cyc3(3));
  CHECK(g[0] == w / (Cyc3(1) - w));
  for (const Cyc3& z : {w, Cyc3::omega_bar(), Cyc3(q(1, 2)), Cyc3(2, 5)}) {
    const auto k = geometric_kernel(z, 13);
    const auto lhs = k.derivative();
    const auto k12 = k.truncate(12);
    CHECK(lhs == k12 + k12 * k12);
  }
  CHECK_THROWS_AS(geometric_kernel(Cyc3(1), 5), ArithmeticError);
}

TEST_CASE("x0 channels") {
  const auto cov = ChangeOfVars::standard();
  const auto& t = table();
  const auto y000 = scalar(fy_third_partial({0, 0, 0}, cov, 6));
  CHECK(y000 == EquivariantScalar{LinT(), Cyc3(q(1, 3))});
  CHECK(scalar(fy_third_partial({0, 1, 2}, cov, 6)) == EquivariantScalar{LinT(q(1, 3)), Cyc3()});
  CHECK(scalar(fy_third_partial({0, 0, 1}, cov, 6)).is_zero());
  CHECK(scalar(fy_third_partial({0, 1, 1}, cov, 6)).is_zero());
  CHECK(scalar(fx_third_partial({0, 1, 1}, t, 6)).is_zero());
  CHECK(scalar(fx_third_partial({0, 0, 0}, t, 6)) == y000);
}

TEST_CASE("F^X third partial (1,1,1)") {
  const auto& t = table();
  const auto& s = series(fx_third_partial({1, 1, 1}, t, 12));
  CHECK(s.at(0, 0) == lin(q(1, 3), q(0)));
  CHECK(s.at(0, 0).restrict_diagonal().t1_coeff() == Cyc3(q(1, 3)));

  // t1 = t2 = t: (1/3)[A(-x1-x2) + A(-w x1 - w^2 x2) + A(-w^2 x1 - w x2)], from the closed form.
  const int n = 9;
  const auto a = a_closed(n).map([](const Rational& r) { return Cyc3(r); });
  const Cyc3 w = Cyc3::omega();
  const Cyc3 wb = Cyc3::omega_bar();
  const auto expected = Cyc3(q(1, 3)) * (compose_linear(a, Cyc3(-1), Cyc3(-1), n) +
                                         compose_linear(a, -w, -wb, n) + compose_linear(a, -wb, -w, n));
  CHECK(t_coefficient_on_diagonal(series(fx_third_partial({1, 1, 1}, t, n + 3))) == expected);

  // (1,1,2): (1/3)[A(-x1-x2) + w A(-w x1 - w^2 x2) + w^2 A(-w^2 x1 - w x2)].
  const auto expected112 = Cyc3(q(1, 3)) * (compose_linear(a, Cyc3(-1), Cyc3(-1), n) +
                                            w * compose_linear(a, -w, -wb, n) + wb * compose_linear(a, -wb, -w, n));
  CHECK(t_coefficient_on_diagonal(series(fx_third_partial({1, 1, 2}, t, n + 3))) == expected112);
}

TEST_CASE("F^Y third partial (1,1,1) against the geometric display") {
  const int n = 9;
  const Cyc3 c = Cyc3::i_over_sqrt3();
  const Cyc3 w = Cyc3::omega();
  const Cyc3 wb = Cyc3::omega_bar();
  const auto kw = geometric_kernel(w, n);
  const auto kwb = geometric_kernel(wb, n);
  const auto one = BiSeries<Cyc3>::constant(n, Cyc3(1));
  const auto expected =
      (c * c * c) * (one + Cyc3(2) * compose_linear(kw, c * w, c * wb, n) +
                     Cyc3(2) * compose_linear(kw, c * wb, c * w, n) - Cyc3(2) * compose_linear(kwb, -c, -c, n));
  const auto& s = series(fy_third_partial({1, 1, 1}, ChangeOfVars::standard(), n + 3));
  CHECK(t_coefficient_on_diagonal(s) == expected);
}

TEST_CASE("symmetry under x1 <-> x2, t1 <-> t2, 1 <-> 2") {
  const auto cov = ChangeOfVars::standard();
  const auto& t = table();
  const int order = 12;
  for (const auto& idx : PartialIndex::all()) {
    INFO(idx.to_string());
    const auto swap = [](const ThirdPartial& p) -> ThirdPartial {
      if (const auto* s = std::get_if<BiSeries<LinT>>(&p)) {
        return s->swap_variables().map([](const LinT& v) { return v.swap_t(); });
      }
      const auto& e = std::get<EquivariantScalar>(p);
      return EquivariantScalar{e.linear.swap_t(), e.inverse_t1t2};
    };
    CHECK(swap(fy_third_partial(idx, cov, order)) == fy_third_partial(idx.swapped(), cov, order));
    CHECK(swap(fx_third_partial(idx, t, order)) == fx_third_partial(idx.swapped(), t, order));
  }
}

TEST_CASE("mixed partials commute") {
  const auto cov = ChangeOfVars::standard();
  const auto& t = table();
  const int order = 14;
  const auto y111 = series(fy_third_partial({1, 1, 1}, cov, order));
  const auto y112 = series(fy_third_partial({1, 1, 2}, cov, order));
  const auto y122 = series(fy_third_partial({1, 2, 2}, cov, order));
  CHECK(y112.derivative(1) == y111.derivative(2));
  CHECK(y122.derivative(1) == y112.derivative(2));
  const auto x111 = series(fx_third_partial({1, 1, 1}, t, order));
  const auto x112 = series(fx_third_partial({1, 1, 2}, t, order));
  CHECK(x112.derivative(1) == x111.derivative(2));
}

TEST_CASE("antidiagonal t1 = -t2") {
  const auto cov = ChangeOfVars::standard();
  const auto& t = table();
  const int order = 12;
  for (const auto& idx : PartialIndex::all()) {
    if (idx.has_zero()) {
      continue;
    }
    INFO(idx.to_string());
    const auto anti = [](const ThirdPartial& p) {
      return std::get<BiSeries<LinT>>(p).map([](const LinT& v) { return v.restrict_antidiagonal(); });
    };
    const auto y = anti(fy_third_partial(idx, cov, order));
    const auto x = anti(fx_third_partial(idx, t, order));
    CHECK(y == x);
    // Only the cubic terms survive, and they are constant in x.
    CHECK(y == BiSeries<LinT>::constant(order - 3, y.at(0, 0)));
  }
}

TEST_CASE("verify_crc") {
  const auto report = verify_crc(15, HodgeTable::build(13));
  CHECK(report.order == 15);
  CHECK(report.checks.size() == 10);
  for (const auto& c : report.checks) {
    INFO(c.idx.to_string() << " " << (c.first_mismatch ? c.first_mismatch->monomial : ""));
    CHECK(c.pass);
  }
  CHECK(report.all_pass);

  CHECK(verify_crc(3, HodgeTable::build(1)).all_pass);
  CHECK_THROWS_AS(verify_crc(2, table()), InvalidArgument);
  CHECK_THROWS_AS(verify_crc(15, HodgeTable::build(12)), InvalidArgument);

  // A corrupted Novikov parameter is caught by the comparison.
  auto cov = ChangeOfVars::standard();
  cov.q_values[1] = Cyc3::omega_bar();
  CHECK_THROWS_AS(fy_third_partial({1, 1, 2}, cov, 8), ArithmeticError);
  cov.q_values[0] = Cyc3::omega_bar();
  const auto y = series(fy_third_partial({1, 1, 2}, cov, 8));
  const auto x = series(fx_third_partial({1, 1, 2}, table(), 8));
  const auto mm = first_mismatch(y, x);
  REQUIRE(mm.has_value());
  CHECK(mm->fy != mm->fx);
}
