#include "trigonal/potentials.hpp"

#include "trigonal/errors.hpp"
#include "trigonal/special_series.hpp"

#include <algorithm>

namespace trigonal {

namespace {

// Homogeneous polynomial in (t1, t2) over Q; c[i] is the coefficient of t1^i t2^(deg-i).
struct HomPoly {
  int degree = 0;
  std::vector<Rational> c{Rational(1)};

  static HomPoly from_weight(const LinT& w) {
    if (!w.constant().is_zero() || !w.t1_coeff().is_rational() || !w.t2_coeff().is_rational()) {
      throw InvalidArgument("fixed-point weight must be a rational linear form in t1, t2: " + w.to_string());
    }
    return {1, {w.t2_coeff().a(), w.t1_coeff().a()}};
  }

  friend HomPoly operator*(const HomPoly& p, const HomPoly& q) {
    HomPoly out{p.degree + q.degree, std::vector<Rational>(static_cast<std::size_t>(p.degree + q.degree) + 1)};
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      for (std::size_t j = 0; j < q.c.size(); ++j) {
        out.c[i + j] += p.c[i] * q.c[j];
      }
    }
    return out;
  }

  HomPoly& operator+=(const HomPoly& rhs) {
    if (degree != rhs.degree) {
      throw ArithmeticError("adding homogeneous polynomials of different degree");
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] += rhs.c[i];
    }
    return *this;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
  }
};

// Exact quotient num/den.  Dehomogenized at t2 = 1 this is univariate long division in t1.
HomPoly divide_exact(const HomPoly& num, const HomPoly& den) {
  int den_top = den.degree;
  while (den_top >= 0 && den.c[static_cast<std::size_t>(den_top)].is_zero()) {
    --den_top;
  }
  if (den_top < 0) {
    throw ArithmeticError("division by the zero polynomial");
  }
  const int q_degree = num.degree - den.degree;
  if (q_degree < 0) {
    throw ArithmeticError("localization quotient has negative degree");
  }
  std::vector<Rational> rem = num.c;
  std::vector<Rational> quot(static_cast<std::size_t>(q_degree) + 1);
  for (int top = num.degree; top >= den_top; --top) {
    const Rational lead = rem[static_cast<std::size_t>(top)];
    if (lead.is_zero()) {
      continue;
    }
    const int shift = top - den_top;
    if (shift > q_degree) {
      throw ArithmeticError("localization sum does not divide exactly");
    }
    const Rational factor = lead / den.c[static_cast<std::size_t>(den_top)];
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= den_top; ++k) {
      rem[static_cast<std::size_t>(shift + k)] -= factor * den.c[static_cast<std::size_t>(k)];
    }
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) {
      throw ArithmeticError("localization sum does not divide exactly");
    }
  }
  return {q_degree, std::move(quot)};
}

const LinT& class_weight(ClassId id, int point, const FixedPointData& data, const LinT& unit) {
  switch (id) {
    case ClassId::One:
      return unit;
    case ClassId::C1:
      return data.bundle[0][static_cast<std::size_t>(point)];
    case ClassId::C2:
      return data.bundle[1][static_cast<std::size_t>(point)];
  }
  throw InvalidArgument("unknown class id");
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

Cyc3 cube(const std::array<Cyc3, 2>& form, const PartialIndex& idx) {
  Cyc3 out(1);
  for (int e : idx.entries()) {
    out *= form[static_cast<std::size_t>(e - 1)];
  }
  return out;
}

BiSeries<LinT> times_t1_plus_t2(const BiSeries<Cyc3>& s, const Rational& scale) {
  return s.map([&scale](const Cyc3& c) {
    const Cyc3 v = Cyc3(scale) * c;
    return LinT(Cyc3(), v, v);
  });
}

void require_series_order(int order) {
  if (order < 3) {
    throw InvalidArgument("third partials need truncation order >= 3, got " + std::to_string(order));
  }
}

}  // namespace

std::string EquivariantScalar::to_string() const {
  if (inverse_t1t2.is_zero()) {
    return linear.to_string();
  }
  std::string channel;
  if (inverse_t1t2.is_rational()) {
    const Rational& r = inverse_t1t2.a();
    channel = r.numerator().get_str() + "/(" + (r.denominator() == 1 ? "" : r.denominator().get_str() + "*") + "t1*t2)";
  } else {
    channel = "(" + inverse_t1t2.to_string() + ")/(t1*t2)";
  }
  return linear.is_zero() ? channel : linear.to_string() + " + " + channel;
}

EquivariantScalar& EquivariantScalar::operator+=(const EquivariantScalar& rhs) {
  linear += rhs.linear;
  inverse_t1t2 += rhs.inverse_t1t2;
  return *this;
}

EquivariantScalar operator*(const Cyc3& c, const EquivariantScalar& v) {
  return {LinT(c) * v.linear, c * v.inverse_t1t2};
}

FixedPointData FixedPointData::standard() {
  const LinT t1 = LinT::t1();
  const LinT t2 = LinT::t2();
  FixedPointData d;
  d.tangent = {{{LinT(3) * t1, LinT(-2) * t1 + t2},
                {LinT(2) * t1 - t2, -t1 + LinT(2) * t2},
                {t1 - LinT(2) * t2, LinT(3) * t2}}};
  d.bundle = {{{LinT(-2) * t1, -t2, -t2}, {-t1, -t1, LinT(-2) * t2}}};
  return d;
}

EquivariantScalar triple_intersection(ClassId a, ClassId b, ClassId c, const FixedPointData& data) {
  const LinT unit(1);
  const int k = (a != ClassId::One) + (b != ClassId::One) + (c != ClassId::One);

  std::array<HomPoly, 3> euler;
  for (int p = 0; p < 3; ++p) {
    euler[static_cast<std::size_t>(p)] =
        HomPoly::from_weight(data.tangent[static_cast<std::size_t>(p)][0]) *
        HomPoly::from_weight(data.tangent[static_cast<std::size_t>(p)][1]);
  }
  const HomPoly denominator = euler[0] * euler[1] * euler[2];

  HomPoly numerator{k + 4, std::vector<Rational>(static_cast<std::size_t>(k) + 5)};
  for (int p = 0; p < 3; ++p) {
    HomPoly term;
    for (ClassId id : {a, b, c}) {
      if (id != ClassId::One) {
        term = term * HomPoly::from_weight(class_weight(id, p, data, unit));
      }
    }
    for (int other = 0; other < 3; ++other) {
      if (other != p) {
        term = term * euler[static_cast<std::size_t>(other)];
      }
    }
    numerator += term;
  }

  // value = P / (t1 t2) with P homogeneous of degree k.
  const HomPoly t1t2{2, {Rational(0), Rational(1), Rational(0)}};
  const HomPoly p = divide_exact(numerator * t1t2, denominator);
  auto fail = [&]() -> EquivariantScalar {
    throw ArithmeticError("localization sum is not of the expected form for " + std::to_string(k) +
                          " divisor insertions");
  };
  switch (k) {
    case 0:
      return {LinT(), Cyc3(p.c[0])};
    case 1:
      return p.is_zero() ? EquivariantScalar{} : fail();
    case 2:
      if (!p.c[0].is_zero() || !p.c[2].is_zero()) {
        return fail();
      }
      return {LinT(p.c[1]), Cyc3()};
    default:
      if (!p.c[0].is_zero() || !p.c[3].is_zero()) {
        return fail();
      }
      return {LinT(Cyc3(), Cyc3(p.c[2]), Cyc3(p.c[1])), Cyc3()};
  }
}

EquivariantScalar triple_intersection(ClassId a, ClassId b, ClassId c) {
  static const FixedPointData data = FixedPointData::standard();
  return triple_intersection(a, b, c, data);
}

LinT multicover_invariant(int d1, int d2) {
  if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0)) {
    throw InvalidArgument("curve class (" + std::to_string(d1) + ", " + std::to_string(d2) + ") is not effective");
  }
  if (d1 != d2 && d1 != 0 && d2 != 0) {
    return {};
  }
  const int d = std::max(d1, d2);
  const Cyc3 w(Rational(1) / Rational(d).pow(3));
  return {Cyc3(), w, w};
}

EquivariantScalar orbifold_invariant(int n0, int n1, int n2, const HodgeTable& table) {
  if (n0 < 0 || n1 < 0 || n2 < 0) {
    throw InvalidArgument("insertion counts must be non-negative");
  }
  const int total = n0 + n1 + n2;
  if (total < 3) {
    throw InvalidArgument("unstable invariant with " + std::to_string(total) + " insertions");
  }
  if (n0 > 0) {
    if (total > 3) {
      return {};
    }
    if (n0 == 3) {
      return {LinT(), Cyc3(Rational(1, 3))};
    }
    if (n0 == 1 && n1 == 1 && n2 == 1) {
      return {LinT(Rational(1, 3)), Cyc3()};
    }
    return {};
  }
  if (total == 3 && n1 == 3) {
    return {LinT(Cyc3(), Cyc3(Rational(1, 3)), Cyc3()), Cyc3()};
  }
  if (total == 3 && n2 == 3) {
    return {LinT(Cyc3(), Cyc3(), Cyc3(Rational(1, 3))), Cyc3()};
  }
  if (mod3(n1 - n2) != 0) {
    return {};
  }
  const int g = total - 2;
  const Rational sign = g % 2 == 1 ? Rational(1) : Rational(-1);
  const Cyc3 half(sign * table.A(g) / Rational(2));
  return {LinT(Cyc3(), half, half), Cyc3()};
}

LinT orbifold_invariant(int n1, int n2, const HodgeTable& table) {
  return orbifold_invariant(0, n1, n2, table).linear;
}

ChangeOfVars ChangeOfVars::standard() {
  const Cyc3 c = Cyc3::i_over_sqrt3();
  const Cyc3 w = Cyc3::omega();
  const Cyc3 wb = Cyc3::omega_bar();
  return {{{{c * w, c * wb}, {c * wb, c * w}}}, {w, w}};
}

PartialIndex::PartialIndex(int i, int j, int k) : idx_{i, j, k} {
  for (int e : idx_) {
    if (e < 0 || e > 2) {
      throw InvalidArgument("partial index entries must lie in {0, 1, 2}, got " + std::to_string(e));
    }
  }
  std::sort(idx_.begin(), idx_.end());
}

std::vector<PartialIndex> PartialIndex::all() {
  std::vector<PartialIndex> out;
  for (int i = 0; i <= 2; ++i) {
    for (int j = i; j <= 2; ++j) {
      for (int k = j; k <= 2; ++k) {
        out.emplace_back(i, j, k);
      }
    }
  }
  return out;
}

int PartialIndex::count(int variable) const {
  return static_cast<int>(std::count(idx_.begin(), idx_.end(), variable));
}

PartialIndex PartialIndex::swapped() const {
  auto flip = [](int e) { return e == 0 ? 0 : 3 - e; };
  return {flip(idx_[0]), flip(idx_[1]), flip(idx_[2])};
}

std::string PartialIndex::to_string() const {
  return std::to_string(idx_[0]) + std::to_string(idx_[1]) + std::to_string(idx_[2]);
}

USeries<Cyc3> geometric_kernel(const Cyc3& q, int order) {
  const auto e = exp_series(order).map([](const Rational& r) { return Cyc3(r); });
  const auto qe = q * e;
  return qe / (USeries<Cyc3>::constant(order, Cyc3(1)) - qe);
}

ThirdPartial fy_third_partial(const PartialIndex& idx, const ChangeOfVars& cov, int order) {
  require_series_order(order);
  // Full jacobian with y0 = x0; index 0 is the unit class, 1 and 2 the exceptional curves.
  std::array<std::array<Cyc3, 3>, 3> m{};
  m[0][0] = Cyc3(1);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t i = 0; i < 2; ++i) {
      m[a + 1][i + 1] = cov.jacobian[a][i];
    }
  }
  const ClassId classes[3] = {ClassId::One, ClassId::C1, ClassId::C2};
  const auto& e = idx.entries();
  EquivariantScalar classical;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        const Cyc3 factor = m[a][static_cast<std::size_t>(e[0])] * m[b][static_cast<std::size_t>(e[1])] *
                            m[c][static_cast<std::size_t>(e[2])];
        if (!factor.is_zero()) {
          classical += factor * triple_intersection(classes[a], classes[b], classes[c]);
        }
      }
    }
  }
  if (idx.has_zero()) {
    return classical;
  }
  if (!classical.inverse_t1t2.is_zero()) {
    throw ArithmeticError("1/(t1 t2) term in a divisor-only third partial");
  }

  const int n = order - 3;
  // Multi-cover sums along y1, y2 and y1 + y2, thrice differentiated.
  const std::array<Cyc3, 2> l1 = cov.jacobian[0];
  const std::array<Cyc3, 2> l2 = cov.jacobian[1];
  const std::array<Cyc3, 2> l3 = {l1[0] + l2[0], l1[1] + l2[1]};
  const Cyc3 q12 = cov.q_values[0] * cov.q_values[1];
  const std::array<std::pair<std::array<Cyc3, 2>, Cyc3>, 3> rays = {{{l1, cov.q_values[0]}, {l2, cov.q_values[1]}, {l3, q12}}};

  BiSeries<Cyc3> quantum(n);
  for (const auto& [form, q] : rays) {
    const Cyc3 coeff = cube(form, idx);
    if (coeff.is_zero()) {
      continue;
    }
    quantum += coeff * compose_linear(geometric_kernel(q, n), form[0], form[1], n);
  }
  return BiSeries<LinT>::constant(n, classical.linear) + times_t1_plus_t2(quantum, Rational(1));
}

ThirdPartial fx_third_partial(const PartialIndex& idx, const HodgeTable& table, int order) {
  require_series_order(order);
  const auto classical = orbifold_invariant(idx.count(0), idx.count(1), idx.count(2), table);
  if (idx.has_zero()) {
    return classical;
  }
  const int n = order - 3;
  if (table.max_genus() < std::max(1, n + 1)) {
    throw InvalidArgument("table reaches genus " + std::to_string(table.max_genus()) + ", order " +
                          std::to_string(order) + " needs " + std::to_string(n + 1));
  }
  // S(u) = sum_(g >= 2) (-1)^(g-1) A_g u^(g-1)/(g-1)! = A(-u) - A_1.
  USeries<Cyc3> s(n);
  for (int m = 1; m <= n; ++m) {
    const Rational v = table.A(m + 1) / Rational(factorial(m));
    s[m] = Cyc3(m % 2 == 0 ? v : -v);
  }
  const Cyc3 w = Cyc3::omega();
  const Cyc3 wb = Cyc3::omega_bar();
  const std::array<std::array<Cyc3, 2>, 3> forms = {{{Cyc3(1), Cyc3(1)}, {w, wb}, {wb, w}}};
  BiSeries<Cyc3> sum(n);
  for (const auto& form : forms) {
    sum += cube(form, idx) * compose_linear(s, form[0], form[1], n);
  }
  return BiSeries<LinT>::constant(n, classical.linear) + times_t1_plus_t2(sum, Rational(1, 6));
}

std::optional<CrcMismatch> first_mismatch(const BiSeries<LinT>& fy, const BiSeries<LinT>& fx) {
  if (fy.order() != fx.order()) {
    throw OrderMismatch("comparing series of orders " + std::to_string(fy.order()) + " and " +
                        std::to_string(fx.order()));
  }
  for (int d = 0; d <= fy.order(); ++d) {
    for (int i = d; i >= 0; --i) {
      const int j = d - i;
      if (!(fy.at(i, j) == fx.at(i, j))) {
        return CrcMismatch{"x1^" + std::to_string(i) + "*x2^" + std::to_string(j), fy.at(i, j).to_string(),
                           fx.at(i, j).to_string()};
      }
    }
  }
  return std::nullopt;
}

CrcReport verify_crc(int order, const HodgeTable& table) {
  require_series_order(order);
  const auto cov = ChangeOfVars::standard();
  CrcReport report;
  report.order = order;
  report.all_pass = true;
  for (const auto& idx : PartialIndex::all()) {
    const auto fy = fy_third_partial(idx, cov, order);
    const auto fx = fx_third_partial(idx, table, order);
    CrcCheck check{idx, true, std::nullopt};
    if (fy.index() != fx.index()) {
      check.first_mismatch = CrcMismatch{"1", "kind mismatch", "kind mismatch"};
    } else if (const auto* sy = std::get_if<EquivariantScalar>(&fy)) {
      const auto& sx = std::get<EquivariantScalar>(fx);
      if (!(*sy == sx)) {
        check.first_mismatch = CrcMismatch{"1", sy->to_string(), sx.to_string()};
      }
    } else {
      check.first_mismatch = first_mismatch(std::get<BiSeries<LinT>>(fy), std::get<BiSeries<LinT>>(fx));
    }
    check.pass = !check.first_mismatch.has_value();
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace trigonal
