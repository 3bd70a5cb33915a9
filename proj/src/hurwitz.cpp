#include "trigonal/hurwitz.hpp"

#include "trigonal/errors.hpp"
#include "trigonal/linsolve.hpp"
#include "trigonal/special_series.hpp"

#include <set>

namespace trigonal {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

void require_non_negative(int v, const char* what) {
  if (v < 0) {
    throw InvalidArgument(std::string(what) + " must be non-negative, got " + std::to_string(v));
  }
}

USeries<Rational> one(int order) { return USeries<Rational>::constant(order, 1); }

/// A_genus^l inside one side of a degenerate cover.
struct Factor {
  int genus;
  int l;
};

struct Summand {
  Rational coeff;
  Factor left;
  Factor right;
};

// Terms of E^l_(g+1) after specializing the point class of M_{0,4} to a boundary point.
// `pp_split` selects (p1 p2 | q1 q2); otherwise (p1 q1 | p2 q2).  x of the l-2 free
// w-points and y of the g+1-l free w^2-points go left.  The node carries whichever
// monodromy makes each side's product trivial; an unramified node contributes nothing.
std::vector<Summand> degeneration_terms(int g, int l, bool pp_split) {
  const int free_w = l - 2;
  const int free_wb = g + 1 - l;
  std::vector<Summand> out;
  for (int x = 0; x <= free_w; ++x) {
    for (int y = 0; y <= free_wb; ++y) {
      const int r = mod3(x - y);
      Factor left{1 + x + y, 0};
      Factor right{g - x - y, 0};
      if (pp_split) {
        if (r == 1) {
          continue;
        }
        left.l = 2 + x + (r == 0 ? 1 : 0);
        right.l = free_w - x + (r == 2 ? 1 : 0);
      } else {
        if (r == 0) {
          continue;
        }
        left.l = 1 + x + (r == 2 ? 1 : 0);
        right.l = free_w - x + 1 + (r == 1 ? 1 : 0);
      }
      out.push_back({Rational(Integer(3 * binomial(free_w, x) * binomial(free_wb, y))), left, right});
    }
  }
  return out;
}

}  // namespace

ComponentLabel ComponentLabel::normalized(int genus, int l) {
  if (genus < 1 || l < 0 || l > genus + 2) {
    throw InvalidLabel("component label (g=" + std::to_string(genus) + ", l=" + std::to_string(l) +
                       ") out of range");
  }
  if (mod3(l - (genus + 2 - l)) != 0) {
    throw InvalidLabel("component label (g=" + std::to_string(genus) + ", l=" + std::to_string(l) +
                       ") violates the monodromy parity condition");
  }
  return {genus, std::min(l, genus + 2 - l)};
}

USeries<Rational> b_closed(int order) {
  require_non_negative(order, "order");
  const auto tau = tau_series(order);
  return (one(order) + Rational(1, 3) * tau) / (one(order) - tau);
}

USeries<Rational> a_closed(int order) {
  require_non_negative(order, "order");
  const auto tau = tau_series(order);
  return (one(order) + tau) / (USeries<Rational>::constant(order, 3) - tau);
}

USeries<Rational> abullet_functional(int order) {
  const auto b = b_closed(order);
  return (Rational(2) * b * b - one(order)) / (Rational(3) * b);
}

std::vector<Rational> egf_values(const USeries<Rational>& s) {
  std::vector<Rational> out;
  for (int k = 0; k <= s.order(); ++k) {
    out.push_back(s[k] * Rational(factorial(k)));
  }
  return out;
}

std::vector<Rational> b_recursive(int max_genus) {
  if (max_genus < 1) {
    throw InvalidArgument("b_recursive needs max_genus >= 1");
  }
  std::vector<Rational> b{Rational(1), Rational(2, 3)};
  for (int g = 2; g <= max_genus; ++g) {
    // B_(g-1) + sum 3 C(g-2,h1) B_h1 B_h2 = sum 6 C(g-2,h1-1) B_h1 B_h2 over h1 + h2 = g.
    // The h1 = 0 term on the left is the only one containing B_g.
    Rational rest = b[static_cast<std::size_t>(g - 1)];
    Rational rhs;
    for (int h1 = 1; h1 <= g - 1; ++h1) {
      const int h2 = g - h1;
      const Rational prod = b[static_cast<std::size_t>(h1)] * b[static_cast<std::size_t>(h2)];
      rest += Rational(Integer(3 * binomial(g - 2, h1))) * prod;
      rhs += Rational(Integer(6 * binomial(g - 2, h1 - 1))) * prod;
    }
    b.push_back((rhs - rest) / (Rational(3) * b[0]));
  }
  return b;
}

std::vector<Rational> abullet_recursive(int max_genus, const std::vector<Rational>& b) {
  if (max_genus < 1) {
    throw InvalidArgument("abullet_recursive needs max_genus >= 1");
  }
  if (static_cast<int>(b.size()) < max_genus) {
    throw InvalidArgument("B table too short for the requested genus");
  }
  std::vector<Rational> ab(static_cast<std::size_t>(max_genus) + 1);
  for (int g = 1; g <= max_genus; ++g) {
    // delta_(g,1) + sum_(h1+h2=g) 3 C(g-1,h1-1) A•_h1 B_h2 = sum_(h1+h2=g-1) 2 C(g-1,h1) B_h1 B_h2.
    Rational rhs;
    for (int h1 = 0; h1 <= g - 1; ++h1) {
      rhs += Rational(Integer(2 * binomial(g - 1, h1))) * b[static_cast<std::size_t>(h1)] *
             b[static_cast<std::size_t>(g - 1 - h1)];
    }
    Rational rest = g == 1 ? Rational(1) : Rational(0);
    for (int h1 = 1; h1 <= g - 1; ++h1) {
      rest += Rational(Integer(3 * binomial(g - 1, h1 - 1))) * ab[static_cast<std::size_t>(h1)] *
              b[static_cast<std::size_t>(g - h1)];
    }
    ab[static_cast<std::size_t>(g)] = (rhs - rest) / (Rational(3) * b[0]);
  }
  return ab;
}

Integer gamma_formula(int g) {
  require_non_negative(g, "genus");
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(g + 1));
  Integer num = two_pow + (g % 2 == 0 ? 1 : -1);
  if (num % 3 != 0) {
    throw ArithmeticError("gamma formula produced a non-integer");
  }
  return num / 3;
}

Integer gamma_bruteforce(int g, int cap) {
  require_non_negative(g, "genus");
  if (g > cap) {
    throw InvalidArgument("gamma enumeration capped at genus " + std::to_string(cap) + ", got " +
                          std::to_string(g));
  }
  const int points = g + 2;
  unsigned long long ordered = 0;
  for (unsigned long long mask = 0; mask < (1ULL << points); ++mask) {
    const int s = __builtin_popcountll(mask);
    if (mod3(s - (points - s)) == 0) {
      ++ordered;
    }
  }
  return Integer(static_cast<unsigned long>(ordered / 2));
}

int component_offset(int g) { return mod3(1 - g); }

Integer delta(int g) {
  if (g < 1) {
    throw InvalidArgument("delta needs genus >= 1");
  }
  if (g % 2 == 1) {
    return 0;
  }
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(g / 2));
  return (g / 2) % 2 == 0 ? Integer(-2 * p) : Integer(2 * p);
}

Integer delta_direct(int g) {
  if (g < 1) {
    throw InvalidArgument("delta needs genus >= 1");
  }
  Integer sum = 0;
  for (int k = component_offset(g); k <= g + 2; k += 3) {
    sum += k % 2 == 0 ? binomial(g + 2, k) : Integer(-binomial(g + 2, k));
  }
  return sum;
}

std::map<ComponentLabel, Rational> ComponentSolution::by_label() const {
  std::map<ComponentLabel, Rational> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto key = ComponentLabel::normalized(genus, labels[i]);
    if (key.l == labels[i]) {
      out.emplace(key, values[i]);
    }
  }
  return out;
}

ComponentSolution solve_components(int g, const HodgeTable& table) {
  if (g < 4) {
    throw InvalidArgument("component solve starts at genus 4");
  }
  if (table.solved_genus() < g - 1 || table.max_genus() < g) {
    throw InvalidArgument("table lacks the lower-genus data needed for genus " + std::to_string(g));
  }
  const int nu = component_offset(g);
  const int n = (g + 2 - 2 * nu) / 3;
  const std::size_t unknowns = static_cast<std::size_t>(n) + 1;

  auto unknown_index = [&](int l) {
    if (l < 0 || l > g + 2 || mod3(l - nu) != 0) {
      throw InvalidLabel("genus-" + std::to_string(g) + " label " + std::to_string(l) +
                         " is not an unknown of the component system");
    }
    return static_cast<std::size_t>((l - nu) / 3);
  };

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  for (int l = 2; l <= g + 1; ++l) {
    if (mod3(l - (g + 3 - l)) != 0) {
      continue;
    }
    std::vector<Rational> row(unknowns);
    Rational constant;
    std::set<int> principal;

    auto accumulate = [&](const std::vector<Summand>& terms, int sign) {
      for (const auto& t : terms) {
        const Factor* top = nullptr;
        const Factor* other = nullptr;
        if (t.left.genus == g) {
          top = &t.left;
          other = &t.right;
        } else if (t.right.genus == g) {
          top = &t.right;
          other = &t.left;
        }
        if (top != nullptr) {
          if (other->genus >= g) {
            throw InvalidLabel("two genus-" + std::to_string(g) + " factors in one E-term");
          }
          row[unknown_index(top->l)] += Rational(sign) * t.coeff * table.component(other->genus, other->l);
          principal.insert(top->l);
        } else {
          constant += Rational(sign) * t.coeff * table.component(t.left.genus, t.left.l) *
                      table.component(t.right.genus, t.right.l);
        }
      }
    };
    accumulate(degeneration_terms(g, l, true), 1);
    accumulate(degeneration_terms(g, l, false), -1);

    if (principal != std::set<int>{l - 2, l + 1}) {
      throw InvalidLabel("E-equation for l=" + std::to_string(l) +
                         " does not have principal terms A_g^(l-2) + A_g^(l+1)");
    }
    rows.push_back(std::move(row));
    rhs.push_back(-constant);
  }

  ComponentSolution sol;
  sol.genus = g;
  sol.nu = nu;
  sol.equation_count = static_cast<int>(rows.size());
  for (int i = 0; i <= n; ++i) {
    sol.labels.push_back(3 * i + nu);
  }

  // The A•-sum: sum_i C(g+2, 3i+nu) x_i = 2 A•_g.
  std::vector<Rational> bullet_row(unknowns);
  for (int i = 0; i <= n; ++i) {
    bullet_row[static_cast<std::size_t>(i)] = Rational(binomial(g + 2, 3 * i + nu));
  }
  const Rational bullet_rhs = Rational(2) * table.Abullet(g);

  std::vector<std::vector<Rational>> symmetry_rows;
  for (int i = 0; i < n - i; ++i) {
    std::vector<Rational> row(unknowns);
    row[static_cast<std::size_t>(i)] = Rational(1);
    row[static_cast<std::size_t>(n - i)] = Rational(-1);
    symmetry_rows.push_back(std::move(row));
  }

  if (g % 2 == 1) {
    for (auto& row : symmetry_rows) {
      rows.push_back(row);
      rhs.emplace_back(0);
    }
  } else {
    rows.push_back(bullet_row);
    rhs.push_back(bullet_rhs);
  }

  sol.values = solve_exact(rows, rhs);

  if (g % 2 == 1) {
    Rational lhs;
    for (std::size_t i = 0; i < unknowns; ++i) {
      lhs += bullet_row[i] * sol.values[i];
    }
    sol.redundant_closure_holds = lhs == bullet_rhs;
  } else {
    sol.redundant_closure_holds = true;
    for (int i = 0; i <= n; ++i) {
      if (sol.values[static_cast<std::size_t>(i)] != sol.values[static_cast<std::size_t>(n - i)]) {
        sol.redundant_closure_holds = false;
      }
    }
  }
  sol.constant = true;
  for (const auto& v : sol.values) {
    if (v != sol.values.front()) {
      sol.constant = false;
    }
  }
  return sol;
}

BiSeries<Rational> theta_difference(int order, const std::vector<Rational>& a_values) {
  require_non_negative(order, "order");
  // a_values[k] = A_(k+1).
  if (static_cast<int>(a_values.size()) < order + 1) {
    throw InvalidArgument("theta difference needs A_1..A_(order+1)");
  }
  auto a = [&a_values](int genus) -> const Rational& { return a_values[static_cast<std::size_t>(genus - 1)]; };
  BiSeries<Rational> out(order);
  for (int r = 0; r <= order; ++r) {
    for (int s = 0; r + s <= order; ++s) {
      if (mod3(r - s) != 0) {
        continue;
      }
      Rational diff;
      for (int x = 0; x <= r; ++x) {
        for (int y = 0; y <= s; ++y) {
          const int cls = mod3(x - y);
          if (cls == 2) {
            continue;
          }
          const Rational term = Rational(Integer(binomial(r, x) * binomial(s, y))) * a(1 + x + y) * a(1 + (r - x) + (s - y));
          diff += cls == 0 ? term : -term;
        }
      }
      out.at(r, s) = diff / Rational(Integer(factorial(r) * factorial(s)));
    }
  }
  return out;
}

BiSeries<Rational> theta_check(int order) {
  require_non_negative(order, "order");
  const auto a = egf_values(a_closed(order));
  return theta_difference(order, a);
}

BiSeries<Cyc3> theta_difference_factored(int order) {
  require_non_negative(order, "order");
  const auto a = a_closed(order).map([](const Rational& c) { return Cyc3(c); });
  const Cyc3 w = Cyc3::omega();
  const Cyc3 wb = Cyc3::omega_bar();
  // rotated[k] = A(w^k v + w^-k w).
  const BiSeries<Cyc3> rotated[3] = {
      compose_linear(a, Cyc3(1), Cyc3(1), order),
      compose_linear(a, w, wb, order),
      compose_linear(a, wb, w, order),
  };
  auto q = [&](int i) {
    const Cyc3 third(Rational(1, 3));
    return third * (rotated[0] + wb.pow(i) * rotated[1] + w.pow(i) * rotated[2]);
  };
  const auto q0 = q(0);
  return q0 * q0 - q(1) * q(2);
}

HodgeTable HodgeTable::build(int max_genus) {
  if (max_genus < 1) {
    throw InvalidArgument("HodgeTable needs max_genus >= 1");
  }
  HodgeTable t;
  t.max_genus_ = max_genus;
  t.b_ = b_recursive(max_genus);
  t.abullet_ = abullet_recursive(max_genus, t.b_);
  t.a_.assign(static_cast<std::size_t>(max_genus) + 1, Rational(0));
  t.delta_.assign(static_cast<std::size_t>(max_genus) + 1, Integer(0));
  for (int g = 0; g <= max_genus; ++g) {
    t.gamma_.push_back(gamma_formula(g));
    if (g >= 1) {
      t.delta_[static_cast<std::size_t>(g)] = trigonal::delta(g);
    }
  }

  // Genera 1..3 have a single component class.
  for (int g = 1; g <= std::min(3, max_genus); ++g) {
    const Rational value = t.abullet_[static_cast<std::size_t>(g)] / Rational(t.gamma_[static_cast<std::size_t>(g)]);
    t.a_[static_cast<std::size_t>(g)] = value;
    for (int l = 0; l <= g + 2; ++l) {
      if (mod3(l - (g + 2 - l)) == 0) {
        t.components_.emplace(ComponentLabel::normalized(g, l), value);
      }
    }
    t.solved_genus_ = g;
  }

  for (int g = 4; g <= max_genus; ++g) {
    const auto sol = solve_components(g, t);
    for (const auto& [label, value] : sol.by_label()) {
      t.components_.emplace(label, value);
    }
    t.a_[static_cast<std::size_t>(g)] = sol.values.front();
    t.solved_genus_ = g;
    const std::string tag = "g=" + std::to_string(g);
    t.checks_.push_back({"components constant " + tag, sol.constant, ""});
    t.checks_.push_back({"redundant closure " + tag, sol.redundant_closure_holds, ""});
    const Rational via_gamma = Rational(t.gamma_[static_cast<std::size_t>(g)]) * sol.values.front();
    t.checks_.push_back({"A•_g = gamma_g A_g " + tag, via_gamma == t.abullet_[static_cast<std::size_t>(g)],
                         via_gamma.to_string() + " vs " + t.abullet_[static_cast<std::size_t>(g)].to_string()});
  }

  const auto b_cl = egf_values(b_closed(max_genus));
  t.checks_.push_back({"B recursion = closed form", b_cl == t.b_, ""});

  const auto ab_cl = egf_values(abullet_functional(max_genus - 1));
  bool ab_ok = true;
  for (int g = 1; g <= max_genus; ++g) {
    ab_ok = ab_ok && ab_cl[static_cast<std::size_t>(g - 1)] == t.abullet_[static_cast<std::size_t>(g)];
  }
  t.checks_.push_back({"A• recursion = (2B^2-1)/(3B)", ab_ok, ""});

  const auto a_cl = egf_values(a_closed(max_genus - 1));
  bool a_ok = true;
  for (int g = 1; g <= max_genus; ++g) {
    a_ok = a_ok && a_cl[static_cast<std::size_t>(g - 1)] == t.a_[static_cast<std::size_t>(g)];
  }
  t.checks_.push_back({"A_g = closed form", a_ok, ""});

  bool gamma_ok = true;
  for (int g = 0; g <= std::min(max_genus, 20); ++g) {
    gamma_ok = gamma_ok && gamma_bruteforce(g) == t.gamma_[static_cast<std::size_t>(g)];
  }
  t.checks_.push_back({"gamma formula = enumeration", gamma_ok, "g <= " + std::to_string(std::min(max_genus, 20))});

  bool delta_ok = true;
  for (int g = 1; g <= max_genus; ++g) {
    delta_ok = delta_ok && delta_direct(g) == t.delta_[static_cast<std::size_t>(g)];
  }
  t.checks_.push_back({"delta closed form = direct sum", delta_ok, ""});
  return t;
}

void HodgeTable::require_genus(int g, int lowest) const {
  if (g < lowest || g > max_genus_) {
    throw InvalidArgument("genus " + std::to_string(g) + " outside table range [" + std::to_string(lowest) +
                          ", " + std::to_string(max_genus_) + "]");
  }
}

const Rational& HodgeTable::B(int g) const {
  require_genus(g, 0);
  return b_[static_cast<std::size_t>(g)];
}

const Rational& HodgeTable::Abullet(int g) const {
  require_genus(g, 1);
  return abullet_[static_cast<std::size_t>(g)];
}

const Rational& HodgeTable::A(int g) const {
  require_genus(g, 1);
  return a_[static_cast<std::size_t>(g)];
}

const Integer& HodgeTable::gamma(int g) const {
  require_genus(g, 0);
  return gamma_[static_cast<std::size_t>(g)];
}

const Integer& HodgeTable::delta(int g) const {
  require_genus(g, 1);
  return delta_[static_cast<std::size_t>(g)];
}

const Rational& HodgeTable::component(int genus, int l) const {
  const auto key = ComponentLabel::normalized(genus, l);
  const auto it = components_.find(key);
  if (it == components_.end()) {
    throw InvalidLabel("component A_" + std::to_string(genus) + "^" + std::to_string(l) + " not in table");
  }
  return it->second;
}

std::vector<std::pair<ComponentLabel, Rational>> HodgeTable::components_of_genus(int g) const {
  std::vector<std::pair<ComponentLabel, Rational>> out;
  for (auto it = components_.lower_bound({g, 0}); it != components_.end() && it->first.genus == g; ++it) {
    out.emplace_back(it->first, it->second);
  }
  return out;
}

bool HodgeTable::all_checks_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

}  // namespace trigonal
