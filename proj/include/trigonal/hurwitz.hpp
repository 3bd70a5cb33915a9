#pragma once

// Degree-3 Hurwitz-Hodge integrals.
//
//   B_g       integral of lambda_g over covers with ramification (3)^(g+1) (2)^2
//   A•_g      integral of lambda_(g-1) over all of H_g((3)^(g+2))
//   A_g^l     the same integral over the component where l of the g+2 points carry
//             monodromy w and the rest carry w^2
//   gamma_g   number of components of H_g((3)^(g+2))
//
// Every quantity is produced by two independent routes (recursion and closed form) so that
// the HodgeTable can certify them against each other.

#include "trigonal/cyc3.hpp"
#include "trigonal/rational.hpp"
#include "trigonal/series.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace trigonal {

/// (genus, l): the component of H_g((3)^(g+2)) with l points of monodromy w.
struct ComponentLabel {
  int genus = 0;
  int l = 0;

  /// Validates 0 <= l <= g+2 and l = g+2-l (mod 3), then maps l to min(l, g+2-l).
  /// Throws InvalidLabel on a bad label.
  static ComponentLabel normalized(int genus, int l);

  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

/// B(u) = sum B_g u^g/g! from the closed form (1 + tau/3)/(1 - tau).
USeries<Rational> b_closed(int order);

/// B_0..B_G from the WDVV recursion seeded with B_0 = 1, B_1 = 2/3.
std::vector<Rational> b_recursive(int max_genus);

/// A•_1..A•_G from the second WDVV recursion; index 0 of the result is an unused zero.
std::vector<Rational> abullet_recursive(int max_genus, const std::vector<Rational>& b);

/// A•(u) = sum A•_g u^(g-1)/(g-1)!, computed as (2B^2 - 1)/(3B).
USeries<Rational> abullet_functional(int order);

/// A(u) = sum A_g u^(g-1)/(g-1)! from the closed form (1 + tau)/(3 - tau).
USeries<Rational> a_closed(int order);

/// Multiplies coefficient k by k!: converts an exponential generating series to its values.
std::vector<Rational> egf_values(const USeries<Rational>& s);

/// (2^(g+1) + (-1)^g)/3.
Integer gamma_formula(int g);

/// Counts subsets S of a (g+2)-set with |S| = |S'| mod 3, halved for unordered pairs.
/// Throws InvalidArgument when g exceeds `cap`.
Integer gamma_bruteforce(int g, int cap = 20);

/// Smallest non-negative integer congruent to 1 - g mod 3.
int component_offset(int g);

/// -2(-3)^(g/2) for even g, 0 for odd g.
Integer delta(int g);

/// sum_i binom(g+2, 3i+nu) (-1)^(3i+nu).
Integer delta_direct(int g);

class HodgeTable;

/// Component integrals of one genus as returned by the E-system solve.
struct ComponentSolution {
  int genus = 0;
  int nu = 0;
  /// labels[i] = 3i + nu; values[i] = A_g^(labels[i]).
  std::vector<int> labels;
  std::vector<Rational> values;
  /// Number of E-equations assembled (one per admissible l of genus g+1).
  int equation_count = 0;
  /// All values coincide.
  bool constant = false;
  /// The closure equation not used in the solve also holds: the A•-sum when g is odd,
  /// the label symmetry when g is even.
  bool redundant_closure_holds = false;

  /// Values keyed by normalized label.
  std::map<ComponentLabel, Rational> by_label() const;
};

/// Assembles the equations E^l_(g+1) for genus g >= 4 from lower-genus table entries,
/// adds the parity-appropriate closure and solves exactly.
///
/// Needs components of every genus below g in `table` and A•_g.  Throws SingularSystem,
/// InconsistentSystem or InvalidLabel when the assembled system is malformed.
ComponentSolution solve_components(int g, const HodgeTable& table);

/// Coefficients (theta_0 - theta_1)_(r,s)/(r! s!) of v^r w^s, r + s <= order, built
/// directly from the binomial double sums over A_1..A_(order+1).
BiSeries<Rational> theta_difference(int order, const std::vector<Rational>& a_values);

/// theta_difference fed by the closed-form A series.  Expected: the constant series 1/9.
BiSeries<Rational> theta_check(int order);

/// The same difference assembled as Q_0^2 - Q_1 Q_(-1) from the three rotated copies
/// A(w^k v + w^(-k) w) of the A series.
BiSeries<Cyc3> theta_difference_factored(int order);

struct TableCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// All Hurwitz-Hodge values up to a maximal genus, with the cross-checks that tie them
/// together.  Immutable once built.
class HodgeTable {
public:
  /// Runs both recursions, solves the component system for 4 <= g <= max_genus and records
  /// every cross-check.  Needs max_genus >= 1.
  static HodgeTable build(int max_genus);

  int max_genus() const { return max_genus_; }
  /// Highest genus whose components are stored.
  int solved_genus() const { return solved_genus_; }

  const Rational& B(int g) const;
  const Rational& Abullet(int g) const;
  /// The common component value (A•_g / gamma_g for g <= 3).
  const Rational& A(int g) const;
  const Integer& gamma(int g) const;
  const Integer& delta(int g) const;

  /// Normalizes the label, then looks it up.  Throws InvalidLabel if absent or malformed.
  const Rational& component(int genus, int l) const;
  std::vector<std::pair<ComponentLabel, Rational>> components_of_genus(int g) const;

  const std::vector<TableCheck>& checks() const { return checks_; }
  bool all_checks_pass() const;

private:
  HodgeTable() = default;
  void require_genus(int g, int lowest) const;

  int max_genus_ = 0;
  int solved_genus_ = 0;
  std::vector<Rational> b_;
  std::vector<Rational> abullet_;
  std::vector<Rational> a_;
  std::vector<Integer> gamma_;
  std::vector<Integer> delta_;
  std::map<ComponentLabel, Rational> components_;
  std::vector<TableCheck> checks_;
};

}  // namespace trigonal
