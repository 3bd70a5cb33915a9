#pragma once

// Genus-0 potentials of [C^2/Z3] (variables x0, x1, x2) and of its crepant resolution Y
// (variables y0, y1, y2), compared through their third partial derivatives.

#include "trigonal/cyc3.hpp"
#include "trigonal/hurwitz.hpp"
#include "trigonal/lint.hpp"
#include "trigonal/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace trigonal {

/// linear + inverse_t1t2 / (t1 t2).  The second channel only carries <1,1,1>.
struct EquivariantScalar {
  LinT linear;
  Cyc3 inverse_t1t2;

  bool is_zero() const { return linear.is_zero() && inverse_t1t2.is_zero(); }
  std::string to_string() const;

  EquivariantScalar& operator+=(const EquivariantScalar& rhs);
  friend EquivariantScalar operator+(EquivariantScalar lhs, const EquivariantScalar& rhs) { return lhs += rhs; }
  friend EquivariantScalar operator*(const Cyc3& c, const EquivariantScalar& v);
  friend bool operator==(const EquivariantScalar&, const EquivariantScalar&) = default;
};

/// Torus weights at the three fixed points of Y.
struct FixedPointData {
  /// tangent[p] = the two tangent weights at p_p.
  std::array<std::array<LinT, 2>, 3> tangent;
  /// bundle[i][p] = weight of L_(i+1) at p_p.
  std::array<std::array<LinT, 3>, 2> bundle;

  static FixedPointData standard();
};

enum class ClassId { One, C1, C2 };

/// Localization sum over the fixed points, recognized as c/(t1 t2) (no C classes), a constant
/// (two), or a LinT (three).  Throws ArithmeticError if the sum does not simplify that way.
EquivariantScalar triple_intersection(ClassId a, ClassId b, ClassId c, const FixedPointData& data);
EquivariantScalar triple_intersection(ClassId a, ClassId b, ClassId c);

/// Degree (d1, d2) genus-0 invariant of Y: (t1+t2)/d^3 on the three rays, 0 elsewhere.
LinT multicover_invariant(int d1, int d2);

/// <1^n0 D1^n1 D2^n2> of [C^2/Z3].  Needs n0 + n1 + n2 >= 3; A_g is read from the table.
EquivariantScalar orbifold_invariant(int n0, int n1, int n2, const HodgeTable& table);
/// <D1^n1 D2^n2>.
LinT orbifold_invariant(int n1, int n2, const HodgeTable& table);

/// y = J x (y0 = x0) together with the specialized Novikov parameters.
struct ChangeOfVars {
  /// jacobian[a][i] = dy_(a+1)/dx_(i+1).
  std::array<std::array<Cyc3, 2>, 2> jacobian;
  std::array<Cyc3, 2> q_values;

  /// (i/sqrt3) [[w, w^2], [w^2, w]] and q1 = q2 = w.
  static ChangeOfVars standard();
};

/// Sorted (i <= j <= k) index of a third partial derivative, entries in {0, 1, 2}.
class PartialIndex {
public:
  /// Sorts the entries; throws InvalidArgument if any is outside {0, 1, 2}.
  PartialIndex(int i, int j, int k);

  /// The ten sorted indices, lexicographic.
  static std::vector<PartialIndex> all();

  const std::array<int, 3>& entries() const { return idx_; }
  int count(int variable) const;
  bool has_zero() const { return idx_[0] == 0; }
  /// 1 <-> 2.
  PartialIndex swapped() const;
  std::string to_string() const;

  friend auto operator<=>(const PartialIndex&, const PartialIndex&) = default;

private:
  std::array<int, 3> idx_;
};

/// A bivariate series in (x1, x2) for indices inside {1, 2}; a scalar once x0 is involved.
using ThirdPartial = std::variant<BiSeries<LinT>, EquivariantScalar>;

/// q e^u / (1 - q e^u) to order N: the third derivative of sum_d (q e^u)^d / d^3.
/// Throws ArithmeticError when q = 1.
USeries<Cyc3> geometric_kernel(const Cyc3& q, int order);

/// Third partial of F^Y after the change of variables.  Series results have order N - 3.
ThirdPartial fy_third_partial(const PartialIndex& idx, const ChangeOfVars& cov, int order);

/// Third partial of F^X.  Series results have order N - 3; the table must reach genus N - 2.
ThirdPartial fx_third_partial(const PartialIndex& idx, const HodgeTable& table, int order);

struct CrcMismatch {
  /// "1" for scalar channels, otherwise "x1^i*x2^j".
  std::string monomial;
  std::string fy;
  std::string fx;
};

struct CrcCheck {
  PartialIndex idx;
  bool pass = false;
  std::optional<CrcMismatch> first_mismatch;
};

struct CrcReport {
  int order = 0;
  std::vector<CrcCheck> checks;
  bool all_pass = false;
};

/// Compares fy_third_partial(idx, standard) with fx_third_partial(idx) for every index.
/// Needs N >= 3 and a table reaching genus max(1, N - 2).
CrcReport verify_crc(int order, const HodgeTable& table);

/// The first differing coefficient of two equal-order series, if any.
std::optional<CrcMismatch> first_mismatch(const BiSeries<LinT>& fy, const BiSeries<LinT>& fx);

}  // namespace trigonal
