#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posft/polynomial.hpp"
#include "posft/sturm.hpp"

namespace posft {
namespace domains {

enum class BasisKind { hermite, laguerre };

const char* basis_name(BasisKind b);

/// Point on the coefficient half-sphere: (alpha, beta) or (alpha, beta, gamma).
struct SpherePoint {
  std::vector<long double> angles;
};

enum class ConstraintKind : unsigned char {
  positivity_P,
  positivity_Q,
  monotone_phi,
  convex_psi,
  third_deriv_negative,
};

const char* constraint_name(ConstraintKind k);
ConstraintKind constraint_from_name(const std::string& name);

struct Constraint {
  ConstraintKind kind = ConstraintKind::positivity_P;
  /// Interval start in the squared variable: rc^2 for convex_psi, rt^2 for
  /// third_deriv_negative; ignored (0) for the other kinds.
  Rational threshold_sq{0};
};

/// A constraint reduced to "polynomial sign condition on [left_x, +inf)".
struct ConstraintPolynomial {
  Constraint constraint;
  Polynomial poly{Var::rho};
  Rational left_x{0};
  bool want_positive = true;  // false = the polynomial must stay negative
};

struct ConstraintResult {
  int root_count = 0;  // distinct roots in (left_x, +inf)
  int left_sign = 0;   // sign of poly(left_x)
  bool satisfied = false;
  bool boundary_uncertain = false;
  bool tangency_reduced = false;  // gcd preprocessing fired in the Sturm chain
};

struct CellRecord {
  std::vector<ConstraintResult> per_constraint;
  std::uint8_t class_code = 0;  // 0 iff every constraint is satisfied
  bool boundary_uncertain = false;
  bool degenerate_top = false;  // top-order coefficient snapped to exactly 0
};

/// Eq.-style sphere parametrizations; number of angles = orders - 1.
/// 2-sphere: (cos a cos b, sin a cos b, sin b), -pi < a <= pi, 0 <= b <= pi/2.
/// 3-sphere: (cos a cos b cos g, sin a cos b cos g, sin b cos g, sin g),
///           -pi/2 < a <= pi/2, -pi < b <= pi, 0 <= g <= pi/2.
/// The zero boundary of the top angle is accepted as a degenerate slice.
std::vector<long double> sphere_to_coeffs(const SpherePoint& pt, const std::vector<int>& orders);

/// Build the sign-condition polynomials for a coefficient assignment.
std::vector<ConstraintPolynomial> constraint_polynomials(BasisKind basis,
                                                         const std::map<int, long double>& psi,
                                                         const std::vector<Constraint>& constraints,
                                                         unsigned snap_bits);

ConstraintResult evaluate_constraint(const ConstraintPolynomial& cp);

CellRecord classify_cell(const std::vector<ConstraintPolynomial>& cps);

CellRecord classify_point(const SpherePoint& pt, BasisKind basis, const std::vector<int>& orders,
                          const std::vector<Constraint>& constraints, unsigned snap_bits = 64);

CellRecord classify_coefficients(BasisKind basis, const std::map<int, long double>& psi,
                                 const std::vector<Constraint>& constraints, unsigned snap_bits = 64);

struct ScanConfig {
  BasisKind basis = BasisKind::hermite;
  std::vector<int> orders;
  std::vector<Constraint> constraints;
  long double alpha_lo = 0, alpha_hi = 0;
  int alpha_res = 400;
  long double beta_lo = 0, beta_hi = 0;
  int beta_res = 400;
  std::optional<long double> gamma;  // fixed cut value for 4-order scans
  unsigned snap_bits = 64;
  int threads = 0;  // 0 = hardware concurrency

  /// Fill the angle ranges with the parametrization defaults for the order count.
  void apply_default_ranges();
  long double alpha_center(int i) const;
  long double beta_center(int j) const;
};

struct DomainMap {
  ScanConfig config;
  std::vector<CellRecord> cells;  // row-major, index = j * alpha_res + i
  int legend_max = 0;             // largest possible class code
  bool degenerate_slice = false;

  const CellRecord& cell(int i, int j) const;
};

/// Degree bound of a constraint polynomial (= max possible root count).
int constraint_degree_bound(BasisKind basis, const std::vector<int>& orders, const Constraint& c);

DomainMap scan_map(const ScanConfig& config);

struct RegionStats {
  std::map<int, long> class_cells;
  long uncertain_cells = 0;
  // bounding box of the class-0 region in cell indices; empty if none
  bool class0_nonempty = false;
  int i_min = 0, i_max = 0, j_min = 0, j_max = 0;
};

RegionStats region_stats(const DomainMap& m);

}  // namespace domains
}  // namespace posft
