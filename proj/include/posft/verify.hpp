#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "posft/hermite.hpp"
#include "posft/laguerre.hpp"
#include "posft/polynomial.hpp"

namespace posft {
namespace verify {

/// Quadrature rules used by the numeric oracles. `weights` integrate a plain
/// function; for the Gauss rules the natural weight (e^{-x^2} resp. e^{-rho})
/// is folded in separately via `weighted`.
struct QuadratureRule {
  enum class Kind { gauss_hermite, gauss_laguerre_radial, trapezoid_truncated };
  Kind kind = Kind::trapezoid_truncated;
  int order = 0;
  std::vector<long double> nodes;
  std::vector<long double> weights;    // sum w_i f(x_i) ~ integral of f alone
  std::vector<long double> weighted;   // sum w_i f(x_i) ~ integral of weight * f

  /// Nodes/weights for integrals against e^{-x^2} on (-inf, inf).
  static const QuadratureRule& gauss_hermite(int order);
  /// Nodes/weights for integrals against e^{-rho} on (0, inf)
  /// (equivalently 2 e^{-r^2} r dr after rho = r^2).
  static const QuadratureRule& gauss_laguerre_radial(int order);
  /// Uniform grid on [a, b].
  static QuadratureRule trapezoid_truncated(long double a, long double b, int points);
};

/// phi(s) = (2 pi)^{-1/2} integral e^{isr} psi(r) dr, evaluated by
/// Gauss-Hermite quadrature (cosine kernel; even-order mixtures only).
std::vector<double> numeric_ft(const hermite::CoefficientVector& c, const std::vector<double>& s_grid,
                               int order = 96);

/// phi(s) = integral_0^inf (r dr) J0(s r) psi(r) by truncated trapezoid.
std::vector<double> numeric_hankel(const laguerre::RadialCoefficientVector& c,
                                   const std::vector<double>& s_grid, long double r_max = 12.0L,
                                   int points = 16385);

/// Companion-matrix root count, deliberately disjoint from the Sturm path.
struct OracleRootCount {
  int count = 0;               // distinct real roots in (lo, +inf)
  bool confident = true;       // false near the tolerance thresholds
  double min_separation = 0;   // min pairwise distance of all complex roots
  std::vector<double> roots;   // the counted real roots
};

OracleRootCount oracle_root_count(const Polynomial& p, double lo = 0.0);

struct OracleReport {
  std::string name;
  double max_error = 0;
  double threshold = 0;
  bool pass = false;
  std::string detail;

  std::string json_line() const;
};

/// Bochner-consistency witness: Gram matrices phi(x_k - x_j) over random
/// symmetric point sets must be positive semidefinite when phi is the FT of
/// a nonnegative function.
OracleReport gram_psd_check(const std::function<double(double)>& phi, int k, int trials,
                            std::uint64_t seed, double tol = 1e-10);

/// Central finite difference (order 2 or 3) at step 1e-4 with one Richardson
/// extrapolation, evaluated in long double.
long double finite_difference(const std::function<long double(long double)>& f, long double r,
                              int order);
long double finite_difference(const hermite::CoefficientVector& c, long double r, int order);

// ---- report suites (used by the CLI verify command and the test gate) ----

std::vector<OracleReport> suite_orthonormality();
std::vector<OracleReport> suite_ft_eigenproperty();
std::vector<OracleReport> suite_hankel_eigenproperty();
OracleReport suite_sturm_oracle_agreement(int samples, std::uint64_t seed);
std::vector<OracleReport> suite_gram();

}  // namespace verify
}  // namespace posft
