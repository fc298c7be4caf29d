#pragma once

#include <map>
#include <vector>

#include "posft/polynomial.hpp"
#include "posft/radicand.hpp"

namespace posft {
namespace hermite {

/// One square-normalized oscillator state u_n = pi^{-1/4} e^{-r^2/2} H_n(r),
/// stored exactly: H_n = core / sqrt(norm) with integer-coefficient core
/// (leading coefficient 2^n) and norm = 2^n n!.
struct BasisElement {
  int n = 0;
  Polynomial core{Var::r};
  Radicand norm{Rational(1)};

  /// Core divided by its integer content, e.g. 4r^2-2 -> 2r^2-1.
  Polynomial reduced_core() const;
  /// Matching radicand, norm / content^2, e.g. 8 -> 2.
  Radicand reduced_norm() const;
};

/// Cached, thread-safe table access.
const BasisElement& hermite_normalized(int n);

/// Mixture coefficients psi_n on the truncated even-order basis.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::map<int, long double> entries);

  const std::map<int, long double>& entries() const { return entries_; }
  int truncation() const { return truncation_; }
  /// Orders with FT eigenvalue +1 (n = 0 mod 4).
  std::vector<int> invariant_orders() const;
  /// Orders with FT eigenvalue -1 (n = 2 mod 4).
  std::vector<int> flipped_orders() const;

 private:
  std::map<int, long double> entries_;
  int truncation_ = 0;
};

/// The polynomial pair behind a state and its Fourier transform:
///   psi(r) = pi^{-1/4} e^{-r^2/2} P(r^2),  phi(s) = pi^{-1/4} e^{-s^2/2} Q(s^2).
struct FourierPair {
  Polynomial P{Var::rho};
  Polynomial Q{Var::sigma};
  unsigned snap_bits = 64;
};

/// Sum psi_n H_n(r) as an exact polynomial in r after snapping the real
/// multipliers psi_n / sqrt(2^n n!) to dyadic rationals.
Polynomial state_polynomial(const CoefficientVector& c, unsigned snap_bits = 64);

/// Assemble (P, Q); Q flips the sign of every n = 2 (mod 4) contribution.
FourierPair build_pair(const CoefficientVector& c, unsigned snap_bits = 64);

/// C with d^2 psi/dr^2 = pi^{-1/4} e^{-r^2/2} C(r^2); psi is convex on
/// [rc, +inf) iff C >= 0 on [rc^2, +inf).
Polynomial second_derivative_core(const CoefficientVector& c, unsigned snap_bits = 64);

/// D = Q' - Q/2, so that d phi/d sigma = pi^{-1/4} e^{-sigma/2} D(sigma);
/// phi decreases on [0, +inf) iff D < 0 there.
Polynomial sigma_derivative(const Polynomial& q);

/// Floating-point psi(r) through the stable normalized recurrence.
long double eval_state(const CoefficientVector& c, long double r);
/// The transform side: phi = sum (-1)^{n/2} psi_n u_n.
long double eval_transform(const CoefficientVector& c, long double s);

/// Exact assembly from multipliers of the reduced cores ("brackets", the
/// form used for literal printed coefficient sets). flip_minus_class builds
/// the Q side.
Polynomial assemble_from_brackets(const std::map<int, Rational>& bracket_multipliers,
                                  bool flip_minus_class, Var out_var = Var::rho);

}  // namespace hermite
}  // namespace posft
