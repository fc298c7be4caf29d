#pragma once

#include <map>

#include "posft/hermite.hpp"
#include "posft/polynomial.hpp"

namespace posft {
namespace laguerre {

/// 2-d radial state v_n(r) = sqrt(2) e^{-r^2/2} core(r^2). The cores carry a
/// positive leading coefficient, i.e. core_n = (-1)^n L_n for the standard
/// Laguerre L_n, which reproduces the listed states {1, rho-1, (rho^2-4rho+2)/2, ...}.
struct RadialBasisElement {
  int n = 0;
  Polynomial core{Var::rho};
};

/// Cached, thread-safe table access.
const RadialBasisElement& laguerre_state(int n);

/// Mixture coefficients; all orders allowed. Even n carries Fourier-Bessel
/// eigenvalue +1, odd n eigenvalue -1.
class RadialCoefficientVector {
 public:
  explicit RadialCoefficientVector(std::map<int, long double> entries);

  const std::map<int, long double>& entries() const { return entries_; }
  int truncation() const { return truncation_; }

 private:
  std::map<int, long double> entries_;
  int truncation_ = 0;
};

/// P(rho) = sum psi_n core_n(rho); Q(sigma) = sum (-1)^n psi_n core_n(sigma).
hermite::FourierPair build_pair_2d(const RadialCoefficientVector& c, unsigned snap_bits = 64);

/// M(r) = sqrt(2) sum psi_n core_n(r^2) as an exact polynomial in r (the
/// sqrt(2) is snapped into the multipliers).
Polynomial radial_polynomial(const RadialCoefficientVector& c, unsigned snap_bits = 64);

/// N with d^3 psi/dr^3 = e^{-r^2/2} r N(r^2); the third derivative is
/// negative on [rt, +inf), r > 0, iff N < 0 on [rt^2, +inf).
Polynomial third_derivative_core(const RadialCoefficientVector& c, unsigned snap_bits = 64);

/// psi(r) = sqrt(2) e^{-r^2/2} sum psi_n core_n(r^2).
long double eval_radial_state(const RadialCoefficientVector& c, long double r);
/// phi(s) = sqrt(2) e^{-s^2/2} sum (-1)^n psi_n core_n(s^2).
long double eval_radial_transform(const RadialCoefficientVector& c, long double s);

}  // namespace laguerre
}  // namespace posft
