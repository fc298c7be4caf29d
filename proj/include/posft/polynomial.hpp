#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posft/rational.hpp"

namespace posft {

/// Variable label carried by every polynomial. r is the physical variable,
/// rho = r^2 and sigma = s^2 are the compressed variables in which root
/// counting happens.
enum class Var : unsigned char { r, rho, sigma };

const char* var_name(Var v);

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: no trailing zero coefficient; the zero polynomial has an empty
/// coefficient list and no degree (degree() throws instead of returning a
/// sentinel that could silently enter arithmetic).
class Polynomial {
 public:
  explicit Polynomial(Var var = Var::rho) : var_(var) {}
  Polynomial(std::vector<Rational> ascending_coeffs, Var var);

  static Polynomial constant(const Rational& c, Var var = Var::rho);
  static Polynomial monomial(const Rational& c, int power, Var var = Var::rho);

  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const;  // throws std::logic_error on the zero polynomial
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int k) const;  // 0 beyond the degree
  const Rational& leading() const;

  bool operator==(const Polynomial& o) const = default;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  /// Exact evaluation (Horner).
  Rational operator()(const Rational& x) const;
  long double eval(long double x) const;

  Polynomial derivative() const;

  /// Euclidean division: *this = q*b + rem with deg rem < deg b.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const;

  /// Positive content (gcd of numerators / lcm of denominators); 0 for zero.
  Rational content() const;
  Polynomial primitive() const;
  Polynomial monic() const;

  Polynomial with_var(Var v) const;

  /// For an even polynomial in r, the polynomial q with q(r^2) = p(r).
  /// Throws if an odd-power coefficient is nonzero.
  Polynomial compress_even(Var out_var = Var::rho) const;

  /// Inverse of compress_even: substitute the variable by r^2.
  Polynomial expand_square(Var out_var = Var::r) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // index = power
  Var var_;
};

/// Monic exact gcd; gcd(a, 0) = monic(a). Throws if both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact Sylvester resultant via fraction-free (Bareiss) elimination.
/// Throws on zero-polynomial input.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Second-derivative core of the weighted function e^{-r^2/2} M(r):
///   d^2/dr^2 [e^{-r^2/2} M] = e^{-r^2/2} (M'' - 2 r M' + (r^2-1) M).
/// M must be even; the result is compressed to the squared variable.
Polynomial gauss_weighted_second_core(const Polynomial& m_in_r, Var out_var = Var::rho);

/// Third-derivative core: for even M,
///   d^3/dr^3 [e^{-r^2/2} M] = e^{-r^2/2} r N(r^2),
/// with N = (M''' - 3 r M'' + 3 (r^2-1) M' - r (r^2-3) M) / r compressed.
Polynomial gauss_weighted_third_core(const Polynomial& m_in_r, Var out_var = Var::rho);

}  // namespace posft
