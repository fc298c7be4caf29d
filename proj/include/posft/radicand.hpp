#pragma once

#include <string>
#include <utility>

#include "posft/rational.hpp"

namespace posft {

/// Exact representation of sqrt(value) for a nonnegative rational value.
/// Used for the irrational normalization constants of the basis states
/// (sqrt(2^n n!) and friends); they are never expanded into polynomial
/// coefficients, only applied as real multipliers when assembling states.
class Radicand {
 public:
  Radicand() : value_(0) {}
  explicit Radicand(Rational value);
  explicit Radicand(const Int& value) : Radicand(Rational(value)) {}

  const Rational& value() const { return value_; }

  Radicand operator*(const Radicand& o) const { return Radicand(value_ * o.value_); }
  Radicand operator/(const Radicand& o) const;
  bool operator==(const Radicand& o) const { return value_ == o.value_; }

  /// sqrt(value) to long double precision.
  long double sqrt_approx() const;

  /// "2*sqrt(6)"-style rendering with the largest square factor pulled out.
  std::string str() const;

  /// n = outer^2 * inner with inner squarefree (n >= 0).
  static std::pair<Int, Int> split_square(const Int& n);

 private:
  Rational value_;
};

}  // namespace posft
