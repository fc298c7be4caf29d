#pragma once

#include <vector>

#include "posft/polynomial.hpp"

namespace posft {

/// Interval endpoint: a rational number or one of the infinities.
struct Bound {
  enum class Kind { finite, neg_inf, pos_inf };
  Kind kind = Kind::finite;
  Rational value{0};

  static Bound at(Rational x) { return Bound{Kind::finite, std::move(x)}; }
  static Bound neg_infinity() { return Bound{Kind::neg_inf, Rational(0)}; }
  static Bound pos_infinity() { return Bound{Kind::pos_inf, Rational(0)}; }

  bool is_finite() const { return kind == Kind::finite; }
  /// -1 / 0 / +1 ordering comparison, infinities included.
  static int compare(const Bound& a, const Bound& b);
};

/// The remainder chain S_1 = p, S_2 = p', S_m = -rem(S_{m-2}, S_{m-1}).
/// A non-squarefree input is first divided by gcd(p, p'), with the flag set,
/// so counts are counts of distinct roots.
struct SturmSequence {
  std::vector<Polynomial> chain;
  bool squarefree_reduced = false;
  int source_degree = 0;
};

/// Throws std::domain_error on zero or constant input.
SturmSequence sturm_sequence(const Polynomial& p);

/// Number of strict sign alternations in the chain at x, zeros skipped.
/// At +/-infinity the signs come from leading coefficients (and degree
/// parity at -infinity).
int sign_variations(const SturmSequence& s, const Bound& x);

struct RootCount {
  Bound lo = Bound::at(Rational(0));
  Bound hi = Bound::pos_infinity();
  int count = 0;  // distinct real roots in (lo, hi]
  bool root_at_lo = false;
  bool root_at_hi = false;
};

/// Distinct real roots of p in (lo, hi]; boundary flags report exact roots at
/// finite endpoints. Constant nonzero p is allowed (count 0). Throws on a
/// degenerate interval (lo >= hi) or zero p.
RootCount count_roots(const Polynomial& p, const Bound& lo, const Bound& hi);

/// Roots in (0, +inf), with the root_at_lo flag reporting a root at 0.
RootCount count_positive_roots(const Polynomial& p);

}  // namespace posft
