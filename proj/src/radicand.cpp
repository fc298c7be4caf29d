#include "posft/radicand.hpp"

#include <cmath>
#include <stdexcept>

namespace posft {

Radicand::Radicand(Rational value) : value_(std::move(value)) {
  if (sign_of(value_) < 0) throw std::domain_error("Radicand: negative value");
}

Radicand Radicand::operator/(const Radicand& o) const {
  if (sign_of(o.value_) == 0) throw std::domain_error("Radicand: division by zero");
  return Radicand(value_ / o.value_);
}

long double Radicand::sqrt_approx() const { return sqrtl(to_long_double(value_)); }

std::pair<Int, Int> Radicand::split_square(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("split_square: negative");
  if (n == 0) return {Int(0), Int(1)};
  Int outer = 1, inner = 1, rest = n;
  for (unsigned long p = 2; p < 100000 && rest > 1; p = (p == 2 ? 3 : p + 2)) {
    Int pp(static_cast<unsigned long>(p));
    if (rest % pp != 0) continue;
    unsigned e = 0;
    while (rest % pp == 0) {
      rest /= pp;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) outer *= pp;
    if (e % 2 == 1) inner *= pp;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Int s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      outer *= s;
    } else {
      inner *= rest;
    }
  }
  return {outer, inner};
}

std::string Radicand::str() const {
  const Int& num = value_.get_num();
  const Int& den = value_.get_den();
  auto [num_out, num_in] = split_square(num);
  auto [den_out, den_in] = split_square(den);
  if (num_in == 1 && den_in == 1) {
    Rational r(num_out, den_out);
    r.canonicalize();
    return posft::to_string(r);
  }
  // outer * sqrt(inner), with any non-square denominator left under the root
  Rational outer(num_out, den_out);
  Rational inner(num_in, den_in);
  outer.canonicalize();
  inner.canonicalize();
  std::string root = "sqrt(" + posft::to_string(inner) + ")";
  if (outer == 1) return root;
  return posft::to_string(outer) + "*" + root;
}

}  // namespace posft
