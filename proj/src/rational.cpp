#include "posft/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace posft {

int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

Rational exact_rational(long double x) {
  if (!std::isfinite(static_cast<double>(x)))
    throw std::domain_error("exact_rational: non-finite input");
  // A long double splits exactly into two doubles (64-bit mantissa < 53+53).
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - static_cast<long double>(hi));
  Rational q(hi);
  q += Rational(lo);
  return q;
}

Rational snap_dyadic(long double x, unsigned bits) {
  Rational q = exact_rational(x);
  mpz_class num = q.get_num();
  const mpz_class& den = q.get_den();
  num <<= bits;
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class two_rem = 2 * abs(rem);
  if (two_rem >= den) quot += (sgn(num) >= 0 ? 1 : -1);
  Rational out(quot, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

Rational rational_from_decimal(std::string_view text) {
  size_t i = 0;
  const size_t n = text.size();
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("rational_from_decimal: bad literal '" + std::string(text) + "'");
  };
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) neg = (text[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool any = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      ++frac_len;
      any = true;
    }
  }
  if (!any) return fail();
  long expo = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) eneg = (text[i++] == '-');
    if (i >= n) return fail();
    long e = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) e = e * 10 + (text[i++] - '0');
    expo = eneg ? -e : e;
  }
  if (i != n) return fail();

  mpz_class mant(digits.empty() ? "0" : digits, 10);
  if (neg) mant = -mant;
  long p10 = expo - frac_len;
  Rational out;
  if (p10 >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(p10));
    out = Rational(mant * scale);
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-p10));
    out = Rational(mant, scale);
  }
  out.canonicalize();
  return out;
}

long double to_long_double(const Rational& q) {
  const double hi = q.get_d();
  Rational r = q - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(r.get_d());
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace posft
