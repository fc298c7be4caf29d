#include "posft/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace posft {

namespace {

const Rational kZero(0);

void require_same_var(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.var() != b.var())
    throw std::invalid_argument(std::string("polynomial ") + op + ": variable tag mismatch (" +
                                var_name(a.var()) + " vs " + var_name(b.var()) + ")");
}

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::r: return "r";
    case Var::rho: return "rho";
    case Var::sigma: return "sigma";
  }
  return "?";
}

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs, Var var)
    : coeffs_(std::move(ascending_coeffs)), var_(var) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sign_of(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c, Var var) {
  Polynomial p(var);
  if (sign_of(c) != 0) {
    p.coeffs_.push_back(c);
    p.coeffs_.back().canonicalize();
  }
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, int power, Var var) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  Polynomial p(var);
  if (sign_of(c) != 0) {
    p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = c;
    p.coeffs_.back().canonicalize();
  }
  return p;
}

int Polynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree() of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading() of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_var(*this, o, "add");
  Polynomial out(var_);
  out.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_var(*this, o, "mul");
  Polynomial out(var_);
  if (is_zero() || o.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  out.trim();
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sign_of(c) == 0) return Polynomial(var_);
  Polynomial out(*this);
  for (auto& k : out.coeffs_) k *= c;
  return out;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

long double Polynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_long_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial out(var_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  out.trim();
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& b) const {
  require_same_var(*this, b, "divmod");
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  Polynomial q(var_), rem(*this);
  if (is_zero() || degree() < b.degree()) return {q, rem};
  q.coeffs_.assign(static_cast<size_t>(degree() - b.degree()) + 1, Rational(0));
  const int db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int k = rem.degree() - db;
    Rational f = rem.leading() / b.leading();
    q.coeffs_[static_cast<size_t>(k)] = f;
    // rem -= f * x^k * b, done in place; the leading term cancels exactly
    for (int i = 0; i <= db; ++i) rem.coeffs_[static_cast<size_t>(k + i)] -= f * b.coeffs_[static_cast<size_t>(i)];
    rem.trim();
  }
  q.trim();
  return {q, rem};
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (sign_of(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / content());
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  return scaled(Rational(1) / leading());
}

Polynomial Polynomial::with_var(Var v) const {
  Polynomial out(*this);
  out.var_ = v;
  return out;
}

Polynomial Polynomial::compress_even(Var out_var) const {
  Polynomial out(out_var);
  if (is_zero()) return out;
  for (size_t i = 1; i < coeffs_.size(); i += 2)
    if (sign_of(coeffs_[i]) != 0)
      throw std::domain_error("compress_even: odd power " + std::to_string(i) + " present");
  out.coeffs_.resize((coeffs_.size() + 1) / 2);
  for (size_t i = 0; i < coeffs_.size(); i += 2) out.coeffs_[i / 2] = coeffs_[i];
  out.trim();
  return out;
}

Polynomial Polynomial::expand_square(Var out_var) const {
  Polynomial out(out_var);
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() * 2 - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[2 * i] = coeffs_[i];
  out.trim();
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (sign_of(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sign_of(c) < 0) os << "-";
      first = false;
    } else {
      os << (sign_of(c) < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (k == 0 || !unit) os << to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var_name(var_);
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_var(a, b, "gcd");
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both inputs zero");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Polynomial x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    if (!r.is_zero()) r = r.primitive();  // keeps coefficient sizes in check
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Determinant of an integer matrix by Bareiss fraction-free elimination.
Int bareiss_determinant(std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
  if (n == 0) return Int(1);
  int det_sign = 1;
  Int prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      det_sign = -det_sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return det_sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Clear denominators: returns (integer coefficient list descending, multiplier L)
// with L * p having the returned integer coefficients.
std::pair<std::vector<Int>, Int> integerize(const Polynomial& p) {
  Int lcm(1);
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> desc;
  for (int k = p.degree(); k >= 0; --k) {
    Rational scaled = p.coeff(k) * Rational(lcm);
    desc.push_back(scaled.get_num());  // denominator is 1 after scaling
  }
  return {desc, lcm};
}

}  // namespace

Rational resultant(const Polynomial& a, const Polynomial& b) {
  require_same_var(a, b, "resultant");
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero polynomial input");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) {
    Rational out(1);
    for (int i = 0; i < n; ++i) out *= a.coeff(0);
    return out;  // Res(c, b) = c^deg(b)
  }
  if (n == 0) {
    Rational out(1);
    for (int i = 0; i < m; ++i) out *= b.coeff(0);
    return out;
  }
  auto [ac, la] = integerize(a);
  auto [bc, lb] = integerize(b);
  const size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = ac[static_cast<size_t>(j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = bc[static_cast<size_t>(j)];
  Int det = bareiss_determinant(s);
  // Res(a,b) = Res(la*a, lb*b) / (la^n * lb^m)
  Int denom(1);
  for (int i = 0; i < n; ++i) denom *= la;
  for (int i = 0; i < m; ++i) denom *= lb;
  Rational out(det, denom);
  out.canonicalize();
  return out;
}

Polynomial gauss_weighted_second_core(const Polynomial& m_in_r, Var out_var) {
  if (m_in_r.var() != Var::r)
    throw std::invalid_argument("gauss_weighted_second_core: expected a polynomial in r");
  const Polynomial r = Polynomial::monomial(Rational(1), 1, Var::r);
  const Polynomial r2m1({Rational(-1), Rational(0), Rational(1)}, Var::r);
  Polynomial core = m_in_r.derivative().derivative() - (r * m_in_r.derivative()).scaled(Rational(2)) +
                    r2m1 * m_in_r;
  return core.compress_even(out_var);
}

Polynomial gauss_weighted_third_core(const Polynomial& m_in_r, Var out_var) {
  if (m_in_r.var() != Var::r)
    throw std::invalid_argument("gauss_weighted_third_core: expected a polynomial in r");
  const Polynomial r = Polynomial::monomial(Rational(1), 1, Var::r);
  const Polynomial r2m1({Rational(-1), Rational(0), Rational(1)}, Var::r);
  const Polynomial r2m3({Rational(-3), Rational(0), Rational(1)}, Var::r);
  const Polynomial d1 = m_in_r.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial d3 = d2.derivative();
  Polynomial f3 = d3 - (r * d2).scaled(Rational(3)) + (r2m1 * d1).scaled(Rational(3)) - r * r2m3 * m_in_r;
  if (f3.is_zero()) return Polynomial(out_var);
  if (sign_of(f3.coeff(0)) != 0)
    throw std::domain_error("gauss_weighted_third_core: input polynomial is not even");
  // divide the odd polynomial by r, then compress
  std::vector<Rational> shifted(f3.coeffs().begin() + 1, f3.coeffs().end());
  Polynomial over_r(std::move(shifted), Var::r);
  return over_r.compress_even(out_var);
}

}  // namespace posft
