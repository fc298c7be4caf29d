#include "posft/hermite.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace posft {
namespace hermite {

namespace {

constexpr long double kPiQuarterInv = 0.7511255444649424828587L;  // pi^{-1/4}

void require_even_orders(const std::map<int, long double>& entries) {
  for (const auto& [n, v] : entries) {
    if (n < 0) throw std::invalid_argument("coefficient order must be nonnegative");
    if (n % 2 != 0)
      throw std::invalid_argument("odd order " + std::to_string(n) +
                                  " present; odd components make the transform imaginary");
  }
}

}  // namespace

Polynomial BasisElement::reduced_core() const {
  Rational g = core.content();
  return core.scaled(Rational(1) / g);
}

Radicand BasisElement::reduced_norm() const {
  Rational g = core.content();
  return Radicand(norm.value() / (g * g));
}

const BasisElement& hermite_normalized(int n) {
  if (n < 0) throw std::invalid_argument("hermite_normalized: negative order");
  static std::mutex mu;
  static std::deque<BasisElement> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    table.push_back({0, Polynomial::constant(Rational(1), Var::r), Radicand(Rational(1))});
    table.push_back({1, Polynomial::monomial(Rational(2), 1, Var::r), Radicand(Rational(2))});
  }
  while (static_cast<int>(table.size()) <= n) {
    const int k = static_cast<int>(table.size()) - 1;  // we append order k+1
    const Polynomial two_r = Polynomial::monomial(Rational(2), 1, Var::r);
    Polynomial next = two_r * table[static_cast<size_t>(k)].core -
                      table[static_cast<size_t>(k - 1)].core.scaled(Rational(2 * k));
    Radicand norm = Radicand(table[static_cast<size_t>(k)].norm.value() * Rational(2 * (k + 1)));
    table.push_back({k + 1, std::move(next), std::move(norm)});
  }
  return table[static_cast<size_t>(n)];
}

CoefficientVector::CoefficientVector(std::map<int, long double> entries)
    : entries_(std::move(entries)) {
  require_even_orders(entries_);
  for (const auto& [n, v] : entries_) truncation_ = std::max(truncation_, n);
}

std::vector<int> CoefficientVector::invariant_orders() const {
  std::vector<int> out;
  for (const auto& [n, v] : entries_)
    if (n % 4 == 0) out.push_back(n);
  return out;
}

std::vector<int> CoefficientVector::flipped_orders() const {
  std::vector<int> out;
  for (const auto& [n, v] : entries_)
    if (n % 4 == 2) out.push_back(n);
  return out;
}

Polynomial state_polynomial(const CoefficientVector& c, unsigned snap_bits) {
  Polynomial acc(Var::r);
  for (const auto& [n, psi] : c.entries()) {
    const BasisElement& e = hermite_normalized(n);
    Rational m = snap_dyadic(psi / e.norm.sqrt_approx(), snap_bits);
    acc = acc + e.core.scaled(m);
  }
  return acc;
}

FourierPair build_pair(const CoefficientVector& c, unsigned snap_bits) {
  FourierPair out;
  out.snap_bits = snap_bits;
  Polynomial p(Var::r), q(Var::r);
  for (const auto& [n, psi] : c.entries()) {
    const BasisElement& e = hermite_normalized(n);
    Rational m = snap_dyadic(psi / e.norm.sqrt_approx(), snap_bits);
    Polynomial term = e.core.scaled(m);
    p = p + term;
    q = (n % 4 == 2) ? q - term : q + term;
  }
  out.P = p.compress_even(Var::rho);
  out.Q = q.compress_even(Var::sigma);
  return out;
}

Polynomial second_derivative_core(const CoefficientVector& c, unsigned snap_bits) {
  return gauss_weighted_second_core(state_polynomial(c, snap_bits), Var::rho);
}

Polynomial sigma_derivative(const Polynomial& q) {
  return q.derivative() - q.scaled(Rational(1, 2));
}

namespace {

// accumulate sum psi_n f(n) u_n(r) with the orthonormal-function recurrence
long double eval_weighted(const std::map<int, long double>& entries, long double r,
                          bool flip_minus_class) {
  int n_max = 0;
  for (const auto& [n, v] : entries) n_max = std::max(n_max, n);
  long double acc = 0;
  long double u_prev = 0;
  long double u = kPiQuarterInv * expl(-r * r / 2);
  for (int n = 0; n <= n_max; ++n) {
    auto it = entries.find(n);
    if (it != entries.end()) {
      long double f = (flip_minus_class && n % 4 == 2) ? -1.0L : 1.0L;
      acc += f * it->second * u;
    }
    long double u_next = sqrtl(2.0L / (n + 1)) * r * u - sqrtl(static_cast<long double>(n) / (n + 1)) * u_prev;
    u_prev = u;
    u = u_next;
  }
  return acc;
}

}  // namespace

long double eval_state(const CoefficientVector& c, long double r) {
  return eval_weighted(c.entries(), r, false);
}

long double eval_transform(const CoefficientVector& c, long double s) {
  return eval_weighted(c.entries(), s, true);
}

Polynomial assemble_from_brackets(const std::map<int, Rational>& bracket_multipliers,
                                  bool flip_minus_class, Var out_var) {
  Polynomial acc(Var::r);
  for (const auto& [n, m] : bracket_multipliers) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("bracket order must be even and nonnegative");
    Rational mult = (flip_minus_class && n % 4 == 2) ? Rational(-m) : m;
    acc = acc + hermite_normalized(n).reduced_core().scaled(mult);
  }
  return acc.compress_even(out_var);
}

}  // namespace hermite
}  // namespace posft
