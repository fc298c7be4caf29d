#include "posft/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace posft {
namespace laguerre {

namespace {
constexpr long double kSqrt2 = 1.4142135623730950488L;
}

const RadialBasisElement& laguerre_state(int n) {
  if (n < 0) throw std::invalid_argument("laguerre_state: negative order");
  static std::mutex mu;
  static std::deque<RadialBasisElement> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    table.push_back({0, Polynomial::constant(Rational(1), Var::rho)});
    table.push_back({1, Polynomial({Rational(-1), Rational(1)}, Var::rho)});
  }
  while (static_cast<int>(table.size()) <= n) {
    // (k+1) c_{k+1} = (rho - 2k - 1) c_k - k c_{k-1}
    const int k = static_cast<int>(table.size()) - 1;
    const Polynomial lin({Rational(-(2 * k + 1)), Rational(1)}, Var::rho);
    Polynomial next =
        (lin * table[static_cast<size_t>(k)].core - table[static_cast<size_t>(k - 1)].core.scaled(Rational(k)))
            .scaled(Rational(1, k + 1));
    table.push_back({k + 1, std::move(next)});
  }
  return table[static_cast<size_t>(n)];
}

RadialCoefficientVector::RadialCoefficientVector(std::map<int, long double> entries)
    : entries_(std::move(entries)) {
  for (const auto& [n, v] : entries_) {
    if (n < 0) throw std::invalid_argument("coefficient order must be nonnegative");
    truncation_ = std::max(truncation_, n);
  }
}

hermite::FourierPair build_pair_2d(const RadialCoefficientVector& c, unsigned snap_bits) {
  hermite::FourierPair out;
  out.snap_bits = snap_bits;
  Polynomial p(Var::rho), q(Var::rho);
  for (const auto& [n, psi] : c.entries()) {
    Rational m = snap_dyadic(psi, snap_bits);
    Polynomial term = laguerre_state(n).core.scaled(m);
    p = p + term;
    q = (n % 2 == 1) ? q - term : q + term;
  }
  out.P = p;
  out.Q = q.with_var(Var::sigma);
  return out;
}

Polynomial radial_polynomial(const RadialCoefficientVector& c, unsigned snap_bits) {
  Polynomial acc(Var::r);
  for (const auto& [n, psi] : c.entries()) {
    Rational m = snap_dyadic(kSqrt2 * psi, snap_bits);
    acc = acc + laguerre_state(n).core.expand_square(Var::r).scaled(m);
  }
  return acc;
}

Polynomial third_derivative_core(const RadialCoefficientVector& c, unsigned snap_bits) {
  return gauss_weighted_third_core(radial_polynomial(c, snap_bits), Var::rho);
}

namespace {

long double eval_mix(const std::map<int, long double>& entries, long double r, bool flip_odd) {
  int n_max = 0;
  for (const auto& [n, v] : entries) n_max = std::max(n_max, n);
  const long double rho = r * r;
  long double acc = 0;
  long double c_prev = 0, c = 1;  // core_0 = 1
  for (int n = 0; n <= n_max; ++n) {
    auto it = entries.find(n);
    if (it != entries.end()) {
      long double f = (flip_odd && n % 2 == 1) ? -1.0L : 1.0L;
      acc += f * it->second * c;
    }
    long double c_next = ((rho - (2 * n + 1)) * c - n * c_prev) / (n + 1);
    c_prev = c;
    c = c_next;
  }
  return kSqrt2 * expl(-rho / 2) * acc;
}

}  // namespace

long double eval_radial_state(const RadialCoefficientVector& c, long double r) {
  return eval_mix(c.entries(), r, false);
}

long double eval_radial_transform(const RadialCoefficientVector& c, long double s) {
  return eval_mix(c.entries(), s, true);
}

}  // namespace laguerre
}  // namespace posft
