#include "posft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "posft/sturm.hpp"

namespace posft {
namespace verify {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;
constexpr long double kPiQuarterInv = 0.7511255444649424828587L;  // pi^{-1/4}

// Orthonormal Hermite functions q_k(x) = p_k(x) e^{-x^2/2} with
// q_0 = pi^{-1/4} e^{-x^2/2}; bounded for all x, so safe at large nodes.
void hermite_q_all(int n, long double x, std::vector<long double>& q) {
  q.resize(static_cast<size_t>(n) + 1);
  q[0] = kPiQuarterInv * expl(-x * x / 2);
  if (n == 0) return;
  q[1] = sqrtl(2.0L) * x * q[0];
  for (int k = 1; k < n; ++k)
    q[static_cast<size_t>(k) + 1] =
        sqrtl(2.0L / (k + 1)) * x * q[static_cast<size_t>(k)] -
        sqrtl(static_cast<long double>(k) / (k + 1)) * q[static_cast<size_t>(k) - 1];
}

// Scaled Laguerre functions l_k(x) = L_k(x) e^{-x/2}, |l_k| <= 1 on [0, inf).
void laguerre_l_all(int n, long double x, std::vector<long double>& l) {
  l.resize(static_cast<size_t>(n) + 1);
  l[0] = expl(-x / 2);
  if (n == 0) return;
  l[1] = (1 - x) * l[0];
  for (int k = 1; k < n; ++k)
    l[static_cast<size_t>(k) + 1] =
        ((2 * k + 1 - x) * l[static_cast<size_t>(k)] - k * l[static_cast<size_t>(k) - 1]) / (k + 1);
}

QuadratureRule build_gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be positive");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_hermite;
  rule.order = order;
  // Golub-Welsch eigenvalues as starting points, then Newton polish.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    double b = std::sqrt(k / 2.0);
    jac(k, k - 1) = jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  std::vector<long double> q;
  for (int i = 0; i < order; ++i) {
    long double x = static_cast<long double>(es.eigenvalues()(i));
    for (int it = 0; it < 3; ++it) {
      hermite_q_all(order, x, q);
      long double qn = q[static_cast<size_t>(order)];
      long double dq = sqrtl(2.0L * order) * q[static_cast<size_t>(order) - 1] - x * qn;
      if (dq == 0) break;
      x -= qn / dq;
    }
    hermite_q_all(order - 1, x, q);
    long double s = 0;
    for (int k = 0; k < order; ++k) s += q[static_cast<size_t>(k)] * q[static_cast<size_t>(k)];
    rule.nodes.push_back(x);
    rule.weights.push_back(1.0L / s);                     // integrates f alone
    rule.weighted.push_back(expl(-x * x) / s);            // integrates e^{-x^2} f
  }
  return rule;
}

QuadratureRule build_gauss_laguerre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre_radial: order must be positive");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_laguerre_radial;
  rule.order = order;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
  for (int k = 0; k < order; ++k) jac(k, k) = 2.0 * k + 1.0;
  for (int k = 1; k < order; ++k) jac(k, k - 1) = jac(k - 1, k) = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  std::vector<long double> l;
  for (int i = 0; i < order; ++i) {
    long double x = static_cast<long double>(es.eigenvalues()(i));
    for (int it = 0; it < 3; ++it) {
      laguerre_l_all(order, x, l);
      long double ln = l[static_cast<size_t>(order)];
      // x L_n' = n (L_n - L_{n-1}); the e^{-x/2} scaling adds -l_n/2
      long double dl = order * (ln - l[static_cast<size_t>(order) - 1]) / x - ln / 2;
      if (dl == 0) break;
      x -= ln / dl;
    }
    laguerre_l_all(order - 1, x, l);
    long double s = 0;
    for (int k = 0; k < order; ++k) s += l[static_cast<size_t>(k)] * l[static_cast<size_t>(k)];
    rule.nodes.push_back(x);
    rule.weights.push_back(1.0L / s);
    rule.weighted.push_back(expl(-x) / s);
  }
  return rule;
}

}  // namespace

const QuadratureRule& QuadratureRule::gauss_hermite(int order) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_hermite(order)).first;
  return it->second;
}

const QuadratureRule& QuadratureRule::gauss_laguerre_radial(int order) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_laguerre(order)).first;
  return it->second;
}

QuadratureRule QuadratureRule::trapezoid_truncated(long double a, long double b, int points) {
  if (points < 2 || b <= a) throw std::invalid_argument("trapezoid_truncated: bad grid");
  QuadratureRule rule;
  rule.kind = Kind::trapezoid_truncated;
  rule.order = points;
  const long double h = (b - a) / (points - 1);
  rule.nodes.resize(static_cast<size_t>(points));
  rule.weights.assign(static_cast<size_t>(points), h);
  for (int i = 0; i < points; ++i) rule.nodes[static_cast<size_t>(i)] = a + h * i;
  rule.weights.front() = h / 2;
  rule.weights.back() = h / 2;
  rule.weighted = rule.weights;
  return rule;
}

std::vector<double> numeric_ft(const hermite::CoefficientVector& c, const std::vector<double>& s_grid,
                               int order) {
  const int needed = c.truncation() + 4;
  if (order < needed)
    throw std::invalid_argument("numeric_ft: quadrature order too low for the truncation");
  const QuadratureRule& rule = QuadratureRule::gauss_hermite(order);
  std::vector<long double> psi(rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) psi[i] = hermite::eval_state(c, rule.nodes[i]);
  std::vector<double> out;
  out.reserve(s_grid.size());
  const long double norm = 1.0L / sqrtl(2 * kPi);
  for (double s : s_grid) {
    long double acc = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * cosl(static_cast<long double>(s) * rule.nodes[i]) * psi[i];
    out.push_back(static_cast<double>(norm * acc));
  }
  return out;
}

std::vector<double> numeric_hankel(const laguerre::RadialCoefficientVector& c,
                                   const std::vector<double>& s_grid, long double r_max, int points) {
  QuadratureRule rule = QuadratureRule::trapezoid_truncated(0.0L, r_max, points);
  std::vector<long double> f(rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    f[i] = rule.nodes[i] * laguerre::eval_radial_state(c, rule.nodes[i]);
  std::vector<double> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    long double acc = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double arg = s * static_cast<double>(rule.nodes[i]);
      acc += rule.weights[i] * static_cast<long double>(std::cyl_bessel_j(0.0, arg)) * f[i];
    }
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

OracleRootCount oracle_root_count(const Polynomial& p, double lo) {
  if (p.is_zero()) throw std::domain_error("oracle_root_count: zero polynomial");
  OracleRootCount out;
  if (p.is_constant()) return out;
  const int d = p.degree();
  std::vector<double> coeff(static_cast<size_t>(d) + 1);
  double max_c = 0;
  for (int k = 0; k <= d; ++k) {
    coeff[static_cast<size_t>(k)] = static_cast<double>(to_long_double(p.coeff(k)));
    max_c = std::max(max_c, std::abs(coeff[static_cast<size_t>(k)]));
  }
  if (max_c == 0) throw std::domain_error("oracle_root_count: underflowed coefficients");
  if (std::abs(coeff.back()) < 1e-8 * max_c) out.confident = false;

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -coeff[static_cast<size_t>(i)] / coeff.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));

  out.min_separation = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      out.min_separation = std::min(out.min_separation, std::abs(roots[i] - roots[j]));

  constexpr double kImTol = 1e-9;
  constexpr double kSep = 1e-6;
  std::vector<double> reals;
  for (const auto& z : roots) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= kImTol * scale)
      reals.push_back(z.real());
    else if (std::abs(z.imag()) <= kSep * scale)
      out.confident = false;  // borderline complex pair
  }
  std::sort(reals.begin(), reals.end());
  // cluster multiple roots
  std::vector<double> distinct;
  for (double x : reals) {
    if (!distinct.empty() && std::abs(x - distinct.back()) <= kSep) {
      distinct.back() = (distinct.back() + x) / 2;
      out.confident = false;
    } else {
      distinct.push_back(x);
    }
  }
  for (double x : distinct) {
    if (std::abs(x - lo) <= kSep) out.confident = false;
    if (x > lo) out.roots.push_back(x);
  }
  out.count = static_cast<int>(out.roots.size());
  if (out.min_separation <= kSep) out.confident = false;
  return out;
}

std::string OracleReport::json_line() const {
  std::ostringstream os;
  os << "{\"name\":\"" << name << "\",\"max_error\":" << max_error << ",\"threshold\":" << threshold
     << ",\"pass\":" << (pass ? "true" : "false");
  if (!detail.empty()) os << ",\"detail\":\"" << detail << "\"";
  os << "}";
  return os.str();
}

OracleReport gram_psd_check(const std::function<double(double)>& phi, int k, int trials,
                            std::uint64_t seed, double tol) {
  if (k < 2) throw std::invalid_argument("gram_psd_check: need at least two points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  double worst = 0;  // most negative normalized eigenvalue seen
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x(static_cast<size_t>(k));
    for (auto& v : x) v = uni(rng);
    Eigen::MatrixXd g(k, k);
    double scale = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        g(i, j) = phi(x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]);
        scale = std::max(scale, std::abs(g(i, j)));
      }
    if (scale == 0) scale = 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
    worst = std::min(worst, es.eigenvalues().minCoeff() / scale);
  }
  OracleReport rep;
  rep.name = "gram_psd";
  rep.max_error = -worst;
  rep.threshold = tol;
  rep.pass = -worst <= tol;
  return rep;
}

long double finite_difference(const std::function<long double(long double)>& f, long double r,
                              int order) {
  auto stencil = [&](long double h) -> long double {
    if (order == 2) return (f(r + h) - 2 * f(r) + f(r - h)) / (h * h);
    if (order == 3) return (f(r + 2 * h) - 2 * f(r + h) + 2 * f(r - h) - f(r - 2 * h)) / (2 * h * h * h);
    throw std::invalid_argument("finite_difference: order must be 2 or 3");
  };
  const long double h = 1e-4L;
  const long double d1 = stencil(h), d2 = stencil(h / 2);
  return (4 * d2 - d1) / 3;
}

long double finite_difference(const hermite::CoefficientVector& c, long double r, int order) {
  return finite_difference([&c](long double x) { return hermite::eval_state(c, x); }, r, order);
}

// ---------------------------------------------------------------- suites --

std::vector<OracleReport> suite_orthonormality() {
  std::vector<OracleReport> out;
  {
    // integral u_m u_n dr = delta_mn, Gauss-Hermite order 64 is exact for the
    // polynomial part (degree <= 24)
    const QuadratureRule& rule = QuadratureRule::gauss_hermite(64);
    double worst = 0;
    for (int m = 0; m <= 12; ++m) {
      for (int n = m; n <= 12; ++n) {
        long double acc = 0;
        std::vector<long double> q;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
          hermite_q_all(12, rule.nodes[i], q);
          acc += rule.weights[i] * q[static_cast<size_t>(m)] * q[static_cast<size_t>(n)];
        }
        const double expect = m == n ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(static_cast<double>(acc) - expect));
      }
    }
    OracleReport rep;
    rep.name = "hermite_orthonormality_m_n_le_12";
    rep.max_error = worst;
    rep.threshold = 1e-10;
    rep.pass = worst <= rep.threshold;
    out.push_back(rep);
  }
  {
    // integral_0^inf (r dr) v_m v_n = integral e^{-rho} L_m L_n drho = delta_mn
    const QuadratureRule& rule = QuadratureRule::gauss_laguerre_radial(32);
    double worst = 0;
    for (int m = 0; m <= 8; ++m) {
      for (int n = m; n <= 8; ++n) {
        long double acc = 0;
        std::vector<long double> l;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
          laguerre_l_all(8, rule.nodes[i], l);
          acc += rule.weights[i] * l[static_cast<size_t>(m)] * l[static_cast<size_t>(n)];
        }
        const double expect = m == n ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(static_cast<double>(acc) - expect));
      }
    }
    OracleReport rep;
    rep.name = "laguerre_radial_orthonormality_m_n_le_8";
    rep.max_error = worst;
    rep.threshold = 1e-9;
    rep.pass = worst <= rep.threshold;
    out.push_back(rep);
  }
  return out;
}

std::vector<OracleReport> suite_ft_eigenproperty() {
  std::vector<OracleReport> out;
  std::vector<double> s_grid;
  for (int i = 0; i <= 240; ++i) s_grid.push_back(-6.0 + i * 0.05);
  for (int n = 0; n <= 12; n += 2) {
    hermite::CoefficientVector c({{n, 1.0L}});
    std::vector<double> ft = numeric_ft(c, s_grid);
    const double phase = (n % 4 == 0) ? 1.0 : -1.0;  // i^n for even n
    double worst = 0;
    for (size_t i = 0; i < s_grid.size(); ++i) {
      double ref = phase * static_cast<double>(hermite::eval_state(c, s_grid[i]));
      worst = std::max(worst, std::abs(ft[i] - ref));
    }
    OracleReport rep;
    rep.name = "ft_eigenproperty_u" + std::to_string(n);
    rep.max_error = worst;
    rep.threshold = 1e-8;
    rep.pass = worst <= rep.threshold;
    out.push_back(rep);
  }
  return out;
}

std::vector<OracleReport> suite_hankel_eigenproperty() {
  std::vector<OracleReport> out;
  std::vector<double> s_grid;
  for (int i = 0; i <= 60; ++i) s_grid.push_back(i * 0.1);
  for (int n = 0; n <= 6; ++n) {
    laguerre::RadialCoefficientVector c({{n, 1.0L}});
    std::vector<double> hk = numeric_hankel(c, s_grid);
    const double phase = (n % 2 == 0) ? 1.0 : -1.0;
    double worst = 0;
    for (size_t i = 0; i < s_grid.size(); ++i) {
      double ref = phase * static_cast<double>(laguerre::eval_radial_state(c, s_grid[i]));
      worst = std::max(worst, std::abs(hk[i] - ref));
    }
    OracleReport rep;
    rep.name = "hankel_eigenproperty_v" + std::to_string(n);
    rep.max_error = worst;
    rep.threshold = 1e-6;
    rep.pass = worst <= rep.threshold;
    out.push_back(rep);
  }
  return out;
}

OracleReport suite_sturm_oracle_agreement(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_int_distribution<int> deg_pick(1, 8);
  long checked = 0, skipped = 0, mismatches = 0;
  for (int t = 0; t < samples; ++t) {
    const int deg = deg_pick(rng);
    std::vector<Rational> coeffs;
    for (int k = 0; k < deg; ++k) coeffs.push_back(snap_dyadic(uni(rng), 64));
    double lead = uni(rng);
    lead += (lead >= 0 ? 0.15 : -0.15);  // keep the top coefficient away from 0
    coeffs.push_back(snap_dyadic(lead, 64));
    Polynomial p(coeffs, Var::rho);
    if (p.is_zero() || p.is_constant()) {
      ++skipped;
      continue;
    }
    OracleRootCount oracle = oracle_root_count(p, 0.0);
    if (!oracle.confident) {
      ++skipped;
      continue;
    }
    ++checked;
    if (count_positive_roots(p).count != oracle.count) ++mismatches;
  }
  OracleReport rep;
  rep.name = "sturm_vs_companion_roots";
  rep.max_error = static_cast<double>(mismatches);
  rep.threshold = 0;
  rep.pass = mismatches == 0;
  std::ostringstream det;
  det << checked << " confident samples, " << skipped << " near-degenerate skipped";
  rep.detail = det.str();
  return rep;
}

std::vector<OracleReport> suite_gram() {
  std::vector<OracleReport> out;
  {
    hermite::CoefficientVector gauss({{0, 1.0L}});
    auto phi = [&gauss](double x) { return static_cast<double>(hermite::eval_transform(gauss, x)); };
    OracleReport rep = gram_psd_check(phi, 8, 25, 12345);
    rep.name = "gram_psd_gaussian";
    out.push_back(rep);
  }
  {
    // a point inside the joint positivity region of the (0,2,4) mixture
    const long double a = 0.15L, b = 0.25L;
    hermite::CoefficientVector c(
        {{0, cosl(a) * cosl(b)}, {2, sinl(a) * cosl(b)}, {4, sinl(b)}});
    auto phi = [&c](double x) { return static_cast<double>(hermite::eval_transform(c, x)); };
    OracleReport rep = gram_psd_check(phi, 8, 25, 777);
    rep.name = "gram_psd_mixed_parity_class0";
    out.push_back(rep);
  }
  {
    // negative control: psi = u_2 changes sign, its transform -u_2 must fail
    hermite::CoefficientVector u2({{2, 1.0L}});
    auto phi = [&u2](double x) { return static_cast<double>(hermite::eval_transform(u2, x)); };
    OracleReport rep = gram_psd_check(phi, 8, 25, 999);
    rep.name = "gram_psd_negative_control_u2";
    rep.pass = !rep.pass;  // expected to violate PSD
    rep.detail = "expected failure: source state changes sign";
    out.push_back(rep);
  }
  return out;
}

}  // namespace verify
}  // namespace posft
