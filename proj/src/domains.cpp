#include "posft/domains.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "posft/hermite.hpp"
#include "posft/laguerre.hpp"
#include "posft/verify.hpp"

namespace posft {
namespace domains {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;

// Scale-normalized nearness thresholds for border cells.
const Rational kBoundaryEps(Int(1), Int(1) << 40);

Rational max_abs_coeff(const Polynomial& p) {
  Rational m(0);
  for (const auto& c : p.coeffs()) {
    Rational a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

// A cell is border-suspect when |p(left)| falls below 2^-40 * maxc *
// max(1,|left|)^deg (a root crossing the interval edge), or when the exact
// resultant falls below 2^-40 * maxc^(2 deg - 1) AND the floating root
// picture cannot confidently separate the roots. The companion-matrix gate
// keeps the flag confined to the actual border band: the bare resultant
// inequality over-fires by orders of magnitude whenever the leading
// coefficient is small against maxc (high-order mixtures).
bool near_boundary(const Polynomial& p, const Rational& left_x) {
  if (p.is_zero()) return true;
  Rational maxc = max_abs_coeff(p);
  if (p.is_constant()) return abs(p.coeff(0)) < kBoundaryEps * maxc;
  const int deg = p.degree();
  Rational scale_left = kBoundaryEps * maxc;
  Rational ax = abs(left_x);
  if (ax > 1) {
    for (int i = 0; i < deg; ++i) scale_left *= ax;
  }
  if (abs(p(left_x)) < scale_left) return true;
  if (verify::oracle_root_count(p, static_cast<double>(to_long_double(left_x))).confident)
    return false;
  Rational res = abs(resultant(p, p.derivative()));
  Rational scale_res = kBoundaryEps;
  for (int i = 0; i < 2 * deg - 1; ++i) scale_res *= maxc;
  return res < scale_res;
}

void require_range(long double x, long double lo, long double hi, bool lo_closed, const char* what) {
  const long double eps = 1e-12L;
  bool ok = lo_closed ? (x >= lo - eps) : (x > lo - eps);
  ok = ok && x <= hi + eps;
  if (!ok)
    throw std::domain_error(std::string("angle out of range: ") + what + " = " +
                            std::to_string(static_cast<double>(x)));
}

}  // namespace

const char* basis_name(BasisKind b) { return b == BasisKind::hermite ? "hermite" : "laguerre"; }

const char* constraint_name(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::positivity_P: return "positivity_P";
    case ConstraintKind::positivity_Q: return "positivity_Q";
    case ConstraintKind::monotone_phi: return "monotone_phi";
    case ConstraintKind::convex_psi: return "convex_psi";
    case ConstraintKind::third_deriv_negative: return "third_deriv_negative";
  }
  return "?";
}

ConstraintKind constraint_from_name(const std::string& name) {
  for (ConstraintKind k :
       {ConstraintKind::positivity_P, ConstraintKind::positivity_Q, ConstraintKind::monotone_phi,
        ConstraintKind::convex_psi, ConstraintKind::third_deriv_negative})
    if (name == constraint_name(k)) return k;
  throw std::invalid_argument("unknown constraint '" + name + "'");
}

std::vector<long double> sphere_to_coeffs(const SpherePoint& pt, const std::vector<int>& orders) {
  if (orders.size() < 2) throw std::invalid_argument("sphere_to_coeffs: need at least two orders");
  if (pt.angles.size() + 1 != orders.size())
    throw std::invalid_argument("sphere_to_coeffs: angle count must be orders - 1");
  if (pt.angles.size() == 2) {
    const long double a = pt.angles[0], b = pt.angles[1];
    require_range(a, -kPi, kPi, false, "alpha");
    require_range(b, 0, kPi / 2, true, "beta");
    return {cosl(a) * cosl(b), sinl(a) * cosl(b), sinl(b)};
  }
  if (pt.angles.size() == 3) {
    const long double a = pt.angles[0], b = pt.angles[1], g = pt.angles[2];
    require_range(a, -kPi / 2, kPi / 2, false, "alpha");
    require_range(b, -kPi, kPi, false, "beta");
    require_range(g, 0, kPi / 2, true, "gamma");
    return {cosl(a) * cosl(b) * cosl(g), sinl(a) * cosl(b) * cosl(g), sinl(b) * cosl(g), sinl(g)};
  }
  throw std::invalid_argument("sphere_to_coeffs: only 2- and 3-sphere parametrizations supported");
}

std::vector<ConstraintPolynomial> constraint_polynomials(BasisKind basis,
                                                         const std::map<int, long double>& psi,
                                                         const std::vector<Constraint>& constraints,
                                                         unsigned snap_bits) {
  if (constraints.empty()) throw std::invalid_argument("at least one constraint required");
  std::vector<ConstraintPolynomial> out;
  out.reserve(constraints.size());

  bool need_pair = false, need_m = false;
  for (const Constraint& c : constraints) {
    if (c.kind == ConstraintKind::positivity_P || c.kind == ConstraintKind::positivity_Q ||
        c.kind == ConstraintKind::monotone_phi)
      need_pair = true;
    else
      need_m = true;
  }

  hermite::FourierPair pair;
  Polynomial m_poly(Var::r);
  if (basis == BasisKind::hermite) {
    hermite::CoefficientVector c(psi);
    if (need_pair) pair = hermite::build_pair(c, snap_bits);
    if (need_m) m_poly = hermite::state_polynomial(c, snap_bits);
  } else {
    laguerre::RadialCoefficientVector c(psi);
    if (need_pair) pair = laguerre::build_pair_2d(c, snap_bits);
    if (need_m) m_poly = laguerre::radial_polynomial(c, snap_bits);
  }

  for (const Constraint& c : constraints) {
    ConstraintPolynomial cp;
    cp.constraint = c;
    switch (c.kind) {
      case ConstraintKind::positivity_P:
        cp.poly = pair.P;
        cp.left_x = Rational(0);
        cp.want_positive = true;
        break;
      case ConstraintKind::positivity_Q:
        cp.poly = pair.Q;
        cp.left_x = Rational(0);
        cp.want_positive = true;
        break;
      case ConstraintKind::monotone_phi:
        cp.poly = hermite::sigma_derivative(pair.Q);
        cp.left_x = Rational(0);
        cp.want_positive = false;
        break;
      case ConstraintKind::convex_psi:
        cp.poly = gauss_weighted_second_core(m_poly, Var::rho);
        cp.left_x = c.threshold_sq;
        cp.want_positive = true;
        break;
      case ConstraintKind::third_deriv_negative:
        cp.poly = gauss_weighted_third_core(m_poly, Var::rho);
        cp.left_x = c.threshold_sq;
        cp.want_positive = false;
        break;
    }
    out.push_back(std::move(cp));
  }
  return out;
}

ConstraintResult evaluate_constraint(const ConstraintPolynomial& cp) {
  ConstraintResult res;
  const Polynomial& p = cp.poly;
  if (p.is_zero()) throw std::domain_error("constraint polynomial is identically zero");
  res.left_sign = sign_of(p(cp.left_x));
  if (p.is_constant()) {
    res.root_count = 0;
  } else {
    SturmSequence seq = sturm_sequence(p);
    res.tangency_reduced = seq.squarefree_reduced;
    int v = sign_variations(seq, Bound::at(cp.left_x)) - sign_variations(seq, Bound::pos_infinity());
    res.root_count = v < 0 ? -v : v;
  }
  res.satisfied =
      res.root_count == 0 && (cp.want_positive ? res.left_sign > 0 : res.left_sign < 0);
  res.boundary_uncertain = res.tangency_reduced || near_boundary(p, cp.left_x);
  return res;
}

CellRecord classify_cell(const std::vector<ConstraintPolynomial>& cps) {
  CellRecord cell;
  cell.per_constraint.reserve(cps.size());
  int worst = 0;
  bool all_ok = true;
  for (const auto& cp : cps) {
    ConstraintResult r = evaluate_constraint(cp);
    if (!r.satisfied) {
      all_ok = false;
      worst = std::max(worst, std::max(r.root_count, 1));
    }
    cell.boundary_uncertain = cell.boundary_uncertain || r.boundary_uncertain;
    cell.per_constraint.push_back(std::move(r));
  }
  cell.class_code = all_ok ? 0 : static_cast<std::uint8_t>(std::min(worst, 255));
  return cell;
}

CellRecord classify_point(const SpherePoint& pt, BasisKind basis, const std::vector<int>& orders,
                          const std::vector<Constraint>& constraints, unsigned snap_bits) {
  std::vector<long double> coeffs = sphere_to_coeffs(pt, orders);
  std::map<int, long double> psi;
  for (size_t k = 0; k < orders.size(); ++k) psi[orders[k]] = coeffs[k];
  CellRecord cell = classify_cell(constraint_polynomials(basis, psi, constraints, snap_bits));
  cell.degenerate_top = sign_of(snap_dyadic(coeffs.back(), snap_bits)) == 0;
  return cell;
}

CellRecord classify_coefficients(BasisKind basis, const std::map<int, long double>& psi,
                                 const std::vector<Constraint>& constraints, unsigned snap_bits) {
  return classify_cell(constraint_polynomials(basis, psi, constraints, snap_bits));
}

void ScanConfig::apply_default_ranges() {
  // Ranges are kept at double precision so a config echoed at %.17g re-runs
  // to byte-identical maps.
  const double pi_d = 3.141592653589793;
  if (orders.size() == 4) {
    alpha_lo = -pi_d / 2;
    alpha_hi = pi_d / 2;
    beta_lo = -pi_d;
    beta_hi = pi_d;
  } else {
    alpha_lo = -pi_d;
    alpha_hi = pi_d;
    beta_lo = 0;
    beta_hi = pi_d / 2;
  }
}

long double ScanConfig::alpha_center(int i) const {
  return alpha_lo + (i + 0.5L) * (alpha_hi - alpha_lo) / alpha_res;
}

long double ScanConfig::beta_center(int j) const {
  return beta_lo + (j + 0.5L) * (beta_hi - beta_lo) / beta_res;
}

const CellRecord& DomainMap::cell(int i, int j) const {
  return cells[static_cast<size_t>(j) * static_cast<size_t>(config.alpha_res) + static_cast<size_t>(i)];
}

int constraint_degree_bound(BasisKind basis, const std::vector<int>& orders, const Constraint& c) {
  int n_max = *std::max_element(orders.begin(), orders.end());
  int deg_p = basis == BasisKind::hermite ? n_max / 2 : n_max;
  switch (c.kind) {
    case ConstraintKind::positivity_P:
    case ConstraintKind::positivity_Q:
    case ConstraintKind::monotone_phi:
      return deg_p;
    case ConstraintKind::convex_psi:
    case ConstraintKind::third_deriv_negative:
      return deg_p + 1;
  }
  return deg_p;
}

DomainMap scan_map(const ScanConfig& config) {
  ScanConfig cfg = config;
  if (cfg.orders.size() != 3 && cfg.orders.size() != 4)
    throw std::invalid_argument("scan_map: 3 or 4 orders supported");
  if (cfg.orders.size() == 4 && !cfg.gamma)
    throw std::invalid_argument("scan_map: a 4-order scan needs a fixed gamma cut");
  if (cfg.alpha_res < 2 || cfg.beta_res < 2)
    throw std::invalid_argument("scan_map: resolution must be at least 2 per axis");
  if (cfg.alpha_hi == cfg.alpha_lo && cfg.beta_hi == cfg.beta_lo) cfg.apply_default_ranges();

  DomainMap map;
  map.config = cfg;
  map.legend_max = 0;
  for (const Constraint& c : cfg.constraints)
    map.legend_max = std::max(map.legend_max, constraint_degree_bound(cfg.basis, cfg.orders, c));
  map.cells.resize(static_cast<size_t>(cfg.alpha_res) * static_cast<size_t>(cfg.beta_res));

  int n_threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;
  std::atomic<int> next_row{0};
  std::atomic<bool> degenerate{false};
  std::vector<std::thread> pool;
  auto worker = [&]() {
    for (;;) {
      int j = next_row.fetch_add(1);
      if (j >= cfg.beta_res) return;
      const long double beta = cfg.beta_center(j);
      for (int i = 0; i < cfg.alpha_res; ++i) {
        SpherePoint pt;
        pt.angles = {cfg.alpha_center(i), beta};
        if (cfg.gamma) pt.angles.push_back(*cfg.gamma);
        CellRecord cell = classify_point(pt, cfg.basis, cfg.orders, cfg.constraints, cfg.snap_bits);
        if (cell.degenerate_top) degenerate.store(true, std::memory_order_relaxed);
        map.cells[static_cast<size_t>(j) * static_cast<size_t>(cfg.alpha_res) + static_cast<size_t>(i)] =
            std::move(cell);
      }
    }
  };
  pool.reserve(static_cast<size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  map.degenerate_slice = degenerate.load();
  return map;
}

RegionStats region_stats(const DomainMap& m) {
  RegionStats st;
  for (int j = 0; j < m.config.beta_res; ++j) {
    for (int i = 0; i < m.config.alpha_res; ++i) {
      const CellRecord& c = m.cell(i, j);
      ++st.class_cells[c.class_code];
      if (c.boundary_uncertain) ++st.uncertain_cells;
      if (c.class_code == 0) {
        if (!st.class0_nonempty) {
          st.class0_nonempty = true;
          st.i_min = st.i_max = i;
          st.j_min = st.j_max = j;
        } else {
          st.i_min = std::min(st.i_min, i);
          st.i_max = std::max(st.i_max, i);
          st.j_min = std::min(st.j_min, j);
          st.j_max = std::max(st.j_max, j);
        }
      }
    }
  }
  return st;
}

}  // namespace domains
}  // namespace posft
