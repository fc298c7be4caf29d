#include <doctest.h>

#include <cmath>
#include <sstream>

#include "posft/domains.hpp"
#include "posft/map_io.hpp"
#include "posft/presets.hpp"
#include "posft/verify.hpp"

using namespace posft;
using namespace posft::domains;

namespace {
constexpr long double kPi = 3.14159265358979323846264338328L;
}

TEST_SUITE_BEGIN("domains");

TEST_CASE("sphere parametrization") {
  auto c = sphere_to_coeffs({{0.0L, 0.0L}}, {0, 4, 8});
  CHECK(c[0] == 1.0L);
  CHECK(c[1] == 0.0L);
  CHECK(c[2] == 0.0L);

  auto c2 = sphere_to_coeffs({{kPi / 2, 0.0L}}, {0, 4, 8});
  CHECK(std::abs(static_cast<double>(c2[0])) < 1e-18);
  CHECK(c2[1] == 1.0L);

  auto c3 = sphere_to_coeffs({{0.0L, 0.0L, kPi / 2}}, {0, 4, 8, 12});
  CHECK(c3[3] == 1.0L);
  CHECK(std::abs(static_cast<double>(c3[0])) < 1e-18);

  // unit norm after snapping, up to rounding
  auto cg = sphere_to_coeffs({{0.83L, 0.41L}}, {0, 2, 4});
  long double norm2 = cg[0] * cg[0] + cg[1] * cg[1] + cg[2] * cg[2];
  CHECK(std::abs(static_cast<double>(norm2 - 1)) < 1e-18);

  CHECK_THROWS_AS(sphere_to_coeffs({{4.0L, 0.1L}}, {0, 4, 8}), std::domain_error);
  CHECK_THROWS_AS(sphere_to_coeffs({{0.0L, -0.1L}}, {0, 4, 8}), std::domain_error);
  CHECK_THROWS_AS(sphere_to_coeffs({{0.0L}}, {0, 4, 8}), std::invalid_argument);
}

TEST_CASE("classify_point examples") {
  std::vector<Constraint> pos{{ConstraintKind::positivity_P, Rational(0)}};

  // inside the feasible triangle of the (0,4,8) mixture
  CellRecord inside = classify_point({{0.08L, 0.05L}}, BasisKind::hermite, {0, 4, 8}, pos);
  CHECK(inside.class_code == 0);
  CHECK(inside.per_constraint[0].root_count == 0);
  CHECK(inside.per_constraint[0].left_sign > 0);

  // pure H4: both rho-roots of the bracket are positive, P and Q infeasible
  std::vector<Constraint> both{{ConstraintKind::positivity_P, Rational(0)},
                               {ConstraintKind::positivity_Q, Rational(0)}};
  CellRecord pure_h4 = classify_point({{kPi / 2, kPi / 2}}, BasisKind::hermite, {0, 2, 4}, both);
  CHECK(pure_h4.class_code == 2);
  CHECK(pure_h4.per_constraint[0].root_count == 2);
  CHECK(pure_h4.per_constraint[1].root_count == 2);

  // pure Gaussian in the radial basis: constant polynomials, feasible
  CellRecord gauss = classify_point({{0.0L, 0.0L}}, BasisKind::laguerre, {0, 1, 2}, both);
  CHECK(gauss.class_code == 0);
  CHECK(gauss.degenerate_top);
}

TEST_CASE("classification agrees with the companion-matrix oracle on a coarse sweep") {
  std::vector<Constraint> pos{{ConstraintKind::positivity_P, Rational(0)}};
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      SpherePoint pt{{-kPi + (i + 0.5L) * (2 * kPi / 12), (j + 0.5L) * (kPi / 2 / 12)}};
      auto cps = constraint_polynomials(
          BasisKind::hermite,
          {{0, sphere_to_coeffs(pt, {0, 4, 8})[0]},
           {4, sphere_to_coeffs(pt, {0, 4, 8})[1]},
           {8, sphere_to_coeffs(pt, {0, 4, 8})[2]}},
          pos, 64);
      ConstraintResult res = evaluate_constraint(cps[0]);
      auto oracle = verify::oracle_root_count(cps[0].poly, 0.0);
      if (oracle.confident) CHECK(res.root_count == oracle.count);
    }
  }
}

TEST_CASE("scale invariance of classification") {
  std::vector<Constraint> cons{{ConstraintKind::positivity_P, Rational(0)},
                               {ConstraintKind::positivity_Q, Rational(0)},
                               {ConstraintKind::monotone_phi, Rational(0)}};
  std::map<int, long double> psi{{0, 0.91L}, {2, 0.2L}, {4, 0.15L}};
  std::map<int, long double> scaled;
  for (auto& [n, v] : psi) scaled[n] = 3.25L * v;
  CellRecord a = classify_coefficients(BasisKind::hermite, psi, cons);
  CellRecord b = classify_coefficients(BasisKind::hermite, scaled, cons);
  CHECK(a.class_code == b.class_code);
  for (size_t k = 0; k < a.per_constraint.size(); ++k) {
    CHECK(a.per_constraint[k].root_count == b.per_constraint[k].root_count);
    CHECK(a.per_constraint[k].left_sign == b.per_constraint[k].left_sign);
    CHECK(a.per_constraint[k].satisfied == b.per_constraint[k].satisfied);
  }
}

TEST_CASE("small scans: determinism, stats partition, parity symmetry") {
  ScanConfig cfg;
  cfg.basis = BasisKind::hermite;
  cfg.orders = {0, 2, 4};
  cfg.constraints = {{ConstraintKind::positivity_P, Rational(0)}};
  cfg.alpha_res = 48;
  cfg.beta_res = 24;
  cfg.apply_default_ranges();

  DomainMap m1 = scan_map(cfg);
  DomainMap m2 = scan_map(cfg);
  REQUIRE(m1.cells.size() == m2.cells.size());
  for (size_t i = 0; i < m1.cells.size(); ++i) {
    CHECK(m1.cells[i].class_code == m2.cells[i].class_code);
    CHECK(m1.cells[i].boundary_uncertain == m2.cells[i].boundary_uncertain);
  }

  RegionStats st = region_stats(m1);
  long total = 0;
  for (auto& [cls, cnt] : st.class_cells) total += cnt;
  CHECK(total == 48 * 24);
  CHECK(st.class0_nonempty);

  // positivity_P map at (alpha, beta) equals positivity_Q map at (-alpha, beta)
  ScanConfig qcfg = cfg;
  qcfg.constraints = {{ConstraintKind::positivity_Q, Rational(0)}};
  DomainMap mq = scan_map(qcfg);
  for (int j = 0; j < cfg.beta_res; ++j)
    for (int i = 0; i < cfg.alpha_res; ++i)
      CHECK(m1.cell(i, j).class_code == mq.cell(cfg.alpha_res - 1 - i, j).class_code);

  // byte-identical artifacts for identical configs
  std::ostringstream pgm1, pgm2, csv1, csv2;
  write_pgm(m1, pgm1);
  write_pgm(m2, pgm2);
  write_csv(m1, csv1);
  write_csv(m2, csv2);
  CHECK(pgm1.str() == pgm2.str());
  CHECK(csv1.str() == csv2.str());
  CHECK(pgm1.str().substr(0, 2) == "P5");
}

TEST_CASE("gamma cut scan carries the degenerate-slice flag when beta crosses 0") {
  ScanConfig cfg;
  cfg.basis = BasisKind::hermite;
  cfg.orders = {0, 4, 8, 12};
  cfg.constraints = {{ConstraintKind::positivity_P, Rational(0)}};
  cfg.alpha_res = 9;
  cfg.beta_res = 9;  // odd resolution puts a cell center exactly at beta = 0
  cfg.gamma = kPi / 15;
  cfg.apply_default_ranges();
  DomainMap m = scan_map(cfg);
  CHECK(m.legend_max == 6);
  RegionStats st = region_stats(m);
  long total = 0;
  for (auto& [cls, cnt] : st.class_cells) total += cnt;
  CHECK(total == 81);
  // beta = 0 kills psi8 but not the top order, so no degeneracy flag here;
  // a gamma = 0 cut is the degenerate slice
  CHECK_FALSE(m.degenerate_slice);
  ScanConfig flat = cfg;
  flat.gamma = 0.0L;
  CHECK(scan_map(flat).degenerate_slice);
}

TEST_CASE("boundary flags fire on exact border cases") {
  std::vector<Constraint> pos{{ConstraintKind::positivity_P, Rational(0)}};
  // psi = (1, 2, 2) over the radial cores gives P = (rho - 1)^2 exactly:
  // a tangency border point
  CellRecord tangent = classify_coefficients(BasisKind::laguerre, {{0, 1.0L}, {1, 2.0L}, {2, 2.0L}}, pos);
  CHECK(tangent.boundary_uncertain);
  CHECK(tangent.per_constraint[0].tangency_reduced);
  CHECK(tangent.per_constraint[0].root_count == 1);  // distinct roots after reduction
  CHECK_FALSE(tangent.per_constraint[0].satisfied);

  // psi = (1, 1) gives P = rho: a root sitting exactly on the interval edge
  CellRecord edge = classify_coefficients(BasisKind::laguerre, {{0, 1.0L}, {1, 1.0L}}, pos);
  CHECK(edge.boundary_uncertain);
  CHECK(edge.per_constraint[0].left_sign == 0);
  CHECK_FALSE(edge.per_constraint[0].satisfied);
}

TEST_CASE("config validation") {
  ScanConfig bad;
  bad.orders = {0, 4, 8, 12};
  bad.constraints = {{ConstraintKind::positivity_P, Rational(0)}};
  bad.apply_default_ranges();
  CHECK_THROWS_AS(scan_map(bad), std::invalid_argument);  // missing gamma
  ScanConfig tiny;
  tiny.orders = {0, 4, 8};
  tiny.constraints = {{ConstraintKind::positivity_P, Rational(0)}};
  tiny.alpha_res = 1;
  tiny.apply_default_ranges();
  CHECK_THROWS_AS(scan_map(tiny), std::invalid_argument);
  CHECK_THROWS_AS(constraint_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("map presets are wired") {
  auto names = presets::map_preset_names();
  CHECK(names.size() == 21);
  auto fig1 = presets::map_preset("fig1");
  CHECK(fig1.orders == std::vector<int>{0, 4, 8});
  CHECK(fig1.alpha_res == 400);
  CHECK_THROWS_AS(presets::map_preset("fig99"), std::invalid_argument);
  // stored demo point really is feasible for the fig7l constraint set
  auto [a, b] = presets::mixed_parity_demo_angles();
  auto cfg = presets::map_preset("fig7l");
  CellRecord demo = classify_point({{a, b}}, cfg.basis, cfg.orders, cfg.constraints);
  CHECK(demo.class_code == 0);
}

TEST_SUITE_END();
