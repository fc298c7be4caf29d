#include "posft/presets.hpp"

#include <map>
#include <stdexcept>

namespace posft {
namespace presets {

namespace {

// double precision so echoed configs round-trip exactly
constexpr double kPi = 3.141592653589793;

using domains::BasisKind;
using domains::Constraint;
using domains::ConstraintKind;
using domains::ScanConfig;

Constraint pos_P() { return {ConstraintKind::positivity_P, Rational(0)}; }
Constraint pos_Q() { return {ConstraintKind::positivity_Q, Rational(0)}; }
Constraint mono() { return {ConstraintKind::monotone_phi, Rational(0)}; }
Constraint convex(const Rational& rc2) { return {ConstraintKind::convex_psi, rc2}; }
Constraint third(const Rational& rt2) { return {ConstraintKind::third_deriv_negative, rt2}; }

ScanConfig base(BasisKind basis, std::vector<int> orders, std::vector<Constraint> cons, int res) {
  ScanConfig cfg;
  cfg.basis = basis;
  cfg.orders = std::move(orders);
  cfg.constraints = std::move(cons);
  cfg.alpha_res = cfg.beta_res = res;
  cfg.apply_default_ranges();
  return cfg;
}

ScanConfig gamma_cut(double gamma) {
  ScanConfig cfg = base(BasisKind::hermite, {0, 4, 8, 12}, {pos_P()}, 300);
  cfg.gamma = gamma;
  return cfg;
}

ScanConfig window(ScanConfig cfg, double alo, double ahi, double blo, double bhi) {
  cfg.alpha_lo = alo;
  cfg.alpha_hi = ahi;
  cfg.beta_lo = blo;
  cfg.beta_hi = bhi;
  return cfg;
}

struct Entry {
  ScanConfig config;
  const char* note;
};

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = [] {
    std::map<std::string, Entry> m;
    m["fig1"] = {base(BasisKind::hermite, {0, 4, 8}, {pos_P()}, 400),
                 "root-count map of the (H0,H4,H8) mixture over the half sphere"};
    m["fig2l"] = {gamma_cut(kPi / 1000000), "(H0,H4,H8,H12) cut at gamma = pi/10^6"};
    m["fig2r"] = {gamma_cut(kPi / 15), "(H0,H4,H8,H12) cut at gamma = pi/15"};
    m["fig3l"] = {gamma_cut(2 * kPi / 15), "(H0,H4,H8,H12) cut at gamma = 2pi/15"};
    m["fig3r"] = {gamma_cut(kPi / 6), "(H0,H4,H8,H12) cut at gamma = pi/6"};
    m["fig4l"] = {gamma_cut(kPi / 5), "(H0,H4,H8,H12) cut at gamma = pi/5 (no feasible cells)"};
    m["fig4r"] = {gamma_cut(7 * kPi / 30), "(H0,H4,H8,H12) cut at gamma = 7pi/30"};
    m["fig5l"] = {gamma_cut(4 * kPi / 15), "(H0,H4,H8,H12) cut at gamma = 4pi/15"};
    m["fig5r"] = {gamma_cut(3 * kPi / 10), "(H0,H4,H8,H12) cut at gamma = 3pi/10"};
    m["fig6l"] = {base(BasisKind::hermite, {0, 2, 4}, {pos_P()}, 400), "(H0,H2,H4): positivity of psi"};
    m["fig6r"] = {base(BasisKind::hermite, {0, 2, 4}, {pos_Q()}, 400), "(H0,H2,H4): positivity of phi"};
    m["fig7l"] = {base(BasisKind::hermite, {0, 2, 4}, {pos_P(), pos_Q()}, 400),
                  "(H0,H2,H4): joint positivity"};
    m["fig7r"] = {base(BasisKind::hermite, {0, 2, 4}, {pos_P(), pos_Q(), mono()}, 400),
                  "(H0,H2,H4): joint positivity plus monotone transform"};
    m["fig8l"] = {window(base(BasisKind::hermite, {0, 4, 8}, {pos_P()}, 400), -0.1, 0.8, 0.0, 0.7),
                  "zoom of the (H0,H4,H8) positivity triangle"};
    m["fig8r"] = {window(base(BasisKind::hermite, {0, 4, 8}, {convex(Rational(1))}, 400), -0.1, 0.8,
                         0.0, 0.7),
                  "(H0,H4,H8): convexity beyond rc = 1"};
    m["fig9l"] = {window(base(BasisKind::hermite, {0, 4, 8}, {convex(Rational(2, 3))}, 400), -0.05,
                         0.3, 0.0, 0.06),
                  "(H0,H4,H8): convexity beyond rc^2 = 2/3"};
    m["fig9r"] = {window(base(BasisKind::hermite, {0, 4, 8}, {convex(Rational(2, 5))}, 400), -0.05,
                         0.3, 0.0, 0.06),
                  "(H0,H4,H8): convexity beyond rc^2 = 0.4 (tiny surviving island)"};
    m["fig10l"] = {base(BasisKind::laguerre, {0, 1, 2}, {pos_Q()}, 400),
                   "radial (v0,v1,v2): positivity of the transform"};
    m["fig10r"] = {base(BasisKind::laguerre, {0, 1, 2}, {pos_P(), pos_Q()}, 400),
                   "radial (v0,v1,v2): joint positivity"};
    m["fig11l"] = {base(BasisKind::laguerre, {0, 2, 4}, {pos_P()}, 400),
                   "radial (v0,v2,v4): positivity"};
    m["fig11r"] = {base(BasisKind::laguerre, {0, 2, 4}, {third(Rational(7, 5))}, 400),
                   "radial (v0,v2,v4): negative third derivative beyond rt^2 = 1.4"};
    return m;
  }();
  return t;
}

}  // namespace

domains::ScanConfig map_preset(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown map preset '" + name + "'");
  return it->second.config;
}

std::vector<std::string> map_preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

const char* map_preset_note(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown map preset '" + name + "'");
  return it->second.note;
}

const std::vector<std::pair<int, const char*>>& golden_bracket_multipliers() {
  static const std::vector<std::pair<int, const char*>> m = {
      {0, "0.566053"}, {4, "0.0488517"}, {8, "0.0011871"}, {12, "0.0000164538"}};
  return m;
}

std::pair<long double, long double> mixed_parity_demo_angles() { return {0.15, 0.25}; }

}  // namespace presets
}  // namespace posft
