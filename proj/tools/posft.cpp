// posft: constructive positivity maps for Fourier pairs on oscillator bases.
// Subcommands: basis, classify, map, verify, example.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posft/domains.hpp"
#include "posft/hermite.hpp"
#include "posft/laguerre.hpp"
#include "posft/map_io.hpp"
#include "posft/presets.hpp"
#include "posft/sturm.hpp"
#include "posft/verify.hpp"

using nlohmann::json;
using namespace posft;

namespace {

constexpr int kExitCheckFailed = 2;
constexpr int kExitIoError = 3;

constexpr long double kPiQuarterInv = 0.7511255444649424828587L;

std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::runtime_error("empty order list");
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

// Pull a key from the --config JSON document when the flag was not given.
template <typename T>
void fill_from_config(const json& cfg, const char* key, T& value, bool flag_given) {
  if (flag_given || !cfg.contains(key)) return;
  value = cfg.at(key).get<T>();
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config file: " + path);
  json j;
  is >> j;
  return j;
}

std::vector<domains::Constraint> build_constraints(const std::vector<std::string>& names,
                                                   const std::string& rc2, const std::string& rt2) {
  std::vector<domains::Constraint> out;
  for (const std::string& n : names) {
    domains::Constraint c;
    c.kind = domains::constraint_from_name(n);
    if (c.kind == domains::ConstraintKind::convex_psi) c.threshold_sq = rational_from_decimal(rc2);
    if (c.kind == domains::ConstraintKind::third_deriv_negative)
      c.threshold_sq = rational_from_decimal(rt2);
    out.push_back(c);
  }
  return out;
}

json constraints_json(const std::vector<domains::Constraint>& cons) {
  json arr = json::array();
  for (const auto& c : cons) {
    json jc;
    jc["kind"] = domains::constraint_name(c.kind);
    if (c.kind == domains::ConstraintKind::convex_psi ||
        c.kind == domains::ConstraintKind::third_deriv_negative)
      jc["threshold_sq"] = to_string(c.threshold_sq);
    arr.push_back(jc);
  }
  return arr;
}

std::string radicand_display(const Radicand& rad) {
  // Present H = core/sqrt(q): for q >= 1 as "/(o*sqrt(i))", for q < 1 as
  // "*sqrt(1/q)" when integral (e.g. sqrt(2) r).
  const Rational& q = rad.value();
  if (q == 1) return "";
  if (q > 1 && q.get_den() == 1) {
    auto [o, i] = Radicand::split_square(q.get_num());
    std::string root = (i == 1) ? "" : "sqrt(" + to_string(Rational(i)) + ")";
    std::string outer = (o == 1) ? "" : to_string(Rational(o));
    if (root.empty()) return "/" + outer;
    if (outer.empty()) return "/" + root;
    return "/(" + outer + "*" + root + ")";
  }
  Rational inv = Rational(1) / q;
  if (inv.get_den() == 1) {
    auto [o, i] = Radicand::split_square(inv.get_num());
    std::string s = "*";
    if (o != 1) s += to_string(Rational(o)) + "*";
    if (i != 1) s += "sqrt(" + to_string(Rational(i)) + ")";
    if (s.back() == '*') s.pop_back();
    return s;
  }
  return "/sqrt(" + to_string(q) + ")";
}

int write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "{\"error\":\"io\",\"detail\":\"cannot write " << out_path << "\"}\n";
    return kExitIoError;
  }
  f << text;
  return 0;
}

// ------------------------------------------------------------------ basis --

int cmd_basis(const std::string& basis, int n_max, const std::string& format,
              const std::string& out_path) {
  if (n_max < 0 || n_max > 32) {
    std::cerr << "{\"error\":\"usage\",\"detail\":\"--nmax must be in [0, 32]\"}\n";
    return 1;
  }
  std::ostringstream os;
  const bool csv = format == "csv";
  if (csv) os << "n,core,norm_radicand\n";
  for (int n = 0; n <= n_max; ++n) {
    if (basis == "hermite") {
      const auto& e = hermite::hermite_normalized(n);
      Polynomial core = e.reduced_core();
      Radicand norm = e.reduced_norm();
      if (csv)
        os << n << ",\"" << core.str() << "\"," << to_string(norm.value()) << "\n";
      else
        os << "H" << n << " = (" << core.str() << ")" << radicand_display(norm) << "\n";
    } else {
      const auto& e = laguerre::laguerre_state(n);
      if (csv)
        os << n << ",\"" << e.core.str() << "\",1\n";
      else
        os << "v" << n << " = sqrt(2) exp(-r^2/2) [" << e.core.str() << "] at rho = r^2\n";
    }
  }
  return write_or_print(os.str(), out_path);
}

// --------------------------------------------------------------- classify --

struct ClassifyArgs {
  std::string preset;
  std::string basis = "hermite";
  std::vector<int> orders;
  std::vector<std::string> constraint_names;
  std::string rc2 = "1", rt2 = "1.4";
  std::vector<double> angles;
  std::vector<std::string> coeffs;
  std::string coeff_form = "basis";  // or "bracket"
  unsigned snap_bits = 64;
  std::string out_path;
};

int classify_brackets(const std::map<int, Rational>& mult,
                      const std::vector<domains::Constraint>& cons, domains::CellRecord& cell) {
  std::vector<domains::ConstraintPolynomial> cps;
  for (const auto& c : cons) {
    domains::ConstraintPolynomial cp;
    cp.constraint = c;
    cp.left_x = Rational(0);
    switch (c.kind) {
      case domains::ConstraintKind::positivity_P:
        cp.poly = hermite::assemble_from_brackets(mult, false);
        cp.want_positive = true;
        break;
      case domains::ConstraintKind::positivity_Q:
        cp.poly = hermite::assemble_from_brackets(mult, true).with_var(Var::sigma);
        cp.want_positive = true;
        break;
      case domains::ConstraintKind::monotone_phi:
        cp.poly = hermite::sigma_derivative(
            hermite::assemble_from_brackets(mult, true).with_var(Var::sigma));
        cp.want_positive = false;
        break;
      default:
        std::cerr << "{\"error\":\"usage\",\"detail\":\"derivative constraints need basis-form "
                     "coefficients\"}\n";
        return 1;
    }
    cps.push_back(std::move(cp));
  }
  cell = domains::classify_cell(cps);
  return 0;
}

int cmd_classify(ClassifyArgs a) {
  json echo;
  echo["command"] = "classify";
  domains::CellRecord cell;
  std::vector<domains::Constraint> cons;

  if (!a.preset.empty()) {
    if (a.preset != "golden") {
      std::cerr << "{\"error\":\"usage\",\"detail\":\"unknown classify preset '" << a.preset
                << "'\"}\n";
      return 1;
    }
    std::map<int, Rational> mult;
    json jc = json::array();
    for (const auto& [n, text] : presets::golden_bracket_multipliers()) {
      mult[n] = rational_from_decimal(text);
      jc.push_back({{"order", n}, {"bracket_multiplier", text}});
    }
    cons = {{domains::ConstraintKind::positivity_P, Rational(0)}};
    if (int rc = classify_brackets(mult, cons, cell); rc != 0) return rc;
    echo["preset"] = "golden";
    echo["basis"] = "hermite";
    echo["coeff_form"] = "bracket";
    echo["coeffs"] = jc;
  } else {
    if (a.constraint_names.empty()) a.constraint_names = {"positivity_P", "positivity_Q"};
    cons = build_constraints(a.constraint_names, a.rc2, a.rt2);
    domains::BasisKind basis =
        a.basis == "laguerre" ? domains::BasisKind::laguerre : domains::BasisKind::hermite;
    if (a.orders.empty() && a.angles.empty() && a.coeffs.empty()) {
      std::cerr << "{\"error\":\"usage\",\"detail\":\"need --orders with --angles or --coeffs\"}\n";
      return 1;
    }
    echo["basis"] = a.basis;
    echo["orders"] = a.orders;
    echo["snap_bits"] = a.snap_bits;
    if (!a.angles.empty()) {
      domains::SpherePoint pt;
      for (double x : a.angles) pt.angles.push_back(x);
      cell = domains::classify_point(pt, basis, a.orders, cons, a.snap_bits);
      json ja = json::array();
      for (double x : a.angles) ja.push_back(fmt_real(x));
      echo["angles"] = ja;
    } else if (!a.coeffs.empty()) {
      if (a.coeffs.size() != a.orders.size()) {
        std::cerr << "{\"error\":\"usage\",\"detail\":\"coefficient count must match orders\"}\n";
        return 1;
      }
      echo["coeffs"] = a.coeffs;
      echo["coeff_form"] = a.coeff_form;
      if (a.coeff_form == "bracket") {
        if (basis != domains::BasisKind::hermite) {
          std::cerr << "{\"error\":\"usage\",\"detail\":\"bracket form applies to the hermite "
                       "basis\"}\n";
          return 1;
        }
        std::map<int, Rational> mult;
        for (size_t k = 0; k < a.orders.size(); ++k)
          mult[a.orders[k]] = rational_from_decimal(a.coeffs[k]);
        if (int rc = classify_brackets(mult, cons, cell); rc != 0) return rc;
      } else {
        std::map<int, long double> psi;
        for (size_t k = 0; k < a.orders.size(); ++k)
          psi[a.orders[k]] = to_long_double(rational_from_decimal(a.coeffs[k]));
        cell = domains::classify_coefficients(basis, psi, cons, a.snap_bits);
      }
    } else {
      std::cerr << "{\"error\":\"usage\",\"detail\":\"need --angles or --coeffs\"}\n";
      return 1;
    }
  }

  json out;
  out["config"] = echo;
  out["config"]["constraints"] = constraints_json(cons);
  out["class"] = cell.class_code;
  out["feasible"] = cell.class_code == 0;
  out["boundary_uncertain"] = cell.boundary_uncertain;
  out["degenerate_top"] = cell.degenerate_top;
  json per = json::array();
  for (size_t k = 0; k < cell.per_constraint.size(); ++k) {
    const auto& r = cell.per_constraint[k];
    per.push_back({{"kind", domains::constraint_name(cons[k].kind)},
                   {"root_count", r.root_count},
                   {"left_sign", r.left_sign},
                   {"satisfied", r.satisfied},
                   {"boundary_uncertain", r.boundary_uncertain},
                   {"tangency_reduced", r.tangency_reduced}});
  }
  out["per_constraint"] = per;
  return write_or_print(out.dump(2) + "\n", a.out_path);
}

// -------------------------------------------------------------------- map --

struct MapArgs {
  std::string preset;
  std::string basis = "hermite";
  std::vector<int> orders;
  std::vector<std::string> constraint_names;
  std::vector<domains::Constraint> config_constraints;  // structured config form
  std::string rc2 = "1", rt2 = "1.4";
  std::vector<double> alpha_range, beta_range;
  int res_a = 0, res_b = 0;
  std::optional<double> gamma;
  unsigned snap_bits = 64;
  int threads = 0;
  std::string out_dir = ".";
  std::string name;
  std::vector<std::string> formats = {"pgm", "csv", "json"};
};

int cmd_map(const MapArgs& a) {
  domains::ScanConfig cfg;
  if (!a.preset.empty()) {
    cfg = presets::map_preset(a.preset);
  } else {
    cfg.basis = a.basis == "laguerre" ? domains::BasisKind::laguerre : domains::BasisKind::hermite;
    cfg.orders = a.orders;
    if (!a.config_constraints.empty())
      cfg.constraints = a.config_constraints;
    else
      cfg.constraints = build_constraints(
          a.constraint_names.empty() ? std::vector<std::string>{"positivity_P"} : a.constraint_names,
          a.rc2, a.rt2);
    cfg.apply_default_ranges();
  }
  if (a.alpha_range.size() == 2) {
    cfg.alpha_lo = a.alpha_range[0];
    cfg.alpha_hi = a.alpha_range[1];
  }
  if (a.beta_range.size() == 2) {
    cfg.beta_lo = a.beta_range[0];
    cfg.beta_hi = a.beta_range[1];
  }
  if (a.res_a > 0) cfg.alpha_res = a.res_a;
  if (a.res_b > 0) cfg.beta_res = a.res_b;
  if (a.gamma) cfg.gamma = *a.gamma;
  cfg.snap_bits = a.snap_bits;
  cfg.threads = a.threads;

  domains::DomainMap map = domains::scan_map(cfg);

  json echo;
  echo["command"] = "map";
  if (!a.preset.empty()) echo["preset"] = a.preset;
  echo["basis"] = domains::basis_name(cfg.basis);
  json orders = json::array();
  for (int n : cfg.orders) orders.push_back(n);
  echo["orders"] = orders;
  echo["constraints"] = constraints_json(cfg.constraints);
  echo["alpha_range"] = {fmt_real(static_cast<double>(cfg.alpha_lo)),
                         fmt_real(static_cast<double>(cfg.alpha_hi))};
  echo["beta_range"] = {fmt_real(static_cast<double>(cfg.beta_lo)),
                        fmt_real(static_cast<double>(cfg.beta_hi))};
  echo["resolution"] = {cfg.alpha_res, cfg.beta_res};
  if (cfg.gamma) echo["gamma"] = fmt_real(static_cast<double>(*cfg.gamma));
  echo["snap_bits"] = cfg.snap_bits;

  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  std::string base = a.name.empty() ? (a.preset.empty() ? "map" : a.preset) : a.name;
  std::string stem = a.out_dir + "/" + base;
  try {
    for (const std::string& f : a.formats) {
      if (f == "pgm")
        domains::write_pgm_file(map, stem + ".pgm");
      else if (f == "csv")
        domains::write_csv_file(map, stem + ".csv");
      else if (f == "json")
        domains::write_meta_json_file(map, stem + ".meta.json", echo.dump());
      else
        throw std::runtime_error("unknown format '" + f + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"io\",\"detail\":\"" << e.what() << "\"}\n";
    return kExitIoError;
  }
  domains::RegionStats st = domains::region_stats(map);
  std::cout << "map " << base << ": " << cfg.alpha_res << "x" << cfg.beta_res
            << " cells, class0=" << (st.class_cells.count(0) ? st.class_cells[0] : 0)
            << ", uncertain=" << st.uncertain_cells << ", legend_max=" << map.legend_max << "\n";
  return 0;
}

// ----------------------------------------------------------------- verify --

void suite_transform_positivity(std::vector<verify::OracleReport>& reports) {
  // sample feasible points of the joint positivity map of the (0,2,4)
  // mixture; both the state and its numeric transform must stay nonnegative
  domains::ScanConfig cfg = presets::map_preset("fig7l");
  cfg.alpha_res = cfg.beta_res = 120;
  domains::DomainMap map = domains::scan_map(cfg);
  std::vector<std::pair<int, int>> feasible;
  for (int j = 0; j < cfg.beta_res; ++j)
    for (int i = 0; i < cfg.alpha_res; ++i)
      if (map.cell(i, j).class_code == 0) feasible.emplace_back(i, j);
  std::mt19937_64 rng(424242);
  std::shuffle(feasible.begin(), feasible.end(), rng);
  if (feasible.size() > 100) feasible.resize(100);
  std::vector<double> s_grid;
  for (int i = 0; i <= 80; ++i) s_grid.push_back(i * 0.1);
  double worst = 0;
  for (auto [i, j] : feasible) {
    const long double al = cfg.alpha_center(i), be = cfg.beta_center(j);
    hermite::CoefficientVector c({{0, cosl(al) * cosl(be)}, {2, sinl(al) * cosl(be)}, {4, sinl(be)}});
    for (double s : s_grid) worst = std::min(worst, static_cast<double>(hermite::eval_state(c, s)));
    for (double v : verify::numeric_ft(c, s_grid)) worst = std::min(worst, v);
  }
  verify::OracleReport rep;
  rep.name = "transform_positivity_class0_sample";
  rep.max_error = -worst;
  rep.threshold = 1e-9;
  rep.pass = -worst <= rep.threshold;
  rep.detail = std::to_string(feasible.size()) + " feasible points sampled";
  reports.push_back(rep);
}

int cmd_verify(const std::string& suite, int samples, const std::string& out_path) {
  std::vector<verify::OracleReport> reports;
  auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
  if (want("orthonormality"))
    for (auto& r : verify::suite_orthonormality()) reports.push_back(r);
  if (want("ft"))
    for (auto& r : verify::suite_ft_eigenproperty()) reports.push_back(r);
  if (want("hankel"))
    for (auto& r : verify::suite_hankel_eigenproperty()) reports.push_back(r);
  if (want("sturm")) reports.push_back(verify::suite_sturm_oracle_agreement(samples, 20250810));
  if (want("gram"))
    for (auto& r : verify::suite_gram()) reports.push_back(r);
  if (want("positivity")) suite_transform_positivity(reports);

  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : reports) {
    os << r.json_line() << "\n";
    all_pass = all_pass && r.pass;
  }
  if (int rc = write_or_print(os.str(), out_path); rc != 0) return rc;
  if (!all_pass) {
    std::cerr << "{\"error\":\"verification_failed\"}\n";
    return kExitCheckFailed;
  }
  return 0;
}

// ---------------------------------------------------------------- example --

int cmd_example(const std::string& name, double r_max, int points, const std::string& out_path) {
  std::ostringstream os;
  json echo;
  echo["command"] = "example";
  echo["name"] = name;
  echo["rmax"] = r_max;
  echo["points"] = points;
  if (name == "gaussian") {
    os << "r,psi\n";
    for (int i = 0; i < points; ++i) {
      long double r = static_cast<long double>(r_max) * i / (points - 1);
      os << fmt_real(static_cast<double>(r)) << ","
         << fmt_real(static_cast<double>(kPiQuarterInv * expl(-r * r / 2))) << "\n";
    }
  } else if (name == "footnote-oscillating") {
    std::map<int, Rational> mult;
    for (const auto& [n, text] : presets::golden_bracket_multipliers())
      mult[n] = rational_from_decimal(text);
    Polynomial bracket = hermite::assemble_from_brackets(mult, false);
    os << "r,psi\n";
    for (int i = 0; i < points; ++i) {
      long double r = static_cast<long double>(r_max) * i / (points - 1);
      long double psi = expl(-r * r / 2) * bracket.eval(r * r);
      os << fmt_real(static_cast<double>(r)) << "," << fmt_real(static_cast<double>(psi)) << "\n";
    }
  } else if (name == "mixed-parity-demo") {
    auto [al, be] = presets::mixed_parity_demo_angles();
    hermite::CoefficientVector c({{0, cosl(al) * cosl(be)}, {2, sinl(al) * cosl(be)}, {4, sinl(be)}});
    os << "r,psi,phi\n";
    for (int i = 0; i < points; ++i) {
      long double r = static_cast<long double>(r_max) * i / (points - 1);
      os << fmt_real(static_cast<double>(r)) << ","
         << fmt_real(static_cast<double>(hermite::eval_state(c, r))) << ","
         << fmt_real(static_cast<double>(hermite::eval_transform(c, r))) << "\n";
    }
  } else {
    std::cerr << "{\"error\":\"usage\",\"detail\":\"unknown example '" << name << "'\"}\n";
    return 1;
  }
  if (int rc = write_or_print(os.str(), out_path); rc != 0) return rc;
  if (!out_path.empty()) {
    std::ofstream meta(out_path + ".meta.json");
    if (meta) meta << echo.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive positivity maps for Fourier pairs on oscillator bases"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; explicit flags override its keys");

  auto* basis_cmd = app.add_subcommand("basis", "print the normalized basis polynomials");
  std::string b_basis = "hermite", b_format = "text", b_out;
  int b_nmax = 8;
  basis_cmd->add_option("--basis", b_basis)->check(CLI::IsMember({"hermite", "laguerre"}));
  basis_cmd->add_option("--nmax", b_nmax);
  basis_cmd->add_option("--format", b_format)->check(CLI::IsMember({"text", "csv"}));
  basis_cmd->add_option("--out", b_out);

  auto* classify_cmd = app.add_subcommand("classify", "classify one coefficient point");
  ClassifyArgs ca;
  std::string c_orders, c_constraints, c_angles, c_coeffs;
  classify_cmd->add_option("--preset", ca.preset, "'golden' = stored oscillating solution");
  classify_cmd->add_option("--basis", ca.basis)->check(CLI::IsMember({"hermite", "laguerre"}));
  classify_cmd->add_option("--orders", c_orders, "comma list, e.g. 0,4,8");
  classify_cmd->add_option("--constraints", c_constraints, "comma list of constraint names");
  classify_cmd->add_option("--rc2", ca.rc2, "rc^2 for convex_psi");
  classify_cmd->add_option("--rt2", ca.rt2, "rt^2 for third_deriv_negative");
  classify_cmd->add_option("--angles", c_angles, "sphere angles alpha,beta[,gamma]");
  classify_cmd->add_option("--coeffs", c_coeffs, "explicit coefficients (decimal strings)");
  classify_cmd->add_option("--coeff-form", ca.coeff_form)->check(CLI::IsMember({"basis", "bracket"}));
  classify_cmd->add_option("--snap-bits", ca.snap_bits);
  classify_cmd->add_option("--out", ca.out_path);

  auto* map_cmd = app.add_subcommand("map", "raster scan a coefficient sphere");
  MapArgs ma;
  std::string m_orders, m_constraints, m_res, m_formats, m_arange, m_brange;
  double m_gamma = std::numeric_limits<double>::quiet_NaN();
  map_cmd->add_option("--preset", ma.preset, "one of the bundled fig presets");
  map_cmd->add_option("--basis", ma.basis)->check(CLI::IsMember({"hermite", "laguerre"}));
  map_cmd->add_option("--orders", m_orders);
  map_cmd->add_option("--constraints", m_constraints);
  map_cmd->add_option("--rc2", ma.rc2);
  map_cmd->add_option("--rt2", ma.rt2);
  map_cmd->add_option("--alpha-range", m_arange, "lo:hi");
  map_cmd->add_option("--beta-range", m_brange, "lo:hi");
  map_cmd->add_option("--res", m_res, "NxM cells");
  map_cmd->add_option("--gamma", m_gamma, "fixed gamma for 4-order scans");
  map_cmd->add_option("--snap-bits", ma.snap_bits);
  map_cmd->add_option("--threads", ma.threads);
  map_cmd->add_option("--out-dir", ma.out_dir);
  map_cmd->add_option("--name", ma.name, "artifact base name (default: preset name)");
  map_cmd->add_option("--format", m_formats, "comma list from pgm,csv,json");

  auto* verify_cmd = app.add_subcommand("verify", "run the numeric oracle suites");
  std::string v_suite = "all", v_out;
  int v_samples = 10000;
  verify_cmd->add_option("--suite", v_suite)
      ->check(CLI::IsMember({"all", "orthonormality", "ft", "hankel", "sturm", "gram", "positivity"}));
  verify_cmd->add_option("--samples", v_samples, "sample count for the sturm suite");
  verify_cmd->add_option("--out", v_out, "write the JSONL report here");

  auto* example_cmd = app.add_subcommand("example", "sample a stored example curve");
  std::string e_name = "gaussian", e_out;
  double e_rmax = 10.0;
  int e_points = 2001;
  example_cmd->add_option("--name", e_name,
                          "gaussian | footnote-oscillating | mixed-parity-demo");
  example_cmd->add_option("--rmax", e_rmax);
  example_cmd->add_option("--points", e_points);
  example_cmd->add_option("--out", e_out);

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config(config_path);

    if (basis_cmd->parsed()) {
      fill_from_config(cfg, "basis", b_basis, basis_cmd->count("--basis") > 0);
      fill_from_config(cfg, "nmax", b_nmax, basis_cmd->count("--nmax") > 0);
      fill_from_config(cfg, "format", b_format, basis_cmd->count("--format") > 0);
      fill_from_config(cfg, "out", b_out, basis_cmd->count("--out") > 0);
      return cmd_basis(b_basis, b_nmax, b_format, b_out);
    }

    if (classify_cmd->parsed()) {
      fill_from_config(cfg, "preset", ca.preset, classify_cmd->count("--preset") > 0);
      fill_from_config(cfg, "basis", ca.basis, classify_cmd->count("--basis") > 0);
      fill_from_config(cfg, "orders", c_orders, classify_cmd->count("--orders") > 0);
      fill_from_config(cfg, "constraints", c_constraints, classify_cmd->count("--constraints") > 0);
      fill_from_config(cfg, "rc2", ca.rc2, classify_cmd->count("--rc2") > 0);
      fill_from_config(cfg, "rt2", ca.rt2, classify_cmd->count("--rt2") > 0);
      fill_from_config(cfg, "angles", c_angles, classify_cmd->count("--angles") > 0);
      fill_from_config(cfg, "coeffs", c_coeffs, classify_cmd->count("--coeffs") > 0);
      fill_from_config(cfg, "coeff_form", ca.coeff_form, classify_cmd->count("--coeff-form") > 0);
      fill_from_config(cfg, "snap_bits", ca.snap_bits, classify_cmd->count("--snap-bits") > 0);
      if (!c_orders.empty()) ca.orders = parse_orders(c_orders);
      if (!c_constraints.empty()) ca.constraint_names = split_commas(c_constraints);
      if (!c_angles.empty())
        for (const std::string& tok : split_commas(c_angles)) ca.angles.push_back(std::stod(tok));
      if (!c_coeffs.empty()) ca.coeffs = split_commas(c_coeffs);
      return cmd_classify(std::move(ca));
    }

    if (map_cmd->parsed()) {
      // config values may come in two shapes: the flat flag strings of a
      // hand-written file, or the structured echo embedded in map metadata
      fill_from_config(cfg, "preset", ma.preset, map_cmd->count("--preset") > 0);
      fill_from_config(cfg, "basis", ma.basis, map_cmd->count("--basis") > 0);
      fill_from_config(cfg, "rc2", ma.rc2, map_cmd->count("--rc2") > 0);
      fill_from_config(cfg, "rt2", ma.rt2, map_cmd->count("--rt2") > 0);
      fill_from_config(cfg, "snap_bits", ma.snap_bits, map_cmd->count("--snap-bits") > 0);
      fill_from_config(cfg, "threads", ma.threads, map_cmd->count("--threads") > 0);
      fill_from_config(cfg, "out_dir", ma.out_dir, map_cmd->count("--out-dir") > 0);
      fill_from_config(cfg, "name", ma.name, map_cmd->count("--name") > 0);
      fill_from_config(cfg, "format", m_formats, map_cmd->count("--format") > 0);
      auto as_double = [](const json& v) {
        return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
      };
      if (map_cmd->count("--orders") == 0 && cfg.contains("orders")) {
        if (cfg["orders"].is_string())
          m_orders = cfg["orders"].get<std::string>();
        else
          for (const auto& v : cfg["orders"]) ma.orders.push_back(v.get<int>());
      }
      if (map_cmd->count("--constraints") == 0 && cfg.contains("constraints")) {
        if (cfg["constraints"].is_string()) {
          m_constraints = cfg["constraints"].get<std::string>();
        } else {
          for (const auto& v : cfg["constraints"]) {
            domains::Constraint c;
            c.kind = domains::constraint_from_name(v.at("kind").get<std::string>());
            if (v.contains("threshold_sq"))
              c.threshold_sq = rational_from_decimal(v["threshold_sq"].get<std::string>());
            else if (c.kind == domains::ConstraintKind::convex_psi)
              c.threshold_sq = rational_from_decimal(ma.rc2);
            else if (c.kind == domains::ConstraintKind::third_deriv_negative)
              c.threshold_sq = rational_from_decimal(ma.rt2);
            ma.config_constraints.push_back(c);
          }
        }
      }
      for (auto [key, target] : {std::pair{"alpha_range", &ma.alpha_range},
                                 std::pair{"beta_range", &ma.beta_range}}) {
        std::string flag = std::string("--") + (key[0] == 'a' ? "alpha-range" : "beta-range");
        if (map_cmd->count(flag) == 0 && cfg.contains(key)) {
          if (cfg[key].is_string()) {
            (key[0] == 'a' ? m_arange : m_brange) = cfg[key].get<std::string>();
          } else {
            for (const auto& v : cfg[key]) target->push_back(as_double(v));
          }
        }
      }
      if (map_cmd->count("--res") == 0 && cfg.contains("resolution")) {
        ma.res_a = cfg["resolution"][0].get<int>();
        ma.res_b = cfg["resolution"][1].get<int>();
      }
      fill_from_config(cfg, "res", m_res, map_cmd->count("--res") > 0 || ma.res_a > 0);
      if (map_cmd->count("--gamma") == 0 && cfg.contains("gamma")) m_gamma = as_double(cfg["gamma"]);

      if (!m_orders.empty()) ma.orders = parse_orders(m_orders);
      if (!m_constraints.empty()) ma.constraint_names = split_commas(m_constraints);
      if (!std::isnan(m_gamma)) ma.gamma = m_gamma;
      auto parse_range = [](const std::string& text) -> std::vector<double> {
        auto sep = text.find(':');
        if (sep == std::string::npos) throw std::runtime_error("range must be lo:hi");
        return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
      };
      if (!m_arange.empty()) ma.alpha_range = parse_range(m_arange);
      if (!m_brange.empty()) ma.beta_range = parse_range(m_brange);
      if (!m_res.empty()) {
        auto sep = m_res.find('x');
        if (sep == std::string::npos) throw std::runtime_error("--res must be NxM");
        ma.res_a = std::stoi(m_res.substr(0, sep));
        ma.res_b = std::stoi(m_res.substr(sep + 1));
      }
      if (!m_formats.empty()) ma.formats = split_commas(m_formats);
      return cmd_map(ma);
    }

    if (verify_cmd->parsed()) {
      fill_from_config(cfg, "suite", v_suite, verify_cmd->count("--suite") > 0);
      fill_from_config(cfg, "samples", v_samples, verify_cmd->count("--samples") > 0);
      fill_from_config(cfg, "out", v_out, verify_cmd->count("--out") > 0);
      return cmd_verify(v_suite, v_samples, v_out);
    }

    if (example_cmd->parsed()) {
      fill_from_config(cfg, "name", e_name, example_cmd->count("--name") > 0);
      fill_from_config(cfg, "rmax", e_rmax, example_cmd->count("--rmax") > 0);
      fill_from_config(cfg, "points", e_points, example_cmd->count("--points") > 0);
      fill_from_config(cfg, "out", e_out, example_cmd->count("--out") > 0);
      if (e_points < 2) throw std::runtime_error("--points must be at least 2");
      return cmd_example(e_name, e_rmax, e_points, e_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"runtime\",\"detail\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
