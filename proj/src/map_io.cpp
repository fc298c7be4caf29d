#include "posft/map_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace posft {
namespace domains {

namespace {

std::string fmt_angle(long double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(x));
  return buf;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream os(path, mode);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

}  // namespace

void write_pgm(const DomainMap& m, std::ostream& os) {
  const int w = m.config.alpha_res, h = m.config.beta_res;
  os << "P5\n" << w << " " << h << "\n255\n";
  const int legend = m.legend_max > 0 ? m.legend_max : 1;
  std::string row(static_cast<size_t>(w), '\0');
  for (int j = h - 1; j >= 0; --j) {
    for (int i = 0; i < w; ++i) {
      int cls = m.cell(i, j).class_code;
      if (cls > legend) cls = legend;
      int gray = 255 - (cls * 255 + legend / 2) / legend;
      row[static_cast<size_t>(i)] = static_cast<char>(static_cast<unsigned char>(gray));
    }
    os.write(row.data(), w);
  }
}

void write_pgm_file(const DomainMap& m, const std::string& path) {
  auto os = open_out(path, std::ios::out | std::ios::binary);
  write_pgm(m, os);
}

void write_csv(const DomainMap& m, std::ostream& os) {
  os << "alpha,beta,gamma,class";
  for (const Constraint& c : m.config.constraints) os << "," << constraint_name(c.kind) << "_count";
  os << ",boundary_uncertain\n";
  const std::string gamma_str = m.config.gamma ? fmt_angle(*m.config.gamma) : "";
  for (int j = 0; j < m.config.beta_res; ++j) {
    const std::string beta = fmt_angle(m.config.beta_center(j));
    for (int i = 0; i < m.config.alpha_res; ++i) {
      const CellRecord& cell = m.cell(i, j);
      os << fmt_angle(m.config.alpha_center(i)) << "," << beta << "," << gamma_str << ","
         << static_cast<int>(cell.class_code);
      for (const auto& r : cell.per_constraint) os << "," << r.root_count;
      os << "," << (cell.boundary_uncertain ? 1 : 0) << "\n";
    }
  }
}

void write_csv_file(const DomainMap& m, const std::string& path) {
  auto os = open_out(path);
  write_csv(m, os);
}

std::string scan_config_json(const ScanConfig& cfg) {
  nlohmann::json j;
  j["basis"] = basis_name(cfg.basis);
  j["orders"] = cfg.orders;
  nlohmann::json cons = nlohmann::json::array();
  for (const Constraint& c : cfg.constraints) {
    nlohmann::json jc;
    jc["kind"] = constraint_name(c.kind);
    if (c.kind == ConstraintKind::convex_psi || c.kind == ConstraintKind::third_deriv_negative)
      jc["threshold_sq"] = to_string(c.threshold_sq);
    cons.push_back(jc);
  }
  j["constraints"] = cons;
  j["alpha_range"] = {fmt_angle(cfg.alpha_lo), fmt_angle(cfg.alpha_hi)};
  j["beta_range"] = {fmt_angle(cfg.beta_lo), fmt_angle(cfg.beta_hi)};
  j["resolution"] = {cfg.alpha_res, cfg.beta_res};
  if (cfg.gamma) j["gamma"] = fmt_angle(*cfg.gamma);
  j["snap_bits"] = cfg.snap_bits;
  return j.dump(2);
}

void write_meta_json(const DomainMap& m, std::ostream& os, const std::string& extra_config) {
  nlohmann::json j;
  j["scan"] = nlohmann::json::parse(scan_config_json(m.config));
  if (!extra_config.empty()) j["run_config"] = nlohmann::json::parse(extra_config);
  j["legend"]["max_class"] = m.legend_max;
  j["legend"]["classes"] =
      "0 = all constraints satisfied (white); k >= 1 = max positive-root count among violated "
      "constraints (darker = more roots)";
  j["degenerate_slice"] = m.degenerate_slice;
  RegionStats st = region_stats(m);
  nlohmann::json cls;
  for (const auto& [k, v] : st.class_cells) cls[std::to_string(k)] = v;
  j["stats"]["class_cells"] = cls;
  j["stats"]["uncertain_cells"] = st.uncertain_cells;
  j["stats"]["class0_nonempty"] = st.class0_nonempty;
  if (st.class0_nonempty) {
    j["stats"]["class0_bbox_cells"] = {st.i_min, st.j_min, st.i_max, st.j_max};
    j["stats"]["class0_bbox_angles"] = {fmt_angle(m.config.alpha_center(st.i_min)),
                                        fmt_angle(m.config.beta_center(st.j_min)),
                                        fmt_angle(m.config.alpha_center(st.i_max)),
                                        fmt_angle(m.config.beta_center(st.j_max))};
  }
  os << j.dump(2) << "\n";
}

void write_meta_json_file(const DomainMap& m, const std::string& path, const std::string& extra_config) {
  auto os = open_out(path);
  write_meta_json(m, os, extra_config);
}

}  // namespace domains
}  // namespace posft
