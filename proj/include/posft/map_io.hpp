#pragma once

#include <iosfwd>
#include <string>

#include "posft/domains.hpp"

namespace posft {
namespace domains {

/// Binary PGM (P5). White = class 0, darker = higher class; image row 0 is
/// the highest beta row so maps read like conventional plots.
void write_pgm(const DomainMap& m, std::ostream& os);
void write_pgm_file(const DomainMap& m, const std::string& path);

/// CSV with one row per cell: alpha,beta,gamma,class,<constraint counts...>,
/// boundary_uncertain.
void write_csv(const DomainMap& m, std::ostream& os);
void write_csv_file(const DomainMap& m, const std::string& path);

/// JSON sidecar: resolved configuration echo, class legend, region stats.
/// extra_config, when nonempty, is embedded verbatim as the run configuration
/// echo (the CLI passes its resolved RunConfig here).
void write_meta_json(const DomainMap& m, std::ostream& os, const std::string& extra_config = "");
void write_meta_json_file(const DomainMap& m, const std::string& path,
                          const std::string& extra_config = "");

/// Canonical JSON form of a scan configuration (used for echo and rerun).
std::string scan_config_json(const ScanConfig& cfg);

}  // namespace domains
}  // namespace posft
