#pragma once

// Run configuration files, experiment presets and manifests.
//
// Grammar: one `key = value` per line, UTF-8, `#` starts a comment, blank
// lines ignored, keys case-sensitive, later keys override earlier ones.
//
//   name                   label echoed into outputs            (default: custom)
//   preset                 start from a preset, then apply the remaining keys
//   model                  flat-classical | flat-relativistic | geom-relativistic | geom-pressureless
//   eps, mass, r_max       inverse light speed, m, R            (1, 0.05, 1)
//   scheme                 LF1 | NT2 | WB2, or a comma list      (WB2)
//   cells | dr             cell count or cell width (R - 2m must be a multiple)
//   cfl                    Courant number (default 0.9 for LF1, 0.45 otherwise)
//   t_end                  final time
//   output_interval        snapshot spacing in time (0: only t = 0 and t_end)
//   output_every_steps     snapshot every N steps (0: off)
//   max_steps              step budget
//   boundary               no-influx (the only boundary treatment)
//   reference              unperturbed | initial
//   initial                steady | shock | perturbed | explicit
//   initial.value_at_R, initial.left_value_at_R, initial.right_value_at_R   (physical velocity at R)
//   initial.r_shock, initial.bump_center, initial.bump_width, initial.bump_amplitude
//   initial.values         comma-separated cell values (explicit)

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cburgers/solver.hpp"

namespace cburgers {

/// One named job: one RunConfig per scheme, identical otherwise.
struct Job {
    std::string name = "custom";
    std::vector<RunConfig> runs;
};

struct Overrides {
    std::optional<std::string> scheme;  // may be a comma list
    std::optional<std::size_t> cells;
    std::optional<double> cfl;
    std::optional<double> t_end;
};

struct PresetInfo {
    std::string name;
    std::string summary;
};

const std::vector<PresetInfo>& preset_list();
/// Throws ConfigError naming the valid presets.
Job preset_job(const std::string& name);

/// Parse the key = value grammar above.
std::map<std::string, std::string> parse_key_values(std::istream& in);
Job job_from_key_values(const std::map<std::string, std::string>& kv);
Job load_job(const std::string& path);
void apply_overrides(Job& job, const Overrides& o);

/// Full, rerunnable key = value text for one run (fixed key order, %.17g).
std::vector<std::pair<std::string, std::string>> manifest_entries(const std::string& name,
                                                                  const RunConfig& cfg);
std::string manifest_text(const std::string& name, const RunConfig& cfg);
/// The same entries joined as k=v;k=v for the CSV header line.
std::string manifest_inline(const std::string& name, const RunConfig& cfg);

std::string format_double(double x);

}  // namespace cburgers
