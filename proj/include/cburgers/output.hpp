#pragma once

// CSV and manifest emission for one run.
//
//   snapshots.csv    "# manifest: k=v;..." then t,j,r_center,u,v_physical,K_invariant
//   diagnostics.csv  t,total_mass,total_variation,l1_to_reference,dt
//   run_manifest.cfg key = value, loadable with --config
//
// Numbers are written with 17 significant digits and LF line endings.

#include <filesystem>
#include <ostream>
#include <string>

#include "cburgers/solver.hpp"

namespace cburgers {

void write_snapshots_csv(std::ostream& out, const std::string& name, const RunConfig& cfg,
                         const RunResult& result);
void write_diagnostics_csv(std::ostream& out, const RunResult& result);

/// Writes the three files into `dir`, creating it if needed.
void write_run_outputs(const std::filesystem::path& dir, const std::string& name,
                       const RunConfig& cfg, const RunResult& result);

}  // namespace cburgers
