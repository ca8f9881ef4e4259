#include "cburgers/output.hpp"

#include <fstream>

#include "cburgers/config.hpp"
#include "cburgers/errors.hpp"

namespace cburgers {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

void write_snapshots_csv(std::ostream& out, const std::string& name, const RunConfig& cfg,
                         const RunResult& result) {
    const ModelSpec& spec = cfg.spec;
    out << "# manifest: " << manifest_inline(name, cfg) << '\n';
    out << "t,j,r_center,u,v_physical,K_invariant\n";
    for (const auto& snap : result.snapshots) {
        const std::string t = format_double(snap.t);
        for (std::size_t j = 0; j < snap.u.size(); ++j) {
            const double r = result.grid.center(j);
            const double u = snap.u[j];
            out << t << ',' << j << ',' << format_double(r) << ',' << format_double(u) << ','
                << format_double(physical_velocity(spec, u)) << ','
                << format_double(steady_invariant(spec, r, u)) << '\n';
        }
    }
}

void write_diagnostics_csv(std::ostream& out, const RunResult& result) {
    out << "t,total_mass,total_variation,l1_to_reference,dt\n";
    for (const auto& d : result.diagnostics) {
        out << format_double(d.t) << ',' << format_double(d.total_mass) << ','
            << format_double(d.total_variation) << ',' << format_double(d.l1_to_reference) << ','
            << format_double(d.dt) << '\n';
    }
}

void write_run_outputs(const std::filesystem::path& dir, const std::string& name,
                       const RunConfig& cfg, const RunResult& result) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
    {
        auto out = open_for_write(dir / "snapshots.csv");
        write_snapshots_csv(out, name, cfg, result);
    }
    {
        auto out = open_for_write(dir / "diagnostics.csv");
        write_diagnostics_csv(out, result);
    }
    auto out = open_for_write(dir / "run_manifest.cfg");
    out << "# rerun with: curved-burgers run --config run_manifest.cfg\n";
    out << manifest_text(name, cfg);
}

}  // namespace cburgers
