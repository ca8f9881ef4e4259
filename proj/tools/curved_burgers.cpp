// curved-burgers: run presets or config files, check well-balancing, and
// tabulate convergence orders.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cburgers/config.hpp"
#include "cburgers/errors.hpp"
#include "cburgers/kernels.hpp"
#include "cburgers/output.hpp"
#include "cburgers/studies.hpp"

using namespace cburgers;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct RunArgs {
    std::string preset;
    std::string config;
    std::string out = "out";
    std::optional<std::string> scheme;
    std::optional<std::size_t> cells;
    std::optional<double> cfl;
    std::optional<double> t_end;
};

struct WbArgs {
    std::string model = "geom-pressureless";
    std::optional<double> K;
    int sign = 1;
    std::size_t cells = 64;
    std::size_t steps = 1000;
    double eps = 1.0;
    double mass = 0.05;
    double r_max = 1.0;
};

struct ConvArgs {
    std::string model = "flat-classical";
    std::string scheme = "LF1";
    std::size_t cells = 64;
    std::size_t levels = 4;
    double eps = 1.0;
    double mass = 0.05;
    double r_max = 1.0;
    double v_at_R = 0.3;
    double t_end = 0.5;
    std::string out;
    bool parallel = false;
};

int cmd_presets() {
    for (const auto& p : preset_list()) std::printf("%-24s %s\n", p.name.c_str(), p.summary.c_str());
    return 0;
}

int cmd_run(const RunArgs& a) {
    if (a.preset.empty() == a.config.empty()) {
        throw ConfigError("run needs exactly one of --preset or --config");
    }
    Job job = a.preset.empty() ? load_job(a.config) : preset_job(a.preset);
    apply_overrides(job, Overrides{a.scheme, a.cells, a.cfl, a.t_end});

    // independent runs own their state; execute them side by side
    std::vector<std::future<RunResult>> futures;
    for (const auto& cfg : job.runs) {
        futures.push_back(std::async(std::launch::async, [&cfg] { return run(cfg); }));
    }
    const std::filesystem::path root(a.out);
    for (std::size_t k = 0; k < job.runs.size(); ++k) {
        const RunConfig& cfg = job.runs[k];
        const RunResult res = futures[k].get();
        const auto dir = job.runs.size() > 1 ? root / std::string(to_string(cfg.scheme)) : root;
        write_run_outputs(dir, job.name, cfg, res);
        std::printf("%s %s: %zu cells, %zu steps, t = %.6g, l1_to_reference = %.6e -> %s\n",
                    job.name.c_str(), std::string(to_string(cfg.scheme)).c_str(), cfg.n_cells,
                    res.steps, res.snapshots.back().t, res.diagnostics.back().l1_to_reference,
                    dir.string().c_str());
    }
    return 0;
}

int cmd_wb_check(const WbArgs& a) {
    const ModelId id = model_id_from_string(a.model);
    const ModelSpec spec = ModelSpec::make(id, id == ModelId::FlatClassical ? 0.0 : a.eps,
                                           a.mass, a.r_max);
    SteadyProfile profile;
    profile.model = id;
    profile.sign = a.sign < 0 ? -1 : 1;
    profile.K = a.K.value_or(id == ModelId::GeomRelativistic ? 0.05 : 0.9);
    if (!(profile.K >= 0.0)) throw ConfigError("K must be nonnegative");

    const auto rows = wb_check(spec, profile, a.cells, a.steps);
    std::printf("model %s, K = %g, sign %+d, %zu cells, %zu steps, kernels %s\n",
                std::string(to_string(id)).c_str(), profile.K, profile.sign, a.cells, a.steps,
                std::string(kernels::to_string(kernels::active_backend())).c_str());
    std::printf("scheme,max_step_drift,total_drift\n");
    bool ok = true;
    for (const auto& r : rows) {
        std::printf("%s,%.6e,%.6e\n", std::string(to_string(r.scheme)).c_str(), r.max_step_drift,
                    r.total_drift);
        if (r.scheme == SchemeId::WB2 && !(r.total_drift <= 1e-10)) ok = false;
    }
    if (!ok) {
        std::fprintf(stderr, "WB2 drift exceeds 1e-10\n");
        return kExitNumerical;
    }
    return 0;
}

int cmd_convergence(const ConvArgs& a) {
    if (a.levels < 3) throw ConfigError("convergence needs at least 3 levels");
    const ModelId id = model_id_from_string(a.model);
    const SchemeId scheme = scheme_from_string(a.scheme);
    const ModelSpec spec = ModelSpec::make(id, id == ModelId::FlatClassical ? 0.0 : a.eps,
                                           a.mass, a.r_max);
    const auto rows = spec.geometric()
                          ? convergence_steady(spec, scheme, a.v_at_R, a.t_end, a.cells,
                                               a.levels, a.parallel)
                          : convergence_flat(spec, scheme, a.cells, a.levels, a.parallel);

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary | std::ios::trunc);
        if (!file) throw ConfigError("cannot write '" + a.out + "'");
    }
    std::ostream& out = a.out.empty() ? std::cout : file;
    out << "cells,dr,l1_error,observed_order\n";
    for (const auto& r : rows) {
        out << r.cells << ',' << format_double(r.dr) << ',' << format_double(r.l1_error) << ','
            << (std::isnan(r.order) ? std::string("n/a") : format_double(r.order)) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-volume solver for relativistic Burgers equations on flat and "
                 "Schwarzschild backgrounds"};
    app.require_subcommand(1);

    auto* presets = app.add_subcommand("presets", "List the experiment presets");

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run a preset or a config file");
    run_cmd->add_option("--preset", run_args.preset, "Preset name (see `presets`)");
    run_cmd->add_option("--config", run_args.config, "key = value config file");
    run_cmd->add_option("--out", run_args.out, "Output directory")->capture_default_str();
    run_cmd->add_option("--scheme", run_args.scheme, "LF1, NT2, WB2 or a comma list");
    run_cmd->add_option("--cells", run_args.cells, "Number of cells");
    run_cmd->add_option("--cfl", run_args.cfl, "Courant number");
    run_cmd->add_option("--t-end", run_args.t_end, "Final time");

    WbArgs wb;
    auto* wb_cmd = app.add_subcommand("wb-check", "Drift of exact steady data under each scheme");
    wb_cmd->add_option("--model", wb.model)->capture_default_str();
    wb_cmd->add_option("--K", wb.K, "Steady-family constant (default 0.9, model I 0.05)");
    wb_cmd->add_option("--sign", wb.sign, "Branch sign, +1 or -1")->capture_default_str();
    wb_cmd->add_option("--cells", wb.cells)->capture_default_str();
    wb_cmd->add_option("--steps", wb.steps)->capture_default_str();
    wb_cmd->add_option("--eps", wb.eps)->capture_default_str();
    wb_cmd->add_option("--mass", wb.mass)->capture_default_str();
    wb_cmd->add_option("--r-max", wb.r_max)->capture_default_str();

    ConvArgs conv;
    auto* conv_cmd = app.add_subcommand("convergence", "L1 error table under refinement");
    conv_cmd->add_option("--model", conv.model)->capture_default_str();
    conv_cmd->add_option("--scheme", conv.scheme)->capture_default_str();
    conv_cmd->add_option("--cells", conv.cells, "Cells on the coarsest level")
        ->capture_default_str();
    conv_cmd->add_option("--levels", conv.levels)->capture_default_str();
    conv_cmd->add_option("--eps", conv.eps)->capture_default_str();
    conv_cmd->add_option("--mass", conv.mass)->capture_default_str();
    conv_cmd->add_option("--r-max", conv.r_max)->capture_default_str();
    conv_cmd->add_option("--v-at-R", conv.v_at_R, "Geometric models: steady edge velocity")
        ->capture_default_str();
    conv_cmd->add_option("--t-end", conv.t_end, "Geometric models: final time")
        ->capture_default_str();
    conv_cmd->add_option("--out", conv.out, "CSV file (default: stdout)");
    conv_cmd->add_flag("--parallel", conv.parallel, "Run refinement levels concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (*presets) return cmd_presets();
        if (*run_cmd) return cmd_run(run_args);
        if (*wb_cmd) return cmd_wb_check(wb);
        if (*conv_cmd) return cmd_convergence(conv);
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    }
    return 0;
}
