#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "cburgers/config.hpp"
#include "cburgers/output.hpp"

using namespace cburgers;
namespace fs = std::filesystem;

namespace {

Job job_from_text(const std::string& text) {
    std::istringstream in(text);
    return job_from_key_values(parse_key_values(in));
}

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cburgers_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("key = value grammar") {
    const auto kv = [] {
        std::istringstream in("# comment\n\nmodel = geom-pressureless  # trailing\n"
                              "  cells=40\ncells = 50\n");
        return parse_key_values(in);
    }();
    CHECK(kv.at("model") == "geom-pressureless");
    CHECK(kv.at("cells") == "50");
    std::istringstream bad("model geom-pressureless\n");
    CHECK_THROWS_AS(parse_key_values(bad), ConfigError);
}

TEST_CASE("jobs from text") {
    const Job j = job_from_text("model = geom-pressureless\nscheme = LF1,WB2\ndr = 0.05\n"
                                "t_end = 0.5\ninitial = steady\ninitial.value_at_R = 0.3\n");
    REQUIRE(j.runs.size() == 2);
    CHECK(j.runs[0].scheme == SchemeId::LF1);
    CHECK(j.runs[0].cfl == 0.9);
    CHECK(j.runs[1].cfl == 0.45);
    CHECK(j.runs[0].n_cells == 18);

    CHECK_THROWS_AS(job_from_text("modle = flat-classical\n"), ConfigError);
    CHECK_THROWS_AS(job_from_text("model = flat-classical\ncells = -4\n"), ConfigError);
    CHECK_THROWS_AS(job_from_text("model = flat-classical\ncfl = fast\n"), ConfigError);
    CHECK_THROWS_AS(job_from_text("scheme = NT2\ncfl = 0.8\n"), ConfigError);
    CHECK_THROWS_AS(job_from_text("preset = nope\n"), ConfigError);
    CHECK_THROWS_AS(job_from_text("boundary = periodic\n"), ConfigError);
}

TEST_CASE("presets") {
    CHECK(preset_list().size() == 6);
    for (const auto& p : preset_list()) {
        const Job j = preset_job(p.name);
        CHECK(j.name == p.name);
        REQUIRE(!j.runs.empty());
        for (const auto& r : j.runs) {
            CHECK_NOTHROW(r.validate());
            CHECK(r.spec.mass() == 0.05);
            CHECK(r.spec.eps() == 1.0);
            CHECK(r.cfl == (r.scheme == SchemeId::LF1 ? 0.9 : 0.45));
        }
    }
    CHECK(preset_job("scheme-compare-2").runs.front().n_cells == 180);
    CHECK(preset_job("perturbed-steady-2").runs.front().n_cells == 900);
    CHECK(preset_job("single-shock").runs.size() == 3);
}

TEST_CASE("overrides") {
    Job j = preset_job("scheme-compare-1");
    apply_overrides(j, Overrides{"NT2", 90, 0.3, 2.0});
    REQUIRE(j.runs.size() == 1);
    CHECK(j.runs[0].scheme == SchemeId::NT2);
    CHECK(j.runs[0].n_cells == 90);
    CHECK(j.runs[0].cfl == 0.3);
    CHECK(j.runs[0].t_end == 2.0);
    Job k = preset_job("single-shock");
    CHECK_THROWS_AS(apply_overrides(k, Overrides{std::nullopt, std::nullopt, 0.7, std::nullopt}),
                    ConfigError);
}

TEST_CASE("manifest is a fixed point") {
    for (const auto& p : preset_list()) {
        for (const auto& cfg : preset_job(p.name).runs) {
            const std::string text = manifest_text(p.name, cfg);
            const Job again = job_from_text(text);
            REQUIRE(again.runs.size() == 1);
            CHECK(manifest_text(again.name, again.runs[0]) == text);
        }
    }
    RunConfig cfg;
    cfg.initial = InitialData::explicit_values(std::vector<double>(100, 0.1));
    const Job again = job_from_text(manifest_text("x", cfg));
    CHECK(again.runs[0].initial.values == cfg.initial.values);
}

TEST_CASE("double formatting round trips") {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("output files") {
    Job j = preset_job("single-shock");
    apply_overrides(j, Overrides{"WB2", std::nullopt, std::nullopt, 0.2});
    const RunResult res = run(j.runs[0]);
    const fs::path dir = scratch_dir("out");
    write_run_outputs(dir, j.name, j.runs[0], res);

    const std::string snaps = slurp(dir / "snapshots.csv");
    CHECK(snaps.rfind("# manifest: name=single-shock;", 0) == 0);
    CHECK(snaps.find("\nt,j,r_center,u,v_physical,K_invariant\n") != std::string::npos);
    CHECK(snaps.find('\r') == std::string::npos);
    std::size_t rows = 0;
    for (char ch : snaps) rows += ch == '\n';
    CHECK(rows == 2 + res.snapshots.size() * res.grid.size());

    const std::string diag = slurp(dir / "diagnostics.csv");
    CHECK(diag.rfind("t,total_mass,total_variation,l1_to_reference,dt\n", 0) == 0);

    const Job again = load_job((dir / "run_manifest.cfg").string());
    const RunResult res2 = run(again.runs[0]);
    CHECK(res2.snapshots.back().u == res.snapshots.back().u);
    fs::remove_all(dir);
    CHECK_THROWS_AS(load_job((dir / "missing.cfg").string()), ConfigError);
}

}  // TEST_SUITE
