#include "cburgers/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cburgers/errors.hpp"

namespace cburgers {

namespace {

constexpr double kTwoM = 0.1;
constexpr double kR = 1.0;

double default_cfl(SchemeId s) { return s == SchemeId::LF1 ? 0.9 : 0.45; }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ConfigError("key '" + key + "': '" + text + "' is not a finite number");
    }
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("key '" + key + "': '" + text + "' is not a nonnegative integer");
    }
    return v;
}

std::vector<SchemeId> parse_schemes(const std::string& text) {
    std::vector<SchemeId> out;
    for (const auto& s : split_list(text)) out.push_back(scheme_from_string(s));
    if (out.empty()) throw ConfigError("scheme list is empty");
    return out;
}

std::size_t cells_for(double dr) {
    return Grid::with_spacing(Geometry(0.5 * kTwoM, kR), dr).size();
}

RunConfig geometric_base(ModelId model, double dr, double t_end) {
    RunConfig c;
    c.spec = ModelSpec::make(model, 1.0, 0.5 * kTwoM, kR);
    c.n_cells = cells_for(dr);
    c.t_end = t_end;
    c.output_interval = t_end / 20.0;
    return c;
}

Job with_schemes(std::string name, const RunConfig& base, std::vector<SchemeId> schemes) {
    Job job;
    job.name = std::move(name);
    for (SchemeId s : schemes) {
        RunConfig c = base;
        c.scheme = s;
        c.cfl = default_cfl(s);
        job.runs.push_back(c);
    }
    return job;
}

constexpr std::array kAllSchemes{SchemeId::LF1, SchemeId::NT2, SchemeId::WB2};

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const std::vector<PresetInfo>& preset_list() {
    static const std::vector<PresetInfo> list{
        {"scheme-compare-1", "model I steady data, dr = 0.02, v(R) = 0.03; LF1, NT2, WB2"},
        {"scheme-compare-2", "model II steady data, dr = 0.005, v(R) = 0.3; LF1, NT2, WB2"},
        {"single-shock", "model II shock joining v(R) = 0.9 and v(R) = 0.1 at r = 0.5, dr = 0.05"},
        {"perturbed-steady-1", "model I steady v(R) = 0.03 plus a bump, dr = 0.03; WB2"},
        {"perturbed-steady-2", "model II steady v(R) = 0.1 plus a bump, dr = 0.001; WB2"},
        {"perturbed-steady-shock",
         "model I steady shock at r = 0.5 (v(R) = +-0.09) plus a bump, dr = 0.05; WB2"},
    };
    return list;
}

Job preset_job(const std::string& name) {
    const std::vector<SchemeId> all(kAllSchemes.begin(), kAllSchemes.end());
    if (name == "scheme-compare-1") {
        RunConfig c = geometric_base(ModelId::GeomRelativistic, 0.02, 5.0);
        c.initial = InitialData::steady(0.03);
        return with_schemes(name, c, all);
    }
    if (name == "scheme-compare-2") {
        RunConfig c = geometric_base(ModelId::GeomPressureless, 0.005, 5.0);
        c.initial = InitialData::steady(0.3);
        return with_schemes(name, c, all);
    }
    if (name == "single-shock") {
        RunConfig c = geometric_base(ModelId::GeomPressureless, 0.05, 1.0);
        c.initial = InitialData::shock(0.9, 0.1, 0.5);
        c.reference = ReferenceKind::Initial;
        return with_schemes(name, c, all);
    }
    if (name == "perturbed-steady-1") {
        RunConfig c = geometric_base(ModelId::GeomRelativistic, 0.03, 40.0);
        const double amp = 0.3 * steady_branch_value(c.spec, 0.03, 0.4);
        c.initial = InitialData::perturbed(0.03, 0.4, 0.2, amp);
        return with_schemes(name, c, {SchemeId::WB2});
    }
    if (name == "perturbed-steady-2") {
        RunConfig c = geometric_base(ModelId::GeomPressureless, 0.001, 5.0);
        const double amp = 0.3 * steady_branch_value(c.spec, 0.1, 0.4);
        c.initial = InitialData::perturbed(0.1, 0.4, 0.2, amp);
        return with_schemes(name, c, {SchemeId::WB2});
    }
    if (name == "perturbed-steady-shock") {
        RunConfig c = geometric_base(ModelId::GeomRelativistic, 0.05, 5.0);
        c.initial = InitialData::shock(0.09, -0.09, 0.5);
        c.initial.bump_center = 0.4;
        c.initial.bump_width = 0.2;
        c.initial.bump_amplitude = 0.3 * steady_branch_value(c.spec, 0.09, 0.4);
        return with_schemes(name, c, {SchemeId::WB2});
    }
    std::string valid;
    for (const auto& p : preset_list()) valid += (valid.empty() ? "" : ", ") + p.name;
    throw ConfigError("unknown preset '" + name + "'; valid presets: " + valid);
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

Job job_from_key_values(const std::map<std::string, std::string>& kv) {
    Job job;
    RunConfig base;
    base.spec = ModelSpec::make(ModelId::GeomPressureless, 1.0, 0.5 * kTwoM, kR);
    std::vector<SchemeId> schemes{SchemeId::WB2};
    bool cfl_given = false;

    if (auto it = kv.find("preset"); it != kv.end()) {
        job = preset_job(it->second);
        base = job.runs.front();
        schemes.clear();
        for (const auto& r : job.runs) schemes.push_back(r.scheme);
        job.runs.clear();
    }

    const auto get = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    const auto number = [&](const std::string& key, double fallback) {
        const std::string* v = get(key);
        return v ? parse_double(key, *v) : fallback;
    };

    static const std::vector<std::string> known{
        "name", "preset", "model", "eps", "mass", "r_max", "scheme", "cells", "dr", "cfl",
        "t_end", "output_interval", "output_every_steps", "max_steps", "boundary", "reference",
        "initial", "initial.value_at_R", "initial.left_value_at_R", "initial.right_value_at_R",
        "initial.r_shock", "initial.bump_center", "initial.bump_width", "initial.bump_amplitude",
        "initial.values"};
    for (const auto& [key, value] : kv) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    if (const auto* v = get("name")) job.name = *v;

    try {
        const ModelId model = get("model") ? model_id_from_string(*get("model")) : base.spec.id();
        const bool flat = model == ModelId::FlatClassical || model == ModelId::FlatRelativistic;
        const double eps_fallback = base.spec.eps() > 0.0 ? base.spec.eps() : 1.0;
        const double eps = model == ModelId::FlatClassical ? 0.0 : number("eps", eps_fallback);
        const double mass = flat ? 0.0 : number("mass", base.spec.mass());
        if (flat && get("mass") && parse_double("mass", *get("mass")) != 0.0) {
            throw ConfigError("flat models have mass 0");
        }
        const double r_max = number("r_max", base.spec.geometry().r_max);
        base.spec = ModelSpec::make(model, eps, mass, r_max);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }

    if (const auto* v = get("scheme")) schemes = parse_schemes(*v);
    if (const auto* v = get("cells")) base.n_cells = parse_count("cells", *v);
    if (const auto* v = get("dr")) {
        try {
            const std::size_t n =
                Grid::with_spacing(base.spec.geometry(), parse_double("dr", *v)).size();
            if (get("cells") && n != base.n_cells) {
                throw ConfigError("cells and dr disagree");
            }
            base.n_cells = n;
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }
    if (const auto* v = get("cfl")) {
        base.cfl = parse_double("cfl", *v);
        cfl_given = true;
    }
    base.t_end = number("t_end", base.t_end);
    base.output_interval = number("output_interval", base.output_interval);
    if (const auto* v = get("output_every_steps")) {
        base.output_every_steps = parse_count("output_every_steps", *v);
    }
    if (const auto* v = get("max_steps")) base.max_steps = parse_count("max_steps", *v);
    if (const auto* v = get("boundary"); v && *v != "no-influx") {
        throw ConfigError("boundary '" + *v + "' is not supported (only no-influx)");
    }
    if (const auto* v = get("reference")) {
        if (*v == "unperturbed") {
            base.reference = ReferenceKind::Unperturbed;
        } else if (*v == "initial") {
            base.reference = ReferenceKind::Initial;
        } else {
            throw ConfigError("reference must be unperturbed or initial");
        }
    }

    InitialData& init = base.initial;
    if (const auto* v = get("initial")) {
        if (*v == "steady") {
            init.kind = InitialData::Kind::Steady;
        } else if (*v == "shock") {
            init.kind = InitialData::Kind::Shock;
        } else if (*v == "perturbed") {
            init.kind = InitialData::Kind::Perturbed;
        } else if (*v == "explicit") {
            init.kind = InitialData::Kind::Explicit;
        } else {
            throw ConfigError("initial must be steady, shock, perturbed or explicit");
        }
    }
    init.value_at_R = number("initial.value_at_R", init.value_at_R);
    init.left_value_at_R = number("initial.left_value_at_R", init.left_value_at_R);
    init.right_value_at_R = number("initial.right_value_at_R", init.right_value_at_R);
    init.r_shock = number("initial.r_shock", init.r_shock);
    init.bump_center = number("initial.bump_center", init.bump_center);
    init.bump_width = number("initial.bump_width", init.bump_width);
    init.bump_amplitude = number("initial.bump_amplitude", init.bump_amplitude);
    if (const auto* v = get("initial.values")) {
        init.values.clear();
        for (const auto& item : split_list(*v)) {
            init.values.push_back(parse_double("initial.values", item));
        }
    }
    if (init.kind == InitialData::Kind::Steady) init.bump_amplitude = 0.0;

    for (SchemeId s : schemes) {
        RunConfig c = base;
        c.scheme = s;
        if (!cfl_given) c.cfl = default_cfl(s);
        job.runs.push_back(c);
    }
    for (const auto& r : job.runs) r.validate();
    return job;
}

Job load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    return job_from_key_values(parse_key_values(in));
}

void apply_overrides(Job& job, const Overrides& o) {
    if (o.scheme) {
        const RunConfig templ = job.runs.front();
        job.runs.clear();
        for (SchemeId s : parse_schemes(*o.scheme)) {
            RunConfig c = templ;
            c.scheme = s;
            c.cfl = default_cfl(s);
            job.runs.push_back(c);
        }
    }
    for (auto& r : job.runs) {
        if (o.cells) r.n_cells = *o.cells;
        if (o.cfl) r.cfl = *o.cfl;
        if (o.t_end) r.t_end = *o.t_end;
        r.validate();
    }
}

std::vector<std::pair<std::string, std::string>> manifest_entries(const std::string& name,
                                                                  const RunConfig& cfg) {
    const auto& init = cfg.initial;
    std::vector<std::pair<std::string, std::string>> e{
        {"name", name},
        {"model", std::string(to_string(cfg.spec.id()))},
        {"eps", format_double(cfg.spec.eps())},
        {"mass", format_double(cfg.spec.mass())},
        {"r_max", format_double(cfg.spec.geometry().r_max)},
        {"scheme", std::string(to_string(cfg.scheme))},
        {"cells", std::to_string(cfg.n_cells)},
        {"cfl", format_double(cfg.cfl)},
        {"t_end", format_double(cfg.t_end)},
        {"output_interval", format_double(cfg.output_interval)},
        {"output_every_steps", std::to_string(cfg.output_every_steps)},
        {"max_steps", std::to_string(cfg.max_steps)},
        {"boundary", "no-influx"},
        {"reference", cfg.reference == ReferenceKind::Initial ? "initial" : "unperturbed"},
        {"initial", std::string(to_string(init.kind))},
    };
    switch (init.kind) {
        case InitialData::Kind::Steady:
            e.emplace_back("initial.value_at_R", format_double(init.value_at_R));
            break;
        case InitialData::Kind::Perturbed:
            e.emplace_back("initial.value_at_R", format_double(init.value_at_R));
            break;
        case InitialData::Kind::Shock:
            e.emplace_back("initial.left_value_at_R", format_double(init.left_value_at_R));
            e.emplace_back("initial.right_value_at_R", format_double(init.right_value_at_R));
            e.emplace_back("initial.r_shock", format_double(init.r_shock));
            break;
        case InitialData::Kind::Explicit: {
            std::string values;
            for (double v : init.values) values += (values.empty() ? "" : ",") + format_double(v);
            e.emplace_back("initial.values", values);
            break;
        }
    }
    if (init.kind == InitialData::Kind::Perturbed || init.kind == InitialData::Kind::Shock) {
        e.emplace_back("initial.bump_center", format_double(init.bump_center));
        e.emplace_back("initial.bump_width", format_double(init.bump_width));
        e.emplace_back("initial.bump_amplitude", format_double(init.bump_amplitude));
    }
    return e;
}

std::string manifest_text(const std::string& name, const RunConfig& cfg) {
    std::string out;
    for (const auto& [k, v] : manifest_entries(name, cfg)) out += k + " = " + v + "\n";
    return out;
}

std::string manifest_inline(const std::string& name, const RunConfig& cfg) {
    std::string out;
    for (const auto& [k, v] : manifest_entries(name, cfg)) {
        out += (out.empty() ? "" : ";") + k + "=" + v;
    }
    return out;
}

}  // namespace cburgers
