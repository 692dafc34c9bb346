#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dsurf/errors.hpp"
#include "dsurf/io.hpp"
#include "dsurf/ksurf.hpp"
#include "dsurf/surfaces.hpp"
#include "dsurf/verify.hpp"
#include "json.hpp"

namespace dsurf::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;
constexpr double kMeshTolerance = 1e-9;

json config_echo(const RunConfig& c) {
    json j;
    j["command"] = to_string(c.command);
    switch (c.command) {
        case Command::curve:
            j["family"] = std::string(to_string(c.family));
            j["twisted"] = c.twisted;
            j["k"] = c.k;
            j["gamma"] = c.gamma_expr;
            j["gamma_value"] = c.gamma;
            j["beta"] = c.beta;
            j["m_range"] = {c.m_range.lo, c.m_range.hi};
            j["t_samples"] = c.t_samples;
            break;
        case Command::ksurface:
            j["family"] = std::string(to_string(c.family));
            j["k"] = c.k;
            j["gamma"] = c.gamma_expr;
            j["gamma_value"] = c.gamma;
            j["delta"] = c.delta_expr;
            j["delta_value"] = c.delta;
            j["m_range"] = {c.m_range.lo, c.m_range.hi};
            j["n_range"] = {c.n_range.lo, c.n_range.hi};
            j["raw_alpha"] = c.raw_alpha;
            if (c.raw_alpha) {
                j["sin_alpha"] = c.sin_alpha_expr;
                j["sin_alpha_value"] = c.sin_alpha;
            }
            break;
        case Command::kaleidocycle:
            j["family"] = std::string(to_string(c.family));
            if (c.n) j["n"] = *c.n;
            j["k"] = c.k;
            j["gamma"] = c.gamma_expr;
            j["beta"] = c.beta;
            j["t_samples"] = c.t_samples;
            break;
        case Command::verify:
        case Command::identities:
            j["seed"] = c.seed;
            j["samples"] = c.samples;
            break;
    }
    j["out_format"] = to_string(c.out_format);
    j["out_path"] = c.out_path;
    return j;
}

json suites_json(const std::vector<SuiteResult>& suites) {
    json arr = json::array();
    for (const auto& s : suites) {
        json e;
        e["name"] = s.name;
        e["max_residual"] = s.max_residual;
        e["tolerance"] = s.tolerance;
        e["pass"] = s.pass;
        e["bound"] = s.lower_bound ? "lower" : "upper";
        e["samples"] = s.samples;
        e["identities"] = s.identities;
        arr.push_back(e);
    }
    return arr;
}

// Writes text to out_path, or to out when the path is empty.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + c.out_path + " for writing");
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path + " for writing");
    f << text;
}

int run_curve(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const EllipticModulus mod = make_modulus(c.k);
    const SurfaceParams p =
        make_surface_params(mod, c.family, c.twisted, c.gamma, c.beta, admissible_frame_sign(mod, c.twisted, c.gamma));
    std::vector<CsvRow> rows;
    bool ok = true;
    for (double t : c.t_samples) {
        const CurveSnapshot s = snapshot(p, c.m_range.lo, c.m_range.hi, t);
        const auto r = curve_rows(s);
        rows.insert(rows.end(), r.begin(), r.end());
        if (!s.report.ok) {
            ok = false;
            err << "curve: t = " << format_double(t) << " edge " << format_double(s.report.edge_residual)
                << " speed " << format_double(s.report.speed_residual) << " frame "
                << format_double(s.report.frame_residual) << " exceed " << format_double(s.report.tolerance) << '\n';
        }
    }
    std::ostringstream csv;
    write_csv(csv, curve_csv_header(), rows);
    emit(c, out, csv.str());
    return ok ? 0 : 1;
}

int run_ksurface(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const EllipticModulus mod = make_modulus(c.k);
    KParams p = make_kparams(mod, c.family, c.gamma, c.delta);
    if (c.raw_alpha) p = make_kparams_raw(mod, c.family, c.gamma, c.delta, std::asin(c.sin_alpha), p.beta_step);
    const long M = c.m_range.hi - c.m_range.lo + 1, N = c.n_range.hi - c.n_range.lo + 1;
    const KGrid g = make_kgrid_unchecked(p, c.m_range.lo, c.n_range.lo, M, N);
    const KGridReport r = k_grid_report(p, g);

    std::ostringstream obj;
    write_obj(obj, g);
    write_file(c.out_path, obj.str());

    json side;
    side["schema"] = kSchema;
    side["config"] = config_echo(c);
    side["constraint_defect"] = kparams_constraint_defect(p);
    side["A"] = r.A;
    side["B"] = r.B;
    json res;
    res["edge_m"] = r.edge_m;
    res["edge_n"] = r.edge_n;
    res["planarity"] = r.planarity;
    res["opposite_m"] = r.opposite_m;
    res["opposite_n"] = r.opposite_n;
    res["spread_A"] = r.spread_A;
    res["spread_B"] = r.spread_B;
    res["torsion_m"] = r.torsion_m;
    res["torsion_n"] = r.torsion_n;
    res["unit_normal"] = r.unit_normal;
    side["residuals"] = res;
    side["max_residual"] = r.max_residual();
    side["tolerance"] = kMeshTolerance;
    const bool ok = r.max_residual() < kMeshTolerance;
    side["pass"] = ok;
    const std::string side_path = std::filesystem::path(c.out_path).replace_extension(".json").string();
    write_file(side_path, side.dump(2) + "\n");

    out << c.out_path << '\n' << side_path << '\n';
    if (!ok)
        err << "ksurface: max residual " << format_double(r.max_residual()) << " exceeds "
            << format_double(kMeshTolerance) << '\n';
    return ok ? 0 : 1;
}

int run_kaleidocycle(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const int n = c.n.value_or(2);
    const SurfaceParams p = kaleidocycle_params(n, c.family, c.k, c.beta);
    const long period = kaleidocycle_period(n, c.family);
    bool ok = true;
    for (std::size_t i = 0; i < c.t_samples.size(); ++i) {
        const double t = c.t_samples[i];
        // One extra vertex so the closing segment is drawn.
        const CurveSnapshot s = snapshot(p, 0, period, t);
        const double gap = distance(s.points.front(), s.points.back());
        if (gap >= 1e-9 || !s.report.ok) {
            ok = false;
            err << "kaleidocycle: t = " << format_double(t) << " closure gap " << format_double(gap) << '\n';
        }
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_t%03zu.csv", i);
        const std::string path = c.out_path + suffix;
        std::ostringstream csv;
        write_csv(csv, curve_csv_header(), curve_rows(s));
        write_file(path, csv.str());
        out << path << '\n';
    }
    return ok ? 0 : 1;
}

int run_report(const RunConfig& c, std::ostream& out, std::ostream& err) {
    IdentityOptions io;
    io.seed = c.seed;
    io.samples = c.samples;
    std::vector<SuiteResult> suites;
    if (c.command == Command::verify) {
        VerifyOptions vo;
        vo.identity_options = io;
        suites = run_verify(vo);
    } else {
        suites = run_identities(io);
    }
    const bool ok = all_pass(suites);
    json j;
    j["schema"] = kSchema;
    j["command"] = to_string(c.command);
    j["config"] = config_echo(c);
    j["suites"] = suites_json(suites);
    j["pass"] = ok;
    emit(c, out, j.dump(2) + "\n");
    for (const auto& s : suites)
        if (!s.pass)
            err << to_string(c.command) << ": " << s.name << " " << format_double(s.max_residual)
                << (s.lower_bound ? " not above " : " not below ") << format_double(s.tolerance) << '\n';
    return ok ? 0 : 1;
}

// Flag name -> config key.
struct FlagSpec {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr FlagSpec kValueFlags[] = {
    {"--family", "family", "dn or cn"},
    {"-k,--modulus", "k", "elliptic modulus in (0, 1)"},
    {"-n,--order", "n", "Kaleidocycle order (dn family, n >= 3)"},
    {"--gamma", "gamma", "m-step expression, e.g. K/16"},
    {"--delta", "delta", "n-step expression (ksurface)"},
    {"--beta", "beta", "time rate (default 1)"},
    {"--m-range", "m_range", "integer interval lo:hi"},
    {"--n-range", "n_range", "integer interval lo:hi (ksurface)"},
    {"--t-samples", "t_samples", "comma list or start:stop:count (default 0)"},
    {"--format", "out_format", "csv, obj or json; must match the command"},
    {"-o,--out", "out_path", "output path (prefix for kaleidocycle)"},
    {"--sin-alpha", "sin_alpha", "sin(alpha) expression, read with --raw-alpha"},
    {"--seed", "seed", "identity sampling seed"},
    {"--samples", "samples", "identity evaluation points per suite (>= 100)"},
};

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        switch (c.command) {
            case Command::curve: return run_curve(c, out, err);
            case Command::ksurface: return run_ksurface(c, out, err);
            case Command::kaleidocycle: return run_kaleidocycle(c, out, err);
            default: return run_report(c, out, err);
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    } catch (const DegenerateError& e) {
        throw ConfigError(e.what());
    } catch (const PoleError& e) {
        throw ConfigError(e.what());
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete and semi-discrete surfaces from elliptic solutions of sine-Gordon", "dsurf"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("-c,--config", config_path, "flat key = value file; flags override it");
    std::vector<std::pair<const FlagSpec*, std::string>> values;
    values.reserve(std::size(kValueFlags));
    std::vector<CLI::Option*> value_opts;
    for (const auto& f : kValueFlags) {
        values.emplace_back(&f, std::string{});
        value_opts.push_back(app.add_option(f.flag, values.back().second, f.help));
    }
    auto* twisted = app.add_flag("--twisted", "alternating-sign curve variant");
    auto* raw_alpha = app.add_flag("--raw-alpha", "take alpha from --sin-alpha instead of the surface constraint");

    std::vector<std::pair<Command, CLI::App*>> subs;
    for (Command cmd : {Command::curve, Command::ksurface, Command::kaleidocycle, Command::verify, Command::identities}) {
        auto* s = app.add_subcommand(to_string(cmd));
        s->fallthrough();
        subs.emplace_back(cmd, s);
    }
    subs[0].second->description("closed-form curve snapshots as CSV");
    subs[1].second->description("discrete K-surface as OBJ plus JSON sidecar");
    subs[2].second->description("Kaleidocycle animation, one CSV per time sample");
    subs[3].second->description("all verification suites as a JSON report");
    subs[4].second->description("elliptic identity corpus as a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dsurf: " << e.what() << '\n';
        return 2;
    }

    try {
        std::map<std::string, std::string> kv;
        std::map<std::string, int> lines;
        std::map<std::string, std::string> flag_of;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw ConfigError("cannot read config file " + config_path);
            try {
                kv = parse_config_text(f, &lines);
            } catch (const ConfigError& e) {
                throw ConfigError(config_path + ": " + e.what());
            }
        }
        for (std::size_t i = 0; i < values.size(); ++i)
            if (value_opts[i]->count() > 0) {
                kv[values[i].first->key] = values[i].second;
                flag_of[values[i].first->key] = value_opts[i]->get_name();
            }
        if (twisted->count() > 0) {
            kv["twisted"] = "true";
            flag_of["twisted"] = "--twisted";
        }
        if (raw_alpha->count() > 0) {
            kv["raw_alpha"] = "true";
            flag_of["raw_alpha"] = "--raw-alpha";
        }

        Command cmd = Command::verify;
        for (const auto& [c, s] : subs)
            if (s->parsed()) cmd = c;
        RunConfig cfg;
        try {
            cfg = resolve_config(cmd, kv);
        } catch (const ConfigError& e) {
            const std::string key = key_of_error(e.what());
            if (flag_of.count(key)) throw ConfigError(std::string(e.what()) + " [flag " + flag_of[key] + "]");
            if (lines.count(key))
                throw ConfigError(std::string(e.what()) + " [" + config_path + " line " + std::to_string(lines[key]) +
                                  "]");
            throw;
        }
        return run(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "dsurf: config error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace dsurf::cli
