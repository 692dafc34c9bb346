// One line per acceptance criterion; exit status is nonzero if any fails.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dsurf/verify.hpp"
#include "json.hpp"

using namespace dsurf;
namespace fs = std::filesystem;

namespace {

struct Need {
    std::string suite;
    double bound;         // required tolerance
    bool lower = false;   // residual must exceed bound
    long min_samples = 1;
};

struct Verdict {
    bool pass = true;
    std::string detail;
};

void add(Verdict& v, bool ok, const std::string& what) {
    v.pass = v.pass && ok;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += what;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Verdict check(const std::map<std::string, SuiteResult>& by_name, const std::vector<Need>& needs) {
    Verdict v;
    for (const auto& n : needs) {
        const auto it = by_name.find(n.suite);
        if (it == by_name.end()) {
            add(v, false, n.suite + " missing");
            continue;
        }
        const SuiteResult& s = it->second;
        const bool bound_ok = n.lower ? (s.lower_bound && s.tolerance >= n.bound) : (!s.lower_bound && s.tolerance <= n.bound);
        const bool value_ok = n.lower ? s.max_residual > n.bound : s.max_residual < n.bound;
        const bool ok = bound_ok && value_ok && s.pass && s.samples >= n.min_samples;
        add(v, ok, n.suite + " " + sci(s.max_residual) + (n.lower ? " > " : " < ") + sci(n.bound));
    }
    return v;
}

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dsurf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// Runs the command twice and compares every listed file byte for byte.
void twice(Verdict& v, const std::string& label, const std::vector<std::string>& args,
           const std::vector<fs::path>& files) {
    std::vector<std::string> first;
    const Run a = invoke(args);
    for (const auto& f : files) first.push_back(slurp(f));
    const Run b = invoke(args);
    bool same = a.code == 0 && b.code == 0 && a.out == b.out;
    for (std::size_t i = 0; i < files.size(); ++i) same = same && !first[i].empty() && first[i] == slurp(files[i]);
    add(v, same, label + (same ? " identical" : " differs or failed"));
}

Verdict cli_determinism() {
    Verdict v;
    std::string tmpl = (fs::temp_directory_path() / "dsurf_accept_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) {
        add(v, false, "no temp dir");
        return v;
    }
    const fs::path dir = tmpl;
    twice(v, "curve csv",
          {"curve", "--family", "dn", "--twisted", "-k", "0.9", "--gamma", "K/5", "--t-samples", "0:2:4", "-o",
           (dir / "c.csv").string()},
          {dir / "c.csv"});
    twice(v, "ksurface obj+json",
          {"ksurface", "--raw-alpha", "--sin-alpha", "0.8*sn(K/16)", "-o", (dir / "k.obj").string()},
          {dir / "k.obj", dir / "k.json"});
    twice(v, "kaleidocycle csv", {"kaleidocycle", "-n", "6", "--t-samples", "0,1", "-o", (dir / "kc").string()},
          {dir / "kc_t000.csv", dir / "kc_t001.csv"});
    twice(v, "verify json", {"verify", "-o", (dir / "v.json").string()}, {dir / "v.json"});

    const auto report = nlohmann::json::parse(slurp(dir / "v.json"), nullptr, false);
    bool all = !report.is_discarded() && report.value("schema", 0) == 1 && report.value("pass", false);
    std::size_t n = 0;
    if (all)
        for (const auto& s : report["suites"]) {
            all = all && s.value("pass", false);
            ++n;
        }
    add(v, all && n > 0, "verify report " + std::to_string(n) + " suites all pass");
    fs::remove_all(dir);
    return v;
}

}  // namespace

int main() {
    VerifyOptions o;  // moduli {0.3, 0.6, 0.9, 0.99}, 5 time samples, m in [-20, 20], 20 x 20 grids
    std::map<std::string, SuiteResult> by_name;
    for (const auto& s : run_verify(o)) by_name[s.name] = s;

    const long m_t_k = (2 * o.m_half + 1) * static_cast<long>(o.times.size() * o.moduli.size());
    const long samples = o.identity_options.samples;

    std::vector<std::pair<std::string, Verdict>> rows;
    rows.emplace_back("AC1 special functions",
                      check(by_name, {{"legendre_relation", 1e-12, false, 4},
                                      {"jacobi_theta_quotients", 1e-11, false, 100}}));
    std::vector<Need> corpus;
    for (const char* s : {"theta_addition", "theta_duplication", "tau_argument_specialisations", "theta_quotient_sn",
                          "theta_quotient_cn", "theta_quotient_dn", "weierstrass_zeta_half_period",
                          "weierstrass_p_half_period"})
        corpus.push_back({s, 1e-10, false, samples});
    for (const char* s : {"jacobi_step_i", "jacobi_step_ii", "jacobi_step_iii", "jacobi_step_iv", "jacobi_step_v",
                          "jacobi_step_vi", "jacobi_step_vii", "jacobi_step_viii", "jacobi_step_ix"})
        corpus.push_back({s, 1e-11, false, samples});
    rows.emplace_back("AC2 identity corpus", check(by_name, corpus));
    rows.emplace_back("AC3 sine-Gordon residuals",
                      check(by_name, {{"semi_discrete_sg_dn", 1e-10, false, m_t_k},
                                      {"semi_discrete_sg_cn", 1e-10, false, m_t_k},
                                      {"discrete_sg_dn", 1e-9, false, o.grid * o.grid},
                                      {"discrete_sg_cn", 1e-9, false, o.grid * o.grid},
                                      {"semi_discrete_sg_sensitivity", 1e-3, true},
                                      {"discrete_sg_sensitivity", 1e-3, true}}));
    rows.emplace_back("AC4 curve geometry", check(by_name, {{"curve_edge_identity", 1e-10, false, m_t_k},
                                                            {"curve_constant_speed", 1e-10, false, m_t_k},
                                                            {"curve_torsion_cosine", 1e-12, false, m_t_k}}));
    rows.emplace_back("AC5 isoperimetric flow", check(by_name, {{"flow_finite_difference", 1e-6, false, m_t_k},
                                                                {"flow_binormal_orthogonality", 1e-10, false, m_t_k},
                                                                {"flow_frame_decomposition", 1e-10, false, m_t_k}}));
    rows.emplace_back("AC6 tau functions", check(by_name, {{"tau_closed_form_equivalence", 1e-8},
                                                           {"tau_bilinear_fh", 1e-9},
                                                           {"tau_bilinear_fr", 1e-9},
                                                           {"tau_relation_finite_difference", 1e-6}}));
    rows.emplace_back("AC7 kaleidocycle closure", check(by_name, {{"kaleidocycle_closure", 1e-9}}));
    rows.emplace_back("AC8 K-surfaces", check(by_name, {{"ksurface_axioms", 1e-10},
                                                        {"ksurface_compatibility", 1e-11},
                                                        {"ksurface_compatibility_sensitivity", 1e-3, true},
                                                        {"ksurface_angle_identity", 1e-10},
                                                        {"ksurface_periodicity", 1e-9, false, 6}}));
    rows.emplace_back("AC9 CLI determinism", cli_determinism());

    bool all = true;
    for (const auto& [name, v] : rows) {
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
        all = all && v.pass;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
