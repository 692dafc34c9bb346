#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"

namespace dsurf::cli {

// Bad configuration: exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { curve, ksurface, kaleidocycle, verify, identities };
enum class OutFormat { csv, obj, json };

const char* to_string(Command c);
const char* to_string(OutFormat f);

struct IntRange {
    long lo = 0;
    long hi = 0;
};

struct RunConfig {
    Command command = Command::verify;
    Family family = Family::dn;
    bool twisted = false;
    double k = 0;                 // resolved modulus (cn kaleidocycle, curve, ksurface)
    std::optional<int> n;         // Kaleidocycle order
    std::string gamma_expr;       // as written, e.g. "K/16"
    std::string delta_expr;
    double gamma = 0;
    double delta = 0;
    double beta = 1.0;
    IntRange m_range;
    IntRange n_range;
    std::vector<double> t_samples{0.0};
    OutFormat out_format = OutFormat::json;
    std::string out_path;         // empty: standard output where allowed
    bool raw_alpha = false;
    std::string sin_alpha_expr;
    double sin_alpha = 0;
    std::uint64_t seed = 20240611;
    int samples = 100;
};

// Arithmetic over numbers, K, Kp, E, Ep, k, kp, pi and sn, cn, dn, sqrt, sin, cos.
// mod may be null when the expression must not use modulus constants.
double eval_expression(const std::string& text, const EllipticModulus* mod);

// Flat "key = value" lines; '#' starts a comment. Errors carry the line number.
// lines, when given, receives the line each key was read from.
std::map<std::string, std::string> parse_config_text(std::istream& in, std::map<std::string, int>* lines = nullptr);

// Value errors from resolve_config start with "key:" or quote 'key'.
// Returns the key named by such a message, or an empty string.
std::string key_of_error(const std::string& message);

// Validates keys against the command and fills defaults.
RunConfig resolve_config(Command command, const std::map<std::string, std::string>& kv);

// 0 success, 1 validation failure. Throws ConfigError for unusable settings.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Whole front end: argument parsing, config file, flag overrides, run, exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsurf::cli
