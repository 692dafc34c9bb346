#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "dsurf/elliptic.hpp"
#include "dsurf/errors.hpp"

namespace dsurf::cli {
namespace {

class Parser {
public:
    Parser(const std::string& text, const EllipticModulus* mod) : s_(text), mod_(mod) {}

    double parse() {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("expression \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                const double d = factor();
                if (d == 0.0) fail("division by zero");
                v /= d;
            } else return v;
        }
    }

    const EllipticModulus& mod() const {
        if (!mod_) throw ConfigError("expression \"" + s_ + "\": modulus constants are not available here");
        return *mod_;
    }

    double factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return v;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
        std::string id;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
        if (eat('(')) {
            const double a = expr();
            if (!eat(')')) fail("missing ')'");
            if (id == "sqrt") {
                if (a < 0) fail("sqrt of a negative number");
                return std::sqrt(a);
            }
            if (id == "sin") return std::sin(a);
            if (id == "cos") return std::cos(a);
            if (id == "sn") return jacobi(a, mod()).sn;
            if (id == "cn") return jacobi(a, mod()).cn;
            if (id == "dn") return jacobi(a, mod()).dn;
            fail("unknown function " + id);
        }
        if (id == "pi") return M_PI;
        if (id == "K") return mod().K;
        if (id == "Kp") return mod().Kp;
        if (id == "E") return mod().E;
        if (id == "Ep") return mod().Ep;
        if (id == "k") return mod().k;
        if (id == "kp") return mod().kp;
        fail("unknown name " + id);
    }

    std::string s_;
    const EllipticModulus* mod_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{"family", "twisted", "k",          "n",         "gamma",
                                            "delta",  "beta",    "m_range",    "n_range",   "t_samples",
                                            "out_format", "out_path", "raw_alpha", "sin_alpha", "seed",
                                            "samples"};
    return keys;
}

// Keys each command accepts besides out_path.
const std::set<std::string>& allowed(Command c) {
    static const std::set<std::string> curve{"family", "twisted", "k", "gamma", "beta", "m_range", "t_samples",
                                             "out_format"};
    static const std::set<std::string> ksurface{"family", "k",        "gamma",     "delta",    "m_range",
                                                "n_range", "out_format", "raw_alpha", "sin_alpha"};
    static const std::set<std::string> kaleido{"family", "k", "n", "beta", "t_samples", "out_format"};
    static const std::set<std::string> report{"seed", "samples", "out_format"};
    switch (c) {
        case Command::curve: return curve;
        case Command::ksurface: return ksurface;
        case Command::kaleidocycle: return kaleido;
        default: return report;
    }
}

double number(const std::string& key, const std::string& v) {
    const char* b = v.c_str();
    char* e = nullptr;
    const double x = std::strtod(b, &e);
    if (e == b || *e != '\0' || !std::isfinite(x)) throw ConfigError(key + ": \"" + v + "\" is not a number");
    return x;
}

long integer(const std::string& key, const std::string& v) {
    const char* b = v.c_str();
    char* e = nullptr;
    const long x = std::strtol(b, &e, 10);
    if (e == b || *e != '\0') throw ConfigError(key + ": \"" + v + "\" is not an integer");
    return x;
}

bool boolean(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key + ": \"" + v + "\" is not a boolean");
}

IntRange range(const std::string& key, const std::string& v) {
    const auto colon = v.find(':');
    if (colon == std::string::npos) throw ConfigError(key + ": expected lo:hi, got \"" + v + "\"");
    IntRange r{integer(key, trim(v.substr(0, colon))), integer(key, trim(v.substr(colon + 1)))};
    if (r.hi < r.lo) throw ConfigError(key + ": empty range \"" + v + "\"");
    return r;
}

// "a,b,c" or "start:stop:count" (count points, both ends included).
std::vector<double> samples(const std::string& key, const std::string& v) {
    std::vector<double> out;
    if (v.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(v);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(trim(p));
        if (parts.size() != 3) throw ConfigError(key + ": expected start:stop:count, got \"" + v + "\"");
        const double a = number(key, parts[0]), b = number(key, parts[1]);
        const long n = integer(key, parts[2]);
        if (n < 1) throw ConfigError(key + ": count must be positive");
        for (long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
        return out;
    }
    std::stringstream ss(v);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(key, trim(p)));
    if (out.empty()) throw ConfigError(key + ": no samples");
    return out;
}

double keyed_expression(const std::string& key, const std::string& text, const EllipticModulus& mod) {
    try {
        return eval_expression(text, &mod);
    } catch (const ConfigError& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

double modulus_value(const std::string& v) {
    double k = 0;
    try {
        k = eval_expression(v, nullptr);
    } catch (const ConfigError& e) {
        throw ConfigError("k: " + std::string(e.what()));
    }
    if (!(k > 0.0 && k < 1.0)) throw ConfigError("k: modulus must lie in (0, 1), got " + v);
    return k;
}

}  // namespace

double eval_expression(const std::string& text, const EllipticModulus* mod) {
    if (trim(text).empty()) throw ConfigError("empty expression");
    const double v = Parser(text, mod).parse();
    if (!std::isfinite(v)) throw ConfigError("expression \"" + text + "\" is not finite");
    return v;
}

std::map<std::string, std::string> parse_config_text(std::istream& in, std::map<std::string, int>* lines) {
    std::map<std::string, std::string> kv;
    std::string line;
    for (int no = 1; std::getline(in, line); ++no) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!known_keys().count(key))
            throw ConfigError("config line " + std::to_string(no) + ": unknown key '" + key + "'");
        if (kv.count(key)) throw ConfigError("config line " + std::to_string(no) + ": duplicate key '" + key + "'");
        kv[key] = value;
        if (lines) (*lines)[key] = no;
    }
    return kv;
}

std::string key_of_error(const std::string& message) {
    for (const auto& key : known_keys()) {
        if (message.rfind(key + ":", 0) == 0) return key;
        if (message.find("'" + key + "'") != std::string::npos) return key;
    }
    return "";
}

RunConfig resolve_config(Command command, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (!known_keys().count(key)) throw ConfigError("unknown key '" + key + "'");
        if (key != "out_path" && !allowed(command).count(key))
            throw ConfigError("'" + key + "' does not apply to " + std::string(to_string(command)));
    }
    auto get = [&kv](const std::string& key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };

    RunConfig c;
    c.command = command;
    if (auto v = get("family")) {
        if (*v == "dn") c.family = Family::dn;
        else if (*v == "cn") c.family = Family::cn;
        else throw ConfigError("family: expected dn or cn, got \"" + *v + "\"");
    }
    if (auto v = get("twisted")) c.twisted = boolean("twisted", *v);
    if (auto v = get("beta")) c.beta = number("beta", *v);
    if (auto v = get("t_samples")) c.t_samples = samples("t_samples", *v);
    if (auto v = get("out_path")) c.out_path = *v;
    if (auto v = get("seed")) {
        const long s = integer("seed", *v);
        if (s < 0) throw ConfigError("seed: must be non-negative");
        c.seed = static_cast<std::uint64_t>(s);
    }
    if (auto v = get("samples")) {
        const long s = integer("samples", *v);
        if (s < 100) throw ConfigError("samples: at least 100 evaluation points are required");
        c.samples = static_cast<int>(s);
    }

    OutFormat fmt = OutFormat::json;
    switch (command) {
        case Command::curve:
        case Command::kaleidocycle: fmt = OutFormat::csv; break;
        case Command::ksurface: fmt = OutFormat::obj; break;
        default: break;
    }
    if (auto v = get("out_format")) {
        const std::string want = to_string(fmt);
        if (*v != want)
            throw ConfigError("out_format: " + std::string(to_string(command)) + " writes " + want + ", got \"" + *v +
                              "\"");
    }
    c.out_format = fmt;

    switch (command) {
        case Command::curve: {
            c.k = modulus_value(get("k").value_or("0.6"));
            const EllipticModulus mod = make_modulus(c.k);
            c.gamma_expr = get("gamma").value_or("0.7");
            c.gamma = keyed_expression("gamma", c.gamma_expr, mod);
            c.m_range = range("m_range", get("m_range").value_or("0:20"));
            break;
        }
        case Command::ksurface: {
            c.k = modulus_value(get("k").value_or("0.8"));
            const EllipticModulus mod = make_modulus(c.k);
            c.gamma_expr = get("gamma").value_or("K/16");
            c.delta_expr = get("delta").value_or(c.gamma_expr);
            c.gamma = keyed_expression("gamma", c.gamma_expr, mod);
            c.delta = keyed_expression("delta", c.delta_expr, mod);
            c.m_range = range("m_range", get("m_range").value_or("0:127"));
            c.n_range = range("n_range", get("n_range").value_or("0:127"));
            if (c.m_range.hi == c.m_range.lo || c.n_range.hi == c.n_range.lo)
                throw ConfigError("ksurface: m_range and n_range need at least two values each");
            if (auto v = get("raw_alpha")) c.raw_alpha = boolean("raw_alpha", *v);
            if (auto v = get("sin_alpha")) c.sin_alpha_expr = *v;
            if (c.raw_alpha && c.sin_alpha_expr.empty()) throw ConfigError("raw_alpha: needs sin_alpha");
            if (!c.raw_alpha && !c.sin_alpha_expr.empty()) throw ConfigError("sin_alpha: only read with raw_alpha");
            if (c.raw_alpha) {
                c.sin_alpha = keyed_expression("sin_alpha", c.sin_alpha_expr, mod);
                if (std::abs(c.sin_alpha) > 1.0) throw ConfigError("sin_alpha: |value| exceeds 1");
            }
            break;
        }
        case Command::kaleidocycle: {
            if (c.family == Family::dn) {
                if (get("k")) throw ConfigError("k: the dn kaleidocycle fixes k = sin(pi/n); do not set it");
                const auto n = get("n");
                if (!n) throw ConfigError("kaleidocycle: n is required for the dn family");
                const long order = integer("n", *n);
                if (order < 3) throw ConfigError("n: the kaleidocycle order must be at least 3");
                c.n = static_cast<int>(order);
                c.k = std::sin(M_PI / order);
            } else {
                if (get("n")) throw ConfigError("n: the cn kaleidocycle closes after two steps; n does not apply");
                c.k = modulus_value(get("k").value_or("0.8"));
            }
            c.gamma_expr = "K";
            c.gamma = make_modulus(c.k).K;
            if (c.out_path.empty()) c.out_path = "kaleidocycle";
            break;
        }
        default: break;
    }
    if (command == Command::ksurface && c.out_path.empty())
        throw ConfigError("ksurface: out_path is required (the mesh has a JSON sidecar)");
    return c;
}

const char* to_string(Command c) {
    switch (c) {
        case Command::curve: return "curve";
        case Command::ksurface: return "ksurface";
        case Command::kaleidocycle: return "kaleidocycle";
        case Command::verify: return "verify";
        case Command::identities: return "identities";
    }
    return "?";
}

const char* to_string(OutFormat f) {
    switch (f) {
        case OutFormat::csv: return "csv";
        case OutFormat::obj: return "obj";
        case OutFormat::json: return "json";
    }
    return "?";
}

}  // namespace dsurf::cli
