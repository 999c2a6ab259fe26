#include "efk/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "efk/scenarios.hpp"

namespace efk {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ": " << msg;
    throw ConfigError(os.str());
}

double parse_num(int line, const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(line, "malformed number for '" + key + "': " + v);
    }
    if (pos != v.size()) fail(line, "malformed number for '" + key + "': " + v);
    return x;
}

int parse_int(int line, const std::string& key, const std::string& v) {
    const double x = parse_num(line, key, v);
    const int i = static_cast<int>(x);
    if (x != i) fail(line, "'" + key + "' must be an integer: " + v);
    return i;
}

bool parse_bool(int line, const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail(line, "'" + key + "' must be true or false: " + v);
}

Profile parse_profile(int line, const std::string& key, const std::string& v) {
    std::istringstream is(v);
    std::string kind;
    is >> kind;
    std::vector<double> args;
    double x;
    while (is >> x) args.push_back(x);
    if (!is.eof()) fail(line, "malformed profile for '" + key + "': " + v);

    if (kind == "gaussian") {
        if (args.size() < 2 || args.size() > 3)
            fail(line, "gaussian takes: center width [amplitude]");
        return Profile::gaussian(args[0], args[1], args.size() == 3 ? args[2] : 1.0);
    }
    if (kind == "poly_bump") {
        if (args.size() > 1) fail(line, "poly_bump takes: [amplitude]");
        return Profile::poly_bump(args.empty() ? 1.0 : args[0]);
    }
    if (kind == "indicator") {
        if (args.size() != 2) fail(line, "indicator takes: a b");
        return Profile::indicator(args[0], args[1]);
    }
    if (kind == "sine_mode") {
        if (args.size() != 1 || args[0] != static_cast<int>(args[0]))
            fail(line, "sine_mode takes an integer mode index");
        return Profile::sine_mode(static_cast<int>(args[0]));
    }
    fail(line, "unknown profile kind '" + kind + "' for '" + key + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool have_scenario = false;

    std::istringstream is(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header: " + s);
            section = trim(s.substr(1, s.size() - 2));
            if (section != "problem" && section != "discretization" && section != "output")
                fail(line, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value': " + s);
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty()) fail(line, "expected 'key = value': " + s);

        if (section.empty()) {
            if (key == "scenario") {
                try {
                    cfg = scenario_config(val);
                } catch (const std::exception& e) {
                    fail(line, e.what());
                }
                have_scenario = true;
                continue;
            }
            fail(line, "key '" + key + "' outside any section");
        }

        if (section == "problem") {
            if (key == "m") cfg.problem.m = parse_int(line, key, val);
            else if (key == "gamma") cfg.problem.gamma = parse_num(line, key, val);
            else if (key == "beta") cfg.problem.beta = parse_num(line, key, val);
            else if (key == "L") cfg.problem.L = parse_num(line, key, val);
            else if (key == "T") cfg.problem.T = parse_num(line, key, val);
            else if (key == "u0") cfg.problem.u0 = parse_profile(line, key, val);
            else if (key == "bc_left") cfg.problem.bc_left = parse_num(line, key, val);
            else if (key == "bc_right") cfg.problem.bc_right = parse_num(line, key, val);
            else if (key == "forcing") {
                if (val == "zero") {
                    cfg.problem.forcing = Forcing::zero();
                } else {
                    std::istringstream fs(val);
                    std::string kind;
                    double rate;
                    if (!(fs >> kind >> rate) || kind != "manufactured" || !fs.eof())
                        fail(line, "forcing is 'zero' or 'manufactured RATE'");
                    // manufactured forcing drives u_ex = e^{-rate t} u0
                    cfg.problem.forcing = Forcing::manufactured(cfg.problem.u0, rate);
                }
            } else {
                fail(line, "unknown key '" + key + "' in [problem]");
            }
        } else if (section == "discretization") {
            if (key == "n") cfg.n = parse_int(line, key, val);
            else if (key == "scheme") {
                try {
                    cfg.scheme.kind = scheme_from_name(val);
                } catch (const std::exception& e) {
                    fail(line, e.what());
                }
            } else if (key == "tau") cfg.scheme.tau = parse_num(line, key, val);
            else if (key == "panels") cfg.panels = parse_int(line, key, val);
            else if (key == "gauss_points") cfg.gauss_points = parse_int(line, key, val);
            else fail(line, "unknown key '" + key + "' in [discretization]");
        } else {  // output
            if (key == "dir") cfg.out_dir = val;
            else if (key == "snapshot_every") cfg.snapshot_every = parse_int(line, key, val);
            else if (key == "svg") cfg.svg = parse_bool(line, key, val);
            else fail(line, "unknown key '" + key + "' in [output]");
        }
    }

    if (cfg.n < 1) throw ConfigError("n must be >= 1");
    if (cfg.scheme.tau <= 0.0) throw ConfigError("tau must be positive");
    try {
        cfg.problem.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    (void)have_scenario;
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config(os.str());
}

}  // namespace efk
