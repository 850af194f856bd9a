#include "ym/harness/config.hpp"

#include <fstream>
#include <sstream>

#include "ym/core/errors.hpp"

namespace ym {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw FormatError(origin + " line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& key, const std::string& value,
                    const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size())
            fail(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
        return x;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        fail(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
    }
}

long parse_long(const std::string& key, const std::string& value,
                const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        const long x = std::stol(value, &used);
        if (used != value.size())
            fail(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
        return x;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        fail(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value,
                        const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        const unsigned long long x = std::stoull(value, &used);
        if (used != value.size() || value.find('-') != std::string::npos)
            fail(origin, line,
                 "key '" + key + "': expected an unsigned integer, got '" + value + "'");
        return x;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        fail(origin, line,
             "key '" + key + "': expected an unsigned integer, got '" + value + "'");
    }
}

int parse_positive_int(const std::string& key, const std::string& value,
                       const std::string& origin, int line, int min_value) {
    const long x = parse_long(key, value, origin, line);
    if (x < min_value)
        fail(origin, line, "key '" + key + "': must be >= " + std::to_string(min_value) +
                               ", got '" + value + "'");
    return static_cast<int>(x);
}

double parse_positive_double(const std::string& key, const std::string& value,
                             const std::string& origin, int line) {
    const double x = parse_double(key, value, origin, line);
    if (!(x > 0.0)) fail(origin, line, "key '" + key + "': must be positive, got '" + value + "'");
    return x;
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value, const std::string& origin,
                        int line) {
    if (key == "lattice.n") {
        cfg.lattice_n = parse_positive_int(key, value, origin, line, 1);
    } else if (key == "lattice.nx") {
        cfg.nx = parse_positive_int(key, value, origin, line, 1);
    } else if (key == "lattice.ny") {
        cfg.ny = parse_positive_int(key, value, origin, line, 1);
    } else if (key == "lattice.nz") {
        cfg.nz = parse_positive_int(key, value, origin, line, 1);
    } else if (key == "lattice.h") {
        cfg.h = parse_positive_double(key, value, origin, line);
    } else if (key == "algebra.n") {
        cfg.algebra_n = parse_positive_int(key, value, origin, line, 2);
    } else if (key == "seed") {
        cfg.seed = parse_u64(key, value, origin, line);
    } else if (key == "cg.tol") {
        cfg.cg_tol = parse_positive_double(key, value, origin, line);
    } else if (key == "cg.maxit") {
        cfg.cg_maxit = parse_positive_int(key, value, origin, line, 0);
    } else if (key == "fd.step") {
        cfg.fd_step = parse_positive_double(key, value, origin, line);
    } else if (key == "dt") {
        cfg.dt = parse_positive_double(key, value, origin, line);
    } else if (key == "steps") {
        const long x = parse_long(key, value, origin, line);
        if (x < 0) fail(origin, line, "key 'steps': must be >= 0, got '" + value + "'");
        cfg.steps = x;
    } else if (key == "convention") {
        if (value == "intro")
            cfg.convention = Convention::intro;
        else if (value == "body")
            cfg.convention = Convention::body;
        else
            fail(origin, line,
                 "key 'convention': expected 'intro' or 'body', got '" + value + "'");
    } else if (key == "out.dir") {
        if (value.empty()) fail(origin, line, "key 'out.dir': must not be empty");
        cfg.out_dir = value;
    } else if (key == "init.amplitude") {
        cfg.init_amplitude = parse_positive_double(key, value, origin, line);
    } else if (key == "suite.select") {
        cfg.suite_select = value;
    } else {
        fail(origin, line, "unknown key '" + key + "'");
    }
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            fail(origin, line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(origin, line, "missing key before '='");
        apply_config_entry(cfg, key, value, origin, line);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace ym
