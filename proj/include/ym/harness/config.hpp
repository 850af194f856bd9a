#ifndef YM_HARNESS_CONFIG_HPP
#define YM_HARNESS_CONFIG_HPP

#include <cstdint>
#include <string>

#include "ym/dynamics/dynamics.hpp"

namespace ym {

// Runtime configuration, parsed from plain-text `key = value` lines.
// Blank lines and lines starting with '#' are ignored.  Keys:
//
//   lattice.n        cube edge length (used for any axis not set explicitly)
//   lattice.nx/ny/nz per-axis overrides
//   lattice.h        lattice spacing (> 0)
//   algebra.n        matrix rank of the structure algebra (>= 2)
//   seed             unsigned 64-bit RNG seed
//   cg.tol           relative residual target of the iterative solver
//   cg.maxit         solver iteration budget (0 = automatic)
//   fd.step          step for finite-difference audits
//   dt               time step for the integrators
//   steps            number of integration steps
//   convention       `intro` or `body` (sign convention of the linear flow)
//   out.dir          output directory for CSV and snapshot files
//   init.amplitude   amplitude of randomly generated initial data
//   suite.select     comma-separated substrings; run only matching checks
struct RunConfig {
    int lattice_n = 2;
    int nx = 0, ny = 0, nz = 0; // 0 = inherit lattice_n
    double h = 1.0;
    int algebra_n = 2;
    std::uint64_t seed = 12345;
    double cg_tol = 1e-10;
    int cg_maxit = 0;
    double fd_step = 1e-4;
    double dt = 1e-3;
    long steps = 100;
    Convention convention = Convention::intro;
    std::string out_dir = ".";
    double init_amplitude = 0.1;
    std::string suite_select;

    int dim_x() const { return nx > 0 ? nx : lattice_n; }
    int dim_y() const { return ny > 0 ? ny : lattice_n; }
    int dim_z() const { return nz > 0 ? nz : lattice_n; }
};

// Parse a config file.  Unknown keys, malformed values, and out-of-range
// values raise FormatError whose message names the key and the line number.
RunConfig load_config(const std::string& path);

// Same parser on an in-memory string; `origin` is used in error messages.
RunConfig parse_config(const std::string& text, const std::string& origin);

// One `key = value` assignment applied to an existing config (also the
// backend of the CLI's --set flag).  `line` is used in error messages.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value, const std::string& origin,
                        int line);

} // namespace ym

#endif
