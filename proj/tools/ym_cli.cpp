// command-line front end: verification suite, the two flows, bracket tables,
// reduction checks, and Hodge-style field splitting, driven by a key=value
// config file plus a few overriding flags.
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ym/clebsch/clebsch.hpp"
#include "ym/harness/csv.hpp"
#include "ym/harness/snapshot.hpp"
#include "ym/harness/suite.hpp"

namespace {

using namespace ym;

struct Options {
    std::string config_path;
    std::string out_dir;
    std::string snapshot_in;
    std::uint64_t seed = 0;
    bool quiet = false;
    int jobs = 1;
    int degree = 1;
    std::string select;
    bool have_seed = false;
    bool have_out = false;
    bool have_select = false;
};

RunConfig effective_config(const Options& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = load_config(opt.config_path);
    if (opt.have_seed) cfg.seed = opt.seed;
    if (opt.have_out) cfg.out_dir = opt.out_dir;
    if (opt.have_select) cfg.suite_select = opt.select;
    return cfg;
}

std::string join(const std::string& dir, const char* name) {
    if (dir.empty() || dir == ".") return name;
    return dir + "/" + name;
}

void ensure_out_dir(const std::string& dir) {
    if (!dir.empty() && dir != ".") std::filesystem::create_directories(dir);
}

int cmd_verify(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    const SuiteReport rep = run_suite(cfg, opt.jobs);
    const std::string text = format_report(rep);
    if (opt.quiet) {
        const std::size_t nl = text.rfind('\n', text.size() - 2);
        std::fputs(text.c_str() + (nl == std::string::npos ? 0 : nl + 1), stdout);
    } else {
        std::fputs(text.c_str(), stdout);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_evolve_r(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    ensure_out_dir(cfg.out_dir);
    const CubicalComplex3 X = build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
    Rng rng(cfg.seed);
    const Connection A0 =
        random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude);
    const AlgCochain p0 =
        random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude);
    const ReducedPointR0 start = project_R0(A0, p0, cfg.cg_tol, cfg.cg_maxit);
    const EvolveResultR res = evolve_R(start.A, start.p, cfg.dt, cfg.steps);
    write_trajectory_csv(join(cfg.out_dir, "evolve_r.csv"), res.record);
    write_snapshot(join(cfg.out_dir, "final_a.yms"), res.state.A);
    write_snapshot(join(cfg.out_dir, "final_p.yms"), res.state.p);
    if (!opt.quiet) {
        const double e0 = res.record.samples.front().energy;
        const double e1 = res.record.samples.back().energy;
        std::printf("wave flow: %ld steps, dt %.3e, energy %.12e -> %.12e "
                    "(drift %.3e)\n",
                    cfg.steps, cfg.dt, e0, e1, std::fabs(e1 - e0));
        std::printf("wrote %s, %s, %s\n", join(cfg.out_dir, "evolve_r.csv").c_str(),
                    join(cfg.out_dir, "final_a.yms").c_str(),
                    join(cfg.out_dir, "final_p.yms").c_str());
    }
    return 0;
}

int cmd_evolve_t(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    ensure_out_dir(cfg.out_dir);
    const CubicalComplex3 X = build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
    Rng rng(cfg.seed);
    const Connection A(X, 1, cfg.algebra_n); // flat base for the linear flow
    const AlgCochain E0 = cov_d_star(
        A, random_cochain(X, 2, cfg.algebra_n, rng, cfg.init_amplitude));
    const AlgCochain B0 =
        cov_d(A, random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude));
    const EvolveResultT res =
        evolve_T(PhasePointT{A, E0, B0}, cfg.dt, cfg.steps, cfg.convention);
    write_trajectory_csv(join(cfg.out_dir, "evolve_t.csv"), res.record);
    write_snapshot(join(cfg.out_dir, "final_e.yms"), res.state.E);
    write_snapshot(join(cfg.out_dir, "final_b.yms"), res.state.B);
    if (!opt.quiet) {
        const double e0 = res.record.samples.front().energy;
        const double e1 = res.record.samples.back().energy;
        std::printf("field flow: %ld steps, dt %.3e, quadratic invariant "
                    "%.12e -> %.12e (drift %.3e)\n",
                    cfg.steps, cfg.dt, e0, e1, std::fabs(e1 - e0));
        std::printf("wrote %s, %s, %s\n", join(cfg.out_dir, "evolve_t.csv").c_str(),
                    join(cfg.out_dir, "final_e.yms").c_str(),
                    join(cfg.out_dir, "final_b.yms").c_str());
    }
    return 0;
}

int cmd_bracket(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    const CubicalComplex3 X = build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
    Rng rng(cfg.seed);
    const Connection A =
        random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude);
    const PhasePointT pt{
        A, random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude),
        random_cochain(X, 2, cfg.algebra_n, rng, cfg.init_amplitude)};
    const std::vector<Observable> obs = builtin_observables(A);
    double worst = 0.0;
    std::printf("pairwise Poisson brackets at a seeded phase point\n");
    for (const Observable& f : obs) {
        for (const Observable& g : obs) {
            const double direct = poisson_T(f, g, pt);
            const Observable closed = poisson_observable(f, g);
            const double via_closed = closed.eval(pt);
            const double defect = std::fabs(direct - via_closed);
            worst = std::max(worst, defect);
            if (!opt.quiet)
                std::printf("  {%s, %s} = %+.12e   closed form %-18s defect %.3e\n",
                            f.name.c_str(), g.name.c_str(), direct,
                            closed.name.c_str(), defect);
        }
    }
    std::printf("max closed-form defect %.3e\n", worst);
    return worst <= 1e-8 ? 0 : 1;
}

int cmd_clebsch_check(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    const CubicalComplex3 X = build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
    Rng rng(cfg.seed);
    const Connection A = random_cochain(X, 1, cfg.algebra_n, rng);
    const AlgCochain p = random_cochain(X, 1, cfg.algebra_n, rng);
    const double r_symp = check_gamma_symplecto(A, p, 8, rng, cfg.cg_tol);

    const Connection A0(X, 1, cfg.algebra_n);
    const AlgCochain p0 =
        random_cochain(X, 1, cfg.algebra_n, rng, cfg.init_amplitude);
    const std::vector<Observable> obs = builtin_observables(A0);
    double r_corr = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i)
        for (std::size_t j = i + 1; j < obs.size(); ++j)
            r_corr = std::max(r_corr, check_bracket_correspondence(
                                          obs[i], obs[j], A0, p0, cfg.cg_tol));
    if (!opt.quiet) {
        std::printf("pullback of the field form vs the momentum form: %.3e\n",
                    r_symp);
        std::printf("observable brackets vs reduced-space brackets:    %.3e\n",
                    r_corr);
    }
    const bool ok = r_symp <= 1e-7 && r_corr <= 1e-7;
    std::printf("%s (tolerance 1e-07)\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_decompose(const Options& opt) {
    const RunConfig cfg = effective_config(opt);
    ensure_out_dir(cfg.out_dir);
    AlgCochain field;
    if (!opt.snapshot_in.empty()) {
        field = read_snapshot(opt.snapshot_in, cfg.h);
    } else {
        const CubicalComplex3 X =
            build_torus(cfg.dim_x(), cfg.dim_y(), cfg.dim_z(), cfg.h);
        Rng rng(cfg.seed);
        field = random_cochain(X, opt.degree, cfg.algebra_n, rng,
                               cfg.init_amplitude);
    }
    const Connection A(field.lattice(), 1, field.n());
    if (field.degree() == 1) {
        const TangentDecomposition dec =
            decompose_tangent(A, field, cfg.cg_tol, cfg.cg_maxit);
        write_snapshot(join(cfg.out_dir, "part_gauge.yms"), dec.xi);
        write_snapshot(join(cfg.out_dir, "part_divfree.yms"), dec.y);
        const double resid = norm(cov_d_star(A, dec.y));
        if (!opt.quiet)
            std::printf("degree-1 split: |field| %.6e, |gauge part| %.6e, "
                        "|div-free part| %.6e, residual %.3e\n",
                        norm(field), norm(dec.xi), norm(dec.y), resid);
        std::printf("wrote %s, %s\n", join(cfg.out_dir, "part_gauge.yms").c_str(),
                    join(cfg.out_dir, "part_divfree.yms").c_str());
        return 0;
    }
    if (field.degree() == 2) {
        const CotangentDecomposition dec =
            decompose_cotangent(A, field, cfg.cg_tol, cfg.cg_maxit);
        write_snapshot(join(cfg.out_dir, "part_coexact.yms"),
                       cov_d_star(A, dec.lambda));
        write_snapshot(join(cfg.out_dir, "part_closed.yms"), dec.w);
        const double resid = norm(cov_d(A, dec.w));
        if (!opt.quiet)
            std::printf("degree-2 split: |field| %.6e, |coexact part| %.6e, "
                        "|closed part| %.6e, residual %.3e\n",
                        norm(field), norm(cov_d_star(A, dec.lambda)),
                        norm(dec.w), resid);
        std::printf("wrote %s, %s\n", join(cfg.out_dir, "part_coexact.yms").c_str(),
                    join(cfg.out_dir, "part_closed.yms").c_str());
        return 0;
    }
    std::fprintf(stderr, "decompose: only degree-1 and degree-2 fields split\n");
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice laboratory for gauge-field phase spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    CLI::Option* seed_opt = app.add_option("--seed", opt.seed, "override config seed");
    CLI::Option* out_opt =
        app.add_option("--out", opt.out_dir, "override config output directory");
    app.add_option("--config", opt.config_path, "key = value config file");
    app.add_flag("--quiet", opt.quiet, "summary lines only");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--jobs", opt.jobs, "worker threads")
        ->check(CLI::Range(1, 64));
    CLI::Option* sel_opt = verify->add_option(
        "--select", opt.select, "comma-separated substrings of check names");
    app.add_subcommand("evolve-r", "leapfrog flow of the connection system");
    app.add_subcommand("evolve-t", "midpoint flow of the field system");
    app.add_subcommand("bracket", "Poisson table of the built-in observables");
    app.add_subcommand("clebsch-check",
                       "reduction-map identities with pass/fail verdict");
    CLI::App* dec = app.add_subcommand("decompose", "split a field into parts");
    dec->add_option("--in", opt.snapshot_in, "snapshot file to split");
    dec->add_option("--degree", opt.degree, "degree of the generated field")
        ->check(CLI::Range(1, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.have_seed = seed_opt->count() > 0;
    opt.have_out = out_opt->count() > 0;
    opt.have_select = sel_opt->count() > 0;

    try {
        if (app.got_subcommand("verify")) return cmd_verify(opt);
        if (app.got_subcommand("evolve-r")) return cmd_evolve_r(opt);
        if (app.got_subcommand("evolve-t")) return cmd_evolve_t(opt);
        if (app.got_subcommand("bracket")) return cmd_bracket(opt);
        if (app.got_subcommand("clebsch-check")) return cmd_clebsch_check(opt);
        if (app.got_subcommand("decompose")) return cmd_decompose(opt);
    } catch (const ym::FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
