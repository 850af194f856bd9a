#include "ym/dynamics/dynamics.hpp"

#include <cmath>
#include <string>

namespace ym {

namespace {

AlgCochain force_R(const Connection& A) {
    AlgCochain f = cov_d_star(A, curvature(A));
    f *= -1.0;
    return f;
}

TrajectorySample sample_R(long step, double dt, const Connection& A,
                          const AlgCochain& p) {
    TrajectorySample s;
    s.step = step;
    s.time = step * dt;
    const AlgCochain F = curvature(A);
    const double fn = norm(F);
    const double pn = norm(p);
    s.energy = 0.5 * (fn * fn + pn * pn);
    s.gauss_e = norm(cov_d_star(A, p));
    s.bianchi_defect = norm(cov_d(A, F));
    s.gauss_b = s.bianchi_defect; // the magnetic field of this flow is F_A
    s.charge_norm = conserved_charge(clebsch_phi(A, p)).frobenius_norm();
    return s;
}

TrajectorySample sample_T(long step, double dt, const PhasePointT& pt,
                          double bianchi) {
    TrajectorySample s;
    s.step = step;
    s.time = step * dt;
    const double de = norm(cov_d(pt.A, pt.E));
    const double db = norm(cov_d_star(pt.A, pt.B));
    s.energy = 0.5 * (de * de + db * db);
    s.gauss_e = norm(cov_d_star(pt.A, pt.E));
    s.gauss_b = norm(cov_d(pt.A, pt.B));
    s.charge_norm = conserved_charge(pt).frobenius_norm();
    s.bianchi_defect = bianchi;
    return s;
}

void ensure_finite(const AlgCochain& c, long step, const char* what) {
    if (!c.all_finite())
        throw NumericalBlowup(std::string(what) + ": non-finite field values",
                              static_cast<int>(step));
}

} // namespace

EvolveResultR evolve_R(const Connection& A0, const AlgCochain& p0, double dt,
                       long steps, int record_stride) {
    if (A0.degree() != 1 || p0.degree() != 1)
        throw DegreeError("evolve_R: A and p must both have degree 1");
    if (record_stride < 1) record_stride = 1;

    EvolveResultR out{PhasePointR{A0, p0}, {}};
    Connection& A = out.state.A;
    AlgCochain& p = out.state.p;
    AlgCochain f = force_R(A);

    out.record.samples.push_back(sample_R(0, dt, A, p));
    for (long k = 1; k <= steps; ++k) {
        p.add_scaled(0.5 * dt, f); // kick
        A.add_scaled(dt, p);       // drift
        f = force_R(A);
        p.add_scaled(0.5 * dt, f); // kick
        ensure_finite(A, k, "evolve_R");
        ensure_finite(p, k, "evolve_R");
        if (k % record_stride == 0 || k == steps)
            out.record.samples.push_back(sample_R(k, dt, A, p));
    }
    return out;
}

EvolveResultT evolve_T(const PhasePointT& pt0, double dt, long steps,
                       Convention convention, int record_stride,
                       double fixed_point_tol, int fixed_point_maxit) {
    if (record_stride < 1) record_stride = 1;
    const double s = (convention == Convention::intro) ? -1.0 : 1.0;
    // Edot = s * d_A* B,  Bdot = -s * d_A E

    EvolveResultT out{pt0, {}};
    const Connection& A = out.state.A;
    AlgCochain& E = out.state.E;
    AlgCochain& B = out.state.B;
    const double bianchi = norm(cov_d(A, curvature(A)));

    out.record.samples.push_back(sample_T(0, dt, out.state, bianchi));
    AlgCochain En = E, Bn = B, Em = E, Bm = B;
    for (long k = 1; k <= steps; ++k) {
        // midpoint equation: z' = z + dt * L((z + z')/2), solved by iteration
        En = E;
        Bn = B;
        double scale = std::max(1.0, std::max(norm(E), norm(B)));
        int it = 0;
        for (;; ++it) {
            if (it >= fixed_point_maxit)
                throw ConvergenceError("evolve_T: midpoint iteration stalled", it,
                                       scale);
            Em = E;
            Em += En;
            Em *= 0.5;
            Bm = B;
            Bm += Bn;
            Bm *= 0.5;
            AlgCochain Enew = E;
            Enew.add_scaled(s * dt, cov_d_star(A, Bm));
            AlgCochain Bnew = B;
            Bnew.add_scaled(-s * dt, cov_d(A, Em));
            Enew -= En;
            Bnew -= Bn;
            const double delta = std::max(Enew.max_abs(), Bnew.max_abs());
            En += Enew;
            Bn += Bnew;
            if (delta <= fixed_point_tol * scale) break;
        }
        E = En;
        B = Bn;
        ensure_finite(E, k, "evolve_T");
        ensure_finite(B, k, "evolve_T");
        if (k % record_stride == 0 || k == steps)
            out.record.samples.push_back(sample_T(k, dt, out.state, bianchi));
    }
    return out;
}

MaxwellImageReport maxwell_image_check(const Connection& A0, const AlgCochain& p0,
                                       double dt, long steps) {
    Connection A = A0;
    AlgCochain p = p0;
    AlgCochain f = force_R(A);

    MaxwellImageReport rep;
    AlgCochain E = p;
    E *= -1.0;
    AlgCochain B = curvature(A);
    rep.gauss_initial = norm(cov_d_star(A, E));
    rep.gauss_max = rep.gauss_initial;

    for (long k = 1; k <= steps; ++k) {
        const Connection A_prev = A;
        const AlgCochain E_prev = E;
        const AlgCochain B_prev = B;

        p.add_scaled(0.5 * dt, f);
        A.add_scaled(dt, p);
        f = force_R(A);
        p.add_scaled(0.5 * dt, f);
        ensure_finite(A, k, "maxwell_image_check");
        ensure_finite(p, k, "maxwell_image_check");

        E = p;
        E *= -1.0;
        B = curvature(A);

        // forward differences against the right-hand sides at the old state
        AlgCochain de = E;
        de -= E_prev;
        de *= 1.0 / dt;
        de -= cov_d_star(A_prev, B_prev);
        rep.electric_residual = std::max(rep.electric_residual, norm(de));

        AlgCochain db = B;
        db -= B_prev;
        db *= 1.0 / dt;
        db += cov_d(A_prev, E_prev);
        rep.magnetic_residual = std::max(rep.magnetic_residual, norm(db));

        rep.gauss_max = std::max(rep.gauss_max, norm(cov_d_star(A, E)));
    }
    return rep;
}

} // namespace ym
