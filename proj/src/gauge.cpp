#include "ym/ops/gauge.hpp"

#include "ym/kernels/kernels.hpp"

namespace ym {

namespace {

inline void block_axpy(double s, const cplx* x, cplx* y, int nn) {
    for (int i = 0; i < nn; ++i) y[i] += s * x[i];
}

// cellwise conjugate transpose
AlgCochain dagger_cochain(const AlgCochain& c) {
    AlgCochain out = c.zeros_like();
    const int n = c.n();
    for (int cell = 0; cell < c.num_cells(); ++cell) {
        const cplx* src = c.at(cell);
        cplx* dst = out.at(cell);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dst[i * n + j] = std::conj(src[j * n + i]);
    }
    return out;
}

} // namespace

AlgCochain curvature(const Connection& A) {
    if (A.degree() != 1) throw DegreeError("curvature: connection must have degree 1");
    AlgCochain F = coboundary(A);
    F += cup(A, A);
    return F;
}

AlgCochain cov_d(const Connection& A, const AlgCochain& c) {
    if (A.degree() != 1) throw DegreeError("cov_d: connection must have degree 1");
    if (c.degree() >= 3) throw DegreeError("cov_d: input degree must be < 3");
    AlgCochain out = coboundary(c);
    out += bracket_cup(A, c);
    return out;
}

AlgCochain cov_d_star(const Connection& A, const AlgCochain& u) {
    if (A.degree() != 1) throw DegreeError("cov_d_star: connection must have degree 1");
    if (u.degree() == 0) throw DegreeError("cov_d_star: input degree must be >= 1");
    const CubicalComplex3& X = u.lattice();
    const int n = u.n();
    const int nn = u.nn();
    const int k = u.degree() - 1; // output degree
    AlgCochain out(X, k, n);
    AlgCochain Adag = dagger_cochain(A);
    const auto& kops = kern::ops();
    const int nsets_in = CubicalComplex3::num_sets(k + 1);
    const int V = X.volume();
    // sign of the c ∪ A term inside [A ∪ c] at input degree k
    const double cupA_sign = (k % 2 == 0) ? -1.0 : 1.0;

    // every accumulation in cov_d scatters back here with the matrix factor
    // conjugate-transposed:
    //   out(x,T)        += eps * [ u(x+mu,...) ... ]   (plain d part)
    //   out(x,S)        += sign * A(x,P) * u(...)      (A ∪ c part)
    //   out(x,P)        += +-sign * u(...) * A(x+P,Q)  (c ∪ A part)
    for (int site = 0; site < V; ++site) {
        for (int so = 0; so < nsets_in; ++so) {
            const std::uint8_t S = CubicalComplex3::kSetMask[k + 1][so];
            const cplx* uv = u.at(site, so);

            for (int mu = 1; mu <= 3; ++mu) {
                const std::uint8_t mbit = 1u << (mu - 1);
                if (!(S & mbit)) continue;
                const std::uint8_t R = S & ~mbit;
                const int ri = CubicalComplex3::set_index(R);

                // transpose of the coboundary part
                const double eps = coboundary_sign(S, mu);
                block_axpy(eps, uv, out.at(X.shift(site, mu, +1), ri), nn);
                block_axpy(-eps, uv, out.at(site, ri), nn);

                // transpose of the A ∪ c part: forward was
                //   out(x,S) += sign({mu},R) * A(x,{mu}) * c(x+mu, R)
                {
                    const double sgn = shuffle_sign(mbit, R);
                    const cplx* ad = Adag.at(site, CubicalComplex3::set_index(mbit));
                    kops.gemm_acc(n, sgn, ad, uv, out.at(X.shift(site, mu, +1), ri));
                }

                // transpose of the c ∪ A part: forward was
                //   out(x,S) += cupA_sign * sign(R,{mu}) * c(x,R) * A(x+R,{mu})
                {
                    const double sgn = cupA_sign * shuffle_sign(R, mbit);
                    const cplx* ad = Adag.at(X.shift_mask(site, R),
                                             CubicalComplex3::set_index(mbit));
                    kops.gemm_acc(n, sgn, uv, ad, out.at(site, ri));
                }
            }
        }
    }
    return out;
}

TangentT fundamental_vf(const AlgCochain& xi, const PhasePointT& pt) {
    if (xi.degree() != 0) throw DegreeError("fundamental_vf: xi must have degree 0");
    return TangentT{cov_d(pt.A, xi), pointwise_bracket(pt.E, xi),
                    pointwise_bracket(pt.B, xi)};
}

namespace {

struct FlowState {
    AlgCochain A;
    std::vector<AlgCochain> fibers;
};

FlowState flow_derivative(const AlgCochain& xi, const FlowState& s) {
    FlowState d;
    d.A = cov_d(s.A, xi);
    d.fibers.reserve(s.fibers.size());
    for (const auto& f : s.fibers) d.fibers.push_back(pointwise_bracket(f, xi));
    return d;
}

void flow_axpy(FlowState& y, double a, const FlowState& x) {
    y.A.add_scaled(a, x.A);
    for (std::size_t i = 0; i < y.fibers.size(); ++i)
        y.fibers[i].add_scaled(a, x.fibers[i]);
}

void rk4_flow(const AlgCochain& xi, double t, int steps, FlowState& s) {
    if (steps < 1) steps = 1;
    const double dt = t / steps;
    for (int step = 0; step < steps; ++step) {
        FlowState k1 = flow_derivative(xi, s);
        FlowState s2 = s;
        flow_axpy(s2, 0.5 * dt, k1);
        FlowState k2 = flow_derivative(xi, s2);
        FlowState s3 = s;
        flow_axpy(s3, 0.5 * dt, k2);
        FlowState k3 = flow_derivative(xi, s3);
        FlowState s4 = s;
        flow_axpy(s4, dt, k3);
        FlowState k4 = flow_derivative(xi, s4);
        flow_axpy(s, dt / 6.0, k1);
        flow_axpy(s, dt / 3.0, k2);
        flow_axpy(s, dt / 3.0, k3);
        flow_axpy(s, dt / 6.0, k4);
    }
}

} // namespace

PhasePointT gauge_flow(const AlgCochain& xi, double t, const PhasePointT& pt,
                       int steps) {
    FlowState s{pt.A, {pt.E, pt.B}};
    rk4_flow(xi, t, steps, s);
    return PhasePointT{std::move(s.A), std::move(s.fibers[0]),
                       std::move(s.fibers[1])};
}

void gauge_flow_generic(const AlgCochain& xi, double t, int steps, AlgCochain& A,
                        std::vector<AlgCochain*> fibers) {
    FlowState s;
    s.A = A;
    for (auto* f : fibers) s.fibers.push_back(*f);
    rk4_flow(xi, t, steps, s);
    A = std::move(s.A);
    for (std::size_t i = 0; i < fibers.size(); ++i) *fibers[i] = std::move(s.fibers[i]);
}

std::pair<double, double> gauss_residuals(const PhasePointT& pt) {
    return {norm(cov_d(pt.A, pt.B)), norm(cov_d_star(pt.A, pt.E))};
}

} // namespace ym
