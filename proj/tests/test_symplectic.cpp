#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "ym/symplectic/forms.hpp"

using namespace ym;

namespace {

TangentT random_tangent_T(const CubicalComplex3& X, int n, Rng& rng) {
    return {random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
            random_cochain(X, 2, n, rng)};
}

PhasePointT random_point_T(const CubicalComplex3& X, int n, Rng& rng) {
    return {random_cochain(X, 1, n, rng), random_cochain(X, 1, n, rng),
            random_cochain(X, 2, n, rng)};
}

PhasePointT shifted(const PhasePointT& pt, const TangentT& v, double t) {
    PhasePointT q = pt;
    q.A.add_scaled(t, v.a);
    q.E.add_scaled(t, v.e);
    q.B.add_scaled(t, v.beta);
    return q;
}

AlgCochain constant_scalar(const CubicalComplex3& X, const AlgElement& v) {
    AlgCochain c(X, 0, v.n);
    for (int s = 0; s < X.volume(); ++s)
        std::copy(v.m.begin(), v.m.end(), c.at(s, 0));
    return c;
}

double diff_max(const AlgCochain& a, const AlgCochain& b) {
    AlgCochain d = a;
    d -= b;
    return d.max_abs();
}

} // namespace

TEST_CASE("canonical one- and two-forms match their defining pairings") {
    const CubicalComplex3 X = build_torus(2, 3, 2, 0.5);
    Rng rng(91);
    const PhasePointS ptS{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    const TangentS v1{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    const TangentS v2{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};

    CHECK(theta_S(ptS, v1) ==
          doctest::Approx(inner(v1.a, hodge(ptS.lambda))).epsilon(1e-13));
    CHECK(omega_S(ptS, v1, v2) ==
          doctest::Approx(inner(v2.a, hodge(v1.alpha)) - inner(v1.a, hodge(v2.alpha)))
              .epsilon(1e-13));

    const PhasePointR ptR{ptS.A, random_cochain(X, 1, 2, rng)};
    const TangentR w1{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng)};
    const TangentR w2{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng)};
    CHECK(sigma_R(ptR, w1, w2) ==
          doctest::Approx(inner(w2.a, w1.x) - inner(w1.a, w2.x)).epsilon(1e-13));

    const PhasePointT ptT = random_point_T(X, 2, rng);
    const TangentT u1 = random_tangent_T(X, 2, rng);
    const TangentT u2 = random_tangent_T(X, 2, rng);
    CHECK(Theta_T(ptT, u1) ==
          doctest::Approx(inner(u1.e, cov_d_star(ptT.A, ptT.B))).epsilon(1e-13));
    const double want = inner(bracket_cup(u1.a, u2.e), ptT.B) -
                        inner(bracket_cup(u2.a, u1.e), ptT.B) +
                        inner(u2.e, cov_d_star(ptT.A, u1.beta)) -
                        inner(u1.e, cov_d_star(ptT.A, u2.beta));
    CHECK(Omega_T(ptT, u1, u2) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("two-forms are antisymmetric and bilinear") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(92);
    const PhasePointT pt = random_point_T(X, 2, rng);
    const TangentT v1 = random_tangent_T(X, 2, rng);
    const TangentT v2 = random_tangent_T(X, 2, rng);
    const TangentT v3 = random_tangent_T(X, 2, rng);
    const double o12 = Omega_T(pt, v1, v2);
    CHECK(std::fabs(o12 + Omega_T(pt, v2, v1)) <= 1e-12 * std::fabs(o12));
    CHECK(std::fabs(Omega_T(pt, v1, v1)) <= 1e-12);

    // linear combination in the first slot
    const double s = 0.75, t = -1.25;
    TangentT comb{v1.a, v1.e, v1.beta};
    comb.a *= s;
    comb.e *= s;
    comb.beta *= s;
    comb.a.add_scaled(t, v3.a);
    comb.e.add_scaled(t, v3.e);
    comb.beta.add_scaled(t, v3.beta);
    const double lhs = Omega_T(pt, comb, v2);
    const double rhs = s * o12 + t * Omega_T(pt, v3, v2);
    CHECK(std::fabs(lhs - rhs) <= 1e-11 * (1.0 + std::fabs(rhs)));
}

TEST_CASE("the two-forms are the exterior derivatives of the one-forms") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(93);
    const double t = 1e-4;

    SUBCASE("cotangent-bundle form") {
        const PhasePointS pt{random_cochain(X, 1, 2, rng),
                             random_cochain(X, 2, 2, rng)};
        const TangentS v1{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
        const TangentS v2{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
        auto move = [&](const TangentS& v, double s) {
            return PhasePointS{pt.A, [&] {
                                   AlgCochain l = pt.lambda;
                                   l.add_scaled(s, v.alpha);
                                   return l;
                               }()};
        };
        const double d12 =
            (theta_S(move(v1, t), v2) - theta_S(move(v1, -t), v2)) / (2 * t);
        const double d21 =
            (theta_S(move(v2, t), v1) - theta_S(move(v2, -t), v1)) / (2 * t);
        CHECK(std::fabs((d12 - d21) - omega_S(pt, v1, v2)) <= 1e-9);
    }

    SUBCASE("field-pair form") {
        const PhasePointT pt = random_point_T(X, 2, rng);
        const TangentT v1 = random_tangent_T(X, 2, rng);
        const TangentT v2 = random_tangent_T(X, 2, rng);
        const double d12 =
            (Theta_T(shifted(pt, v1, t), v2) - Theta_T(shifted(pt, v1, -t), v2)) /
            (2 * t);
        const double d21 =
            (Theta_T(shifted(pt, v2, t), v1) - Theta_T(shifted(pt, v2, -t), v1)) /
            (2 * t);
        CHECK(std::fabs((d12 - d21) - Omega_T(pt, v1, v2)) <= 1e-8);
    }
}

TEST_CASE("the field-pair two-form is closed") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(94);
    const PhasePointT pt = random_point_T(X, 2, rng);
    const TangentT v1 = random_tangent_T(X, 2, rng);
    const TangentT v2 = random_tangent_T(X, 2, rng);
    const TangentT v3 = random_tangent_T(X, 2, rng);
    const double t = 1e-4;
    auto dOmega = [&](const TangentT& a, const TangentT& b, const TangentT& c) {
        return (Omega_T(shifted(pt, a, t), b, c) - Omega_T(shifted(pt, a, -t), b, c)) /
               (2 * t);
    };
    const double cyc = dOmega(v1, v2, v3) + dOmega(v2, v3, v1) + dOmega(v3, v1, v2);
    CHECK(std::fabs(cyc) <= 1e-8);
}

TEST_CASE("moment maps match their defining expressions") {
    const CubicalComplex3 X = build_torus(2, 2, 3);
    Rng rng(95);
    const Connection A = random_cochain(X, 1, 2, rng);
    const AlgCochain p = random_cochain(X, 1, 2, rng);
    CHECK(diff_max(moment_R(A, p), cov_d_star(A, p)) <= 1e-15);

    const AlgCochain lam = random_cochain(X, 2, 2, rng);
    AlgCochain mS = moment_S(A, lam);
    mS += cov_d(A, lam);
    CHECK(mS.max_abs() <= 1e-15);

    // charge density: Levi-Civita-paired pointwise commutators
    const PhasePointT pt{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    const AlgCochain sW = hodge(cov_d(A, hodge(pt.B)));
    AlgCochain want(X, 3, 2);
    for (int s = 0; s < X.volume(); ++s) {
        AlgElement acc(2);
        for (int mu = 0; mu < 3; ++mu) {
            AlgElement w(2), e(2);
            std::copy(sW.at(s, mu), sW.at(s, mu) + 4, w.m.begin());
            std::copy(pt.E.at(s, mu), pt.E.at(s, mu) + 4, e.m.begin());
            acc += commutator(w, e);
        }
        std::copy(acc.m.begin(), acc.m.end(), want.at(s, 0));
    }
    CHECK(diff_max(moment_T(pt), want) <= 1e-14);
}

TEST_CASE("charge density vanishes for fields in a commuting subalgebra") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(96);
    const AlgElement dir = random_su(2, rng);
    const PhasePointT pt{commuting_cochain(X, 1, dir, rng, 1.0),
                         commuting_cochain(X, 1, dir, rng, 1.0),
                         commuting_cochain(X, 2, dir, rng, 1.0)};
    CHECK(moment_T(pt).max_abs() <= 1e-14);
}

TEST_CASE("moment maps are covariant under a constant frame rotation") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(97);
    const GroupElement U = expm(random_su(2, rng));
    const Connection A = random_cochain(X, 1, 2, rng);
    const AlgCochain p = random_cochain(X, 1, 2, rng);
    CHECK(diff_max(moment_R(conjugate(A, U), conjugate(p, U)),
                   conjugate(moment_R(A, p), U)) <= 1e-13);

    const AlgCochain lam = random_cochain(X, 2, 2, rng);
    CHECK(diff_max(moment_S(conjugate(A, U), conjugate(lam, U)),
                   conjugate(moment_S(A, lam), U)) <= 1e-13);

    const PhasePointT pt = random_point_T(X, 2, rng);
    const PhasePointT ptU{conjugate(pt.A, U), conjugate(pt.E, U),
                          conjugate(pt.B, U)};
    CHECK(diff_max(moment_T(ptU), conjugate(moment_T(pt), U)) <= 1e-13);
}

TEST_CASE("moment conditions hold against finite differences of the forms") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(98);
    const AlgElement z = random_su(2, rng);
    const AlgCochain xi = constant_scalar(X, z);

    const PhasePointR ptR{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng)};
    CHECK(check_moment_condition(xi, ptR, 1e-4, 8, rng) <= 1e-5);

    const PhasePointS ptS{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    CHECK(check_moment_condition(xi, ptS, 1e-4, 8, rng) <= 1e-5);

    const PhasePointT ptT = random_point_T(X, 2, rng);
    CHECK(check_moment_condition(xi, ptT, 1e-4, 8, rng) <= 1e-5);
}

TEST_CASE("transporting fibers through the duality map carries one form to the other") {
    const CubicalComplex3 X = build_torus(2, 3, 2, 0.5);
    Rng rng(99);
    const Connection A = random_cochain(X, 1, 2, rng);
    const PhasePointS ptS{A, random_cochain(X, 2, 2, rng)};
    const TangentS v1{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    const TangentS v2{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    const PhasePointR ptR{A, hodge(ptS.lambda)};
    const TangentR w1{v1.a, hodge(v1.alpha)};
    const TangentR w2{v2.a, hodge(v2.alpha)};
    CHECK(sigma_R(ptR, w1, w2) == omega_S(ptS, v1, v2));
    CHECK(sigma_R(ptR, w2, w1) == -omega_S(ptS, v1, v2));
}

TEST_CASE("observables evaluate and differentiate in closed form") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(100);
    const Connection A = random_cochain(X, 1, 2, rng);
    const PhasePointT pt{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};

    const AlgCochain c2 = random_cochain(X, 2, 2, rng);
    const Observable phi = make_phi_observable(A, c2);
    CHECK(phi.eval(pt) ==
          doctest::Approx(inner(pt.E, cov_d_star(A, c2))).epsilon(1e-13));
    CHECK(phi.varE(pt).values() == c2.values());
    CHECK(phi.varB(pt).max_abs() == 0.0);

    const AlgCochain c1 = random_cochain(X, 1, 2, rng);
    const Observable psi = make_psi_observable(A, c1);
    CHECK(psi.eval(pt) ==
          doctest::Approx(inner(c1, cov_d_star(A, pt.B))).epsilon(1e-13));
    CHECK(psi.varE(pt).max_abs() == 0.0);
    CHECK(psi.varB(pt).values() == c1.values());

    const Observable H = make_vortex_hamiltonian(A);
    const double he = norm(cov_d(A, pt.E)), hb = norm(cov_d_star(A, pt.B));
    CHECK(H.eval(pt) == doctest::Approx(0.5 * (he * he + hb * hb)).epsilon(1e-13));
    CHECK(diff_max(H.varE(pt), cov_d(A, pt.E)) <= 1e-15);
    CHECK(diff_max(H.varB(pt), cov_d_star(A, pt.B)) <= 1e-15);

    const Observable k = make_constant_observable(2.5, A);
    CHECK(k.eval(pt) == 2.5);
    CHECK(k.varE(pt).max_abs() == 0.0);
    CHECK(k.varB(pt).max_abs() == 0.0);

    for (const Observable& obs : builtin_observables(A))
        CHECK(check_variational_derivative(obs, pt, 1e-4, 6, rng) <= 1e-8);
}

TEST_CASE("hamiltonian fields are vertical and reproduce the bracket") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(101);
    const Connection A = random_cochain(X, 1, 2, rng);
    const PhasePointT pt{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    const std::vector<Observable> obs = builtin_observables(A);

    for (const Observable& f : obs) {
        const TangentT xf = hamiltonian_vf_T(f, pt);
        CHECK(xf.a.max_abs() == 0.0);
        AlgCochain e = f.varB(pt);
        e *= -1.0;
        CHECK(xf.e.values() == e.values());
        CHECK(xf.beta.values() == f.varE(pt).values());
    }

    // {f,g} == Omega(X_f, X_g), bit for bit
    for (std::size_t i = 0; i < obs.size(); ++i)
        for (std::size_t j = 0; j < obs.size(); ++j)
            CHECK(poisson_T(obs[i], obs[j], pt) ==
                  Omega_T(pt, hamiltonian_vf_T(obs[i], pt),
                          hamiltonian_vf_T(obs[j], pt)));
}

TEST_CASE("the observable family is closed under the bracket") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(102);
    const Connection A = random_cochain(X, 1, 2, rng);
    const std::vector<Observable> obs = builtin_observables(A);
    const PhasePointT p1{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    const PhasePointT p2{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    for (const Observable& f : obs)
        for (const Observable& g : obs) {
            const Observable h = poisson_observable(f, g);
            CHECK(std::fabs(h.eval(p1) - poisson_T(f, g, p1)) <=
                  1e-12 * (1.0 + std::fabs(h.eval(p1))));
            CHECK(std::fabs(h.eval(p2) - poisson_T(f, g, p2)) <=
                  1e-12 * (1.0 + std::fabs(h.eval(p2))));
        }
}

TEST_CASE("the bracket satisfies the Jacobi identity") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(103);
    const Connection A = random_cochain(X, 1, 2, rng);
    const std::vector<Observable> obs = builtin_observables(A);
    const PhasePointT pt{A, random_cochain(X, 1, 2, rng),
                         random_cochain(X, 2, 2, rng)};
    auto jacobi = [&](const Observable& f, const Observable& g, const Observable& h) {
        return poisson_T(f, poisson_observable(g, h), pt) +
               poisson_T(g, poisson_observable(h, f), pt) +
               poisson_T(h, poisson_observable(f, g), pt);
    };
    // vortex Hamiltonian with each quadratic pair, and a mixed triple
    CHECK(std::fabs(jacobi(obs[0], obs[1], obs[2])) <= 1e-11);
    CHECK(std::fabs(jacobi(obs[0], obs[3], obs[4])) <= 1e-11);
    CHECK(std::fabs(jacobi(obs[1], obs[3], obs[0])) <= 1e-11);
}

TEST_CASE("energy of the connection-momentum system") {
    const CubicalComplex3 X = build_torus(2, 2, 2, 0.5);
    Rng rng(104);
    const PhasePointR pt{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng)};
    const double f = norm(curvature(pt.A)), p = norm(pt.p);
    CHECK(hamiltonian_R(pt) == doctest::Approx(0.5 * (f * f + p * p)).epsilon(1e-13));
}

TEST_CASE("fundamental fields differentiate the gauge flow on both bundles") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(105);
    const AlgCochain xi = random_cochain(X, 0, 2, rng);
    const double t = 1e-5;

    const PhasePointR ptR{random_cochain(X, 1, 2, rng), random_cochain(X, 1, 2, rng)};
    const TangentR vR = fundamental_vf_R(xi, ptR);
    {
        Connection Af = ptR.A, Ab = ptR.A;
        AlgCochain pf = ptR.p, pb = ptR.p;
        gauge_flow_generic(xi, t, 32, Af, {&pf});
        gauge_flow_generic(xi, -t, 32, Ab, {&pb});
        Af -= Ab;
        Af *= 1.0 / (2 * t);
        pf -= pb;
        pf *= 1.0 / (2 * t);
        CHECK(diff_max(Af, vR.a) <= 1e-8);
        CHECK(diff_max(pf, vR.x) <= 1e-8);
    }

    const PhasePointS ptS{random_cochain(X, 1, 2, rng), random_cochain(X, 2, 2, rng)};
    const TangentS vS = fundamental_vf_S(xi, ptS);
    {
        Connection Af = ptS.A, Ab = ptS.A;
        AlgCochain lf = ptS.lambda, lb = ptS.lambda;
        gauge_flow_generic(xi, t, 32, Af, {&lf});
        gauge_flow_generic(xi, -t, 32, Ab, {&lb});
        Af -= Ab;
        Af *= 1.0 / (2 * t);
        lf -= lb;
        lf *= 1.0 / (2 * t);
        CHECK(diff_max(Af, vS.a) <= 1e-8);
        CHECK(diff_max(lf, vS.alpha) <= 1e-8);
    }
}

TEST_CASE("assembled two-form spectrum matches a dense singular value decomposition") {
    const CubicalComplex3 X = build_torus(2, 2, 2);
    Rng rng(106);
    const PhasePointT pt = random_point_T(X, 2, rng);
    const OmegaSpectrumReport rep = omega_rank_report(pt);

    const std::size_t n1 = AlgCochain(X, 1, 2).num_reals();
    const std::size_t n2 = AlgCochain(X, 2, 2).num_reals();
    const std::size_t m = 2 * n1 + n2;
    REQUIRE(rep.dim == static_cast<int>(m));
    REQUIRE(rep.svals.size() == m);

    std::vector<TangentT> basis;
    basis.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        TangentT v{AlgCochain(X, 1, 2), AlgCochain(X, 1, 2), AlgCochain(X, 2, 2)};
        if (i < n1)
            v.a.reals()[i] = 1.0;
        else if (i < 2 * n1)
            v.e.reals()[i - n1] = 1.0;
        else
            v.beta.reals()[i - 2 * n1] = 1.0;
        basis.push_back(std::move(v));
    }
    Eigen::MatrixXd M(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        M(i, i) = 0.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double o = Omega_T(pt, basis[i], basis[j]);
            M(i, j) = o;
            M(j, i) = -o;
        }
    }
    // spot-check true antisymmetry of the form itself
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t i = rng.engine() % m, j = rng.engine() % m;
        CHECK(std::fabs(Omega_T(pt, basis[i], basis[j]) +
                        Omega_T(pt, basis[j], basis[i])) <= 1e-14);
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    Eigen::VectorXd sv = svd.singularValues(); // descending
    const double smax = sv[0];
    CHECK(std::fabs(rep.max_sv - smax) <= 1e-8 * smax);
    CHECK(rep.min_sv == rep.svals.front());
    CHECK(rep.max_sv == rep.svals.back());
    int oracle_near_zero = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv[i] <= 1e-10 * smax) ++oracle_near_zero;
    CHECK(rep.near_zero == oracle_near_zero);
    for (std::size_t k = 0; k < m; ++k) {
        const double want = sv[static_cast<long>(m - 1 - k)]; // ascending
        CHECK(std::fabs(rep.svals[k] - want) <= 1e-6 * smax);
        if (k > 0) CHECK(rep.svals[k] >= rep.svals[k - 1]);
    }
}
