#ifndef YM_LIE_SU_HPP
#define YM_LIE_SU_HPP

#include <complex>
#include <random>
#include <vector>

#include "ym/core/cochain.hpp"

namespace ym {

// A single n x n complex matrix value.  AlgElement values produced by the
// constructors below are anti-Hermitian and traceless (su(n)); GroupElement
// values are special unitary.  Both share this plain matrix container.
struct AlgElement {
    int n = 2;
    std::vector<cplx> m; // row-major, n*n entries

    AlgElement() : m(4, cplx(0.0)) {}
    explicit AlgElement(int n) : n(n), m(static_cast<std::size_t>(n) * n, cplx(0.0)) {}

    cplx& operator()(int i, int j) { return m[static_cast<std::size_t>(i) * n + j]; }
    const cplx& operator()(int i, int j) const {
        return m[static_cast<std::size_t>(i) * n + j];
    }
    cplx* data() { return m.data(); }
    const cplx* data() const { return m.data(); }

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(double a);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(double s, AlgElement a) { return a *= s; }

    static AlgElement identity(int n);

    double frobenius_norm() const;
    double max_abs() const;
    // max-norm distance from anti-Hermitian traceless
    double su_defect() const;
    // max-norm residuals of U^dagger U = I and |det U - 1|
    double unitary_defect() const;
};

using GroupElement = AlgElement;

AlgElement matmul(const AlgElement& a, const AlgElement& b);
AlgElement dagger(const AlgElement& a);
cplx trace(const AlgElement& a);
cplx det(const AlgElement& a); // n <= 3 closed form, general via elimination

// XY - YX; closed in su(n)
AlgElement commutator(const AlgElement& x, const AlgElement& y);

// -trace(XY): positive definite on su(n) (the raw trace form is negative
// definite there; the sign is flipped once, globally, so that all derived
// inner products are genuine norms)
double inner_su(const AlgElement& x, const AlgElement& y);

// matrix exponential by scaling-and-squaring with a fixed-length Taylor
// tail; for su(n) input the result is special unitary
GroupElement expm(const AlgElement& x);

// deterministic RNG wrapper; one engine per logical stream
struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::mt19937_64 engine;
    double normal() { return dist(engine); }
    // dyadic rational in [-2, 2] with granularity 2^-4: arithmetic on such
    // values is exact in double precision, which the exactness tests use
    double dyadic() {
        return static_cast<double>(static_cast<int>(engine() % 65u) - 32) * 0.0625;
    }
    std::normal_distribution<double> dist{0.0, 1.0};
};

// random su(n) element: Gaussian complex matrix projected onto
// anti-Hermitian traceless; entries O(amplitude)
AlgElement random_su(int n, Rng& rng, double amplitude = 1.0);

// su(n) element with dyadic-rational entries (exactly anti-Hermitian and
// traceless by construction, no division by n)
AlgElement random_su_dyadic(int n, Rng& rng);

// cochains sampled cellwise with the generators above
AlgCochain random_cochain(const CubicalComplex3& lat, int degree, int n, Rng& rng,
                          double amplitude = 1.0);
AlgCochain dyadic_cochain(const CubicalComplex3& lat, int degree, int n, Rng& rng);

// cochain valued in a single fixed su(n) direction `dir` with a random
// scalar profile: the pointwise matrices all commute
AlgCochain commuting_cochain(const CubicalComplex3& lat, int degree,
                             const AlgElement& dir, Rng& rng, double amplitude = 1.0);

// pointwise conjugation value -> U^dagger * value * U (constant U)
AlgCochain conjugate(const AlgCochain& c, const GroupElement& u);
AlgElement conjugate(const AlgElement& x, const GroupElement& u);

} // namespace ym

#endif
