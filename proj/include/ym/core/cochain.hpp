#ifndef YM_CORE_COCHAIN_HPP
#define YM_CORE_COCHAIN_HPP

#include <complex>
#include <vector>

#include "ym/core/errors.hpp"
#include "ym/core/lattice.hpp"

namespace ym {

using cplx = std::complex<double>;

// A degree-k cochain with one n x n complex matrix per k-cell, stored
// row-major and contiguously in canonical cell order.
//
// Inputs produced by the library's samplers and snapshot loader are
// anti-Hermitian traceless (values in su(n)), and every linear operation
// preserves that exactly.  Cup products of su(n)-valued cochains, however,
// are generally not su(n)-valued pointwise (the two factors sit at
// different cells), so the matrix type is the full complex n x n space and
// su_defect() reports the distance from su(n) instead of an invariant
// being silently enforced.
class AlgCochain {
  public:
    AlgCochain() = default;

    AlgCochain(const CubicalComplex3& lat, int degree, int n)
        : lat_(lat), degree_(degree), n_(n) {
        if (degree < 0 || degree > 3) throw DegreeError("cochain degree must be 0..3");
        if (n < 2) throw std::invalid_argument("algebra rank n must be >= 2");
        v_.assign(static_cast<std::size_t>(lat.num_cells(degree)) * n * n, cplx(0.0));
    }

    const CubicalComplex3& lattice() const { return lat_; }
    int degree() const { return degree_; }
    int n() const { return n_; }
    int nn() const { return n_ * n_; }
    int num_cells() const { return lat_.num_cells(degree_); }

    cplx* at(int cell) { return v_.data() + static_cast<std::size_t>(cell) * nn(); }
    const cplx* at(int cell) const {
        return v_.data() + static_cast<std::size_t>(cell) * nn();
    }
    cplx* at(int site, int set_idx) { return at(lat_.cell_id(site, degree_, set_idx)); }
    const cplx* at(int site, int set_idx) const {
        return at(lat_.cell_id(site, degree_, set_idx));
    }

    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }

    // flattened view as interleaved (re, im) doubles, for the kernels
    std::size_t num_reals() const { return v_.size() * 2; }
    double* reals() { return reinterpret_cast<double*>(v_.data()); }
    const double* reals() const { return reinterpret_cast<const double*>(v_.data()); }

    AlgCochain zeros_like() const { return AlgCochain(lat_, degree_, n_); }

    void set_zero() { std::fill(v_.begin(), v_.end(), cplx(0.0)); }

    bool compatible(const AlgCochain& o) const {
        return lat_ == o.lat_ && degree_ == o.degree_ && n_ == o.n_;
    }

    AlgCochain& operator+=(const AlgCochain& o);
    AlgCochain& operator-=(const AlgCochain& o);
    AlgCochain& operator*=(double a);
    // *this += a*o
    AlgCochain& add_scaled(double a, const AlgCochain& o);

    friend AlgCochain operator+(AlgCochain a, const AlgCochain& b) { return a += b; }
    friend AlgCochain operator-(AlgCochain a, const AlgCochain& b) { return a -= b; }
    friend AlgCochain operator*(double s, AlgCochain a) { return a *= s; }

    // largest absolute entry; scale-free sanity measure
    double max_abs() const;

    // max over cells of ||X + X^dagger||_max and |tr X|: zero exactly on su(n)
    double su_defect() const;

    bool all_finite() const;

  private:
    CubicalComplex3 lat_;
    int degree_ = 0;
    int n_ = 2;
    std::vector<cplx> v_;

    void require_compatible(const AlgCochain& o) const {
        if (!compatible(o))
            throw DegreeError("cochain operands differ in lattice, degree, or rank");
    }
};

} // namespace ym

#endif
