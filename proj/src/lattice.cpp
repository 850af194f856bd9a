#include "ym/core/lattice.hpp"

#include <string>

#include "ym/core/errors.hpp"

namespace ym {

constexpr int CubicalComplex3::kNumSets[4];
constexpr std::uint8_t CubicalComplex3::kSetMask[4][3];

CubicalComplex3 build_torus(int nx, int ny, int nz, double h) {
    if (nx < 2 || ny < 2 || nz < 2)
        throw DegenerateLattice("lattice extent must be >= 2 on every axis, got " +
                                std::to_string(nx) + "x" + std::to_string(ny) + "x" +
                                std::to_string(nz));
    if (!(h > 0.0)) throw DegenerateLattice("lattice spacing must be positive");
    CubicalComplex3 X;
    X.nx = nx;
    X.ny = ny;
    X.nz = nz;
    X.h = h;
    return X;
}

} // namespace ym
