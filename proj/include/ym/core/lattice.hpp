#ifndef YM_CORE_LATTICE_HPP
#define YM_CORE_LATTICE_HPP

#include <array>
#include <cstdint>

namespace ym {

// Periodic cubical 3-complex on an nx*ny*nz vertex grid.
//
// A k-cell is a pair (x, S): base vertex x in Z^3 (mod extents) and a
// direction set S subset of {1,2,3} with |S| = k.  Direction sets are
// encoded as bitmasks (bit mu-1 set when axis mu is in S) and enumerated
// in lexicographic order:
//   k=0: {}                     k=1: {1},{2},{3}
//   k=2: {1,2},{1,3},{2,3}      k=3: {1,2,3}
//
// Canonical cell id for degree k:
//   id = site(x) * num_sets(k) + set_index,  site(x) = (x1*ny + x2)*nz + x3
// i.e. cells are ordered lexicographically in (x, S).  Snapshot files and
// all dense test oracles rely on this ordering.
struct CubicalComplex3 {
    int nx = 0, ny = 0, nz = 0;
    double h = 1.0; // lattice spacing; carried explicitly in all formulas

    static constexpr int kNumSets[4] = {1, 3, 3, 1};
    // set bitmask for (degree, set_index)
    static constexpr std::uint8_t kSetMask[4][3] = {
        {0, 0, 0}, {1, 2, 4}, {3, 5, 6}, {7, 0, 0}};

    int volume() const { return nx * ny * nz; }
    static int num_sets(int k) { return kNumSets[k]; }
    int num_cells(int k) const { return volume() * kNumSets[k]; }

    // mask -> set index within its degree; masks 0..7
    static int set_index(std::uint8_t mask) {
        static constexpr int idx[8] = {0, 0, 1, 0, 2, 1, 2, 0};
        return idx[mask];
    }
    static int degree_of_mask(std::uint8_t mask) {
        return (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
    }

    int site(int x, int y, int z) const { return (x * ny + y) * nz + z; }

    std::array<int, 3> coords(int site) const {
        int z = site % nz;
        int y = (site / nz) % ny;
        int x = site / (nz * ny);
        return {x, y, z};
    }

    // shift a site by dir (+1/-1) along axis (1..3), wrapping periodically
    int shift(int site, int axis, int dir) const {
        auto c = coords(site);
        int ext[3] = {nx, ny, nz};
        int a = axis - 1;
        c[a] = (c[a] + dir + ext[a]) % ext[a];
        return this->site(c[0], c[1], c[2]);
    }

    // shift a site forward by one step along every axis in the mask
    int shift_mask(int site, std::uint8_t mask) const {
        int s = site;
        for (int axis = 1; axis <= 3; ++axis)
            if (mask & (1u << (axis - 1))) s = shift(s, axis, +1);
        return s;
    }

    int cell_id(int site, int k, int set_idx) const {
        return site * kNumSets[k] + set_idx;
    }
    int cell_site(int k, int cell) const { return cell / kNumSets[k]; }
    int cell_set_index(int k, int cell) const { return cell % kNumSets[k]; }
    std::uint8_t cell_mask(int k, int cell) const {
        return kSetMask[k][cell % kNumSets[k]];
    }

    bool operator==(const CubicalComplex3& o) const {
        return nx == o.nx && ny == o.ny && nz == o.nz && h == o.h;
    }
};

// validates extents/spacing; throws DegenerateLattice
CubicalComplex3 build_torus(int nx, int ny, int nz, double h = 1.0);

// orientation sign of axis mu inside direction set `mask`:
// (-1)^(number of axes in the set smaller than mu)
inline int coboundary_sign(std::uint8_t mask, int mu) {
    int below = mask & ((1u << (mu - 1)) - 1u);
    int c = (below & 1) + ((below >> 1) & 1) + ((below >> 2) & 1);
    return (c & 1) ? -1 : 1;
}

// shuffle sign of an ordered split P | Q of a direction set:
// (-1)^(number of pairs p in P, q in Q with q < p)
inline int shuffle_sign(std::uint8_t pmask, std::uint8_t qmask) {
    int inv = 0;
    for (int p = 1; p <= 3; ++p) {
        if (!(pmask & (1u << (p - 1)))) continue;
        for (int q = 1; q < p; ++q)
            if (qmask & (1u << (q - 1))) ++inv;
    }
    return (inv & 1) ? -1 : 1;
}

// Hodge pairing sign: Levi-Civita sign of the permutation (S, S^c) of (1,2,3)
inline int hodge_sign(std::uint8_t mask) {
    // listed by mask 0..7: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    static constexpr int sign[8] = {+1, +1, -1, +1, +1, -1, +1, +1};
    return sign[mask];
}

} // namespace ym

#endif
