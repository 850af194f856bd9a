#ifndef YM_HARNESS_SNAPSHOT_HPP
#define YM_HARNESS_SNAPSHOT_HPP

#include <string>

#include "ym/core/cochain.hpp"

namespace ym {

// Binary field snapshot, little-endian throughout:
//
//   bytes 0..3    magic "YMS1"
//   bytes 4..23   five u32: version (= 1), n, nx, ny, nz
//   byte  24      u8 degree (0..3)
//   bytes 25..    per cell, in canonical cell order, n*n complex values as
//                 (real, imaginary) 64-bit floats, matrix entries row-major
//
// read_snapshot(write_snapshot(c)) is bit-exact.  Malformed files raise
// FormatError carrying the byte offset of the defect.
void write_snapshot(const std::string& path, const AlgCochain& c);

// `h` is not stored in the file; pass the spacing the lattice should carry.
AlgCochain read_snapshot(const std::string& path, double h = 1.0);

} // namespace ym

#endif
