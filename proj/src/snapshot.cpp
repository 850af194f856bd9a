#include "ym/harness/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace ym {

namespace {

void put_u32(std::string& out, std::uint32_t x) {
    out.push_back(static_cast<char>(x & 0xff));
    out.push_back(static_cast<char>((x >> 8) & 0xff));
    out.push_back(static_cast<char>((x >> 16) & 0xff));
    out.push_back(static_cast<char>((x >> 24) & 0xff));
}

void put_f64(std::string& out, double v) {
    std::uint64_t x;
    std::memcpy(&x, &v, 8);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& buf, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(buf[off])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[off + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[off + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[off + 3])) << 24);
}

double get_f64(const std::string& buf, std::size_t off) {
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i)
        x |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[off + i]))
             << (8 * i);
    double v;
    std::memcpy(&v, &x, 8);
    return v;
}

constexpr std::size_t kHeaderSize = 4 + 5 * 4 + 1; // magic, 5 x u32, u8 degree

} // namespace

void write_snapshot(const std::string& path, const AlgCochain& c) {
    const CubicalComplex3& X = c.lattice();
    std::string buf;
    buf.reserve(kHeaderSize + c.values().size() * 16);
    buf += "YMS1";
    put_u32(buf, 1u); // version
    put_u32(buf, static_cast<std::uint32_t>(c.n()));
    put_u32(buf, static_cast<std::uint32_t>(X.nx));
    put_u32(buf, static_cast<std::uint32_t>(X.ny));
    put_u32(buf, static_cast<std::uint32_t>(X.nz));
    buf.push_back(static_cast<char>(c.degree()));
    for (const cplx& z : c.values()) {
        put_f64(buf, z.real());
        put_f64(buf, z.imag());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(path + ": cannot open for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FormatError(path + ": short write");
}

AlgCochain read_snapshot(const std::string& path, double h) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path + ": cannot open");
    std::string buf((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());

    if (buf.size() < 4 || buf.compare(0, 4, "YMS1") != 0)
        throw FormatError(path + ": bad magic (expected YMS1)", 0);
    if (buf.size() < kHeaderSize)
        throw FormatError(path + ": truncated header",
                          static_cast<long>(buf.size()));
    const std::uint32_t version = get_u32(buf, 4);
    if (version != 1)
        throw FormatError(path + ": unsupported version " + std::to_string(version), 4);
    const std::uint32_t n = get_u32(buf, 8);
    const std::uint32_t nx = get_u32(buf, 12);
    const std::uint32_t ny = get_u32(buf, 16);
    const std::uint32_t nz = get_u32(buf, 20);
    const unsigned degree = static_cast<unsigned char>(buf[24]);
    if (n < 2) throw FormatError(path + ": algebra rank must be >= 2", 8);
    if (nx < 2) throw FormatError(path + ": nx must be >= 2", 12);
    if (ny < 2) throw FormatError(path + ": ny must be >= 2", 16);
    if (nz < 2) throw FormatError(path + ": nz must be >= 2", 20);
    if (degree > 3) throw FormatError(path + ": degree must be 0..3", 24);

    const CubicalComplex3 X = build_torus(static_cast<int>(nx), static_cast<int>(ny),
                                          static_cast<int>(nz), h);
    AlgCochain c(X, static_cast<int>(degree), static_cast<int>(n));
    const std::size_t expected = kHeaderSize + c.values().size() * 16;
    if (buf.size() < expected)
        throw FormatError(path + ": truncated payload",
                          static_cast<long>(buf.size()));
    if (buf.size() > expected)
        throw FormatError(path + ": trailing bytes after payload",
                          static_cast<long>(expected));
    std::size_t off = kHeaderSize;
    for (cplx& z : c.values()) {
        z = cplx(get_f64(buf, off), get_f64(buf, off + 8));
        off += 16;
    }
    return c;
}

} // namespace ym
