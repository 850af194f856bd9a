#include "ym/harness/csv.hpp"

#include <cstdio>
#include <fstream>

#include "ym/core/errors.hpp"

namespace ym {

const char* const kTrajectoryCsvHeader =
    "step,time,energy,gauss_e,gauss_b,charge_norm,bianchi_defect";

namespace {

void append_double(std::string& out, double v) {
    char tmp[64];
    std::snprintf(tmp, sizeof tmp, "%.17g", v);
    out += tmp;
}

} // namespace

std::string trajectory_csv_string(const TrajectoryRecord& rec) {
    std::string out = kTrajectoryCsvHeader;
    out += '\n';
    for (const TrajectorySample& s : rec.samples) {
        out += std::to_string(s.step);
        out += ',';
        append_double(out, s.time);
        out += ',';
        append_double(out, s.energy);
        out += ',';
        append_double(out, s.gauss_e);
        out += ',';
        append_double(out, s.gauss_b);
        out += ',';
        append_double(out, s.charge_norm);
        out += ',';
        append_double(out, s.bianchi_defect);
        out += '\n';
    }
    return out;
}

void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(path + ": cannot open for writing");
    const std::string s = trajectory_csv_string(rec);
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!out) throw FormatError(path + ": short write");
}

} // namespace ym
