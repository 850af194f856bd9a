#ifndef YM_HARNESS_CSV_HPP
#define YM_HARNESS_CSV_HPP

#include <string>

#include "ym/dynamics/dynamics.hpp"

namespace ym {

// Fixed schema: step,time,energy,gauss_e,gauss_b,charge_norm,bianchi_defect
// Numbers are printed with 17 significant digits so identical trajectories
// produce byte-identical files.
extern const char* const kTrajectoryCsvHeader;

std::string trajectory_csv_string(const TrajectoryRecord& rec);
void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec);

} // namespace ym

#endif
