#pragma once

#include <string>

#include "smt/ascent.hpp"
#include "smt/config.hpp"
#include "smt/hjb.hpp"

namespace smt {

/// Writes content to path atomically (temp file in the same directory, then
/// rename).
void atomic_write(const std::string& path, const std::string& content);

/// Iteration trace with one row per iterate:
/// n,value,running_max,gradient_norm_R,gamma_n
/// gamma_n is the stepsize applied to leave iterate n (0 on the last row).
/// All reals printed with 17 significant digits, so identical runs produce
/// byte-identical files.
std::string trace_csv_text(const AscentReport& report);

/// Plain-text run report with a stable `key: value` layout.
std::string report_text(const RunConfig& cfg, const GridSpec& grid, const CflReport& cfl,
                        const AscentReport& report);

std::string lambda0_csv_text(const GridSpec& grid, const GridFunction& lambda0);
std::string controls_csv_text(const GridSpec& grid, const ControlSet& cs,
                              const ControlField& controls);
std::string gradient_csv_text(const GridSpec& grid, const GridFunction& gradient);

}  // namespace smt
