#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "corravg/sampled_function.hpp"

namespace corravg {

// One fully populated grid row: every first/second/third generation
// quantity at this H, the three identity residual ratios, and the
// Gallagher (variant 1, h = H) ratio.
struct ScanRow {
    std::int64_t cap_h = 0;
    double deviation = 0.0;
    double selberg = 0.0;
    double modified = 0.0;
    std::array<double, 3> identity_ratios{};   // I, II, III
    double gallagher_ratio = 0.0;
};

// Populates one row per H.  Grid must be nonempty, strictly ascending,
// positive, max <= N.  Rows may be computed in parallel (CORRAVG_THREADS
// caps the workers); output order follows the grid.
std::vector<ScanRow> scan(const SampledFunction& f,
                          const std::vector<std::int64_t>& h_grid);

// Command-line front door.  args excludes the program name.
// Exit codes: 0 success, 1 assertion failure (identity ratio > 1,
// Gallagher ratio > threshold), 2 usage error.  Numeric output goes to
// `out` or files per flags, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corravg
