#pragma once

#include <string>
#include <vector>

namespace conjsum {

// Result of probing an O(.)-style inequality on a sample grid.
//
// `ratios` holds lhs/rhs per sample, in the caller's grid order. Grids are
// expected to run from the least extreme sample toward the critical regime
// (u -> 0+, n -> infinity, ...), so comparing the sup over the full grid with
// the sup over the leading half detects ratios that are still growing.
struct FitReport {
    double constant = 0.0;        // sup of ratios over the full grid
    double coarse_constant = 0.0; // sup over the leading half of the grid
    bool ok = false;
    std::vector<double> ratios;
    std::string note;
};

// Applies the stability rule: ok iff every ratio is finite and the full-grid
// sup is at most twice the leading-half sup. An all-zero ratio list is ok
// (the inequality holds with constant 0).
FitReport make_fit_report(std::vector<double> ratios, std::string note = {});

} // namespace conjsum
