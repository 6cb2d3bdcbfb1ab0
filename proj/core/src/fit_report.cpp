#include "conjsum/fit_report.hpp"

#include <algorithm>
#include <cmath>

namespace conjsum {

FitReport make_fit_report(std::vector<double> ratios, std::string note) {
    FitReport rep;
    rep.note = std::move(note);
    rep.ratios = std::move(ratios);
    if (rep.ratios.empty()) {
        rep.ok = false;
        if (rep.note.empty()) rep.note = "no samples";
        return rep;
    }
    bool finite = true;
    for (double r : rep.ratios) {
        if (!std::isfinite(r)) finite = false;
        rep.constant = std::max(rep.constant, r);
    }
    const std::size_t half = (rep.ratios.size() + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        rep.coarse_constant = std::max(rep.coarse_constant, rep.ratios[i]);
    }
    if (!finite) {
        rep.ok = false;
        if (rep.note.empty()) rep.note = "non-finite ratio";
        return rep;
    }
    if (rep.constant == 0.0) {
        rep.ok = true; // inequality holds with constant 0
        return rep;
    }
    rep.ok = rep.constant <= 2.0 * rep.coarse_constant;
    if (!rep.ok && rep.note.empty()) rep.note = "ratio still growing on grid";
    return rep;
}

} // namespace conjsum
