#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conjsum/fit_report.hpp"

namespace conjsum {

// A modulus-type function omega on [0, 2*pi] (nondecreasing, continuous,
// omega(0) = 0, subadditive) together with its tail majorant H on (0, pi],
// the weight pairing that drives every closed-form bound.
struct ModulusModel {
    std::function<double(double)> omega; // delta in [0, 2*pi]
    std::function<double(double)> H;     // u in (0, pi]
    std::string label;
};

// omega(delta) = delta^alpha, alpha in (0, 1]; H is the exact integral
// int_u^pi t^(alpha-2) dt (log(pi/u) when alpha = 1).
ModulusModel make_power_modulus(double alpha);

// omega(delta) = delta * log(e*2*pi/delta): a strictly-larger-than-Lipschitz
// modulus with closed-form H. Passes the boundedness conditions below.
ModulusModel make_log_lipschitz_modulus();

// omega(delta) = 1/log(e*2*pi/delta): valid modulus whose density omega(t)/t
// is not integrable at 0, so the Dini-type condition check must fail on it.
ModulusModel make_reciprocal_log_modulus();

// Default geometric u-grids running from the coarse end toward the singular
// endpoint u -> 0+.
std::vector<double> default_u_grid(double top, int points = 14);

// Condition checks. Ratios are lhs/rhs per grid point; `ok` follows the
// FitReport stability rule (sup finite and not still growing toward the
// singular end). A zero denominator against a nonzero integral yields an
// infinite ratio, i.e. a violated report rather than an exception.

// int_u^pi t^-2 omega(t) dt  = O(H(u))
FitReport check_tail_majorant(const ModulusModel& m, const std::vector<double>& u_grid);

// int_0^u H(t) dt            = O(u * H(u))
FitReport check_head_mass(const ModulusModel& m, const std::vector<double>& u_grid);

// int_0^u t^-1 omega(t) dt   = O(omega(u))   (Dini-type)
FitReport check_dini(const ModulusModel& m, const std::vector<double>& u_grid);

// int_alpha^beta t^-1 omega(t) dt = O((beta-alpha) * H(c*(beta-alpha))),
// c >= 1, sampled over (alpha, beta) pairs. Pairs with c*(beta-alpha) > pi
// fall outside H's domain and are skipped (noted in the report).
FitReport check_band_integral(const ModulusModel& m, double c,
                       const std::vector<std::pair<double, double>>& pairs);

// int_u^pi t^-2 omega(t) dt = O(H(b*u)), b >= 1. Grid points with b*u > pi
// are skipped unless the integral itself vanishes (ratio 0).
FitReport check_scaled_tail_majorant(const ModulusModel& m, double b,
                       const std::vector<double>& u_grid);

// Doubling control delta2^-1 omega(delta2) <= 2 delta1^-1 omega(delta1) for
// delta2 >= delta1, sampled on random pairs (deterministic seed).
bool check_doubling(const ModulusModel& m, int pairs = 100,
                  unsigned seed = 20240817);

// Modulus-type axioms: omega(0) = 0, nondecreasing on a 256-point grid,
// subadditive on random pairs within tiny slack. Returns a human-readable
// failure description, empty when all axioms hold.
std::string validate_modulus(const ModulusModel& m, unsigned seed = 20240817);

} // namespace conjsum
