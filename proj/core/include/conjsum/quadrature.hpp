#pragma once

#include <functional>

namespace conjsum {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    long evaluations = 0;
};

// Adaptive Simpson on [a, b] for an integrand that is smooth in the interior.
// `abs_tol` bounds the accepted local error estimate (summed over subintervals).
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  int max_depth = 48);

// Integral over (0, b] of an integrand that may be singular (or merely steep)
// at 0. The interval is split dyadically toward 0 and each piece handled by
// integrate_adaptive. Convergence requires the dyadic tail to become
// negligible relative to the accumulated value; when the pieces keep
// contributing (divergent or log-divergent integrals), the result is flagged
// converged = false so callers can report an unbounded ratio instead of
// looping forever.
IntegralResult integrate_to_zero(const std::function<double(double)>& f,
                                 double b, double rel_tol = 1e-8,
                                 int max_levels = 200);

} // namespace conjsum
