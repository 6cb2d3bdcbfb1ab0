#pragma once

#include <vector>

#include "conjsum/periodic_function.hpp"

namespace conjsum {

// Trigonometric coefficients of f up to a cutoff frequency.
struct FourierData {
    double a0 = 0.0;
    std::vector<double> a; // a[i] = a_(i+1), cosine coefficients
    std::vector<double> b; // b[i] = b_(i+1), sine coefficients
    int max_freq = 0;

    double cos_coeff(int nu) const noexcept {
        return (nu >= 1 && nu <= static_cast<int>(a.size())) ? a[nu - 1] : 0.0;
    }
    double sin_coeff(int nu) const noexcept {
        return (nu >= 1 && nu <= static_cast<int>(b.size())) ? b[nu - 1] : 0.0;
    }
};

// Coefficients up to max_freq: exact pass-through when f carries a
// coefficient source, otherwise quadrature on a uniform 2048-point grid
// (exact for band-limited f up to 4x oversampling).
FourierData fourier_coeffs(const PeriodicFunction& f, int max_freq);

// Partial sum S_k f(x) = a0/2 + sum_{nu<=k} (a_nu cos + b_nu sin)(nu x).
double partial_sum(const FourierData& fd, int k, double x);

// Conjugate partial sum S~_k f(x) = sum_{nu<=k} (a_nu sin - b_nu cos)(nu x).
double conj_partial_sum(const FourierData& fd, int k, double x);

// Coefficient map of the conjugate series: (a, b) -> (-b, a) with zero mean.
FourierData conjugate_series_data(const FourierData& fd);

struct ConjugateEvaluation {
    double x = 0.0;
    double epsilon = 0.0;
    double value = 0.0;
    double quadrature_error_estimate = 0.0;
};

// Truncated conjugate transform
//   f~(x, eps) = -(1/pi) int_eps^pi psi_x(t) (1/2)cot(t/2) dt,  0 < eps <= pi,
// by adaptive quadrature on the (smooth away from 0) integrand.
ConjugateEvaluation conjugate_truncated(const PeriodicFunction& f, double x,
                                        double epsilon);

// Conjugate function f~(x). Band-limited inputs use the exact conjugate
// series; otherwise the eps -> 0+ limit of conjugate_truncated over the
// dyadic ladder eps_j = pi 2^-j is Richardson-extrapolated (the truncation
// tail of a smooth f expands in odd powers of eps). Throws ConvergenceError
// when the extrapolated ladder has not settled below tol twice in a row.
double conjugate_function(const PeriodicFunction& f, double x,
                          double tol = 1e-6, int max_level = 14);

} // namespace conjsum
