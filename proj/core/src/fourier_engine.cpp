#include "conjsum/fourier_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conjsum/errors.hpp"
#include "conjsum/kernels.hpp"
#include "conjsum/quadrature.hpp"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

namespace {
constexpr int kCoeffGrid = 2048;
} // namespace

FourierData fourier_coeffs(const PeriodicFunction& f, int max_freq) {
    if (max_freq < 0) {
        throw std::invalid_argument("fourier_coeffs: max_freq must be >= 0");
    }
    FourierData fd;
    fd.max_freq = max_freq;
    fd.a.assign(max_freq, 0.0);
    fd.b.assign(max_freq, 0.0);
    if (f.coeff_source) {
        const TrigCoefficients& src = *f.coeff_source;
        fd.a0 = src.a0;
        for (int nu = 1; nu <= max_freq; ++nu) {
            fd.a[nu - 1] = src.cos_coeff(nu);
            fd.b[nu - 1] = src.sin_coeff(nu);
        }
        return fd;
    }
    if (max_freq > kCoeffGrid / 4) {
        throw std::invalid_argument(
            "fourier_coeffs: max_freq beyond safe quadrature resolution");
    }
    // Uniform-grid projection; spectrally exact for band-limited f.
    std::vector<double> fx(kCoeffGrid);
    for (int j = 0; j < kCoeffGrid; ++j) {
        fx[j] = f.eval(-M_PI + 2.0 * M_PI * j / kCoeffGrid);
    }
    const double w = 2.0 / kCoeffGrid;
    for (int j = 0; j < kCoeffGrid; ++j) fd.a0 += w * fx[j];
    for (int nu = 1; nu <= max_freq; ++nu) {
        double ca = 0.0, cb = 0.0;
        for (int j = 0; j < kCoeffGrid; ++j) {
            const double x = -M_PI + 2.0 * M_PI * j / kCoeffGrid;
            ca += fx[j] * std::cos(nu * x);
            cb += fx[j] * std::sin(nu * x);
        }
        fd.a[nu - 1] = w * ca;
        fd.b[nu - 1] = w * cb;
    }
    return fd;
}

double partial_sum(const FourierData& fd, int k, double x) {
    if (k < 0) throw std::invalid_argument("partial_sum: k must be >= 0");
    double s = 0.5 * fd.a0;
    const int top = std::min(k, fd.max_freq);
    for (int nu = 1; nu <= top; ++nu) {
        s += fd.cos_coeff(nu) * std::cos(nu * x) +
             fd.sin_coeff(nu) * std::sin(nu * x);
    }
    return s;
}

double conj_partial_sum(const FourierData& fd, int k, double x) {
    if (k < 0) throw std::invalid_argument("conj_partial_sum: k must be >= 0");
    double s = 0.0;
    const int top = std::min(k, fd.max_freq);
    for (int nu = 1; nu <= top; ++nu) {
        s += fd.cos_coeff(nu) * std::sin(nu * x) -
             fd.sin_coeff(nu) * std::cos(nu * x);
    }
    return s;
}

FourierData conjugate_series_data(const FourierData& fd) {
    FourierData out;
    out.max_freq = fd.max_freq;
    out.a0 = 0.0;
    out.a.assign(fd.max_freq, 0.0);
    out.b.assign(fd.max_freq, 0.0);
    for (int nu = 1; nu <= fd.max_freq; ++nu) {
        out.a[nu - 1] = -fd.sin_coeff(nu);
        out.b[nu - 1] = fd.cos_coeff(nu);
    }
    return out;
}

ConjugateEvaluation conjugate_truncated(const PeriodicFunction& f, double x,
                                        double epsilon) {
    if (!(epsilon > 0.0) || epsilon > M_PI) {
        throw std::invalid_argument(
            "conjugate_truncated: epsilon must lie in (0, pi]");
    }
    ConjugateEvaluation out;
    out.x = x;
    out.epsilon = epsilon;
    if (epsilon == M_PI) {
        return out; // empty interval
    }
    const auto res = integrate_adaptive(
        [&f, x](double t) { return psi(f, x, t) * half_cotangent(t); }, epsilon,
        M_PI, 1e-9);
    out.value = -res.value / M_PI;
    out.quadrature_error_estimate = res.error_estimate / M_PI;
    return out;
}

double conjugate_function(const PeriodicFunction& f, double x, double tol,
                          int max_level) {
    if (f.coeff_source) {
        const TrigCoefficients& src = *f.coeff_source;
        double s = 0.0;
        for (int nu = 1; nu <= src.max_freq(); ++nu) {
            s += src.cos_coeff(nu) * std::sin(nu * x) -
                 src.sin_coeff(nu) * std::cos(nu * x);
        }
        return s;
    }
    // Dyadic epsilon ladder, integrated incrementally slice by slice:
    //   v_j = f~(x, pi 2^-j),  v_j - v_{j-1} = -(1/pi) int_slice psi*cot/2.
    // For smooth f the truncation tail expands in odd powers of eps, so two
    // Richardson levels (orders 1 and 3) give an O(eps^5) limit estimate.
    const auto integrand = [&f, x](double t) {
        return psi(f, x, t) * half_cotangent(t);
    };
    double v = 0.0;             // raw ladder value v_j
    double r1 = 0.0;            // first Richardson level (order eps)
    double r2 = 0.0, r2p = 0.0; // second level and its predecessor
    int settled = 0;
    double eps = M_PI;
    for (int j = 1; j <= max_level; ++j) {
        const double lo = M_PI * std::ldexp(1.0, -j);
        const auto slice = integrate_adaptive(integrand, lo, eps, 1e-10);
        const double vprev = v;
        v -= slice.value / M_PI;
        eps = lo;
        if (j == 1) continue;
        const double r1new = 2.0 * v - vprev;
        if (j >= 3) {
            const double r2new = (8.0 * r1new - r1) / 7.0;
            if (j >= 4) {
                if (std::abs(r2new - r2) < tol) {
                    if (++settled >= 2) return r2new;
                } else {
                    settled = 0;
                }
            }
            r2p = r2;
            r2 = r2new;
        }
        r1 = r1new;
    }
    throw ConvergenceError(
        "conjugate_function: epsilon ladder did not settle below tol at x = " +
        std::to_string(x) + " (last extrapolated step " +
        std::to_string(std::abs(r2 - r2p)) + ")");
}

} // namespace conjsum
