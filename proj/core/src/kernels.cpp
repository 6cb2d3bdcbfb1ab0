#include "conjsum/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conjsum/errors.hpp"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

namespace {

void require_kr(int k, int r, const char* who) {
    if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
    if (r == 0) throw std::invalid_argument(std::string(who) + ": r must be nonzero");
}

// Shared denominator with the pole guard.
double guarded_denominator(int r, double t, const char* who) {
    const double s = nearest_singularity(r, t);
    if (std::abs(t - s) <= kernel_guard) {
        throw SingularityError(std::string(who) + ": t = " + std::to_string(t) +
                                   " within guard of pole " + std::to_string(s),
                               s);
    }
    return 2.0 * std::sin(0.5 * r * t);
}

} // namespace

double nearest_singularity(int r, double t) {
    if (r == 0) {
        throw std::invalid_argument("nearest_singularity: r must be nonzero");
    }
    const double period = 2.0 * M_PI / std::abs(r);
    return period * std::round(t / period);
}

double dirichlet_gen(int k, int r, double t) {
    require_kr(k, r, "dirichlet_gen");
    const double den = guarded_denominator(r, t, "dirichlet_gen");
    return std::sin(0.5 * (2.0 * k + r) * t) / den;
}

double conj_dirichlet_gen(int k, int r, double t) {
    require_kr(k, r, "conj_dirichlet_gen");
    const double den = guarded_denominator(r, t, "conj_dirichlet_gen");
    return std::cos(0.5 * (2.0 * k + r) * t) / den;
}

double conj_dirichlet(int k, int r, double t) {
    require_kr(k, r, "conj_dirichlet");
    const double den = guarded_denominator(r, t, "conj_dirichlet");
    return (std::cos(0.5 * t) - std::cos(0.5 * (2.0 * k + r) * t)) / den;
}

double half_cotangent(double t) {
    const double s = nearest_singularity(1, t);
    if (std::abs(t - s) <= kernel_guard) {
        throw SingularityError("half_cotangent: t = " + std::to_string(t) +
                                   " within guard of pole " + std::to_string(s),
                               s);
    }
    return 0.5 * std::cos(0.5 * t) / std::sin(0.5 * t);
}

namespace {

using KernelFn = double (*)(int, int, double);

AbelIdentityValue abel_identity(std::span<const double> a, int n, int m, int r,
                                double t, bool sine, const char* who) {
    if (n < 0 || m < n) {
        throw std::invalid_argument(std::string(who) +
                                    ": need 0 <= n <= m");
    }
    if (r < 1) throw std::invalid_argument(std::string(who) + ": r must be >= 1");
    if (a.size() < static_cast<std::size_t>(m + r + 1)) {
        throw std::invalid_argument(std::string(who) +
                                    ": coefficient span must reach index m+r");
    }
    const KernelFn kernel = sine ? &conj_dirichlet_gen : &dirichlet_gen;
    // Orientation of the three right-hand blocks differs between the sine
    // and cosine forms.
    const double sgn = sine ? -1.0 : 1.0;

    AbelIdentityValue out;
    for (int k = n; k <= m; ++k) {
        out.lhs += a[k] * (sine ? std::sin(k * t) : std::cos(k * t));
    }
    double main = 0.0;
    for (int k = n; k <= m; ++k) {
        main += (a[k] - a[k + r]) * kernel(k, r, t);
    }
    double upper = 0.0;
    for (int k = m + 1; k <= m + r; ++k) {
        upper += a[k] * kernel(k, -r, t);
    }
    double lower = 0.0;
    for (int k = n; k <= n + r - 1; ++k) {
        lower += a[k] * kernel(k, -r, t);
    }
    out.rhs = sgn * main - sgn * upper + sgn * lower;
    return out;
}

} // namespace

AbelIdentityValue abel_sin_identity(std::span<const double> a, int n, int m,
                                    int r, double t) {
    return abel_identity(a, n, m, r, t, true, "abel_sin_identity");
}

AbelIdentityValue abel_cos_identity(std::span<const double> a, int n, int m,
                                    int r, double t) {
    return abel_identity(a, n, m, r, t, false, "abel_cos_identity");
}

} // namespace conjsum
