#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace conjsum {

// Exact trigonometric coefficients of a band-limited function:
//   f(x) = a0/2 + sum_{nu>=1} (a[nu-1] cos(nu x) + b[nu-1] sin(nu x)).
struct TrigCoefficients {
    double a0 = 0.0;
    std::vector<double> a; // a[i] multiplies cos((i+1) x)
    std::vector<double> b; // b[i] multiplies sin((i+1) x)

    int max_freq() const noexcept {
        return static_cast<int>(std::max(a.size(), b.size()));
    }
    double cos_coeff(int nu) const noexcept {
        return (nu >= 1 && nu <= static_cast<int>(a.size())) ? a[nu - 1] : 0.0;
    }
    double sin_coeff(int nu) const noexcept {
        return (nu >= 1 && nu <= static_cast<int>(b.size())) ? b[nu - 1] : 0.0;
    }
};

// A real 2*pi-periodic function given by an evaluator, optionally carrying
// exact coefficients (for band-limited inputs) and a degree hint.
struct PeriodicFunction {
    std::function<double(double)> eval;
    std::optional<int> degree_hint;
    std::optional<TrigCoefficients> coeff_source;
    std::string label = "f";

    double operator()(double x) const { return eval(x); }
};

// Odd local difference psi_x(t) = f(x+t) - f(x-t).
double psi(const PeriodicFunction& f, double x, double t);

// Even local difference phi_x(t) = f(x+t) + f(x-t) - 2 f(x).
double phi(const PeriodicFunction& f, double x, double t);

// Factories. All returned functions carry exact coefficients.
PeriodicFunction make_constant(double c);
PeriodicFunction make_cosine(int freq, double amplitude = 1.0);
PeriodicFunction make_sine(int freq, double amplitude = 1.0);
PeriodicFunction make_trig_poly(TrigCoefficients coeffs,
                                std::string label = "trig-poly");

// Lacunary cosine family f(x) = sum_{j=0}^{levels-1} 2^{-j*alpha} cos(2^j x).
// Holder class alpha in (0, 1); band-limited at 2^(levels-1).
PeriodicFunction make_weierstrass(double alpha, int levels = 8);

// Verifies f(x + 2*pi) == f(x) on a sample grid (used by tests).
bool check_periodicity(const PeriodicFunction& f, double rel_tol = 1e-12,
                       int samples = 64);

} // namespace conjsum
