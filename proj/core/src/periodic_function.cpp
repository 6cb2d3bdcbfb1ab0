#include "conjsum/periodic_function.hpp"

#include <cmath>
#include <stdexcept>

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

double psi(const PeriodicFunction& f, double x, double t) {
    return f.eval(x + t) - f.eval(x - t);
}

double phi(const PeriodicFunction& f, double x, double t) {
    return f.eval(x + t) + f.eval(x - t) - 2.0 * f.eval(x);
}

PeriodicFunction make_constant(double c) {
    TrigCoefficients tc;
    tc.a0 = 2.0 * c; // a0/2 == c
    PeriodicFunction f;
    f.eval = [c](double) { return c; };
    f.degree_hint = 0;
    f.coeff_source = std::move(tc);
    f.label = "const";
    return f;
}

PeriodicFunction make_cosine(int freq, double amplitude) {
    if (freq < 1) throw std::invalid_argument("make_cosine: freq must be >= 1");
    TrigCoefficients tc;
    tc.a.assign(freq, 0.0);
    tc.b.assign(freq, 0.0);
    tc.a[freq - 1] = amplitude;
    PeriodicFunction f;
    f.eval = [freq, amplitude](double x) { return amplitude * std::cos(freq * x); };
    f.degree_hint = freq;
    f.coeff_source = std::move(tc);
    f.label = "cos*" + std::to_string(freq);
    return f;
}

PeriodicFunction make_sine(int freq, double amplitude) {
    if (freq < 1) throw std::invalid_argument("make_sine: freq must be >= 1");
    TrigCoefficients tc;
    tc.a.assign(freq, 0.0);
    tc.b.assign(freq, 0.0);
    tc.b[freq - 1] = amplitude;
    PeriodicFunction f;
    f.eval = [freq, amplitude](double x) { return amplitude * std::sin(freq * x); };
    f.degree_hint = freq;
    f.coeff_source = std::move(tc);
    f.label = "sin*" + std::to_string(freq);
    return f;
}

PeriodicFunction make_trig_poly(TrigCoefficients coeffs, std::string label) {
    const int m = coeffs.max_freq();
    PeriodicFunction f;
    f.eval = [c = coeffs](double x) {
        double s = 0.5 * c.a0;
        for (int nu = 1; nu <= c.max_freq(); ++nu) {
            s += c.cos_coeff(nu) * std::cos(nu * x) +
                 c.sin_coeff(nu) * std::sin(nu * x);
        }
        return s;
    };
    f.degree_hint = m;
    f.coeff_source = std::move(coeffs);
    f.label = std::move(label);
    return f;
}

PeriodicFunction make_weierstrass(double alpha, int levels) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("make_weierstrass: alpha must be in (0, 1]");
    }
    if (levels < 1 || levels > 24) {
        throw std::invalid_argument("make_weierstrass: levels must be in [1, 24]");
    }
    const int top = 1 << (levels - 1);
    TrigCoefficients tc;
    tc.a.assign(top, 0.0);
    tc.b.assign(top, 0.0);
    for (int j = 0; j < levels; ++j) {
        tc.a[(1 << j) - 1] = std::pow(2.0, -j * alpha);
    }
    std::vector<double> amps(levels);
    for (int j = 0; j < levels; ++j) amps[j] = std::pow(2.0, -j * alpha);
    PeriodicFunction f;
    f.eval = [amps, levels](double x) {
        double s = 0.0;
        for (int j = 0; j < levels; ++j) {
            s += amps[j] * std::cos(std::ldexp(1.0, j) * x);
        }
        return s;
    };
    f.degree_hint = top;
    f.coeff_source = std::move(tc);
    f.label = "weierstrass(alpha=" + std::to_string(alpha) + ")";
    return f;
}

bool check_periodicity(const PeriodicFunction& f, double rel_tol, int samples) {
    for (int i = 0; i < samples; ++i) {
        const double x = -M_PI + 2.0 * M_PI * i / samples;
        const double v0 = f.eval(x);
        const double v1 = f.eval(x + 2.0 * M_PI);
        const double scale = std::max({1.0, std::abs(v0), std::abs(v1)});
        if (std::abs(v1 - v0) > rel_tol * scale) return false;
    }
    return true;
}

} // namespace conjsum
