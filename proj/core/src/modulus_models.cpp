#include "conjsum/modulus_models.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "conjsum/quadrature.hpp"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * M_PI;
} // namespace

ModulusModel make_power_modulus(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("make_power_modulus: alpha must be in (0, 1]");
    }
    ModulusModel m;
    m.label = "power(" + std::to_string(alpha) + ")";
    m.omega = [alpha](double d) { return std::pow(d, alpha); };
    if (alpha == 1.0) {
        m.H = [](double u) { return std::log(M_PI / u); };
    } else {
        // int_u^pi t^(alpha-2) dt, exact antiderivative
        m.H = [alpha](double u) {
            return (std::pow(u, alpha - 1.0) - std::pow(M_PI, alpha - 1.0)) /
                   (1.0 - alpha);
        };
    }
    return m;
}

ModulusModel make_log_lipschitz_modulus() {
    ModulusModel m;
    m.label = "log-lipschitz";
    m.omega = [](double d) {
        return d == 0.0 ? 0.0 : d * std::log(std::exp(1.0) * kTwoPi / d);
    };
    // int_u^pi log(e*2*pi/t)/t dt with antiderivative
    // F(t) = (1 + log(2*pi)) log(t) - log(t)^2 / 2.
    m.H = [](double u) {
        auto F = [](double t) {
            const double lt = std::log(t);
            return (1.0 + std::log(kTwoPi)) * lt - 0.5 * lt * lt;
        };
        return F(M_PI) - F(u);
    };
    return m;
}

ModulusModel make_reciprocal_log_modulus() {
    ModulusModel m;
    m.label = "reciprocal-log";
    m.omega = [](double d) {
        return d == 0.0 ? 0.0 : 1.0 / std::log(std::exp(1.0) * kTwoPi / d);
    };
    // Matches the tail integral to leading order as u -> 0.
    m.H = [](double u) {
        return 1.0 / (u * std::log(std::exp(1.0) * kTwoPi / u));
    };
    return m;
}

std::vector<double> default_u_grid(double top, int points) {
    if (!(top > 0.0) || points < 2) {
        throw std::invalid_argument("default_u_grid: bad arguments");
    }
    std::vector<double> g(points);
    for (int j = 0; j < points; ++j) {
        g[j] = top * std::ldexp(1.0, -(j + 1)); // top/2, top/4, ...
    }
    return g;
}

namespace {

double safe_ratio(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
    return num / den;
}

} // namespace

FitReport check_tail_majorant(const ModulusModel& m, const std::vector<double>& u_grid) {
    std::vector<double> ratios;
    ratios.reserve(u_grid.size());
    for (double u : u_grid) {
        if (!(u > 0.0) || u > M_PI) {
            throw std::invalid_argument("check_tail_majorant: grid point outside (0, pi]");
        }
        const auto tail = integrate_adaptive(
            [&m](double t) { return m.omega(t) / (t * t); }, u, M_PI,
            1e-10 * std::max(1.0, std::abs(m.H(u))));
        ratios.push_back(safe_ratio(tail.value, m.H(u)));
    }
    return make_fit_report(std::move(ratios));
}

FitReport check_head_mass(const ModulusModel& m, const std::vector<double>& u_grid) {
    std::vector<double> ratios;
    std::string note;
    ratios.reserve(u_grid.size());
    for (double u : u_grid) {
        if (!(u > 0.0) || u > M_PI) {
            throw std::invalid_argument("check_head_mass: grid point outside (0, pi]");
        }
        const auto head =
            integrate_to_zero([&m](double t) { return m.H(t); }, u);
        if (!head.converged) {
            ratios.push_back(kInf);
            note = "int_0^u H diverges";
            continue;
        }
        ratios.push_back(safe_ratio(head.value, u * m.H(u)));
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

FitReport check_dini(const ModulusModel& m, const std::vector<double>& u_grid) {
    std::vector<double> ratios;
    std::string note;
    ratios.reserve(u_grid.size());
    for (double u : u_grid) {
        if (!(u > 0.0) || u > kTwoPi) {
            throw std::invalid_argument("check_dini: grid point outside (0, 2*pi]");
        }
        const auto head =
            integrate_to_zero([&m](double t) { return m.omega(t) / t; }, u);
        if (!head.converged) {
            ratios.push_back(kInf);
            note = "int_0^u omega/t diverges";
            continue;
        }
        ratios.push_back(safe_ratio(head.value, m.omega(u)));
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

FitReport check_band_integral(const ModulusModel& m, double c,
                       const std::vector<std::pair<double, double>>& pairs) {
    if (!(c >= 1.0)) {
        throw std::invalid_argument("check_band_integral: c must be >= 1");
    }
    std::vector<double> ratios;
    std::string note;
    for (const auto& [alpha, beta] : pairs) {
        if (!(alpha > 0.0) || !(beta > alpha) || beta > kTwoPi) {
            throw std::invalid_argument(
                "check_band_integral: pairs must satisfy 0 < alpha < beta <= 2*pi");
        }
        const double width = beta - alpha;
        if (c * width > M_PI) {
            note = "pairs with c*(beta-alpha) > pi skipped";
            continue;
        }
        const auto mid = integrate_adaptive(
            [&m](double t) { return m.omega(t) / t; }, alpha, beta, 1e-12);
        ratios.push_back(safe_ratio(mid.value, width * m.H(c * width)));
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

FitReport check_scaled_tail_majorant(const ModulusModel& m, double b,
                       const std::vector<double>& u_grid) {
    if (!(b >= 1.0)) {
        throw std::invalid_argument("check_scaled_tail_majorant: b must be >= 1");
    }
    std::vector<double> ratios;
    std::string note;
    for (double u : u_grid) {
        if (!(u > 0.0) || u > M_PI) {
            throw std::invalid_argument("check_scaled_tail_majorant: grid point outside (0, pi]");
        }
        if (u == M_PI) {
            ratios.push_back(0.0); // empty tail integral
            continue;
        }
        if (b * u > M_PI) {
            note = "points with b*u > pi skipped";
            continue;
        }
        const auto tail = integrate_adaptive(
            [&m](double t) { return m.omega(t) / (t * t); }, u, M_PI,
            1e-10 * std::max(1.0, std::abs(m.H(b * u))));
        ratios.push_back(safe_ratio(tail.value, m.H(b * u)));
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

bool check_doubling(const ModulusModel& m, int pairs, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(1e-6, kTwoPi);
    for (int i = 0; i < pairs; ++i) {
        double d1 = unif(rng);
        double d2 = unif(rng);
        if (d2 < d1) std::swap(d1, d2);
        const double lhs = m.omega(d2) / d2;
        const double rhs = 2.0 * m.omega(d1) / d1;
        if (lhs > rhs * (1.0 + 1e-12)) return false;
    }
    return true;
}

std::string validate_modulus(const ModulusModel& m, unsigned seed) {
    if (m.omega(0.0) != 0.0) {
        return m.label + ": omega(0) != 0";
    }
    double prev = 0.0;
    for (int j = 1; j <= 256; ++j) {
        const double d = kTwoPi * j / 256.0;
        const double v = m.omega(d);
        if (!(v >= prev - 1e-15)) {
            return m.label + ": omega not nondecreasing near delta = " +
                   std::to_string(d);
        }
        prev = v;
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, kTwoPi);
    for (int i = 0; i < 100; ++i) {
        double d1 = unif(rng);
        double d2 = unif(rng);
        if (d1 + d2 > kTwoPi) {
            d1 *= 0.5;
            d2 *= 0.5;
        }
        const double lhs = m.omega(d1 + d2);
        const double rhs = m.omega(d1) + m.omega(d2);
        if (lhs > rhs + 1e-12) {
            return m.label + ": subadditivity fails at (" + std::to_string(d1) +
                   ", " + std::to_string(d2) + ")";
        }
    }
    return {};
}

} // namespace conjsum
