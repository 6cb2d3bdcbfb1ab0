#include "conjsum/deviation.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "conjsum/errors.hpp"
#include "conjsum/kernels.hpp"
#include "conjsum/quadrature.hpp"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

namespace {

bool conjugate_mode(BoundKind b) {
    return b != BoundKind::MeanVsFunction &&
           b != BoundKind::MeanVsFunctionModuli;
}

bool needs_model(BoundKind b) {
    return b == BoundKind::TailVariation || b == BoundKind::VariationArgument ||
           b == BoundKind::SplitModulus || b == BoundKind::WeightedTail ||
           b == BoundKind::MeanVsFunction;
}

double safe_ratio(double num, double den) {
    if (den == 0.0) {
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return num / den;
}

// Per-experiment scratch: coefficients, reference samples, memoized moduli.
struct Workspace {
    FourierData fd;
    std::vector<double> ref; // reference samples on space.grid()
    std::map<int, double> modulus_by_mu;

    explicit Workspace(const ExperimentSpec& spec) {
        fd = fourier_coeffs(spec.function, spec.max_freq);
        const auto& xs = spec.space.grid();
        ref.resize(xs.size());
        if (conjugate_mode(spec.bound)) {
            for (std::size_t j = 0; j < xs.size(); ++j) {
                ref[j] = conj_partial_sum(fd, fd.max_freq, xs[j]);
            }
        } else {
            for (std::size_t j = 0; j < xs.size(); ++j) {
                ref[j] = spec.function.eval(xs[j]);
            }
        }
    }

    double modulus(const ExperimentSpec& spec, int mu) {
        auto it = modulus_by_mu.find(mu);
        if (it != modulus_by_mu.end()) return it->second;
        const double delta = M_PI / mu;
        const double v =
            spec.bound == BoundKind::MeanVsFunctionModuli
                ? classical_modulus2(spec.space, spec.function, delta)
                : conj_modulus2(spec.space, spec.function, delta);
        modulus_by_mu.emplace(mu, v);
        return v;
    }
};

// (1/pi) int_0^eps psi_x(t) (1/2)cot(t/2) dt; the integrand extends
// continuously to t = 0, realized by flooring t just above the pole guard.
double truncation_correction(const PeriodicFunction& f, double x, double eps) {
    if (eps == 0.0) return 0.0;
    const auto res = integrate_adaptive(
        [&f, x](double t) {
            const double tt = std::max(t, 1e-7);
            return psi(f, x, tt) * half_cotangent(tt);
        },
        0.0, eps, 1e-8);
    return res.value / M_PI;
}

std::pair<double, std::optional<double>> deviation_impl(
    const ExperimentSpec& spec, Workspace& ws, int n) {
    const bool conj = conjugate_mode(spec.bound);
    std::optional<double> eps;
    if (conj) {
        switch (spec.variant) {
            case DeviationVariant::FullConjugate:
                break;
            case DeviationVariant::TruncatedPiOverRn:
                eps = M_PI / (spec.r * (n + 1.0));
                break;
            case DeviationVariant::TruncatedAnrOverR:
                eps = a_nr(spec.matrix, n, spec.r) / spec.r;
                break;
        }
    } else if (spec.variant != DeviationVariant::FullConjugate) {
        throw std::invalid_argument(
            "deviation: non-conjugate comparisons use the full reference");
    }
    if (eps && !(*eps >= 0.0 && *eps <= M_PI)) {
        throw std::invalid_argument("deviation: truncation point outside [0, pi]");
    }
    const auto& xs = spec.space.grid();
    std::vector<double> diff(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double mean = matrix_mean(spec.matrix, ws.fd, n, xs[j], conj);
        double reference = ws.ref[j];
        if (eps && *eps > 0.0) {
            reference += truncation_correction(spec.function, xs[j], *eps);
        }
        diff[j] = mean - reference;
    }
    return {spec.space.norm_of_samples(diff), eps};
}

double bound_impl(const ExperimentSpec& spec, Workspace& ws, int n,
                  const std::optional<ModulusModel>& model) {
    if (needs_model(spec.bound) && !model) {
        throw ConfigError("bound_value: bound kind for experiment '" + spec.id +
                          "' requires a modulus model");
    }
    const double u = M_PI / (n + 1.0);
    switch (spec.bound) {
        case BoundKind::TailVariation:
        case BoundKind::MeanVsFunction: {
            const double Anr = a_nr(spec.matrix, n, spec.r);
            return model->H(u) * (u + Anr);
        }
        case BoundKind::VariationArgument: {
            const double Anr = a_nr(spec.matrix, n, spec.r);
            if (Anr == 0.0) return 0.0;
            return model->H(Anr) * Anr;
        }
        case BoundKind::SplitModulus: {
            const double Anr = a_nr(spec.matrix, n, spec.r);
            return model->omega(u) + model->H(u) * Anr;
        }
        case BoundKind::WeightedTail: {
            const auto& row = spec.matrix.row(n);
            double s = model->H(u) / (n + 1.0);
            for (int k = 1; k < static_cast<int>(row.size()); ++k) {
                s += row[k] * model->H(M_PI / (k + 1.0)) / (k + 1.0);
            }
            return s;
        }
        case BoundKind::MeasuredModuli:
        case BoundKind::MeanVsFunctionModuli: {
            const auto& row = spec.matrix.row(n);
            const int K = static_cast<int>(row.size()) - 1;
            auto at = [&row, K](int k) { return k <= K ? row[k] : 0.0; };
            // prefix[j] = sum_{k<=j} a_{n,k}; suffix variation from index mu
            std::vector<double> prefix(std::max(K + 1, n + 3), 0.0);
            double acc = 0.0;
            for (int k = 0; k < static_cast<int>(prefix.size()); ++k) {
                acc += at(k);
                prefix[k] = acc;
            }
            // tailvar[mu] = sum_{k>=mu} |a_{n,k} - a_{n,k+r}|, built from the
            // far end so each entry extends the previous suffix.
            std::vector<double> tailvar(n + 2, 0.0);
            for (int mu = n; mu >= 1; --mu) {
                double suffix = (mu + 1 <= n) ? tailvar[mu + 1] : 0.0;
                if (mu + 1 > n) {
                    for (int k = mu + 1; k <= K + spec.r; ++k) {
                        suffix += std::abs(at(k) - at(k + spec.r));
                    }
                }
                const double own =
                    mu <= K + spec.r ? std::abs(at(mu) - at(mu + spec.r)) : 0.0;
                tailvar[mu] = own + suffix;
            }
            double s = ws.modulus(spec, n + 1);
            for (int mu = 1; mu <= n; ++mu) {
                const double wmu = ws.modulus(spec, mu);
                const double head =
                    prefix[std::min(mu + 1, static_cast<int>(prefix.size()) - 1)];
                s += wmu / mu * head + wmu * tailvar[mu];
            }
            return s;
        }
    }
    throw std::logic_error("bound_value: unhandled bound kind");
}

} // namespace

double matrix_mean(const SummabilityMatrix& A, const FourierData& fd, int n,
                   double x, bool conjugate) {
    const auto& row = A.row(n);
    double running = conjugate ? 0.0 : 0.5 * fd.a0;
    double acc = 0.0;
    const int K = static_cast<int>(row.size()) - 1;
    for (int k = 0; k <= K; ++k) {
        if (k >= 1 && k <= fd.max_freq) {
            running += conjugate ? fd.cos_coeff(k) * std::sin(k * x) -
                                       fd.sin_coeff(k) * std::cos(k * x)
                                 : fd.cos_coeff(k) * std::cos(k * x) +
                                       fd.sin_coeff(k) * std::sin(k * x);
        }
        acc += row[k] * running;
    }
    return acc;
}

std::pair<double, std::optional<double>> deviation(const ExperimentSpec& spec,
                                                   int n) {
    Workspace ws(spec);
    return deviation_impl(spec, ws, n);
}

double bound_value(const ExperimentSpec& spec, int n,
                   const std::optional<ModulusModel>& model) {
    Workspace ws(spec);
    return bound_impl(spec, ws, n, model);
}

RateFit fit_rate(const std::vector<DeviationRow>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : rows) {
        if (row.deviation > 0.0) {
            pts.emplace_back(std::log(row.n + 1.0), std::log(row.deviation));
        }
    }
    if (pts.size() < 4) {
        throw InsufficientDataError(
            "fit_rate: need at least 4 rows with nonzero deviation, have " +
            std::to_string(pts.size()));
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) {
        throw InsufficientDataError("fit_rate: degenerate n grid");
    }
    RateFit fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    fit.points_used = static_cast<int>(pts.size());
    return fit;
}

DeviationReport run_experiment(const ExperimentSpec& spec,
                               const std::optional<ModulusModel>& model) {
    if (spec.r < 1) throw std::invalid_argument("run_experiment: r must be >= 1");
    if (spec.n_values.empty()) {
        throw std::invalid_argument("run_experiment: empty n grid");
    }
    Workspace ws(spec);
    DeviationReport rep;
    rep.id = spec.id;
    rep.rows.reserve(spec.n_values.size());
    for (int n : spec.n_values) {
        DeviationRow row;
        row.n = n;
        auto [dev, eps] = deviation_impl(spec, ws, n);
        row.deviation = dev;
        row.epsilon_used = eps;
        row.bound_value = bound_impl(spec, ws, n, model);
        row.ratio = safe_ratio(row.deviation, row.bound_value);
        rep.constant_ratio_max = std::max(rep.constant_ratio_max, row.ratio);
        rep.rows.push_back(std::move(row));
    }
    rep.fitted_slope = fit_rate(rep.rows).slope;
    // Slope of the bound sequence on the same log-log axes.
    std::vector<DeviationRow> bound_rows;
    for (const auto& row : rep.rows) {
        DeviationRow br;
        br.n = row.n;
        br.deviation = row.bound_value;
        bound_rows.push_back(br);
    }
    try {
        rep.bound_slope = fit_rate(bound_rows).slope;
    } catch (const InsufficientDataError&) {
        rep.bound_slope = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

} // namespace conjsum
