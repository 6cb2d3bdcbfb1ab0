#include "conjsum/norm_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conjsum/errors.hpp"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

NormSpace::NormSpace(Kind k, double p, int grid_size)
    : kind_(k), p_(p), grid_size_(grid_size) {
    if (grid_size < 64 || grid_size % 2 != 0) {
        throw std::invalid_argument(
            "NormSpace: grid_size must be even and >= 64");
    }
    if (k == Kind::Lp && !(p >= 1.0)) {
        throw std::invalid_argument("NormSpace: p must satisfy p >= 1");
    }
    grid_.resize(grid_size_ + 1);
    const double h = 2.0 * M_PI / grid_size_;
    for (int j = 0; j <= grid_size_; ++j) {
        grid_[j] = -M_PI + h * j;
    }
    if (k == Kind::Lp) {
        simpson_w_.assign(grid_size_ + 1, 0.0);
        simpson_w_.front() = h / 3.0;
        simpson_w_.back() = h / 3.0;
        for (int j = 1; j < grid_size_; ++j) {
            simpson_w_[j] = (j % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
        }
    }
}

NormSpace NormSpace::sup(int grid_size) {
    return NormSpace(Kind::SupNorm, 0.0, grid_size);
}

NormSpace NormSpace::lp(double p, int grid_size) {
    return NormSpace(Kind::Lp, p, grid_size);
}

double NormSpace::norm_of_samples(std::span<const double> values) const {
    if (values.size() != grid_.size()) {
        throw std::invalid_argument("NormSpace: sample count must match grid");
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (!std::isfinite(values[j])) {
            throw EvaluationError("NormSpace: non-finite sample at x = " +
                                      std::to_string(grid_[j]),
                                  grid_[j]);
        }
    }
    if (kind_ == Kind::SupNorm) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        acc += simpson_w_[j] * std::pow(std::abs(values[j]), p_);
    }
    return std::pow(acc, 1.0 / p_);
}

double norm(const NormSpace& space, const PeriodicFunction& g) {
    std::vector<double> vals(space.grid().size());
    for (std::size_t j = 0; j < vals.size(); ++j) {
        vals[j] = g.eval(space.grid()[j]);
    }
    return space.norm_of_samples(vals);
}

namespace {

// Log-spaced t samples covering (delta/1e4, delta], finest near delta where
// nondecreasing moduli attain their sup; delta itself is always included.
std::vector<double> modulus_t_samples(double delta, int t_samples) {
    std::vector<double> ts;
    ts.reserve(t_samples + 1);
    const double lo = delta * 1e-4;
    for (int i = 0; i < t_samples; ++i) {
        const double w = static_cast<double>(i) / (t_samples - 1);
        ts.push_back(lo * std::pow(delta / lo, w));
    }
    ts.push_back(delta);
    return ts;
}

template <typename Diff>
double modulus_impl(const NormSpace& space, const PeriodicFunction& f,
                    double delta, int t_samples, Diff diff,
                    const char* who) {
    if (!(delta >= 0.0) || delta > 2.0 * M_PI) {
        throw std::invalid_argument(std::string(who) +
                                    ": delta must lie in [0, 2*pi]");
    }
    if (t_samples < 2) {
        throw std::invalid_argument(std::string(who) +
                                    ": need at least 2 t-samples");
    }
    if (delta == 0.0) return 0.0;
    const auto& xs = space.grid();
    std::vector<double> vals(xs.size());
    double sup = 0.0;
    for (double t : modulus_t_samples(delta, t_samples)) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            vals[j] = diff(xs[j], t);
        }
        sup = std::max(sup, space.norm_of_samples(vals));
    }
    return sup;
}

} // namespace

double conj_modulus2(const NormSpace& space, const PeriodicFunction& f,
                     double delta, int t_samples) {
    return modulus_impl(
        space, f, delta, t_samples,
        [&f](double x, double t) { return psi(f, x, t); }, "conj_modulus2");
}

double classical_modulus2(const NormSpace& space, const PeriodicFunction& f,
                          double delta, int t_samples) {
    return modulus_impl(
        space, f, delta, t_samples,
        [&f](double x, double t) { return phi(f, x, t); },
        "classical_modulus2");
}

} // namespace conjsum
