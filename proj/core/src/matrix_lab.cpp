#include "conjsum/matrix_lab.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

namespace conjsum {

struct SummabilityMatrix::State {
    std::string label;
    std::function<double(int, int)> entry;
    std::function<int(int)> support;
    mutable std::mutex mu;
    mutable std::unordered_map<int, std::vector<double>> rows;
};

SummabilityMatrix::SummabilityMatrix(std::string label,
                                     std::function<double(int, int)> entry,
                                     std::function<int(int)> support)
    : state_(std::make_shared<State>()) {
    state_->label = std::move(label);
    state_->entry = std::move(entry);
    state_->support = std::move(support);
}

const std::string& SummabilityMatrix::label() const noexcept {
    return state_->label;
}

int SummabilityMatrix::support(int n) const {
    if (n < 0) throw std::invalid_argument("SummabilityMatrix: n must be >= 0");
    return state_->support(n);
}

const std::vector<double>& SummabilityMatrix::row(int n) const {
    if (n < 0) throw std::invalid_argument("SummabilityMatrix: n must be >= 0");
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->rows.find(n);
    if (it != state_->rows.end()) return it->second;
    const int K = state_->support(n);
    std::vector<double> r(K + 1);
    for (int k = 0; k <= K; ++k) {
        const double v = state_->entry(n, k);
        if (!(v >= 0.0)) {
            throw std::invalid_argument("SummabilityMatrix(" + state_->label +
                                        "): negative entry at n=" +
                                        std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
        r[k] = v;
    }
    return state_->rows.emplace(n, std::move(r)).first->second;
}

double SummabilityMatrix::entry(int n, int k) const {
    if (k < 0) throw std::invalid_argument("SummabilityMatrix: k must be >= 0");
    const auto& r = row(n);
    return k < static_cast<int>(r.size()) ? r[k] : 0.0;
}

double SummabilityMatrix::row_sum(int n) const {
    double s = 0.0;
    for (double v : row(n)) s += v;
    return s;
}

double a_nr(const SummabilityMatrix& A, int n, int r) {
    if (r < 1) throw std::invalid_argument("a_nr: r must be >= 1");
    const auto& row = A.row(n);
    const int K = static_cast<int>(row.size()) - 1;
    auto at = [&row, K](int k) { return k <= K ? row[k] : 0.0; };
    double s = 0.0;
    for (int k = 0; k <= K + r; ++k) {
        s += std::abs(at(k) - at(k + r));
    }
    return s;
}

SummabilityMatrix make_cesaro() {
    return SummabilityMatrix(
        "cesaro",
        [](int n, int k) { return k <= n ? 1.0 / (n + 1) : 0.0; },
        [](int n) { return n; });
}

SummabilityMatrix make_riesz(double weight_power) {
    if (!(weight_power >= 0.0)) {
        throw std::invalid_argument("make_riesz: weight power must be >= 0");
    }
    return SummabilityMatrix(
        "riesz",
        [weight_power](int n, int k) {
            if (k > n) return 0.0;
            double Q = 0.0;
            for (int j = 0; j <= n; ++j) Q += std::pow(j + 1.0, weight_power);
            return std::pow(k + 1.0, weight_power) / Q;
        },
        [](int n) { return n; });
}

SummabilityMatrix make_norlund(double weight_power) {
    if (!(weight_power >= 0.0)) {
        throw std::invalid_argument("make_norlund: weight power must be >= 0");
    }
    return SummabilityMatrix(
        "norlund",
        [weight_power](int n, int k) {
            if (k > n) return 0.0;
            double P = 0.0;
            for (int j = 0; j <= n; ++j) P += std::pow(j + 1.0, weight_power);
            return std::pow(n - k + 1.0, weight_power) / P;
        },
        [](int n) { return n; });
}

SummabilityMatrix make_euler(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("make_euler: q must be > 0");
    return SummabilityMatrix(
        "euler",
        [q](int n, int k) {
            if (k > n) return 0.0;
            // Binomial row built outward from its mode and normalized, which
            // stays accurate where direct C(n,k) q^(n-k) under/overflows.
            const int mode =
                std::min(n, static_cast<int>((n + 1) / (1.0 + q)));
            std::vector<double> u(n + 1, 0.0);
            u[mode] = 1.0;
            // ratio u[k+1]/u[k] = (n-k)/((k+1) q)
            for (int j = mode + 1; j <= n; ++j) {
                u[j] = u[j - 1] * (n - j + 1.0) / (j * q);
            }
            for (int j = mode - 1; j >= 0; --j) {
                u[j] = u[j + 1] * (j + 1.0) * q / (n - j);
            }
            double s = 0.0;
            for (double v : u) s += v;
            return u[k] / s;
        },
        [](int n) { return n; });
}

SummabilityMatrix make_identity() {
    return SummabilityMatrix(
        "identity", [](int n, int k) { return k == n ? 1.0 : 0.0; },
        [](int n) { return n; });
}

SummabilityMatrix make_concentrated(int power) {
    if (power < 1 || power > 3) {
        throw std::invalid_argument("make_concentrated: power must be in [1, 3]");
    }
    auto spike = [power](int n) {
        long long s = 1;
        for (int i = 0; i < power; ++i) s *= n;
        if (s > std::numeric_limits<int>::max() / 2) {
            throw std::invalid_argument("make_concentrated: row index overflow");
        }
        return static_cast<int>(s);
    };
    return SummabilityMatrix(
        "concentrated",
        [spike](int n, int k) { return k == spike(n) ? 1.0 : 0.0; },
        [spike](int n) { return spike(n); });
}

SummabilityMatrix make_synthetic_pi() {
    // Equal entries h = pi/(n+1) on k < M, remainder 1 - M*h at k = M: the
    // row is nonincreasing, so its one-step variation telescopes to exactly h.
    // Requires h <= 1, i.e. n >= 3; below that the row degenerates to a
    // single unit spike (variation 1, not h).
    return SummabilityMatrix(
        "synthetic-pi",
        [](int n, int k) {
            const double h = M_PI / (n + 1);
            const int M = static_cast<int>(1.0 / h);
            if (k < M) return h;
            if (k == M) return 1.0 - M * h;
            return 0.0;
        },
        [](int n) {
            const double h = M_PI / (n + 1);
            return static_cast<int>(1.0 / h);
        });
}

SummabilityMatrix make_matrix_by_name(const std::string& name, double param) {
    if (name == "cesaro") return make_cesaro();
    if (name == "riesz") return make_riesz(param);
    if (name == "norlund") return make_norlund(param);
    if (name == "euler") return make_euler(param);
    if (name == "identity") return make_identity();
    if (name == "concentrated")
        return make_concentrated(static_cast<int>(param));
    if (name == "synthetic-pi") return make_synthetic_pi();
    throw std::invalid_argument("make_matrix_by_name: unknown matrix id '" +
                                name + "'");
}

FitReport check_window_sums(const SummabilityMatrix& A, const std::vector<int>& n_values,
                    int r) {
    if (r < 1) throw std::invalid_argument("check_window_sums: r must be >= 1");
    std::vector<double> ratios;
    std::string note;
    ratios.reserve(n_values.size());
    for (int n : n_values) {
        const auto& row = A.row(n);
        const int K = static_cast<int>(row.size()) - 1;
        auto at = [&row, K](int k) { return k <= K ? row[k] : 0.0; };
        double s = 0.0;
        for (int l = 0; l <= n; ++l) {
            for (int k = l; k <= l + r - 1; ++k) s += at(k);
        }
        if (s == 0.0) {
            ratios.push_back(std::numeric_limits<double>::infinity());
            note = "window sum vanished";
            continue;
        }
        ratios.push_back(1.0 / s);
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

FitReport check_mean_index(const SummabilityMatrix& A,
                    const std::vector<int>& n_values) {
    std::vector<double> ratios;
    ratios.reserve(n_values.size());
    for (int n : n_values) {
        const auto& row = A.row(n);
        double s = 0.0;
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            s += (k + 1.0) * row[k];
        }
        ratios.push_back(s / (n + 1.0));
    }
    return make_fit_report(std::move(ratios));
}

FitReport check_tail_comparison(const SummabilityMatrix& A, const std::vector<int>& n_values,
                    int r, double c) {
    if (r < 1) throw std::invalid_argument("check_tail_comparison: r must be >= 1");
    if (!(c > 1.0)) throw std::invalid_argument("check_tail_comparison: c must be > 1");
    std::vector<double> ratios;
    std::string note;
    for (int n : n_values) {
        const auto& row = A.row(n);
        const int K = static_cast<int>(row.size()) - 1;
        auto at = [&row, K](int k) { return k <= K ? row[k] : 0.0; };
        double worst = 0.0;
        for (int m = 1; m <= K + r; m *= 2) {
            double lhs = 0.0;
            for (int k = m; k <= K + r; ++k) lhs += std::abs(at(k) - at(k + r));
            if (lhs == 0.0) continue;
            double rhs = 0.0;
            const int k0 = std::max(1, static_cast<int>(std::ceil(m / c)));
            for (int k = k0; k <= K; ++k) rhs += at(k) / k;
            if (rhs == 0.0) {
                worst = std::numeric_limits<double>::infinity();
                note = "comparison tail vanished with nonzero variation";
                break;
            }
            worst = std::max(worst, lhs / rhs);
        }
        ratios.push_back(worst);
    }
    return make_fit_report(std::move(ratios), std::move(note));
}

std::vector<int> doubling_grid(int lo, int hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("doubling_grid: bad range");
    std::vector<int> g;
    for (long long n = lo; n <= hi; n *= 2) g.push_back(static_cast<int>(n));
    return g;
}

} // namespace conjsum
