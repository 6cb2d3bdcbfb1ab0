#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjsum/fourier_engine.hpp"
#include "conjsum/matrix_lab.hpp"
#include "conjsum/modulus_models.hpp"
#include "conjsum/norm_space.hpp"
#include "conjsum/periodic_function.hpp"

namespace conjsum {

// Which bound expression accompanies the measured deviation. The first five
// target the conjugate-series mean; MeanVsFunction / MeanVsFunctionModuli
// measure the plain mean against f itself for side-by-side comparison.
enum class BoundKind {
    TailVariation,       // H(pi/(n+1)) * (pi/(n+1) + A_{n,r})
    VariationArgument,   // H(A_{n,r}) * A_{n,r}
    SplitModulus,        // omega(pi/(n+1)) + H(pi/(n+1)) * A_{n,r}
    MeasuredModuli,      // three-term sum over measured conjugate moduli
    WeightedTail,        // H(pi/(n+1))/(n+1) + sum_k a_{n,k} H(pi/(k+1))/(k+1)
    MeanVsFunction,      // non-conjugate deviation, TailVariation bound
    MeanVsFunctionModuli // non-conjugate deviation, measured classical moduli
};

// Reference the mean is compared against.
enum class DeviationVariant {
    FullConjugate,   // f~(x)
    TruncatedPiOverRn, // f~(x, pi/(r(n+1)))
    TruncatedAnrOverR  // f~(x, A_{n,r}/r)
};

struct ExperimentSpec {
    PeriodicFunction function;
    SummabilityMatrix matrix;
    NormSpace space;
    int r = 1;
    std::vector<int> n_values;
    BoundKind bound = BoundKind::TailVariation;
    DeviationVariant variant = DeviationVariant::FullConjugate;
    int max_freq = 128;
    std::string id = "experiment";
};

struct DeviationRow {
    int n = 0;
    double deviation = 0.0;
    double bound_value = 0.0;
    double ratio = 0.0;
    std::optional<double> epsilon_used;
};

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    int points_used = 0;
};

struct DeviationReport {
    std::string id;
    std::vector<DeviationRow> rows;
    double fitted_slope = 0.0;
    double bound_slope = 0.0;
    double constant_ratio_max = 0.0;
};

// n-th matrix mean sum_{k<=K(n)} a_{n,k} S_k f(x) (partial sums shared
// incrementally across k); conjugate = true uses the conjugate partial sums.
double matrix_mean(const SummabilityMatrix& A, const FourierData& fd, int n,
                   double x, bool conjugate);

// Measured deviation ||T_n f - reference||_X for one n. Returns the value
// and the truncation point actually used (nullopt for full references).
std::pair<double, std::optional<double>> deviation(const ExperimentSpec& spec,
                                                   int n);

// Bound expression for one n. Closed-form kinds require a model; the
// measured-moduli kinds sample the appropriate second modulus instead.
double bound_value(const ExperimentSpec& spec, int n,
                   const std::optional<ModulusModel>& model);

// Least-squares slope of log(deviation) against log(n+1); rows with zero
// deviation are excluded, and fewer than 4 usable rows raises
// InsufficientDataError.
RateFit fit_rate(const std::vector<DeviationRow>& rows);

// Full sweep over spec.n_values.
DeviationReport run_experiment(const ExperimentSpec& spec,
                               const std::optional<ModulusModel>& model);

} // namespace conjsum
