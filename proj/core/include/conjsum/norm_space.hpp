#pragma once

#include <span>
#include <vector>

#include "conjsum/periodic_function.hpp"

namespace conjsum {

// Ambient space for measuring deviations on Q = [-pi, pi]: either the sup
// norm (continuous functions) or an L^p norm, evaluated on a fixed uniform
// grid. L^p integrals use composite Simpson, hence grid_size must be even.
class NormSpace {
public:
    enum class Kind { SupNorm, Lp };

    static NormSpace sup(int grid_size = 2048);
    static NormSpace lp(double p, int grid_size = 2048);

    Kind kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }
    int grid_size() const noexcept { return grid_size_; }

    // Uniform grid x_j = -pi + 2*pi*j/grid_size, j = 0..grid_size.
    // The final point pi duplicates -pi for periodic inputs; it closes the
    // Simpson rule and is harmless for the sup norm.
    const std::vector<double>& grid() const noexcept { return grid_; }

    // Norm of precomputed samples taken on grid() (size grid_size + 1).
    double norm_of_samples(std::span<const double> values) const;

private:
    NormSpace(Kind k, double p, int grid_size);

    Kind kind_;
    double p_;
    int grid_size_;
    std::vector<double> grid_;
    std::vector<double> simpson_w_; // Simpson weights, Lp only
};

// ||g||_X evaluated on the space's grid. Throws EvaluationError when g
// produces a non-finite value at a grid point.
double norm(const NormSpace& space, const PeriodicFunction& g);

// Second modulus of the conjugate problem:
//   sup_{0 < t <= delta} || psi_.(t) ||_X,
// with the sup taken over t_samples log-spaced points of (0, delta] plus
// delta itself. Nondecreasing in delta up to sampling resolution.
double conj_modulus2(const NormSpace& space, const PeriodicFunction& f,
                     double delta, int t_samples = 512);

// Classical second modulus sup_{0 <= |t| <= delta} || phi_.(t) ||_X. The
// inner difference is even in t, so positive t sampling is exhaustive.
double classical_modulus2(const NormSpace& space, const PeriodicFunction& f,
                          double delta, int t_samples = 512);

} // namespace conjsum
