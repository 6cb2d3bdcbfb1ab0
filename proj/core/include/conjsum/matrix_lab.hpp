#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conjsum/fit_report.hpp"

namespace conjsum {

// A nonnegative summability matrix A = (a_{n,k}) with unit row sums and
// entries vanishing in n for fixed k. Rows are produced by a family rule and
// cached; the cache is guarded for concurrent readers. Copies share state.
class SummabilityMatrix {
public:
    // `entry` returns a_{n,k} >= 0; `support` returns the largest index K(n)
    // past which the row tail is below the truncation budget (exact for the
    // shipped triangular families).
    SummabilityMatrix(std::string label,
                      std::function<double(int, int)> entry,
                      std::function<int(int)> support);

    const std::string& label() const noexcept;

    double entry(int n, int k) const;

    // Row truncation index K(n); the dropped tail mass is below tail_budget.
    int support(int n) const;

    // Full cached row a_{n,0..K(n)}.
    const std::vector<double>& row(int n) const;

    // Sum of the cached row (should be 1 within tail_budget).
    double row_sum(int n) const;

    static constexpr double tail_budget = 1e-12;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Row variation A_{n,r} = sum_{k>=0} |a_{n,k} - a_{n,k+r}| (entries beyond
// the support are zero).
double a_nr(const SummabilityMatrix& A, int n, int r);

// Shipped families.
SummabilityMatrix make_cesaro();                      // a_{n,k} = 1/(n+1)
SummabilityMatrix make_riesz(double weight_power = 1.0);   // q_k = (k+1)^w
SummabilityMatrix make_norlund(double weight_power = 1.0); // p_{n-k} weights
SummabilityMatrix make_euler(double q = 1.0);         // binomial rows
SummabilityMatrix make_identity();                    // row = delta_{k,n}
// Row concentrated at k = n^power (not lower triangular; stresses the
// mean-index condition below).
SummabilityMatrix make_concentrated(int power = 2);
// Monotone row of equal entries pi/(n+1) (plus one remainder entry), so the
// row variation A_{n,1} equals pi/(n+1) exactly for n >= 3 (rows with
// pi/(n+1) > 1 degenerate to a single unit spike).
SummabilityMatrix make_synthetic_pi();

// Named lookup used by the config layer and CLI ("cesaro", "riesz",
// "norlund", "euler", "identity", "concentrated", "synthetic-pi").
SummabilityMatrix make_matrix_by_name(const std::string& name,
                                      double param = 1.0);

// Condition checks over a sample of row indices, reported with the shared
// stability rule (grids run toward large n).

// [sum_{l=0}^n sum_{k=l}^{l+r-1} a_{n,k}]^{-1} = O(1)
FitReport check_window_sums(const SummabilityMatrix& A, const std::vector<int>& n_values,
                    int r);

// sum_k (k+1) a_{n,k} = O(n+1)
FitReport check_mean_index(const SummabilityMatrix& A, const std::vector<int>& n_values);

// Tail comparison: for all sampled (n, m),
//   sum_{k>=m} |a_{n,k} - a_{n,k+r}|  <=  K * sum_{k>=m/c} a_{n,k}/k,  c > 1.
// m runs over a doubling grid per n; the report's constant is the smallest
// workable K over the sample.
FitReport check_tail_comparison(const SummabilityMatrix& A, const std::vector<int>& n_values,
                    int r, double c);

// Doubling grid n = lo, 2*lo, ..., capped at hi.
std::vector<int> doubling_grid(int lo, int hi);

} // namespace conjsum
