#include "conjsum/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace conjsum {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long evaluations = 0;

    double eval(double x) {
        ++evaluations;
        return f(x);
    }
};

// One level of the classic adaptive Simpson recursion. `whole` is the
// Simpson estimate over [a, b] with midpoint m; fa/fm/fb are cached values.
double adapt(SimpsonState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth,
             double& err_accum) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        err_accum += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_accum) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_accum);
}

} // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  int max_depth) {
    if (!(abs_tol > 0.0)) {
        throw std::invalid_argument("quadrature: abs_tol must be positive");
    }
    IntegralResult res;
    if (a == b) {
        return res;
    }
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    SimpsonState st{f};
    const double m = 0.5 * (a + b);
    const double fa = st.eval(a);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err = 0.0;
    const double v = adapt(st, a, b, fa, fm, fb, whole, abs_tol, max_depth, err);
    res.value = sign * v;
    res.error_estimate = err;
    res.converged = std::isfinite(v);
    res.evaluations = st.evaluations;
    return res;
}

IntegralResult integrate_to_zero(const std::function<double(double)>& f,
                                 double b, double rel_tol, int max_levels) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("quadrature: upper limit must be positive");
    }
    IntegralResult total;
    double hi = b;
    int calm = 0; // consecutive levels with negligible contribution
    for (int level = 0; level < max_levels; ++level) {
        const double lo = hi * 0.5;
        const double scale = std::max(1.0, std::abs(total.value));
        IntegralResult piece =
            integrate_adaptive(f, lo, hi, 0.25 * rel_tol * scale, 40);
        total.value += piece.value;
        total.error_estimate += piece.error_estimate;
        total.evaluations += piece.evaluations;
        if (!std::isfinite(total.value)) {
            total.converged = false;
            return total;
        }
        if (std::abs(piece.value) <=
            rel_tol * std::max(1e-300, std::abs(total.value))) {
            if (++calm >= 2) {
                return total;
            }
        } else {
            calm = 0;
        }
        hi = lo;
    }
    // Tail still contributing at the deepest level: treat as non-convergent
    // (slowly divergent integrals land here).
    total.converged = false;
    return total;
}

} // namespace conjsum
