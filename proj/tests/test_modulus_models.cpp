#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <utility>
#include <vector>

#include "conjsum/modulus_models.hpp"

using namespace conjsum;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Interval pairs ordered by shrinking width: the asymptotic regime of the
// band condition is beta - alpha -> 0, and the stability rule expects grids
// to end at the critical side.
std::vector<std::pair<double, double>> band_pairs() {
    std::vector<std::pair<double, double>> pairs;
    for (double a = 1.28; a >= 0.0099; a /= 2.0) pairs.push_back({a, 2.0 * a});
    for (double a = 0.64; a >= 0.0199; a /= 2.0) pairs.push_back({a, a + 0.3});
    std::sort(pairs.begin(), pairs.end(), [](const auto& u, const auto& v) {
        return (u.second - u.first) > (v.second - v.first);
    });
    return pairs;
}
} // namespace

TEST_CASE("models satisfy the modulus axioms") {
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        CHECK(validate_modulus(make_power_modulus(alpha)).empty());
    }
    CHECK(validate_modulus(make_log_lipschitz_modulus()).empty());
    CHECK(validate_modulus(make_reciprocal_log_modulus()).empty());
    CHECK_THROWS_AS(make_power_modulus(0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_power_modulus(1.5), std::invalid_argument);
}

TEST_CASE("power model tail majorant is exact (ratio one)") {
    // H is the closed form of the checked integral, so every ratio is ~1.
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        const auto m = make_power_modulus(alpha);
        const auto rep = check_tail_majorant(m, default_u_grid(kPi / 2.0));
        REQUIRE(rep.ok);
        for (double r : rep.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("power models pass every boundedness condition") {
    const auto grid = default_u_grid(kPi / 2.0);
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        const auto m = make_power_modulus(alpha);
        CHECK(check_head_mass(m, grid).ok);
        CHECK(check_dini(m, grid).ok);
        CHECK(check_band_integral(m, 2.0, band_pairs()).ok);
        CHECK(check_scaled_tail_majorant(m, 2.0, grid).ok);
        CHECK(check_doubling(m));
    }
}

TEST_CASE("log-lipschitz model passes the Dini-type condition") {
    const auto m = make_log_lipschitz_modulus();
    const auto grid = default_u_grid(kPi / 2.0);
    CHECK(check_dini(m, grid).ok);
    CHECK(check_tail_majorant(m, grid).ok);
    CHECK(check_head_mass(m, grid).ok);
    CHECK(check_doubling(m));
    // omega(delta)/delta = log(e*2pi/delta) explodes at 0 but the doubling
    // control only requires one-sided comparability, which holds.
}

TEST_CASE("reciprocal-log model fails exactly where it should") {
    const auto m = make_reciprocal_log_modulus();
    const auto grid = default_u_grid(kPi / 2.0);
    // omega(t)/t is not integrable at 0: the Dini-type ratio diverges.
    CHECK_FALSE(check_dini(m, grid).ok);
    // H(t) = 1/(t log(e*2pi/t)) is itself non-integrable at 0.
    CHECK_FALSE(check_head_mass(m, grid).ok);
    // ...but the tail majorant comparison is fine (H is the sharp rate).
    CHECK(check_tail_majorant(m, grid).ok);
    CHECK(check_doubling(m));
}

TEST_CASE("band integral respects the domain cutoff") {
    const auto m = make_power_modulus(0.5);
    // c*(beta-alpha) > pi for every pair: nothing to sample.
    std::vector<std::pair<double, double>> wide = {{0.1, kPi}};
    const auto rep = check_band_integral(m, 4.0, wide);
    CHECK_FALSE(rep.ok); // empty sample cannot certify anything
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("u grids run from coarse toward zero") {
    const auto grid = default_u_grid(kPi, 6);
    REQUIRE(grid.size() == 6);
    CHECK(grid.front() == doctest::Approx(kPi / 2.0));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(grid[i] == doctest::Approx(grid[i - 1] / 2.0));
    }
    CHECK_THROWS_AS(default_u_grid(-1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(default_u_grid(kPi, 0), std::invalid_argument);
}

TEST_CASE("closed-form H values") {
    const auto m1 = make_power_modulus(1.0);
    // alpha = 1: H(u) = log(pi/u)
    CHECK(m1.H(kPi / 4.0) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    const auto mh = make_power_modulus(0.5);
    // alpha = 1/2: H(u) = (u^{-1/2} - pi^{-1/2}) / (1/2)
    const double u = 0.3;
    CHECK(mh.H(u) ==
          doctest::Approx(2.0 * (1.0 / std::sqrt(u) - 1.0 / std::sqrt(kPi)))
              .epsilon(1e-12));
    // omega values
    CHECK(mh.omega(0.25) == doctest::Approx(0.5).epsilon(1e-13));
    const auto ml = make_log_lipschitz_modulus();
    CHECK(ml.omega(1.0) ==
          doctest::Approx(std::log(std::exp(1.0) * 2.0 * kPi)).epsilon(1e-13));
    const auto mr = make_reciprocal_log_modulus();
    CHECK(mr.omega(2.0 * kPi) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(mr.omega(0.0) == 0.0);
}
