#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "conjsum/errors.hpp"
#include "conjsum/fit_report.hpp"
#include "conjsum/norm_space.hpp"
#include "conjsum/periodic_function.hpp"

using namespace conjsum;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("factories build 2pi-periodic functions") {
    CHECK(check_periodicity(make_constant(3.5)));
    CHECK(check_periodicity(make_cosine(4)));
    CHECK(check_periodicity(make_sine(7, 0.25)));
    CHECK(check_periodicity(make_weierstrass(0.5, 8)));
}

TEST_CASE("local differences of a pure cosine") {
    const auto f = make_cosine(1);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-kPi, kPi);
    for (int i = 0; i < 50; ++i) {
        const double x = dist(rng), t = std::abs(dist(rng));
        // cos(x+t) - cos(x-t) = -2 sin x sin t
        CHECK(psi(f, x, t) ==
              doctest::Approx(-2.0 * std::sin(x) * std::sin(t)).epsilon(1e-12));
        // cos(x+t) + cos(x-t) - 2 cos x = 2 cos x (cos t - 1)
        CHECK(phi(f, x, t) ==
              doctest::Approx(2.0 * std::cos(x) * (std::cos(t) - 1.0))
                  .epsilon(1e-12));
    }
}

TEST_CASE("trig poly evaluator matches its coefficients") {
    TrigCoefficients c;
    c.a0 = 1.0;
    c.a = {0.5, 0.0, -0.25};
    c.b = {0.0, 1.5};
    const auto f = make_trig_poly(c);
    REQUIRE(f.coeff_source.has_value());
    CHECK(f.coeff_source->max_freq() == 3);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-kPi, kPi);
    for (int i = 0; i < 20; ++i) {
        const double x = dist(rng);
        const double expect = 0.5 + 0.5 * std::cos(x) - 0.25 * std::cos(3 * x) +
                              1.5 * std::sin(2 * x);
        CHECK(f(x) == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("lacunary cosine family: coefficients and evaluation agree") {
    const double alpha = 0.5;
    const int levels = 5;
    const auto f = make_weierstrass(alpha, levels);
    REQUIRE(f.coeff_source.has_value());
    const auto& c = *f.coeff_source;
    CHECK(c.max_freq() == 16); // 2^(levels-1)
    for (int j = 0; j < levels; ++j) {
        const int freq = 1 << j;
        CHECK(c.cos_coeff(freq) ==
              doctest::Approx(std::pow(2.0, -j * alpha)).epsilon(1e-15));
    }
    // every other coefficient vanishes
    double off_mass = 0.0;
    for (int nu = 1; nu <= c.max_freq(); ++nu) {
        if ((nu & (nu - 1)) != 0) off_mass += std::abs(c.cos_coeff(nu));
        off_mass += std::abs(c.sin_coeff(nu));
    }
    CHECK(off_mass == 0.0);
    const double x = 0.9;
    double expect = 0.0;
    for (int j = 0; j < levels; ++j) {
        expect += std::pow(2.0, -j * alpha) * std::cos(std::ldexp(1.0, j) * x);
    }
    CHECK(f(x) == doctest::Approx(expect).epsilon(1e-14));
    CHECK_THROWS_AS(make_weierstrass(1.5, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_weierstrass(0.5, 0), std::invalid_argument);
}

TEST_CASE("sup and Lp norms of elementary functions") {
    const auto sup = NormSpace::sup();
    const auto l2 = NormSpace::lp(2.0);
    const auto l1 = NormSpace::lp(1.0);
    const auto f = make_sine(1);
    // the grid contains +-pi/2 exactly (grid_size divisible by 4)
    CHECK(norm(sup, f) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(l2, f) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
    CHECK(norm(l1, f) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(norm(sup, make_constant(-2.0)) == doctest::Approx(2.0));
    CHECK(norm(l2, make_constant(1.0)) ==
          doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("norm grid shape and validation") {
    const auto space = NormSpace::lp(2.0, 128);
    CHECK(space.grid().size() == 129);
    CHECK(space.grid().front() == doctest::Approx(-kPi));
    CHECK(space.grid().back() == doctest::Approx(kPi));
    CHECK_THROWS_AS(NormSpace::lp(0.5, 128), std::invalid_argument);
    CHECK_THROWS_AS(NormSpace::lp(2.0, 127), std::invalid_argument);
    CHECK_THROWS_AS(NormSpace::sup(16), std::invalid_argument);

    std::vector<double> bad(space.grid().size(), 1.0);
    bad[3] = std::nan("");
    CHECK_THROWS_AS(space.norm_of_samples(bad), EvaluationError);
    std::vector<double> short_vec(5, 1.0);
    CHECK_THROWS_AS(space.norm_of_samples(short_vec), std::invalid_argument);
}

TEST_CASE("conjugate-problem modulus of a pure cosine is 2 sin(delta)") {
    const auto space = NormSpace::sup(512);
    const auto f = make_cosine(1);
    for (double delta : {0.1, 0.5, 1.0, kPi / 2.0}) {
        // sup_x |psi_x(t)| = 2 sin t, increasing on (0, pi/2]
        CHECK(conj_modulus2(space, f, delta) ==
              doctest::Approx(2.0 * std::sin(delta)).epsilon(1e-9));
    }
    CHECK(conj_modulus2(space, f, 0.0) == 0.0);
    CHECK_THROWS_AS(conj_modulus2(space, f, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(conj_modulus2(space, f, 7.0), std::invalid_argument);
}

TEST_CASE("classical modulus of a pure cosine is 2(1 - cos(delta))") {
    const auto space = NormSpace::sup(512);
    const auto f = make_cosine(1);
    for (double delta : {0.1, 0.5, 1.0, 2.0, kPi}) {
        CHECK(classical_modulus2(space, f, delta) ==
              doctest::Approx(2.0 * (1.0 - std::cos(delta))).epsilon(1e-9));
    }
}

TEST_CASE("moduli are nondecreasing in delta up to sampling resolution") {
    // the sup is taken over a log-spaced sample of (0, delta], so strict
    // monotonicity can dip by the sampling error on oscillatory inputs
    const auto space = NormSpace::lp(2.0, 256);
    const auto f = make_weierstrass(0.5, 6);
    double prev_c = 0.0, prev_k = 0.0;
    for (double delta = 0.05; delta <= kPi; delta += 0.3) {
        const double mc = conj_modulus2(space, f, delta, 128);
        const double mk = classical_modulus2(space, f, delta, 128);
        CHECK(mc >= 0.98 * prev_c);
        CHECK(mk >= 0.98 * prev_k);
        prev_c = mc;
        prev_k = mk;
    }
}

TEST_CASE("fit report stability rule") {
    // flat ratios: ok, constant = sup
    auto flat = make_fit_report({1.0, 1.1, 1.05, 0.9});
    CHECK(flat.ok);
    CHECK(flat.constant == doctest::Approx(1.1));
    // growing toward the critical end: rejected
    auto growing = make_fit_report({1.0, 2.0, 4.0, 8.0, 16.0, 32.0});
    CHECK_FALSE(growing.ok);
    // non-finite ratio: rejected
    auto inf = make_fit_report({1.0, std::numeric_limits<double>::infinity()});
    CHECK_FALSE(inf.ok);
    // empty: rejected with note
    auto empty = make_fit_report({});
    CHECK_FALSE(empty.ok);
    CHECK_FALSE(empty.note.empty());
    // all-zero: inequality holds with constant 0
    auto zero = make_fit_report({0.0, 0.0, 0.0});
    CHECK(zero.ok);
    CHECK(zero.constant == 0.0);
}
