#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "conjsum/errors.hpp"
#include "conjsum/kernels.hpp"

using namespace conjsum;

namespace {

constexpr double kPi = 3.14159265358979323846;

double direct_sin_sum(int k, double t) {
    double s = 0.0;
    for (int nu = 1; nu <= k; ++nu) s += std::sin(nu * t);
    return s;
}

double direct_cos_sum(int k, double t) {
    double s = 0.5;
    for (int nu = 1; nu <= k; ++nu) s += std::cos(nu * t);
    return s;
}

} // namespace

TEST_CASE("closed forms match direct trigonometric sums (r = 1)") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> tdist(0.05, kPi - 0.05);
    std::uniform_int_distribution<int> kdist(0, 60);
    for (int i = 0; i < 200; ++i) {
        const double t = tdist(rng);
        const int k = kdist(rng);
        CHECK(conj_dirichlet(k, 1, t) ==
              doctest::Approx(direct_sin_sum(k, t)).epsilon(1e-11));
        CHECK(dirichlet_gen(k, 1, t) ==
              doctest::Approx(direct_cos_sum(k, t)).epsilon(1e-11));
    }
}

TEST_CASE("half-cotangent split holds for every k") {
    std::mt19937 rng(102);
    std::uniform_real_distribution<double> tdist(1e-3, kPi - 1e-3);
    for (int i = 0; i < 200; ++i) {
        const double t = tdist(rng);
        const int k = i % 40;
        const double split = conj_dirichlet(k, 1, t) + conj_dirichlet_gen(k, 1, t);
        CHECK(split == doctest::Approx(half_cotangent(t)).epsilon(1e-10));
    }
}

TEST_CASE("negative step evaluates against the signed denominator") {
    const double t = 0.8;
    for (int k : {0, 3, 17}) {
        for (int r : {1, 2, 5}) {
            const double denom = 2.0 * std::sin(-r * t / 2.0);
            CHECK(dirichlet_gen(k, -r, t) ==
                  doctest::Approx(std::sin((2 * k - r) * t / 2.0) / denom)
                      .epsilon(1e-12));
            CHECK(conj_dirichlet_gen(k, -r, t) ==
                  doctest::Approx(std::cos((2 * k - r) * t / 2.0) / denom)
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("pole guard raises a structured error") {
    CHECK(nearest_singularity(1, 0.1) == doctest::Approx(0.0));
    CHECK(nearest_singularity(2, 3.0) == doctest::Approx(kPi));
    CHECK(nearest_singularity(3, 2.0) == doctest::Approx(2.0 * kPi / 3.0));
    CHECK_THROWS_AS(conj_dirichlet(5, 1, 1e-12), SingularityError);
    CHECK_THROWS_AS(conj_dirichlet(5, 2, kPi + 1e-12), SingularityError);
    try {
        dirichlet_gen(3, 2, kPi - 5e-10);
        FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
        CHECK(e.nearest_singularity() == doctest::Approx(kPi));
    }
}

TEST_CASE("kernel envelopes hold on a dense random sample") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> tdist(1e-6, kPi);
    std::uniform_int_distribution<int> kdist(0, 200);
    for (int i = 0; i < 20000; ++i) {
        const double t = tdist(rng);
        const int k = kdist(rng);
        // |cos((2k+1)t/2)| / (2 sin(t/2)) <= pi / (2 t) on (0, pi]
        CHECK(std::abs(conj_dirichlet_gen(k, 1, t)) <=
              kPi / (2.0 * t) * (1.0 + 1e-12));
        // |sum sin(nu t)| <= min(k, k(k+1)t/2, pi/t)
        const double env = std::min({static_cast<double>(k),
                                     k * (k + 1.0) * t / 2.0, kPi / t});
        CHECK(std::abs(conj_dirichlet(k, 1, t)) <= env * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("summation-by-parts identities, both parities") {
    std::mt19937 rng(104);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> tdist(0.0, kPi);
    std::uniform_int_distribution<int> ndist(0, 12);
    std::uniform_int_distribution<int> len(0, 14);
    for (int r : {1, 2, 3, 5}) {
        for (int rep = 0; rep < 40; ++rep) {
            const int n = ndist(rng);
            const int m = n + len(rng);
            std::vector<double> a(m + r + 1);
            for (auto& v : a) v = coeff(rng);
            double t = tdist(rng);
            while (std::abs(t - nearest_singularity(r, t)) < 1e-3) t = tdist(rng);
            const auto s = abel_sin_identity(a, n, m, r, t);
            CHECK(s.lhs == doctest::Approx(s.rhs).epsilon(1e-10));
            const auto c = abel_cos_identity(a, n, m, r, t);
            CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("summation-by-parts identities reject bad spans") {
    std::vector<double> a(5, 1.0);
    CHECK_THROWS_AS(abel_sin_identity(a, 0, 3, 2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(abel_sin_identity(a, 3, 1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(abel_cos_identity(a, 0, 2, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(abel_cos_identity(a, -1, 2, 1, 0.5), std::invalid_argument);
}

TEST_CASE("single-term window telescopes exactly") {
    // n = m: lhs is one term a_n sin(n t); check a nontrivial r as well.
    std::vector<double> a = {0.3, -1.2, 0.7, 2.0, -0.4, 1.1};
    for (int r : {1, 2}) {
        const auto v = abel_sin_identity(a, 2, 2, r, 0.9);
        CHECK(v.lhs == doctest::Approx(a[2] * std::sin(2 * 0.9)).epsilon(1e-14));
        CHECK(v.rhs == doctest::Approx(v.lhs).epsilon(1e-12));
    }
}
