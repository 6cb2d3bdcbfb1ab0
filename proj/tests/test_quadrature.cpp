#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conjsum/quadrature.hpp"

using conjsum::integrate_adaptive;
using conjsum::integrate_to_zero;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("adaptive simpson reproduces smooth integrals") {
    const auto s = integrate_adaptive([](double t) { return std::sin(t); }, 0.0,
                                      kPi, 1e-12);
    CHECK(s.converged);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.evaluations > 0);

    const auto e = integrate_adaptive([](double t) { return std::exp(t); }, 0.0,
                                      1.0, 1e-12);
    CHECK(e.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("reversed limits flip the sign") {
    const auto fwd = integrate_adaptive([](double t) { return t * t; }, 0.0, 2.0,
                                        1e-12);
    const auto rev = integrate_adaptive([](double t) { return t * t; }, 2.0, 0.0,
                                        1e-12);
    CHECK(fwd.value == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(rev.value == doctest::Approx(-fwd.value).epsilon(1e-14));
}

TEST_CASE("degenerate interval integrates to zero") {
    const auto z = integrate_adaptive([](double) { return 42.0; }, 1.0, 1.0,
                                      1e-12);
    CHECK(z.value == 0.0);
    CHECK(z.converged);
}

TEST_CASE("oscillatory integrand at tight tolerance") {
    // int_0^pi sin(40 t) dt = (1 - cos(40 pi)) / 40 = 0.
    const auto s = integrate_adaptive(
        [](double t) { return std::sin(40.0 * t); }, 0.0, kPi, 1e-11);
    CHECK(s.converged);
    CHECK(std::abs(s.value) < 1e-9);
}

TEST_CASE("improper endpoint: integrable singularity converges") {
    // int_0^1 t^(-1/2) dt = 2.
    const auto r = integrate_to_zero(
        [](double t) { return 1.0 / std::sqrt(t); }, 1.0, 1e-10);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("improper endpoint: smooth integrand converges fast") {
    const auto r = integrate_to_zero([](double t) { return std::cos(t); }, 0.5,
                                     1e-10);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::sin(0.5)).epsilon(1e-10));
}

TEST_CASE("improper endpoint: divergent integral is flagged") {
    // int_0^1 dt/t diverges; the dyadic tail never becomes negligible.
    const auto r = integrate_to_zero([](double t) { return 1.0 / t; }, 1.0,
                                     1e-8, 60);
    CHECK_FALSE(r.converged);
}

TEST_CASE("improper endpoint: slowly divergent log-type integral is flagged") {
    // int_0^1 dt / (t * log(e*2pi/t)) = loglog-divergent at 0.
    const auto r = integrate_to_zero(
        [](double t) { return 1.0 / (t * std::log(std::exp(1.0) * 2.0 * kPi / t)); },
        1.0, 1e-8, 120);
    CHECK_FALSE(r.converged);
}
