#include "lerch/oracle.hpp"

#include <numbers>
#include <stdexcept>

#include "lerch/errors.hpp"
#include "test_support.hpp"

using namespace lerch;
using lerch::test::Rng;

constexpr double kPi = std::numbers::pi;

TEST_CASE("partial sums") {
    CHECK_REL(partial_sum_direct({0.0, 1.0, 0.0, 4}), Complex(25.0 / 12.0), 1e-15);
    CHECK_REL(partial_sum_direct({0.0, 0.5, 0.0, 3}), Complex(1.0 + std::sqrt(0.5) + std::sqrt(1.0 / 3.0)),
              1e-15);
    const Complex m(0.3, -1.1), k(1.7, 0.4), b(0.2, 0.5);
    CHECK_REL(partial_sum_direct({m, k, b, 1}), std::exp(m * (1.0 + b)) * std::pow(1.0 + b, -k), 1e-14);
    CHECK_REL(partial_sum_direct({m, k, b, 3, 0}), std::exp(m * b) * std::pow(b, -k) + partial_sum_direct({m, k, b, 3}),
              1e-14);
    CHECK_THROWS_AS(partial_sum_direct({m, k, -2.0, 5}), DomainError);
    CHECK_THROWS_AS(partial_sum_direct({m, k, b, std::nullopt}), std::invalid_argument);
}

TEST_CASE("partial sum increments are single terms") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Complex m = rng.disk(3.0), k(rng.uniform(-2, 4), rng.uniform(-1, 1));
        const Complex b(rng.uniform(0.1, 3), rng.uniform(-1, 1));
        const long n = rng.integer(2, 60);
        const Complex d = partial_sum_direct({m, k, b, n}) - partial_sum_direct({m, k, b, n - 1});
        const Complex t = series_term(m, k, b, n);
        CHECK(std::abs(d - t) <= 1e-13 * std::abs(partial_sum_direct({m, k, b, n})));
    }
}

TEST_CASE("full series closed forms") {
    const double m = -std::log(2.0);
    CHECK_REL(full_series_direct({m, 1.0, 0.0, std::nullopt}).value, Complex(std::log(2.0)), 1e-14);
    CHECK_REL(full_series_direct({m, 2.0, 0.0, std::nullopt}).value,
              Complex(kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0)), 1e-14);
    // Alternating: i (4 G - 4), G Catalan's constant.
    const double catalan = 0.915965594177219015054603514932;
    const auto r = full_series_direct({Complex(0.0, kPi), 2.0, 0.5, std::nullopt});
    CHECK(std::abs(r.value - Complex(0.0, 4.0 * catalan - 4.0)) <= r.tail_bound + 1e-12);
}

TEST_CASE("full series tail bound and stability") {
    const SeriesSpec spec{Complex(-0.05, 1.0), Complex(0.5, 2.0), Complex(0.7, -0.3), std::nullopt};
    const auto a = full_series_direct(spec, 1e-10);
    const auto b = full_series_direct(spec, 5e-11);
    CHECK(a.converged);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
    CHECK(b.terms >= a.terms);
}

TEST_CASE("oracle availability") {
    CHECK(full_series_available(Complex(-0.1, 5.0), 0.3));
    CHECK(full_series_available(Complex(0.0, 1.0), 1.5));
    CHECK(!full_series_available(Complex(0.0, 1.0), 0.9));
    CHECK(!full_series_available(Complex(0.2, 0.0), 3.0));
    CHECK_THROWS_AS(full_series_direct({Complex(0.0, 1.0), 0.9, 0.0, std::nullopt}), OracleUnavailable);
    CHECK_THROWS_AS(full_series_direct({Complex(0.1, 1.0), 3.0, 0.0, std::nullopt}), OracleUnavailable);
}

TEST_CASE("compensated sum") {
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(Complex(1e-16, -1e-16));
    s.add(-1.0);
    CHECK(s.value().real() == doctest::Approx(1e-13).epsilon(1e-10));
    CHECK(s.value().imag() == doctest::Approx(-1e-13).epsilon(1e-10));
}
