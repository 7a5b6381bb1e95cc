#pragma once

// Direct summation of sum_j e^{m(j+b)} / (j+b)^k with compensated addition.
// No acceleration: these are the reference values the formulas are checked
// against.

#include <optional>

#include "lerch/types.hpp"

namespace lerch {

struct SeriesSpec {
    Complex m{};
    Complex k{};
    Complex b{};
    std::optional<long> n;   // empty: infinite series
    int start_index = 1;     // 0 or 1
};

struct OracleResult {
    Complex value{};
    double tail_bound = 0.0;   // bound on |sum of the omitted terms|
    long terms = 0;
    bool converged = false;    // tail_bound <= tol * |value| reached
};

/// e^{m(j+b)} (j+b)^{-k}, principal branch. Throws DomainError if j + b == 0.
Complex series_term(Complex m, Complex k, Complex b, long j);

/// Finite sum from start_index to n. Throws DomainError on a zero base and
/// std::invalid_argument when n is missing or below start_index.
Complex partial_sum_direct(const SeriesSpec& spec);

/// Infinite sum, stopped once a rigorous tail bound falls below tol * |sum|.
/// Available for Re(m) < 0 (geometric bound) and for Re(m) == 0 with
/// Re(k) > 1 (integral bound, at most max_terms terms). Elsewhere throws
/// OracleUnavailable.
OracleResult full_series_direct(const SeriesSpec& spec, double tol = 1e-15,
                                long max_terms = 10'000'000);

/// Whether full_series_direct accepts these parameters.
bool full_series_available(Complex m, Complex k);

/// Neumaier compensated accumulator for complex values.
class CompensatedSum {
public:
    void add(Complex x);
    Complex value() const { return {sr_ + cr_, si_ + ci_}; }

private:
    double sr_ = 0.0, cr_ = 0.0, si_ = 0.0, ci_ = 0.0;
};

}  // namespace lerch
