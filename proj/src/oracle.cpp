#include "lerch/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "lerch/complex_core.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

void neumaier(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
    else
        c += (x - t) + s;
    s = t;
}

}  // namespace

void CompensatedSum::add(Complex x) {
    neumaier(sr_, cr_, x.real());
    neumaier(si_, ci_, x.imag());
}

Complex series_term(Complex m, Complex k, Complex b, long j) {
    const Complex base = double(j) + b;
    if (base == Complex(0.0, 0.0)) throw DomainError("zero base in series term");
    if (m == Complex(0.0, 0.0)) return complex_pow(base, -k);
    return std::exp(m * base - k * principal_log(base));
}

Complex partial_sum_direct(const SeriesSpec& spec) {
    if (!spec.n) throw std::invalid_argument("partial_sum_direct needs a finite n");
    if (*spec.n < spec.start_index) throw std::invalid_argument("n below start index");
    CompensatedSum acc;
    for (long j = spec.start_index; j <= *spec.n; ++j)
        acc.add(series_term(spec.m, spec.k, spec.b, j));
    return acc.value();
}

bool full_series_available(Complex m, Complex k) {
    return m.real() < 0.0 || (m.real() == 0.0 && k.real() > 1.0);
}

OracleResult full_series_direct(const SeriesSpec& spec, double tol, long max_terms) {
    const Complex m = spec.m, k = spec.k, b = spec.b;
    if (!full_series_available(m, k))
        throw OracleUnavailable("oracle unavailable in this region: direct summation needs "
                                "Re(m) < 0, or Re(m) = 0 with Re(k) > 1");
    const double ab = std::abs(b);
    const double ak = std::abs(k);
    CompensatedSum acc;
    OracleResult r;
    const long j0 = spec.start_index;
    for (long j = j0; j - j0 < max_terms; ++j) {
        const Complex t = series_term(m, k, b, j);
        acc.add(t);
        r.terms = j - j0 + 1;
        const double sum_mag = std::abs(acc.value());
        const double x = double(j) + 1.0 - ab;   // lower bound on |j + 1 + b|
        if (x < 4.0 || x + b.real() - ab <= 1.0) continue;
        if (m.real() < 0.0) {
            // |t_{i+1}/t_i| <= e^{Re m} exp(2|k|/|i+1+b|) for i >= j
            const double rho = std::exp(m.real() + 2.0 * ak / x);
            if (rho >= 1.0) continue;
            const double next = std::abs(series_term(m, k, b, j + 1));
            r.tail_bound = next / (1.0 - rho);
        } else {
            // sum_{i>j} |i+b|^{-Re k} e^{|Im k| |arg(i+b)|}
            const double sigma = k.real();
            const double lo = double(j) + b.real();
            const double argmax = std::abs(std::atan2(b.imag(), lo));
            r.tail_bound = std::pow(lo, 1.0 - sigma) / (sigma - 1.0) *
                           std::exp(std::abs(k.imag()) * argmax);
        }
        if (r.tail_bound <= tol * sum_mag) {
            r.converged = true;
            break;
        }
    }
    r.value = acc.value();
    return r;
}

}  // namespace lerch
