#include "lerch/polylog.hpp"

#include <cmath>
#include <numbers>

#include "formula_kernels.hpp"
#include "lerch/domain.hpp"
#include "lerch/oracle.hpp"
#include "lerch/special_gamma.hpp"

namespace lerch {

using detail::Evaluation;
using detail::factorial;
using detail::ipow;
using detail::neg_log;
using detail::vpow;

namespace {

constexpr double kPi = std::numbers::pi;

// H_j(n) by compensated direct summation.
Complex harmonic_direct(long j, long n) {
    CompensatedSum acc;
    for (long q = n; q >= 1; --q) acc.add(std::pow(double(q), -double(j)));
    return acc.value();
}

}  // namespace

EvalResult harmonic_partial(Complex k, long n, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::HarmonicPartial, {}, k, {}, n});
    Evaluation ev(opt.quad, Variant::HarmonicIntegral, std::move(st));
    const Complex coef = 1.0 / gamma(k + 1.0);
    const Complex val = ev.integrate_endpoint(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            return detail::kernel_sums(u, v, t, n).kernel * std::exp(k * std::log(t));
        },
        coef, k, 0.5 * double(n) * double(n + 1));
    return ev.finish(val);
}

EvalResult zeta_int_rep(Complex k, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::ZetaIntRep, {}, k, {}, {}});
    Evaluation ev(opt.quad, Variant::ZetaIntegral, std::move(st));
    const Complex val = ev.integrate_endpoint(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            return std::exp(k * std::log(t / v) + (k - 2.0) * std::log(v));
        },
        1.0 / gamma(k + 1.0), k - 2.0, 1.0);
    return ev.finish(val);
}

EvalResult zeta_reflected(Complex k, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::ZetaReflected, {}, k, {}, {}});
    Evaluation ev(opt.quad, Variant::ZetaReflected, std::move(st));
    const Complex s = 1.0 - k;
    const Complex coef = -2.0 * std::exp((k - 1.0) * std::log(2.0 * kPi)) / (k - 1.0) * sin_pi(0.5 * k);
    if (coef == Complex(0.0, 0.0)) return ev.finish(0.0);
    const Complex val = ev.integrate_endpoint(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            return std::exp(s * std::log(t / v) + (s - 2.0) * std::log(v));
        },
        coef, s - 2.0, 1.0);
    return ev.finish(val);
}

EvalResult zeta(Complex k, const EvalOptions& opt) {
    if (k.real() < 0.0) return zeta_reflected(k, opt);
    return zeta_int_rep(k, opt);
}

EvalResult partial_polylog_integer(Complex m, long k, long n, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::PartialPolylogInteger, m, double(k), {}, n});
    m = canonical(m);
    if (m == Complex(0.0, 0.0)) return harmonic_partial(double(k), n, opt);
    Evaluation ev(opt.quad, Variant::IntegerK, std::move(st));
    const double nd = double(n);
    const Complex mn = m * nd;

    Complex value = ev.gamma_term(lower_regularized_scaled(double(k + 1), mn) / (2.0 * std::pow(nd, double(k))));
    for (long j = 1; j <= k; ++j)
        value += ev.term(ipow(m, k - j) / factorial(k - j) * harmonic_direct(j, n));

    const Complex coef = ipow(m, k) / (2.0 * factorial(k - 1));
    value += ev.integrate(
        [=](double u, double v) {
            return std::pow(v, double(k - 1)) * nd * expm1_ratio(mn * u) * x_coth_half(m * u);
        },
        coef, detail::coth_breaks(m));
    return ev.finish(value);
}

EvalResult partial_polylog_ac(Complex m, Complex k, long n, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::PartialPolylogAC, m, k, {}, n});
    m = canonical(m);
    if (m == Complex(0.0, 0.0)) return harmonic_partial(k, n, opt);
    Evaluation ev(opt.quad, Variant::AnalyticContinuation, std::move(st));
    const double nd = double(n);
    const Complex mn = m * nd;
    const Complex mk = complex_pow(m, k);

    Complex value = ev.gamma_term(lower_regularized_scaled(k + 1.0, mn) / (2.0 * complex_pow(nd, k)));

    std::vector<double> breaks;
    if (m.real() < 0.0) breaks.push_back(std::exp(m.real()));
    value += ev.integrate(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            const Complex d = log_shift(m, t);
            return detail::kernel_sums(u, v, t, n).kernel * detail::expm1_shift(k, d);
        },
        mk / gamma(k + 1.0), breaks);

    value += ev.integrate_endpoint(
        [=](double u, double v) {
            return vpow(v, k - 1.0) * nd * expm1_ratio(mn * u) * x_coth_half(m * u);
        },
        mk / (2.0 * gamma(k)), k - 1.0, nd * expm1_ratio(mn) * x_coth_half(m),
        detail::coth_breaks(m));
    return ev.finish(value);
}

EvalResult full_polylog_integer(Complex m, long k, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::FullPolylogInteger, m, double(k), {}, {}});
    m = canonical(m);
    Evaluation ev(opt.quad, Variant::IntegerK, std::move(st));
    const double kd = double(k);

    Complex value = ev.term(-ipow(m, k) / (2.0 * factorial(k))) -
                    ev.term(ipow(m, k - 1) / factorial(k - 1) * (principal_log(-m) - std::log(2.0 * kPi)));
    for (long j = 2; j <= k; ++j)
        value += ev.absorb(zeta_int_rep(double(j), opt), ipow(m, k - j) / factorial(k - j));

    const Complex two_pi_m = 2.0 * kPi / m;
    value += ev.integrate(
        [=](double u, double v) -> Complex {
            const double a = std::pow(v, kd - 1.0);
            if (u <= 0.5) {
                const Complex mu = m * u;
                const double am1 = std::expm1((kd - 1.0) * std::log1p(-u));
                return a * coth_half_remainder(mu) + 2.0 * am1 / mu + 2.0 / m -
                       two_pi_m * v * cot_pi_remainder(u);
            }
            return a * coth_half(m, u) + two_pi_m * v * cot_pi(v, u);
        },
        -ipow(m, k) / (2.0 * factorial(k - 1)));
    return ev.finish(value);
}

EvalResult full_polylog_ac(Complex m, Complex k, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::FullPolylogAC, m, k, {}, {}});
    m = canonical(m);
    Evaluation ev(opt.quad, Variant::AnalyticContinuation, std::move(st));
    const Complex mk = complex_pow(m, k);
    const Complex gk = gamma(k);

    Complex value = ev.term(-mk / (2.0 * k * gk)) - ev.term(complex_pow(m, k - 1.0) * (1.0 + principal_log(-m)) / gk);

    std::vector<double> breaks;
    if (m.real() < 0.0) breaks.push_back(-std::expm1(m.real()));
    value += ev.integrate_endpoint(
        [=](double u, double v) -> Complex {
            // t = -log(1-u)
            const double t = v < 0.5 ? -std::log(v) : -std::log1p(-u);
            const Complex d = log_shift(m, t);
            const Complex a = vpow(v, k - 1.0);
            if (u <= 0.5) {
                const Complex mu = m * u;
                const Complex am1 = expm1((k - 1.0) * std::log1p(-u));
                return a * coth_half_remainder(mu) + 2.0 * am1 / mu +
                       2.0 * detail::g_remainder(m, k, u, t, d);
            }
            return a * coth_half(m, u) - 2.0 * detail::expm1_shift(k, d) / (k * u * u);
        },
        -mk / (2.0 * gk), k - 1.0, k.real() < 1.0 ? coth_half_of(m) : 0.0, breaks);
    return ev.finish(value);
}

EvalResult polylog_partial(Complex m, Complex k, long n, Method method, const EvalOptions& opt) {
    const auto ki = as_positive_integer(k);
    switch (method) {
        case Method::IntegerK:
            if (!ki) require_domain({Formula::PartialPolylogInteger, m, k, {}, n});
            return partial_polylog_integer(m, *ki, n, opt);
        case Method::AC: return partial_polylog_ac(m, k, n, opt);
        case Method::Auto:
            if (ki && *ki <= 20) return partial_polylog_integer(m, *ki, n, opt);
            return partial_polylog_ac(m, k, n, opt);
    }
    return partial_polylog_ac(m, k, n, opt);
}

EvalResult polylog_full(Complex m, Complex k, Method method, const EvalOptions& opt) {
    const auto ki = as_positive_integer(k);
    switch (method) {
        case Method::IntegerK:
            if (!ki) require_domain({Formula::FullPolylogInteger, m, k, {}, {}});
            return full_polylog_integer(m, *ki, opt);
        case Method::AC: return full_polylog_ac(m, k, opt);
        case Method::Auto:
            if (ki && *ki <= 20) return full_polylog_integer(m, *ki, opt);
            return full_polylog_ac(m, k, opt);
    }
    return full_polylog_ac(m, k, opt);
}

}  // namespace lerch
