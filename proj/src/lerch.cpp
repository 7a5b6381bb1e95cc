#include "lerch/lerch.hpp"

#include <cmath>
#include <numbers>

#include "formula_kernels.hpp"
#include "lerch/domain.hpp"
#include "lerch/oracle.hpp"
#include "lerch/polylog.hpp"
#include "lerch/special_gamma.hpp"

namespace lerch {

using detail::Evaluation;
using detail::factorial;
using detail::ipow;
using detail::neg_log;
using detail::vpow;

namespace {

constexpr double kPi = std::numbers::pi;

// HP_j(n) by compensated direct summation.
Complex hp_direct(long j, Complex b, long n) {
    CompensatedSum acc;
    for (long q = n; q >= 1; --q) acc.add(1.0 / ipow(double(q) + b, j));
    return acc.value();
}

// e^{mb} P(s, mb) on the sheet where (mb)^s = m^s b^s. The principal value
// differs by e^{2 pi i s w} when arg m + arg b leaves (-pi, pi].
Complex lower_regularized_product(Complex s, Complex m, Complex b) {
    const Complex z = canonical(m * b);
    const Complex p = lower_regularized_scaled(s, z);
    if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real())) return p;
    const double w = std::nearbyint(
        (std::arg(canonical(m)) + std::arg(canonical(b)) - std::arg(z)) / (2.0 * kPi));
    if (w == 0.0) return p;
    return p * std::exp(Complex(0.0, 2.0 * kPi * w) * s);
}

// -e^{mb} P(k+1, mb) / (2 b^k), the b-end closed term shared by the partial forms.
Complex gamma_end(Complex m, Complex k, Complex b) {
    const auto ki = as_positive_integer(k);
    const Complex bk = ki ? ipow(b, *ki) : complex_pow(b, k);
    return -lower_regularized_product(k + 1.0, m, b) / (2.0 * bk);
}

// v^{k-1} e^{mbu} - 1
Complex weight_m1(Complex k, Complex mb, double u) {
    return expm1((k - 1.0) * std::log1p(-u) + mb * u);
}

Complex weight(Complex k, Complex mb, double u, double v) {
    return vpow(v, k - 1.0) * std::exp(mb * u);
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

}  // namespace

BClass classify_b(Complex b, double tol) {
    if (b.imag() != 0.0) return BClass::Generic;
    const double x = b.real();
    if (near(x, std::nearbyint(x), tol)) return BClass::Integer;
    if (near(2.0 * x, std::nearbyint(2.0 * x), 2.0 * tol)) return BClass::HalfInteger;
    return BClass::Generic;
}

EvalResult hp_partial(Complex k, Complex b, long n, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::HpPartial, {}, k, b, n});
    Evaluation ev(opt.quad, Variant::HpIntegral, std::move(st));
    const Complex val = ev.integrate_endpoint(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            return std::exp(-b * t + k * std::log(t)) * detail::kernel_b(u, v, t, n, b);
        },
        1.0 / gamma(k + 1.0), k, 0.5 * double(n) * double(n + 1) + double(n) * b);
    return ev.finish(val);
}

EvalResult hurwitz_zeta(Complex k, Complex b, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::HurwitzZeta, {}, k, b, {}});
    Evaluation ev(opt.quad, Variant::HurwitzIntegral, std::move(st));
    const Complex val = ev.integrate_endpoint(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            return std::exp(-b * t + k * std::log(t / v) + (k - 2.0) * std::log(v)) *
                   (b * v + 1.0);
        },
        1.0 / gamma(k + 1.0), k - 2.0, 1.0);
    return ev.finish(val);
}

EvalResult hurwitz_zeta_from_zero(long j, Complex b, const EvalOptions& opt) {
    if (b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::nearbyint(b.real())) {
        DomainStatus st;
        st.reject("b-zero-base", "zeta(j, b) has a pole at non-positive integer b");
        throw DomainError("domain violation: " + st.violations.front().message, std::move(st));
    }
    // zeta(j, b) = sum_{q<N} (q+b)^{-j} + zeta(j, b+N), with Re(b) + N > 1.
    long shift = 1;
    if (b.real() <= 0.0) shift = long(std::floor(-b.real())) + 2;
    EvalResult r = hurwitz_zeta(double(j), b + double(shift - 1), opt);
    CompensatedSum acc;
    for (long q = shift - 1; q >= 0; --q) acc.add(1.0 / ipow(double(q) + b, j));
    acc.add(r.value);
    r.value = acc.value();
    return r;
}

EvalResult hurwitz_sum_closed(Complex m, long k, Complex b, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::HurwitzSumClosed, m, double(k), b, {}});
    m = canonical(m);
    Evaluation ev(opt.quad, Variant::HurwitzIntegral, std::move(st));
    if (k < 2) return ev.finish(0.0);
    const double kd = double(k);
    const Complex mb = m * b;

    Complex value = ev.term(-ipow(m, k) / factorial(k)) -
                    ev.term(ipow(m, k - 1) / factorial(k - 1) * (1.0 + 1.0 / b)) +
                    ev.gamma_term(upper_incomplete_gamma_scaled(kd + 1.0, mb) / (factorial(k) * ipow(b, k)));
    value += ev.integrate(
        [=](double u, double v) {
            const double t = v < 0.5 ? -std::log(v) : -std::log1p(-u);
            const Complex d = log_shift(m, t);
            const Complex g = detail::expm1_shift(kd, d) / kd;
            return vpow(v, b) * kd * (m * detail::g_remainder(m, kd, u, t, d) - mb * g / u);
        },
        -ipow(m, k - 1) / factorial(k));
    return ev.finish(value);
}

EvalResult partial_lerch_integer(Complex m, long k, Complex b, long n, const EvalOptions& opt) {
    if (b == Complex(0.0, 0.0)) return partial_polylog_integer(m, k, n, opt);
    DomainStatus st = require_domain({Formula::PartialLerchInteger, m, double(k), b, n});
    m = canonical(m);
    Evaluation ev(opt.quad, Variant::IntegerK, std::move(st));
    const double kd = double(k);
    const double nd = double(n);
    const Complex mb = m * b;
    const Complex mn = m * nd;

    Complex value = ev.gamma_term(gamma_end(m, kd, b)) - ev.gamma_term(gamma_end(m, kd, b + nd));
    for (long j = 1; j <= k; ++j)
        value += ev.term(ipow(m, k - j) / factorial(k - j) * hp_direct(j, b, n));

    if (m != Complex(0.0, 0.0)) {
        value += ev.integrate(
            [=](double u, double v) {
                return weight(kd, mb, u, v) * nd * expm1_ratio(mn * u) * x_coth_half(m * u);
            },
            ipow(m, k) / (2.0 * factorial(k - 1)), detail::coth_breaks(m));
    }
    return ev.finish(value);
}

EvalResult partial_lerch_ac(Complex m, Complex k, Complex b, long n, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::PartialLerchAC, m, k, b, n});
    m = canonical(m);
    if (m == Complex(0.0, 0.0)) return hp_partial(k, b, n, opt);
    Evaluation ev(opt.quad, Variant::AnalyticContinuation, std::move(st));
    const double nd = double(n);
    const Complex mb = m * b;
    const Complex mn = m * nd;
    const Complex mk = complex_pow(m, k);

    Complex value = ev.gamma_term(gamma_end(m, k, b)) - ev.gamma_term(gamma_end(m, k, b + nd));

    std::vector<double> breaks;
    if (m.real() < 0.0) breaks.push_back(std::exp(m.real()));
    value += ev.integrate(
        [=](double u, double v) {
            const double t = neg_log(u, v);
            const Complex d = log_shift(m, t);
            return std::exp(-b * t) * detail::kernel_b(u, v, t, n, b) * detail::expm1_shift(k, d);
        },
        mk / gamma(k + 1.0), breaks);

    value += ev.integrate_endpoint(
        [=](double u, double v) {
            return weight(k, mb, u, v) * nd * expm1_ratio(mn * u) * x_coth_half(m * u);
        },
        mk / (2.0 * gamma(k)), k - 1.0, std::exp(mb) * nd * expm1_ratio(mn) * x_coth_half(m),
        detail::coth_breaks(m));
    return ev.finish(value);
}

EvalResult full_lerch_integer(Complex m, long k, Complex b, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::FullLerchInteger, m, double(k), b, {}});
    m = canonical(m);
    const BClass cls = classify_b(b);
    if (cls == BClass::Integer) {
        b = std::nearbyint(b.real());
        if (b.real() <= 0.0) {
            st.reject("b-zero-base", "b is within 1e-9 of a non-positive integer");
            throw DomainError("domain violation: " + st.violations.front().message, std::move(st));
        }
    }
    if (cls == BClass::HalfInteger) b = 0.5 * std::nearbyint(2.0 * b.real());
    const Variant variant = cls == BClass::Integer       ? Variant::IntegerKIntB
                            : cls == BClass::HalfInteger ? Variant::IntegerKHalfB
                                                         : Variant::IntegerKGeneric2b;
    Evaluation ev(opt.quad, variant, std::move(st));
    const double kd = double(k);
    const Complex mb = m * b;
    const Complex mk1 = ipow(m, k - 1) / factorial(k - 1);

    CompensatedSum head;
    for (long j = k - 2; j >= 0; --j) head.add(ipow(mb, j) / factorial(j));
    head.add(std::exp(mb));
    Complex value = ev.term(-head.value() / (2.0 * ipow(b, k)));
    for (long j = 2; j <= k; ++j)
        value += ev.absorb(hurwitz_zeta_from_zero(j, b, opt), ipow(m, k - j) / factorial(k - j));

    const Complex log_m = principal_log(-m);
    const Complex coef = -ipow(m, k) / (2.0 * factorial(k - 1));
    const Complex two_pi_m = 2.0 * kPi / m;

    if (cls == BClass::Generic) {
        const Complex cot_b = cos_pi(b) / sin_pi(b);
        const Complex sin_2b = sin_pi(2.0 * b);
        value += ev.term(kPi * mk1 * cot_b / 2.0) - ev.term(mk1 * (log_m - std::log(2.0 * kPi)));
        value += ev.integrate(
            [=](double u, double v) -> Complex {
                if (u <= 0.5) {
                    const Complex mu = m * u;
                    return weight(kd, mb, u, v) * coth_half_remainder(mu) +
                           2.0 * weight_m1(kd, mb, u) / mu - two_pi_m * cot_pi_remainder(u) +
                           two_pi_m * sin_pi(2.0 * b * u) * cot_pi(u, v) / sin_2b;
                }
                return weight(kd, mb, u, v) * coth_half(m, u) +
                       two_pi_m * 2.0 * cot_pi(v, u) * cos_pi(b * (2.0 - v)) * sin_pi(b * v) / sin_2b;
            },
            coef);
    } else if (cls == BClass::HalfInteger) {
        const Complex pi_m = kPi / m;
        value -= ev.term(mk1 * (log_m - std::log(kPi)));
        value += ev.integrate(
            [=](double u, double v) -> Complex {
                const Complex c = cos_pi(b * u);
                if (u <= 0.5) {
                    const Complex mu = m * u;
                    const Complex s = sin_pi(0.5 * b * u);
                    return weight(kd, mb, u, v) * coth_half_remainder(mu) +
                           2.0 * (weight_m1(kd, mb, u) + 2.0 * s * s) / mu -
                           pi_m * c * cot_pi_remainder(0.5 * u);
                }
                return weight(kd, mb, u, v) * coth_half(m, u) - pi_m * c * cot_pi(0.5 * u);
            },
            coef);
    } else {
        const long bi = long(b.real());
        value -= ev.term(mk1 * (log_m - std::log(2.0 * kPi) + harmonic_number(bi) - 0.5 / double(bi)));
        value += ev.integrate(
            [=](double u, double v) -> Complex {
                if (u <= 0.5) {
                    const Complex mu = m * u;
                    return weight(kd, mb, u, v) * coth_half_remainder(mu) +
                           2.0 * weight_m1(kd, mb, u) / mu + 2.0 / m -
                           two_pi_m * v * cot_pi_remainder(u);
                }
                return weight(kd, mb, u, v) * coth_half(m, u) + two_pi_m * v * cot_pi(v, u);
            },
            coef);
    }
    return ev.finish(value);
}

EvalResult full_lerch_ac(Complex m, Complex k, Complex b, const EvalOptions& opt) {
    DomainStatus st = require_domain({Formula::FullLerchAC, m, k, b, {}});
    m = canonical(m);
    Evaluation ev(opt.quad, Variant::AnalyticContinuation, std::move(st));
    const Complex mb = m * b;
    const Complex gk = gamma(k);
    const Complex mk = complex_pow(m, k);

    Complex value = ev.term(-mk / (2.0 * k * gk)) -
                    ev.term(complex_pow(m, k - 1.0) * (1.0 + principal_log(-m)) / gk) +
                    ev.term(std::exp(mb) / complex_pow(b, k)) + ev.gamma_term(gamma_end(m, k, b));

    std::vector<double> breaks;
    if (m.real() < 0.0) breaks.push_back(-std::expm1(m.real()));
    value += ev.integrate_endpoint(
        [=](double u, double v) -> Complex {
            const double t = v < 0.5 ? -std::log(v) : -std::log1p(-u);
            const Complex d = log_shift(m, t);
            const double l1 = std::log1p(-u);
            if (u <= 0.5) {
                const Complex mu = m * u;
                const Complex c = std::exp(b * l1) * (1.0 + b * u);
                const Complex a_c = weight_m1(k, mb, u) - expm1(b * l1 + log1p(b * u));
                return weight(k, mb, u, v) * coth_half_remainder(mu) + 2.0 * a_c / mu +
                       2.0 * c * detail::g_remainder(m, k, u, t, d);
            }
            const Complex c = vpow(v, b) * (1.0 + b * u);
            return weight(k, mb, u, v) * coth_half(m, u) -
                   2.0 * c * detail::expm1_shift(k, d) / (k * u * u);
        },
        -mk / (2.0 * gk), k - 1.0, k.real() < 1.0 ? std::exp(mb) * coth_half_of(m) : 0.0,
        breaks);
    return ev.finish(value);
}

EvalResult full_lerch_ac_from_one(Complex m, Complex k, Complex b, const EvalOptions& opt) {
    EvalResult r = full_lerch_ac(m, k, b, opt);
    r.value -= std::exp(canonical(m) * b) / complex_pow(b, k);
    return r;
}

EvalResult lerch_phi(Complex m, Complex k, Complex b, const EvalOptions& opt) {
    EvalResult r = full_lerch_ac(m, k, b, opt);
    const Complex scale = std::exp(-canonical(m) * b);
    r.value *= scale;
    r.abs_err_estimate *= std::abs(scale);
    return r;
}

EvalResult lerch_partial(Complex m, Complex k, Complex b, long n, Method method,
                         const EvalOptions& opt) {
    if (b == Complex(0.0, 0.0)) return polylog_partial(m, k, n, method, opt);
    const auto ki = as_positive_integer(k);
    switch (method) {
        case Method::IntegerK:
            if (!ki) require_domain({Formula::PartialLerchInteger, m, k, b, n});
            return partial_lerch_integer(m, *ki, b, n, opt);
        case Method::AC: return partial_lerch_ac(m, k, b, n, opt);
        case Method::Auto: break;
    }
    if (ki && *ki <= 20) return partial_lerch_integer(m, *ki, b, n, opt);
    return partial_lerch_ac(m, k, b, n, opt);
}

EvalResult lerch_full(Complex m, Complex k, Complex b, Method method, const EvalOptions& opt) {
    const auto ki = as_positive_integer(k);
    const bool integer = method == Method::IntegerK || (method == Method::Auto && ki && *ki <= 20);
    if (!integer) return full_lerch_ac(m, k, b, opt);
    if (!ki) require_domain({Formula::FullLerchInteger, m, k, b, {}});
    EvalResult r = full_lerch_integer(m, *ki, b, opt);
    r.value += std::exp(canonical(m) * b) / ipow(b, *ki);
    return r;
}

}  // namespace lerch
