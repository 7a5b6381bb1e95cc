#pragma once

// Integrand pieces shared by the polylog and Lerch formulas. All take the
// abscissa as (u, v = 1 - u) from the quadrature.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lerch/complex_core.hpp"
#include "lerch/domain_status.hpp"
#include "lerch/errors.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/types.hpp"

namespace lerch::detail {

inline double factorial(long k) {
    double f = 1.0;
    for (long j = 2; j <= k; ++j) f *= double(j);
    return f;
}

inline Complex ipow(Complex z, long k) {
    Complex r = 1.0;
    for (long j = 0; j < k; ++j) r *= z;
    return r;
}

/// -log u, accurate on both ends.
inline double neg_log(double u, double v) {
    return u < 0.5 ? -std::log(u) : -std::log1p(-v);
}

/// sum_{q=1}^n q u^(q-1) and sum_{q=0}^{n-1} u^q.
struct KernelSums {
    double kernel;
    double geom;
};

inline KernelSums kernel_sums(double u, double v, double t, long n) {
    if (n <= 64 || double(n) * v < 0.5) {
        double k = 0.0, g = 0.0;
        for (long q = n; q >= 1; --q) {
            k = k * u + double(q);
            g = g * u + 1.0;
        }
        return {k, g};
    }
    const double un = std::exp(-double(n) * t);
    return {(1.0 - un * (1.0 + double(n) * v)) / (v * v), -std::expm1(-double(n) * t) / v};
}

/// sum_{q=1}^n (q + b) u^(q-1).
inline Complex kernel_b(double u, double v, double t, long n, Complex b) {
    const KernelSums s = kernel_sums(u, v, t, n);
    return s.kernel + b * s.geom;
}

/// v^p for v in (0, 1].
inline Complex vpow(double v, Complex p) {
    if (p.imag() == 0.0) return std::pow(v, p.real());
    return std::exp(p * std::log(v));
}

/// expm1(k D) where D may be -inf (m + t == 0); Re(k) > 0 is assumed.
inline Complex expm1_shift(Complex k, Complex delta) {
    if (std::isinf(delta.real())) return -1.0;
    return expm1(k * delta);
}

/// (u/m - g)/u^2 with g = expm1(k D)/k, D = Log(m+t) - Log(m), t = -log(1-u).
/// The fused form removes the u -> 0 cancellation.
inline Complex g_remainder(Complex m, Complex k, double u, double t, Complex delta) {
    const Complex x = t / m;
    const Complex kd = k * delta;
    if (std::norm(x) < 0.25) {
        const double tu = t / u;
        const Complex du = delta / u;
        return -log1m_remainder2(u) / m + tu * tu * log1p_remainder2(x) / (m * m) -
               k * du * du * exp_remainder2(kd);
    }
    const Complex g = expm1_shift(k, delta) / k;
    return (u / m - g) / (u * u);
}

/// Runs the quadratures of one evaluation and collects their statistics.
// Worst relative error of lower_regularized_scaled / upper_incomplete_gamma_scaled
// seen against 50-digit references over the parameter ranges used here.
inline constexpr double kGammaRelErr = 5e-13;

class Evaluation {
public:
    Evaluation(const QuadConfig& cfg, Variant variant, DomainStatus status)
        : cfg_(cfg), status_(std::move(status)) {
        result_.variant_used = variant;
    }

    /// A closed-form piece of the result; its size feeds the rounding scale.
    Complex term(Complex x) {
        result_.term_scale += std::abs(x);
        return x;
    }

    /// A closed-form piece built on the incomplete gamma function, whose
    /// relative accuracy is kGammaRelErr rather than a few ulps.
    Complex gamma_term(Complex x) {
        gamma_scale_ += std::abs(x);
        return term(x);
    }

    /// coef * integral, with |coef| * error added to the running estimate.
    Complex integrate(const Integrand& f, Complex coef, std::vector<double> breaks = {}) {
        const QuadResult q = integrate_01_split(f, std::move(breaks), cfg_, true);
        result_.term_scale += std::abs(coef * q.value);
        result_.quad.levels = std::max(result_.quad.levels, q.levels_used);
        result_.quad.nodes += q.nodes_evaluated;
        ++result_.quad.integrals;
        result_.abs_err_estimate += std::abs(coef) * q.abs_err_estimate;
        converged_ = converged_ && q.converged;
        return coef * q.value;
    }

    /// coef * integral of f, where f ~ c v^p as v -> 0. For Re(p) < 0 the
    /// c v^p part is integrated in closed form; clipping the nodes at 1e-300
    /// would otherwise drop mass of order 1e-300^(Re p + 1). The remainder is
    /// O(v^(p+1)), so nodes with v below kRemainderClip are dropped.
    Complex integrate_endpoint(const Integrand& f, Complex coef, Complex p, Complex c,
                               std::vector<double> breaks = {}) {
        constexpr double kRemainderClip = 1e-100;
        if (!(p.real() < 0.0) || c == Complex(0.0, 0.0) || !std::isfinite(c.real()) ||
            !std::isfinite(c.imag()))
            return integrate(f, coef, std::move(breaks));
        const Complex head = term(coef * c / (p + 1.0));
        return head + integrate(
                          [&](double u, double v) -> Complex {
                              if (v < kRemainderClip) return 0.0;
                              return f(u, v) - c * vpow(v, p);
                          },
                          coef, std::move(breaks));
    }

    /// Folds a sub-evaluation (e.g. a Hurwitz zeta value) into this one.
    Complex absorb(const EvalResult& sub, Complex coef) {
        result_.quad.levels = std::max(result_.quad.levels, sub.quad.levels);
        result_.quad.nodes += sub.quad.nodes;
        result_.quad.integrals += sub.quad.integrals;
        result_.abs_err_estimate += std::abs(coef) * sub.abs_err_estimate;
        result_.term_scale += std::abs(coef) * sub.term_scale;
        for (const auto& w : sub.warnings) warn(w);
        return coef * sub.value;
    }

    void warn(const std::string& w) {
        for (const auto& x : status_.warnings)
            if (x == w) return;
        status_.warnings.push_back(w);
    }

    const QuadConfig& config() const { return cfg_; }

    EvalResult finish(Complex value) {
        if (!converged_) warn("quadrature-not-converged");
        result_.value = value;
        result_.warnings = status_.warnings;
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
            throw NumericalError("result is not finite");
        if (!converged_ && result_.abs_err_estimate > 1e-6 * std::abs(value))
            throw NumericalError("quadrature did not converge: error estimate " +
                                 std::to_string(result_.abs_err_estimate));
        result_.abs_err_estimate += 4.0 * std::numeric_limits<double>::epsilon() * result_.term_scale +
                                    kGammaRelErr * gamma_scale_;
        return result_;
    }

private:
    QuadConfig cfg_;
    DomainStatus status_;
    EvalResult result_;
    bool converged_ = true;
    double gamma_scale_ = 0.0;
};

/// Interior points where Re(m u) crosses a pole of coth(m u / 2) closely.
inline std::vector<double> coth_breaks(Complex m) {
    std::vector<double> out;
    const double am2 = std::norm(m);
    if (am2 == 0.0 || std::abs(m.imag()) < 6.0) return out;
    // u minimizing |m u - 2 pi i j| is 2 pi j Im(m) / |m|^2
    for (int j = 1; j < 64; ++j) {
        const double u = 2.0 * M_PI * j * std::abs(m.imag()) / am2;
        if (u >= 1.0) break;
        out.push_back(u);
    }
    return out;
}

}  // namespace lerch::detail
