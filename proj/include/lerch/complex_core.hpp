#pragma once

// Branch-consistent complex scalar operations.
//
// Every logarithm and power uses the principal branch, arg in (-pi, pi].
// A zero imaginary part is always read as +0, so a negative real argument
// sits on the upper side of the cut regardless of how the zero was signed.

#include "lerch/types.hpp"

namespace lerch {

/// log|z| + i arg z with arg in (-pi, pi]. Throws DomainError for z == 0.
Complex principal_log(Complex z);

/// exp(w * principal_log(z)); 0^w = 0 when Re(w) > 0.
Complex complex_pow(Complex z, Complex w);

/// cot(pi u) on (0, 1); Laurent expansion within 1e-4 of either end.
/// Throws PoleError at u = 0 or u = 1.
double cot_pi(double u);

/// coth(m u / 2) without overflow for large |Re(m u)|.
Complex coth_half(Complex m, double u);

// ---------------------------------------------------------------------------
// Kernels used to pre-regularize integrands. Each has a removable singularity
// or a cancellation at the origin that the plain expression would expose.

/// Flips a -0 imaginary part to +0.
inline Complex canonical(Complex z) {
    return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// cot(pi u) given both u and its complement v = 1 - u, so that points
/// close to 1 keep full relative accuracy.
double cot_pi(double u, double v);

/// cot(pi w) - 1/(pi w), regular at w = 0.
double cot_pi_remainder(double w);

/// coth(x/2) - 2/x, regular at x = 0.
Complex coth_half_remainder(Complex x);

/// coth(x/2) for any x off the poles 2 pi i Z.
Complex coth_half_of(Complex x);

/// x coth(x/2), equal to 2 at x = 0.
Complex x_coth_half(Complex x);

Complex expm1(Complex z);
Complex log1p(Complex z);

/// expm1(x)/x, equal to 1 at x = 0.
Complex expm1_ratio(Complex x);

/// (e^y - 1 - y)/y^2, equal to 1/2 at y = 0.
Complex exp_remainder2(Complex y);

/// (x - log(1+x))/x^2, equal to 1/2 at x = 0.
Complex log1p_remainder2(Complex x);

/// (-log(1-u) - u)/u^2 for real u in [0, 1), equal to 1/2 at u = 0.
double log1m_remainder2(double u);

/// Log(m + t) - Log(m) for real t >= 0, continuous in t. Because m + t never
/// leaves the half-plane of m, this equals the principal log of (m+t)/m when
/// the quotient is near 1, and for negative real m it drops by pi once t
/// passes |m|. Returns -inf real part when m + t == 0.
Complex log_shift(Complex m, double t);

}  // namespace lerch
