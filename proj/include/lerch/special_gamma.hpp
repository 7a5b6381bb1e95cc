#pragma once

#include "lerch/types.hpp"

namespace lerch {

/// value * exp(log_scale) is the represented quantity.
struct GammaPair {
    Complex value;
    double log_scale = 0.0;

    Complex unscaled() const;
};

/// Lanczos approximation (g = 7, 9 terms), reflected for Re z < 0.5.
/// Throws PoleError at non-positive integers.
Complex gamma(Complex z);

/// log Gamma(z) on some branch; only exp() of it is meaningful.
Complex log_gamma(Complex z);

/// Gamma(z) with its magnitude split off when it would overflow or underflow.
GammaPair gamma_pair(Complex z);

/// Gamma(s, z) = int_z^inf t^(s-1) e^(-t) dt, principal branch in z.
Complex upper_incomplete_gamma(Complex s, Complex z);

/// e^z Gamma(s, z). Finite for large |z| where Gamma(s, z) itself underflows.
Complex upper_incomplete_gamma_scaled(Complex s, Complex z);

/// e^z gamma(s, z) / Gamma(s), the scaled regularized lower incomplete gamma.
/// At integer s this is e^z - sum_{j<s} z^j/j!.
Complex lower_regularized_scaled(Complex s, Complex z);

/// True when z sits on the negative real axis and s is not an integer, so
/// the value depends on the branch convention.
bool incomplete_gamma_on_cut(Complex s, Complex z);

/// sum_{q=1}^b 1/q. Throws DomainError for b < 1.
double harmonic_number(long b);

}  // namespace lerch
