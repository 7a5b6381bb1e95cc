#pragma once

// b = 0 family: E^m_k(n) = sum_{j=1}^n e^{mj}/j^k, Li_k(e^m), H_k(n), zeta(k).

#include "lerch/options.hpp"
#include "lerch/types.hpp"

namespace lerch {

/// E^m_k(n) at integer k >= 1: closed terms plus one integral. m = 0 gives H_k(n).
EvalResult partial_polylog_integer(Complex m, long k, long n, const EvalOptions& opt = {});

/// Li_k(e^m) at integer k >= 1. Rejects m = 0 and Re(m) >= 0 with |Im m| > 2 pi.
EvalResult full_polylog_integer(Complex m, long k, const EvalOptions& opt = {});

/// E^m_k(n) for Re(k) > 0 via the incomplete gamma function. m = 0 is
/// forwarded to harmonic_partial unchanged.
EvalResult partial_polylog_ac(Complex m, Complex k, long n, const EvalOptions& opt = {});

/// H_k(n) = sum_{j=1}^n j^{-k} for Re(k) > -1.
EvalResult harmonic_partial(Complex k, long n, const EvalOptions& opt = {});

/// zeta(k) for Re(k) > 1.
EvalResult zeta_int_rep(Complex k, const EvalOptions& opt = {});

/// zeta(k) for Re(k) < 0 through the functional equation.
EvalResult zeta_reflected(Complex k, const EvalOptions& opt = {});

/// Li_k(e^m) for Re(k) > 0; on |Im m| = 2 pi needs Re(k) > 1.
EvalResult full_polylog_ac(Complex m, Complex k, const EvalOptions& opt = {});

/// Dispatchers. Auto picks the integer formulas for integer k in [1, 20].
EvalResult polylog_partial(Complex m, Complex k, long n, Method method = Method::Auto,
                           const EvalOptions& opt = {});
EvalResult polylog_full(Complex m, Complex k, Method method = Method::Auto,
                        const EvalOptions& opt = {});

/// zeta(k) off the strip 0 <= Re(k) <= 1.
EvalResult zeta(Complex k, const EvalOptions& opt = {});

}  // namespace lerch
