#pragma once

// b != 0 family. Full-series results are e^{mb}-weighted:
//   partial:  sum_{j=1}^n e^{m(j+b)}/(j+b)^k
//   full:     sum_{j>=1} (integer-k forms) or sum_{j>=0} (AC form)

#include "lerch/options.hpp"
#include "lerch/types.hpp"

namespace lerch {

enum class BClass { Integer, HalfInteger, Generic };

/// Integer / half-integer / generic b. Any nonzero imaginary part is generic.
BClass classify_b(Complex b, double tol = 1e-9);

/// Partial sum at positive integer k. b = 0 is forwarded to the polylog form.
EvalResult partial_lerch_integer(Complex m, long k, Complex b, long n,
                                 const EvalOptions& opt = {});

/// sum_{j>=1} e^{m(j+b)}/(j+b)^k at positive integer k; the variant follows classify_b.
EvalResult full_lerch_integer(Complex m, long k, Complex b, const EvalOptions& opt = {});

/// Partial sum for Re(k) > 0, Re(b) > 0 (Re(b) > -1 at integer k). m = 0 gives hp_partial.
EvalResult partial_lerch_ac(Complex m, Complex k, Complex b, long n,
                            const EvalOptions& opt = {});

/// HP_k(n) = sum_{q=1}^n (q+b)^{-k} for Re(k) > -1, Re(b) > -1.
EvalResult hp_partial(Complex k, Complex b, long n, const EvalOptions& opt = {});

/// zeta(k, b+1) = sum_{q>=1} (q+b)^{-k} for Re(k) > 1, Re(b) > -1.
EvalResult hurwitz_zeta(Complex k, Complex b, const EvalOptions& opt = {});

/// zeta(j, b) = sum_{q>=0} (q+b)^{-j} for any b off the non-positive integers.
EvalResult hurwitz_zeta_from_zero(long j, Complex b, const EvalOptions& opt = {});

/// sum_{j=2}^k m^{k-j}/(k-j)! zeta(j, b) in closed form; zero for k < 2.
EvalResult hurwitz_sum_closed(Complex m, long k, Complex b, const EvalOptions& opt = {});

/// sum_{j>=0} e^{m(j+b)}/(j+b)^k for Re(k) > 0, Re(b) > 0.
EvalResult full_lerch_ac(Complex m, Complex k, Complex b, const EvalOptions& opt = {});

/// full_lerch_ac without the j = 0 term.
EvalResult full_lerch_ac_from_one(Complex m, Complex k, Complex b, const EvalOptions& opt = {});

/// Phi(e^m, k, b) = e^{-mb} full_lerch_ac(m, k, b).
EvalResult lerch_phi(Complex m, Complex k, Complex b, const EvalOptions& opt = {});

/// Dispatchers. lerch_full always returns the sum from j = 0.
EvalResult lerch_partial(Complex m, Complex k, Complex b, long n, Method method = Method::Auto,
                         const EvalOptions& opt = {});
EvalResult lerch_full(Complex m, Complex k, Complex b, Method method = Method::Auto,
                      const EvalOptions& opt = {});

}  // namespace lerch
