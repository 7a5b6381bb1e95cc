#pragma once

// Tanh-sinh quadrature on (0, 1).
//
// Integrands receive both the abscissa u and its complement v = 1 - u, each
// computed directly from the transformation. Near u = 1 the value of v keeps
// full relative precision down to endpoint_clip, which 1 - u would not.
//
// integrate_01 evaluates each refinement level with OpenMP when the level is
// large enough; integrate_01_serial is the single-threaded reference. Both
// accumulate the same per-node products in the same order, so their results
// agree bit for bit.

#include <functional>
#include <vector>

#include "lerch/types.hpp"

namespace lerch {

struct QuadConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_level = 12;          // in [3, 16]
    double endpoint_clip = 1e-300;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

struct QuadResult {
    Complex value{};
    double abs_err_estimate = 0.0;
    int levels_used = 0;
    long nodes_evaluated = 0;
    bool converged = false;
};

using Integrand = std::function<Complex(double u, double v)>;
using Integrand1 = std::function<Complex(double u)>;

QuadResult integrate_01(const Integrand& f, const QuadConfig& cfg = {});
QuadResult integrate_01_serial(const Integrand& f, const QuadConfig& cfg = {});

QuadResult integrate_01(const Integrand1& f, const QuadConfig& cfg = {});
QuadResult integrate_01_serial(const Integrand1& f, const QuadConfig& cfg = {});

/// Splits (0, 1) at the given interior points (others ignored) and sums the
/// pieces. Use where the integrand has a kink or a near-singularity inside.
QuadResult integrate_01_split(const Integrand& f, std::vector<double> breakpoints,
                              const QuadConfig& cfg = {}, bool parallel = true);

/// Number of abscissae in the level-L table (t > 0 half plus the origin).
long quad_level_size(int level);

}  // namespace lerch
