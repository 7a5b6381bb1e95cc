#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace lerch {

using Complex = std::complex<double>;

/// Which closed form produced a value.
enum class Variant {
    IntegerK,            // finite-sum formulas valid at positive integer k
    IntegerKGeneric2b,   // full Lerch, 2b not an integer
    IntegerKHalfB,       // full Lerch, b a half-integer
    IntegerKIntB,        // full Lerch, b a positive integer
    AnalyticContinuation,
    HarmonicIntegral,
    HpIntegral,
    ZetaIntegral,
    ZetaReflected,
    HurwitzIntegral,
    Oracle,
};

std::string_view to_string(Variant v);

/// Aggregated cost of every quadrature behind one evaluation.
struct QuadStats {
    int levels = 0;     // deepest level reached by any integral
    long nodes = 0;     // total integrand evaluations
    int integrals = 0;
};

struct EvalResult {
    Complex value{};
    double abs_err_estimate = 0.0;  // quadrature, rounding and incomplete-gamma error
    double term_scale = 0.0;        // sum of |pieces| combined into value
    Variant variant_used = Variant::AnalyticContinuation;
    std::vector<std::string> warnings;
    QuadStats quad;
};

}  // namespace lerch
