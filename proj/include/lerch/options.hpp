#pragma once

#include "lerch/quadrature.hpp"

namespace lerch {

struct EvalOptions {
    QuadConfig quad;
};

/// Formula family selector for the dispatching entry points.
enum class Method {
    Auto,      // integer-k formulas for integer k in [1, 20], otherwise AC
    IntegerK,
    AC,
};

}  // namespace lerch
