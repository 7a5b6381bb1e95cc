#pragma once

#include <optional>

#include "lerch/domain_status.hpp"
#include "lerch/types.hpp"

namespace lerch {

/// Every closed form the library evaluates.
enum class Formula {
    PartialPolylogInteger,
    FullPolylogInteger,
    PartialPolylogAC,
    FullPolylogAC,
    HarmonicPartial,
    ZetaIntRep,
    ZetaReflected,
    PartialLerchInteger,
    FullLerchInteger,
    PartialLerchAC,
    FullLerchAC,
    HpPartial,
    HurwitzZeta,
    HurwitzSumClosed,
};

/// Parameters of one request. Unused fields are ignored by the checks.
struct DomainRequest {
    Formula formula;
    Complex m{};
    Complex k{};
    Complex b{};
    std::optional<long> n;
};

/// Tolerance for |Im m| = 2 pi.
inline constexpr double kBoundaryTol = 1e-12;
/// |Im m| within this of 2 pi raises a warning.
inline constexpr double kBoundaryWarn = 1e-6;
/// Real parts within this of a half-plane edge raise a warning.
inline constexpr double kEdgeWarn = 1e-9;

/// Checks the convergence region of the formula without evaluating anything.
DomainStatus check_domain(const DomainRequest& req);

/// Throws DomainError carrying the status when the request is rejected.
DomainStatus require_domain(const DomainRequest& req);

/// Positive integer value of k, if k is one (within 1e-12).
std::optional<long> as_positive_integer(Complex k);

bool is_full_series(Formula f);

}  // namespace lerch
