#include "lerch/domain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lerch/errors.hpp"

namespace lerch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// Is z within 1e-12 of an integer in [lo, hi]?
bool near_integer_in(Complex z, double lo, double hi) {
    if (std::abs(z.imag()) > 1e-12) return false;
    const double r = std::nearbyint(z.real());
    return std::abs(z.real() - r) <= 1e-12 && r >= lo && r <= hi;
}

void k_above(DomainStatus& st, Complex k, double edge, const char* what) {
    if (!(k.real() > edge))
        st.reject("k-halfplane", std::string("requires Re(k) > ") + what + ", got k = " + fmt(k));
    else if (k.real() - edge < kEdgeWarn)
        st.warn("near-boundary-re-k");
}

void b_above(DomainStatus& st, Complex b, double edge, const char* what) {
    if (!(b.real() > edge))
        st.reject("b-halfplane", std::string("requires Re(b) > ") + what + ", got b = " + fmt(b));
    else if (b.real() - edge < kEdgeWarn)
        st.warn("near-boundary-re-b");
}

void need_integer_k(DomainStatus& st, Complex k) {
    if (!as_positive_integer(k))
        st.reject("k-integer", "requires a positive integer k, got k = " + fmt(k));
}

void need_n(DomainStatus& st, const std::optional<long>& n) {
    if (!n || *n < 1) st.reject("n-range", "requires n >= 1");
}

void need_m_nonzero(DomainStatus& st, Complex m, const char* hint) {
    if (m == Complex(0.0, 0.0)) st.reject("m-zero", std::string("m = 0: ") + hint);
}

// Full-series region: not (Re m >= 0 and |Im m| > 2 pi); on |Im m| = 2 pi
// the coth kernel reaches its pole at u = 1 unless Re(k) > 1.
void m_region(DomainStatus& st, Complex m, Complex k) {
    const double gap = std::abs(m.imag()) - kTwoPi;
    if (std::abs(gap) <= kBoundaryTol) {
        if (!(k.real() > 1.0))
            st.reject("boundary-im-m-2pi",
                      "|Im(m)| = 2*pi requires Re(k) > 1, got k = " + fmt(k));
        return;
    }
    if (m.real() >= 0.0 && gap > 0.0) {
        st.reject("m-region", "Re(m) >= 0 with |Im(m)| > 2*pi, got m = " + fmt(m));
        return;
    }
    if (std::abs(gap) <= kBoundaryWarn) st.warn("near-boundary-im-m-2pi");
    if (gap > 0.0 && -m.real() < kEdgeWarn) st.warn("near-boundary-re-m");
}

void branch_cut(DomainStatus& st, Complex m, Complex k) {
    const bool integer_k = k.imag() == 0.0 && k.real() == std::floor(k.real());
    if (!integer_k && m.imag() == 0.0 && m.real() < 0.0) st.warn("branch-cut");
}

}  // namespace

std::optional<long> as_positive_integer(Complex k) {
    if (near_integer_in(k, 1.0, 1e9)) return long(std::nearbyint(k.real()));
    return std::nullopt;
}

bool is_full_series(Formula f) {
    switch (f) {
        case Formula::FullPolylogInteger:
        case Formula::FullPolylogAC:
        case Formula::FullLerchInteger:
        case Formula::FullLerchAC: return true;
        default: return false;
    }
}

DomainStatus check_domain(const DomainRequest& r) {
    DomainStatus st;
    switch (r.formula) {
        case Formula::PartialPolylogInteger:
            need_integer_k(st, r.k);
            need_n(st, r.n);
            break;
        case Formula::FullPolylogInteger:
            need_integer_k(st, r.k);
            need_m_nonzero(st, r.m, "use the zeta function");
            m_region(st, r.m, r.k);
            break;
        case Formula::PartialPolylogAC:
            k_above(st, r.k, 0.0, "0");
            need_n(st, r.n);
            branch_cut(st, r.m, r.k);
            break;
        case Formula::FullPolylogAC:
            k_above(st, r.k, 0.0, "0");
            need_m_nonzero(st, r.m, "use the zeta function");
            m_region(st, r.m, r.k);
            break;
        case Formula::HarmonicPartial:
            k_above(st, r.k, -1.0, "-1");
            need_n(st, r.n);
            break;
        case Formula::ZetaIntRep:
            k_above(st, r.k, 1.0, "1 (use the reflected form for Re(k) < 0)");
            break;
        case Formula::ZetaReflected:
            if (!(r.k.real() < 0.0))
                st.reject("k-halfplane", "reflected form requires Re(k) < 0, got k = " + fmt(r.k));
            else if (-r.k.real() < kEdgeWarn)
                st.warn("near-boundary-re-k");
            break;
        case Formula::PartialLerchInteger:
            need_integer_k(st, r.k);
            need_n(st, r.n);
            if (r.n && near_integer_in(-r.b, 1.0, double(*r.n)))
                st.reject("b-zero-base", "b = " + fmt(r.b) + " makes a summand's base zero");
            break;
        case Formula::FullLerchInteger:
            need_integer_k(st, r.k);
            need_m_nonzero(st, r.m, "the closed form needs m != 0");
            m_region(st, r.m, r.k);
            if (near_integer_in(r.b, -1e18, 0.0))
                st.reject("b-zero-base", "b = " + fmt(r.b) + " is a non-positive integer");
            break;
        case Formula::PartialLerchAC: {
            k_above(st, r.k, 0.0, "0");
            need_n(st, r.n);
            if (as_positive_integer(r.k))
                b_above(st, r.b, -1.0, "-1 (integer k)");
            else
                b_above(st, r.b, 0.0, "0");
            if (r.b == Complex(0.0, 0.0))
                st.reject("b-zero-base", "b = 0 is the polylogarithm case");
            branch_cut(st, r.m, r.k);
            break;
        }
        case Formula::FullLerchAC:
            k_above(st, r.k, 0.0, "0");
            b_above(st, r.b, 0.0, "0");
            need_m_nonzero(st, r.m, "the closed form needs m != 0");
            m_region(st, r.m, r.k);
            branch_cut(st, r.m * r.b, r.k);
            break;
        case Formula::HpPartial:
            k_above(st, r.k, -1.0, "-1");
            b_above(st, r.b, -1.0, "-1");
            need_n(st, r.n);
            break;
        case Formula::HurwitzZeta:
            k_above(st, r.k, 1.0, "1");
            b_above(st, r.b, -1.0, "-1");
            break;
        case Formula::HurwitzSumClosed:
            need_integer_k(st, r.k);
            b_above(st, r.b, -1.0, "-1");
            need_m_nonzero(st, r.m, "the closed form needs m != 0");
            if (r.b == Complex(0.0, 0.0)) st.reject("b-zero-base", "b = 0 has a zero base");
            break;
    }
    return st;
}

DomainStatus require_domain(const DomainRequest& req) {
    DomainStatus st = check_domain(req);
    if (!st.valid) {
        std::string msg = "domain violation: " + st.violations.front().message;
        throw DomainError(msg, std::move(st));
    }
    return st;
}

}  // namespace lerch
