#include "lerch/complex_core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lerch/errors.hpp"

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2n), n = 1..kZetaTerms; index 0 unused.
constexpr int kZetaTerms = 24;

const std::array<double, kZetaTerms + 1>& even_zeta() {
    static const auto table = [] {
        std::array<double, kZetaTerms + 1> z{};
        const double p2 = kPi * kPi;
        z[1] = p2 / 6.0;
        z[2] = p2 * p2 / 90.0;
        z[3] = p2 * p2 * p2 / 945.0;
        z[4] = p2 * p2 * p2 * p2 / 9450.0;
        for (int n = 5; n <= kZetaTerms; ++n) {
            double s = 0.0;
            for (int j = 100; j >= 1; --j) s += std::pow(double(j), -2.0 * n);
            z[n] = s;
        }
        return z;
    }();
    return table;
}

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::IntegerK: return "integer-k";
        case Variant::IntegerKGeneric2b: return "integer-k-general";
        case Variant::IntegerKHalfB: return "integer-k-half-b";
        case Variant::IntegerKIntB: return "integer-k-int-b";
        case Variant::AnalyticContinuation: return "analytic-continuation";
        case Variant::HarmonicIntegral: return "harmonic-integral";
        case Variant::HpIntegral: return "hp-integral";
        case Variant::ZetaIntegral: return "zeta-integral";
        case Variant::ZetaReflected: return "zeta-reflected";
        case Variant::HurwitzIntegral: return "hurwitz-integral";
        case Variant::Oracle: return "oracle";
    }
    return "unknown";
}

Complex principal_log(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("log of zero");
#ifdef LERCH_BROKEN_BRANCH
    // Negative-control build: arg in [0, 2 pi).
    const Complex w = std::log(canonical(z));
    return w.imag() < 0.0 ? w + Complex(0.0, 2.0 * kPi) : w;
#else
    return std::log(canonical(z));
#endif
}

Complex complex_pow(Complex z, Complex w) {
    if (z == Complex(0.0, 0.0)) {
        if (w.real() > 0.0) return {0.0, 0.0};
        throw DomainError("zero base with non-positive exponent");
    }
    if (w == Complex(0.0, 0.0)) return {1.0, 0.0};
    if (w == Complex(1.0, 0.0)) return z;
    if (z.imag() == 0.0 && z.real() > 0.0 && w.imag() == 0.0)
        return {std::pow(z.real(), w.real()), 0.0};
    return std::exp(w * principal_log(z));
}

double sin_pi(double x) {
    const double n = std::nearbyint(2.0 * x);
    const double r = x - 0.5 * n;
    const long q = static_cast<long>(std::fmod(n, 4.0) + 4.0) % 4;
    switch (q) {
        case 0: return std::sin(kPi * r);
        case 1: return std::cos(kPi * r);
        case 2: return -std::sin(kPi * r);
        default: return -std::cos(kPi * r);
    }
}

double cos_pi(double x) {
    const double n = std::nearbyint(2.0 * x);
    const double r = x - 0.5 * n;
    const long q = static_cast<long>(std::fmod(n, 4.0) + 4.0) % 4;
    switch (q) {
        case 0: return std::cos(kPi * r);
        case 1: return -std::sin(kPi * r);
        case 2: return -std::cos(kPi * r);
        default: return std::sin(kPi * r);
    }
}

Complex sin_pi(Complex z) {
    const double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double y = kPi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

double cot_pi_remainder(double w) {
    if (std::abs(w) < 0.3) {
        const auto& z = even_zeta();
        const double w2 = w * w;
        double s = 0.0;
        for (int n = kZetaTerms; n >= 1; --n) s = s * w2 + z[n];
        return -2.0 / kPi * w * s;
    }
    return cos_pi(w) / sin_pi(w) - 1.0 / (kPi * w);
}

namespace {

// cot(pi x) for x in (0, 1/2].
double cot_pi_low(double x) {
    if (x < 1e-4) {
        const double y = kPi * x;
        const double y2 = y * y;
        return 1.0 / y - y / 3.0 - y * y2 / 45.0 - 2.0 * y * y2 * y2 / 945.0;
    }
    return cos_pi(x) / sin_pi(x);
}

}  // namespace

double cot_pi(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0)) throw PoleError("cot(pi u) at a pole");
    return u <= 0.5 ? cot_pi_low(u) : -cot_pi_low(v);
}

double cot_pi(double u) {
    if (!(u > 0.0 && u < 1.0)) throw PoleError("cot(pi u) at a pole");
    return cot_pi(u, 1.0 - u);
}

Complex expm1(Complex z) {
    const double a = z.real(), b = z.imag();
    if (b == 0.0) return {std::expm1(a), 0.0};
    const double s = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

Complex log1p(Complex z) {
    const double x = z.real(), y = z.imag();
    if (y == 0.0 && x > -1.0) return {std::log1p(x), 0.0};
    if (std::abs(z) < 0.5)
        return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
    return principal_log(Complex(1.0 + x, y));
}

Complex coth_half_of(Complex x) {
    if (std::abs(x) < 1e-4) return 2.0 / x + x / 6.0;
    if (x.real() < 0.0) return -coth_half_of(-x);
    const Complex e = expm1(x);
    if (e == Complex(0.0, 0.0)) throw PoleError("coth(x/2) at a pole");
    return 1.0 + 2.0 / e;
}

Complex coth_half(Complex m, double u) {
    return coth_half_of(m * u);
}

Complex coth_half_remainder(Complex x) {
    if (std::abs(x) < 2.0) {
        // coth y - 1/y = (2/y) sum (-1)^(n+1) zeta(2n) (y/pi)^(2n), y = x/2
        const auto& z = even_zeta();
        const Complex y = 0.5 * x;
        const Complex t = -(y / kPi) * (y / kPi);
        Complex s = 0.0;
        for (int n = kZetaTerms; n >= 1; --n) s = s * t + z[n];
        return 2.0 * y / (kPi * kPi) * s;
    }
    return coth_half_of(x) - 2.0 / x;
}

Complex x_coth_half(Complex x) {
    if (std::abs(x) < 2.0) return 2.0 + x * coth_half_remainder(x);
    return x * coth_half_of(x);
}

Complex expm1_ratio(Complex x) {
    if (x == Complex(0.0, 0.0)) return 1.0;
    if (std::abs(x) < 1e-8) return 1.0 + 0.5 * x;
    return expm1(x) / x;
}

Complex exp_remainder2(Complex y) {
    if (std::abs(y) < 0.5) {
        // sum y^j/(j+2)!
        Complex s = 0.0;
        double f = 1.0;
        std::array<double, 20> c{};
        for (int j = 0; j < 20; ++j) {
            f *= (j + 2);
            c[j] = 1.0 / f;
        }
        for (int j = 19; j >= 0; --j) s = s * y + c[j];
        return s;
    }
    return (expm1(y) - y) / (y * y);
}

Complex log1p_remainder2(Complex x) {
    if (std::abs(x) < 0.25) {
        Complex s = 0.0;
        for (int j = 30; j >= 0; --j) s = s * (-x) + 1.0 / (j + 2.0);
        return s;
    }
    return (x - log1p(x)) / (x * x);
}

double log1m_remainder2(double u) {
    if (u < 0.25) {
        double s = 0.0;
        for (int j = 30; j >= 0; --j) s = s * u + 1.0 / (j + 2.0);
        return s;
    }
    return (-std::log1p(-u) - u) / (u * u);
}

Complex log_shift(Complex m, double t) {
    m = canonical(m);
    if (t == 0.0) return 0.0;
    const double am2 = std::norm(m);
    if (t * t < 0.25 * am2) return log1p(t / m);
    const double mr = m.real(), mi = m.imag();
    const double sr = mr + t;
    const double n2 = sr * sr + mi * mi;
    if (n2 == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    const double re = 0.5 * std::log(n2 / am2);
    const double im = std::atan2(-t * mi, am2 + t * mr);
    return {re, im};
}

}  // namespace lerch
