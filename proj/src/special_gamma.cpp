#include "lerch/special_gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lerch/complex_core.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kMaxIter = 5000;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos sum and t = z + g - 1/2 for Gamma(z), Re z >= 1/2.
Complex lanczos_sum(Complex zm1) {
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm1 + double(i));
    return x;
}

Complex lanczos_log(Complex z) {
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

// Kummer series: e^z P(s,z) = z^s sum_n z^n / Gamma(s+n+1).
// Sets loss to max|term| / |sum|.
Complex kummer(Complex s, Complex z, double& loss) {
    Complex term = 1.0, sum = 1.0;
    double big = 1.0;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= z / (s + double(n));
        sum += term;
        const double at = std::abs(term);
        big = std::max(big, at);
        if (at <= kEps * 0.5 * std::abs(sum) && std::abs(z) < std::abs(s + double(n)))
            break;
        if (n == kMaxIter - 1) throw NumericalError("incomplete gamma: Kummer series did not converge");
    }
    loss = big / std::abs(sum);
    return complex_pow(z, s) / gamma(s + 1.0) * sum;
}

// gamma(s,z) = z^s sum_n (-z)^n / (n! (s+n)); returns e^z gamma(s,z)/Gamma(s).
Complex negative_axis_series(Complex s, Complex z, double& loss) {
    Complex pw = 1.0;
    Complex sum = 1.0 / s;
    double big = std::abs(sum);
    for (int n = 1; n < kMaxIter; ++n) {
        pw *= -z / double(n);
        const Complex term = pw / (s + double(n));
        sum += term;
        const double at = std::abs(term);
        big = std::max(big, at);
        if (at <= kEps * 0.5 * std::abs(sum) && double(n) > std::abs(z)) break;
        if (n == kMaxIter - 1) throw NumericalError("incomplete gamma: series did not converge");
    }
    loss = big / std::abs(sum);
    return std::exp(z) * complex_pow(z, s) / gamma(s) * sum;
}

// e^z Gamma(s,z) = z^(s-1) sum_j (s-1)...(s-j) / z^j, large |z|.
bool asymptotic(Complex s, Complex z, Complex& out) {
    Complex term = 1.0, sum = 1.0;
    double prev = 1.0;
    for (int j = 1; j < 200; ++j) {
        term *= (s - double(j)) / z;
        const double at = std::abs(term);
        if (at > prev) return false;
        sum += term;
        if (at <= kEps * 0.5 * std::abs(sum)) {
            out = complex_pow(z, s - 1.0) * sum;
            return true;
        }
        prev = at;
    }
    return false;
}

// Legendre continued fraction, modified Lentz: e^z Gamma(s,z) = z^s h.
bool legendre_cf(Complex s, Complex z, Complex& out) {
    constexpr double tiny = 1e-300;
    Complex b = z + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const Complex an = -double(i) * (double(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= 2.0 * kEps) {
            out = complex_pow(z, s) * h;
            return true;
        }
    }
    return false;
}

// Near the negative axis the expansion misses a Stokes term of relative size
// about e^{Re z} |Gamma(s)| |z|^{1-Re s} e^{pi |Im s|}; it is used there only
// when that term is far below rounding.
bool use_asymptotic(Complex s, Complex z) {
    if (!(std::abs(z) > std::max(45.0, 2.5 * std::abs(s) + 30.0))) return false;
    if (!(z.real() < 0.0 && std::abs(z.imag()) < 0.5 * std::abs(z))) return true;
    if (is_nonpositive_integer(s)) return false;
    const double stokes = z.real() + log_gamma(s).real() +
                          (1.0 - s.real()) * std::log(std::abs(z)) + kPi * std::abs(s.imag());
    return stokes < -45.0;
}

// The continued fraction converges slowly and loses accuracy once Re(s)
// exceeds |z|; the power series has no cancellation there.
bool use_cf(Complex s, Complex z) {
    return std::abs(z) >= 2.0 && std::abs(z) > s.real() + 2.0 &&
           (z.real() >= 0.0 || std::abs(z) + z.real() >= (s.real() < 0.0 ? 6.0 : 10.0));
}

}  // namespace

Complex GammaPair::unscaled() const {
    return log_scale == 0.0 ? value : value * std::exp(log_scale);
}

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma at a non-positive integer");
    if (z.real() < 0.5) return kPi / (sin_pi(z) * gamma(1.0 - z));
    const Complex zm1 = z - 1.0;
    const Complex t = zm1 + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((zm1 + 0.5) * std::log(t) - t) * lanczos_sum(zm1);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma at a non-positive integer");
    if (z.real() < 0.5) return std::log(kPi) - std::log(sin_pi(z)) - lanczos_log(1.0 - z);
    return lanczos_log(z);
}

GammaPair gamma_pair(Complex z) {
    const Complex lg = log_gamma(z);
    const double mag = lg.real();
    if (mag > std::log(1e-300) && mag < std::log(1e300)) return {gamma(z), 0.0};
    return {std::exp(Complex(0.0, lg.imag())), mag};
}

Complex lower_regularized_scaled(Complex s, Complex z) {
    z = canonical(z);
    if (z == Complex(0.0, 0.0)) {
        if (s.real() > 0.0) return 0.0;
        throw DomainError("incomplete gamma: z = 0 requires Re(s) > 0");
    }
    double loss = 0.0;
    // Positive integer s: e^z minus a finite Taylor polynomial, when the
    // polynomial does not cancel against e^z.
    if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() <= 64.0 &&
        s.real() == std::floor(s.real())) {
        const int n = static_cast<int>(s.real());
        const Complex e = std::exp(z);
        Complex t = 1.0, sum = 0.0;
        double peak = std::abs(e);
        for (int j = 0; j < n; ++j) {
            if (j > 0) t *= z / double(j);
            sum += t;
            peak = std::max(peak, std::abs(t));
        }
        const Complex v = e - sum;
        if (std::abs(v) * 16.0 > peak) return v;
    }
    if (std::abs(z) <= 1.0 || std::abs(z) - z.real() <= 12.0 ||
        std::abs(z) < std::abs(s)) {
        const Complex v = kummer(s, z, loss);
        if (loss < 300.0) return v;
    }
    if (z.real() < 0.0 && std::abs(z) + z.real() < 12.0 && !use_asymptotic(s, z)) {
        const Complex v = negative_axis_series(s, z, loss);
        if (loss < 300.0) return v;
    }
    return std::exp(z) - upper_incomplete_gamma_scaled(s, z) / gamma(s);
}

Complex upper_incomplete_gamma_scaled(Complex s, Complex z) {
    z = canonical(z);
    Complex out;
    if (use_asymptotic(s, z) && asymptotic(s, z, out)) return out;
    if (use_cf(s, z) && legendre_cf(s, z, out)) return out;
    if (is_nonpositive_integer(s))
        throw DomainError("incomplete gamma: s a non-positive integer is not supported");
    const Complex g = gamma(s);
    double loss = 0.0;
    Complex p;
    if (z == Complex(0.0, 0.0)) {
        if (s.real() <= 0.0) throw DomainError("incomplete gamma: z = 0 requires Re(s) > 0");
        return g;
    }
    if (z.real() < 0.0 && std::abs(z) + z.real() < 12.0)
        p = negative_axis_series(s, z, loss);
    else
        p = kummer(s, z, loss);
    return g * (std::exp(z) - p);
}

Complex upper_incomplete_gamma(Complex s, Complex z) {
    z = canonical(z);
    if (z == Complex(0.0, 0.0)) {
        if (s.real() > 0.0) return gamma(s);
        throw DomainError("incomplete gamma: z = 0 requires Re(s) > 0");
    }
    return std::exp(-z) * upper_incomplete_gamma_scaled(s, z);
}

bool incomplete_gamma_on_cut(Complex s, Complex z) {
    const bool integer_s = s.imag() == 0.0 && s.real() == std::floor(s.real());
    return !integer_s && z.imag() == 0.0 && z.real() < 0.0;
}

double harmonic_number(long b) {
    if (b < 1) throw DomainError("harmonic number requires b >= 1");
    double s = 0.0;
    for (long q = b; q >= 1; --q) s += 1.0 / double(q);
    return s;
}

}  // namespace lerch
