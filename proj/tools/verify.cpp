#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "cli_app.hpp"
#include "lerch/complex_core.hpp"
#include "lerch/lerch.hpp"
#include "lerch/oracle.hpp"
#include "lerch/polylog.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/special_gamma.hpp"

namespace lerch::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Checker {
public:
    explicit Checker(std::ostream& out) : out_(out) {}

    void rel(const std::string& name, Complex got, Complex want, double tol) {
        const double err = std::abs(got - want) / std::abs(want);
        report(name, err <= tol, err, tol, "rel");
    }

    void abs(const std::string& name, Complex got, Complex want, double tol) {
        report(name, std::abs(got - want) <= tol, std::abs(got - want), tol, "abs");
    }

    // Relative error, or an error inside the estimate r reports for itself.
    void oracle(const std::string& name, const EvalResult& r, Complex want, double tol) {
        const double err = std::abs(r.value - want);
        const double rel = err / std::abs(want);
        const bool ok = rel <= tol || err <= r.abs_err_estimate;
        report(name, ok, rel, tol, "rel");
    }

    template <typename F>
    void guard(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out_ << "FAIL  " << name << "  threw: " << e.what() << '\n';
            ++total_;
            ++failed_;
        }
    }

    void section(const std::string& name) { out_ << "== " << name << '\n'; }
    int failed() const { return failed_; }
    int total() const { return total_; }

private:
    void report(const std::string& name, bool ok, double err, double tol, const char* kind) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %s_err=%.3e  tol=%.1e", kind, err, tol);
        out_ << (ok ? "PASS  " : "FAIL  ") << name << buf << '\n';
        ++total_;
        if (!ok) ++failed_;
    }

    std::ostream& out_;
    int failed_ = 0;
    int total_ = 0;
};

std::string label(const char* fmt, Complex a, Complex b = 0.0, Complex c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a.real(), a.imag(), b.real(), b.imag(), c.real(),
                  c.imag());
    return buf;
}

void suite_quadrature(Checker& ck) {
    ck.section("quadrature");
    for (Complex m : {Complex(2.0, 0.0), Complex(-1.0, 1.0)}) {
        const auto q = integrate_01([m](double u, double v) {
            return -(2.0 * kPi / m) * v * cot_pi(u, v) + 2.0 / (m * u);
        });
        ck.rel(label("cot identity m=%g%+gi", m), q.value, 2.0 * std::log(2.0 * kPi) / m, 1e-9);
    }
    for (Complex b : {Complex(0.3, 0.0), Complex(0.7, 0.1)}) {
        const Complex s2b = std::sin(2.0 * kPi * b);
        const auto q = integrate_01([b, s2b](double u, double v) {
            return kPi * (-1.0 + std::sin(2.0 * kPi * b * u) / s2b) * cot_pi(u, v) +
                   std::pow(v, b) / u;
        });
        const Complex want = std::log(2.0 * kPi) - 1.0 / (2.0 * b) + 0.5 * kPi / std::tan(kPi * b);
        ck.rel(label("sin ratio identity b=%g%+gi", b), q.value, want, 1e-8);
    }
    // The parallel and serial paths must produce the same bits.
    const Integrand f = [](double u, double v) {
        return Complex(std::log(u) * std::sqrt(v), std::cos(7.0 * u));
    };
    QuadConfig cfg;
    cfg.rel_tol = 1e-14;
    const auto p = integrate_01(f, cfg);
    const auto s = integrate_01_serial(f, cfg);
    ck.abs("parallel equals serial", p.value, s.value, 0.0);
}

void suite_gamma(Checker& ck) {
    ck.section("gamma");
    ck.rel("gamma(5)", gamma(5.0), 24.0, 1e-13);
    ck.rel("gamma(0.5)", gamma(0.5), std::sqrt(kPi), 1e-13);
    for (Complex z : {Complex(0.3, 0.0), Complex(-2.5, 1.5), Complex(4.0, -7.0)})
        ck.rel(label("reflection z=%g%+gi", z), gamma(z) * gamma(1.0 - z),
               kPi / std::sin(kPi * z), 1e-12);
    for (Complex z : {Complex(1.0, 2.0), Complex(-3.5, 0.5), Complex(12.0, 9.0)})
        ck.rel(label("gamma(z+1)=z gamma(z) z=%g%+gi", z), gamma(z + 1.0), z * gamma(z), 1e-11);

    // Gamma(s, z) = int_0^1 (z - log u)^(s-1) e^{-z} du for real z > 0.
    for (auto [s, z] : {std::pair{1.5, 1.0}, std::pair{3.25, 2.0}, std::pair{0.6, 0.4}}) {
        const auto q = integrate_01([s, z](double u) {
            return Complex(std::pow(z - std::log(u), s - 1.0) * std::exp(-z), 0.0);
        });
        ck.rel(label("Gamma(s,z) s=%g%+gi z=%g%+gi", s, z), upper_incomplete_gamma(s, z), q.value,
               1e-10);
    }
    ck.rel("Gamma(1,z)=e^-z", upper_incomplete_gamma(1.0, Complex(2.0, -3.0)),
           std::exp(-Complex(2.0, -3.0)), 1e-12);

    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 24; ++i) {
        const Complex s(8.0 * unit(rng), 8.0 * unit(rng));
        const Complex z(10.0 * unit(rng), 10.0 * unit(rng));
        ck.guard("recurrence", [&] {
            const Complex lhs = upper_incomplete_gamma(s + 1.0, z);
            const Complex rhs = s * upper_incomplete_gamma(s, z) + complex_pow(z, s) * std::exp(-z);
            ck.rel(label("recurrence s=%.3g%+.3gi z=%.3g%+.3gi", s, z), lhs, rhs, 1e-10);
        });
    }
    ck.rel("H(5)", harmonic_number(5), 137.0 / 60.0, 1e-15);
}

struct Sampler {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unit{0.0, 1.0};

    explicit Sampler(unsigned long long seed) : rng(seed) {}
    double uniform(double a, double b) { return a + (b - a) * unit(rng); }
    long integer(long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); }
    // Uniform in the disk |m| <= r, restricted to re_lo <= Re m <= re_hi.
    Complex disk(double r, double re_lo, double re_hi) {
        for (;;) {
            const Complex m(uniform(-r, r), uniform(-r, r));
            if (std::abs(m) <= r && m.real() >= re_lo && m.real() <= re_hi) return m;
        }
    }
    Complex order() { return {uniform(0.05, 4.0), uniform(-1.0, 1.0)}; }
    Complex shift() { return {uniform(0.05, 3.0), uniform(-1.0, 1.0)}; }
};

void suite_identities(Checker& ck) {
    ck.section("identities");
    Sampler smp(7081);

    for (int i = 0; i < 12; ++i) {
        const Complex m = smp.disk(3.0, -3.0, 3.0), b = smp.shift();
        const long k = smp.integer(1, 5), n = smp.integer(1, 50);
        ck.guard("integer partial lerch", [&] {
            const auto r = partial_lerch_integer(m, k, b, n);
            const Complex ref = partial_sum_direct({m, double(k), b, n, 1});
            ck.oracle(label("integer partial lerch m=%.3g%+.3gi k=%g b=%.3g%+.3gi", m, double(k), b),
                      r, ref, 1e-9);
        });
    }
    for (int i = 0; i < 12; ++i) {
        const Complex m = smp.disk(3.0, -3.0, 3.0), k = smp.order(), b = smp.shift();
        const long n = smp.integer(1, 50);
        ck.guard("ac partial", [&] {
            const auto rp = partial_polylog_ac(m, k, n);
            ck.oracle(label("ac partial polylog m=%.3g%+.3gi k=%.3g%+.3gi", m, k), rp,
                      partial_sum_direct({m, k, 0.0, n, 1}), 1e-8);
            const auto rl = partial_lerch_ac(m, k, b, n);
            ck.oracle(label("ac partial lerch m=%.3g%+.3gi k=%.3g%+.3gi b=%.3g%+.3gi", m, k, b), rl,
                      partial_sum_direct({m, k, b, n, 1}), 1e-8);
        });
    }
    for (int i = 0; i < 10; ++i) {
        const Complex m = smp.disk(3.0, -3.0, -0.1), k = smp.order(), b = smp.shift();
        const long ki = smp.integer(1, 5);
        ck.guard("full series", [&] {
            ck.oracle(label("ac full polylog m=%.3g%+.3gi k=%.3g%+.3gi", m, k), full_polylog_ac(m, k),
                      full_series_direct({m, k, 0.0, std::nullopt, 1}).value, 1e-8);
            ck.oracle(label("ac full lerch m=%.3g%+.3gi k=%.3g%+.3gi b=%.3g%+.3gi", m, k, b),
                      full_lerch_ac(m, k, b), full_series_direct({m, k, b, std::nullopt, 0}).value,
                      1e-8);
            ck.oracle(label("integer full polylog m=%.3g%+.3gi k=%g", m, double(ki)),
                      full_polylog_integer(m, ki),
                      full_series_direct({m, double(ki), 0.0, std::nullopt, 1}).value, 1e-8);
            ck.oracle(label("integer full lerch m=%.3g%+.3gi k=%g b=%.3g%+.3gi", m, double(ki), b),
                      full_lerch_integer(m, ki, b),
                      full_series_direct({m, double(ki), b, std::nullopt, 1}).value, 1e-8);
        });
    }
    for (double b : {0.5, 1.5, 1.0, 3.0}) {
        const Complex m(-0.7, 1.3);
        ck.oracle(label("integer full lerch special b m=%.3g%+.3gi b=%g", m, b),
                  full_lerch_integer(m, 3, b),
                  full_series_direct({m, 3.0, b, std::nullopt, 1}).value, 1e-8);
    }

    ck.section("consistency");
    for (int i = 0; i < 8; ++i) {
        const Complex m = smp.disk(3.0, -3.0, 3.0), b = smp.shift();
        const long k = smp.integer(1, 5), n = smp.integer(1, 40);
        ck.guard("integer vs ac", [&] {
            ck.rel(label("polylog partial ac=int m=%.3g%+.3gi k=%g", m, double(k)),
                   partial_polylog_ac(m, double(k), n).value,
                   partial_polylog_integer(m, k, n).value, 1e-8);
            ck.rel(label("lerch partial ac=int m=%.3g%+.3gi k=%g b=%.3g%+.3gi", m, double(k), b),
                   partial_lerch_ac(m, double(k), b, n).value,
                   partial_lerch_integer(m, k, b, n).value, 1e-8);
        });
    }
    for (int i = 0; i < 6; ++i) {
        const Complex m = smp.disk(3.0, -3.0, -0.1), k = smp.order(), b = smp.shift();
        ck.guard("shift", [&] {
            ck.rel(label("lerch b=1 equals polylog m=%.3g%+.3gi k=%.3g%+.3gi", m, k),
                   full_lerch_ac(m, k, 1.0).value, full_polylog_ac(m, k).value, 1e-8);
            const Complex head = std::exp(m * b) * complex_pow(b, -k);
            ck.rel(label("lerch shift recurrence m=%.3g%+.3gi k=%.3g%+.3gi b=%.3g%+.3gi", m, k, b),
                   full_lerch_ac(m, k, b).value, head + full_lerch_ac(m, k, b + 1.0).value, 1e-8);
        });
    }

    ck.section("constants");
    ck.rel("zeta(2)", zeta(2.0).value, kPi * kPi / 6.0, 1e-10);
    ck.rel("zeta(4)", zeta(4.0).value, std::pow(kPi, 4) / 90.0, 1e-10);
    ck.rel("zeta(-1)", zeta(-1.0).value, -1.0 / 12.0, 1e-10);
    ck.abs("zeta(-2)", zeta(-2.0).value, 0.0, 1e-10);
    ck.rel("Li1(1/2)", polylog_full(-std::log(2.0), 1.0).value, std::log(2.0), 1e-9);
    ck.rel("Li2(1/2)", polylog_full(-std::log(2.0), 2.0).value,
           kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0), 1e-9);
    ck.rel("zeta(2,3/2)", hurwitz_zeta(2.0, 0.5).value, kPi * kPi / 2.0 - 4.0, 1e-9);
    for (Complex k : {Complex(-0.5, 0.0), Complex(-0.9, 0.2)})
        for (long n : {3L, 10L})
            ck.rel(label("H_k(n) k=%g%+gi", k) + " n=" + std::to_string(n),
                   harmonic_partial(k, n).value, partial_sum_direct({0.0, k, 0.0, n, 1}), 1e-9);
}

}  // namespace

int run_verify(const std::string& suite, std::ostream& out) {
    Checker ck(out);
    const bool all = suite == "all";
    if (all || suite == "quadrature") suite_quadrature(ck);
    if (all || suite == "gamma") suite_gamma(ck);
    if (all || suite == "identities") suite_identities(ck);
    out << (ck.failed() == 0 ? "verify: all " : "verify: ") << ck.total() - ck.failed() << '/'
        << ck.total() << " checks passed";
    if (ck.failed()) out << ", " << ck.failed() << " failed";
    out << '\n';
    return ck.failed() == 0 ? kOk : kUsage;
}

}  // namespace lerch::cli
