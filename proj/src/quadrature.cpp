#include "lerch/quadrature.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "lerch/errors.hpp"

namespace lerch {

namespace {

constexpr int kMaxLevel = 16;
constexpr double kTMax = 6.5;
constexpr long kParallelThreshold = 4096;

// Abscissa at t >= 0 and its mirror at -t share the weight; the mirror
// swaps u and v.
struct Node {
    double u;
    double v;
    double w;
    bool origin;
};

Node make_node(double t) {
    const double s = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * s);
    const double d = 1.0 + e;
    return {1.0 / d, e / d, std::numbers::pi * std::cosh(t) * e / (d * d), t == 0.0};
}

// Level 0 holds t = 0, 1, ..., 6; level L >= 1 holds the odd multiples of 2^-L.
const std::vector<Node>& level_nodes(int level) {
    static std::array<std::once_flag, kMaxLevel + 1> once;
    static std::array<std::vector<Node>, kMaxLevel + 1> tables;
    std::call_once(once[level], [level] {
        std::vector<Node>& out = tables[level];
        if (level == 0) {
            for (int j = 0; j <= int(kTMax); ++j) out.push_back(make_node(double(j)));
        } else {
            const double h = std::ldexp(1.0, -level);
            for (long j = 1;; j += 2) {
                const double t = double(j) * h;
                if (t > kTMax) break;
                out.push_back(make_node(t));
            }
        }
    });
    return tables[level];
}

struct LevelSum {
    Complex sum;
    long nodes;
};

[[noreturn]] void rethrow_first(std::exception_ptr err) { std::rethrow_exception(err); }

// Evaluates every node of one level into a buffer, then sums it in index
// order. The parallel flag only changes who fills the buffer.
LevelSum eval_level(const Integrand& f, const std::vector<Node>& nodes, double clip,
                    bool parallel, std::vector<Complex>& buf) {
    const long n = long(nodes.size());
    buf.assign(2 * n, Complex(0.0, 0.0));
    std::exception_ptr err;
    long err_index = std::numeric_limits<long>::max();
    const bool go_parallel = parallel && 2 * n >= kParallelThreshold && !omp_in_parallel();

#pragma omp parallel for schedule(static) if (go_parallel)
    for (long i = 0; i < 2 * n; ++i) {
        const Node& nd = nodes[i / 2];
        const bool mirror = (i % 2) == 1;
        if (mirror && nd.origin) continue;
        const double u = mirror ? nd.v : nd.u;
        const double v = mirror ? nd.u : nd.v;
        if (u < clip || v < clip || nd.w == 0.0) continue;
        try {
            const Complex y = f(u, v);
            if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
                throw IntegrandError("integrand is not finite", u);
            buf[i] = nd.w * y;
        } catch (...) {
#pragma omp critical(lerch_quad_error)
            if (i < err_index) {
                err_index = i;
                err = std::current_exception();
            }
        }
    }
    if (err) rethrow_first(err);

    LevelSum out{0.0, 0};
    for (long i = 0; i < 2 * n; ++i) {
        const Node& nd = nodes[i / 2];
        if ((i % 2) == 1 && nd.origin) continue;
        const double u = (i % 2) ? nd.v : nd.u;
        const double v = (i % 2) ? nd.u : nd.v;
        if (u < clip || v < clip || nd.w == 0.0) continue;
        out.sum += buf[i];
        ++out.nodes;
    }
    return out;
}

QuadResult integrate_impl(const Integrand& f, const QuadConfig& cfg, bool parallel) {
    cfg.validate();
    QuadResult r;
    std::vector<Complex> buf;
    Complex total = 0.0;
    Complex prev = 0.0;
    const int check_from = std::min(4, cfg.max_level);
    for (int level = 0; level <= cfg.max_level; ++level) {
        const LevelSum ls = eval_level(f, level_nodes(level), cfg.endpoint_clip, parallel, buf);
        total += ls.sum;
        r.nodes_evaluated += ls.nodes;
        const Complex est = std::ldexp(1.0, -level) * total;
        r.levels_used = level;
        r.value = est;
        if (level > 0) r.abs_err_estimate = std::abs(est - prev);
        prev = est;
        if (level >= check_from &&
            r.abs_err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(est))) {
            r.converged = true;
            break;
        }
    }
    return r;
}

}  // namespace

void QuadConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (max_level < 3 || max_level > kMaxLevel)
        throw std::invalid_argument("quadrature max_level must lie in [3, 16]");
    if (!(endpoint_clip > 0.0) || !(endpoint_clip < 0.5))
        throw std::invalid_argument("quadrature endpoint_clip must lie in (0, 0.5)");
}

long quad_level_size(int level) {
    if (level < 0 || level > kMaxLevel) throw std::invalid_argument("level out of range");
    return long(level_nodes(level).size());
}

QuadResult integrate_01(const Integrand& f, const QuadConfig& cfg) {
    return integrate_impl(f, cfg, true);
}

QuadResult integrate_01_serial(const Integrand& f, const QuadConfig& cfg) {
    return integrate_impl(f, cfg, false);
}

QuadResult integrate_01(const Integrand1& f, const QuadConfig& cfg) {
    return integrate_impl([&f](double u, double) { return f(u); }, cfg, true);
}

QuadResult integrate_01_serial(const Integrand1& f, const QuadConfig& cfg) {
    return integrate_impl([&f](double u, double) { return f(u); }, cfg, false);
}

QuadResult integrate_01_split(const Integrand& f, std::vector<double> breakpoints,
                              const QuadConfig& cfg, bool parallel) {
    std::vector<double> cuts{0.0};
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double b : breakpoints)
        if (b > 1e-8 && b < 1.0 - 1e-8 && b - cuts.back() > 1e-8) cuts.push_back(b);
    if (cuts.size() == 1) return integrate_impl(f, cfg, parallel);
    cuts.push_back(1.0);

    QuadResult total;
    total.converged = true;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1], len = b - a, vb = 1.0 - b;
        QuadResult part;
        try {
            part = integrate_impl(
                [&](double ul, double vl) { return len * f(a + len * ul, vb + len * vl); }, cfg,
                parallel);
        } catch (const IntegrandError& e) {
            throw IntegrandError(e.what(), a + len * e.abscissa());
        }
        total.value += part.value;
        total.abs_err_estimate += part.abs_err_estimate;
        total.levels_used = std::max(total.levels_used, part.levels_used);
        total.nodes_evaluated += part.nodes_evaluated;
        total.converged = total.converged && part.converged;
    }
    return total;
}

}  // namespace lerch
