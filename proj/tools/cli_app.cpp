#include "cli_app.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lerch/domain.hpp"
#include "lerch/errors.hpp"
#include "lerch/lerch.hpp"
#include "lerch/oracle.hpp"
#include "lerch/polylog.hpp"

namespace lerch::cli {

namespace {

using json = nlohmann::ordered_json;

double parse_real(std::string_view s, const std::string& whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
        throw std::invalid_argument("malformed complex literal '" + whole + "'");
    return x;
}

// Coefficient of i: "", "+" and "-" stand for 1, 1 and -1.
double parse_imag(std::string_view s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, whole);
}

const std::map<std::string, std::vector<std::string>>& function_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"lerch-partial", {"m", "k", "b", "n"}},
        {"lerch-full", {"m", "k", "b"}},
        {"polylog-partial", {"m", "k", "n"}},
        {"polylog-full", {"m", "k"}},
        {"harmonic", {"k", "n"}},
        {"hp", {"k", "b", "n"}},
        {"zeta", {"k"}},
        {"hurwitz", {"k", "b"}},
    };
    return table;
}

Method to_method(const std::string& name) {
    if (name == "integer") return Method::IntegerK;
    if (name == "ac") return Method::AC;
    return Method::Auto;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

EvalResult dispatch(const Request& req) {
    const auto& p = req.params;
    const Method method = to_method(req.method);
    const EvalOptions& opt = req.options;
    const std::string& fn = req.fn;
    if (fn == "lerch-partial") return lerch_partial(*p.m, *p.k, *p.b, *p.n, method, opt);
    if (fn == "lerch-full") return lerch_full(*p.m, *p.k, *p.b, method, opt);
    if (fn == "polylog-partial") return polylog_partial(*p.m, *p.k, *p.n, method, opt);
    if (fn == "polylog-full") return polylog_full(*p.m, *p.k, method, opt);
    if (fn == "harmonic") return harmonic_partial(*p.k, *p.n, opt);
    if (fn == "hp") return hp_partial(*p.k, *p.b, *p.n, opt);
    if (fn == "zeta") return zeta(*p.k, opt);
    if (fn == "hurwitz") return hurwitz_zeta(*p.k, *p.b, opt);
    throw std::invalid_argument("unknown function " + fn);
}

EvalResult dispatch_oracle(const Request& req) {
    const auto& p = req.params;
    const std::string& fn = req.fn;
    SeriesSpec spec;
    spec.m = p.m.value_or(0.0);
    spec.k = *p.k;
    spec.b = p.b.value_or(0.0);
    spec.n = p.n;
    if (fn == "lerch-full") spec.start_index = 0;
    if (fn == "zeta" || fn == "polylog-full") spec.b = 0.0;
    if (fn == "zeta" || fn == "harmonic" || fn == "hp" || fn == "hurwitz") spec.m = 0.0;

    EvalResult r;
    r.variant_used = Variant::Oracle;
    if (spec.n) {
        r.value = partial_sum_direct(spec);
        return r;
    }
    const OracleResult o = full_series_direct(spec);
    r.value = o.value;
    r.abs_err_estimate = o.tail_bound;
    if (!o.converged) r.warnings.push_back("oracle-not-converged");
    return r;
}

template <typename F>
Outcome guarded(const Request& req, F&& body) {
    Outcome out;
    out.method = req.method;
    try {
        EvalResult r = body();
        out.method = std::string(to_string(r.variant_used));
        out.status.warnings = r.warnings;
        out.result = std::move(r);
    } catch (const DomainError& e) {
        out.code = kDomain;
        out.status = e.status();
        if (out.status.valid) out.status.reject("domain", e.what());
        out.error = e.what();
    } catch (const OracleUnavailable& e) {
        out.code = kDomain;
        out.status.reject("oracle-region", e.what());
        out.error = e.what();
    } catch (const std::invalid_argument& e) {
        out.code = kUsage;
        out.error = e.what();
    } catch (const std::exception& e) {
        // PoleError, NumericalError, IntegrandError
        out.code = kNumerical;
        out.error = e.what();
    }
    return out;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {parse_real(s, text), 0.0};
    const std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not part of an exponent.
    for (size_t pos = body.size(); pos-- > 1;) {
        const char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E')
            return {parse_real(body.substr(0, pos), text), parse_imag(body.substr(pos), text)};
    }
    return {0.0, parse_imag(body, text)};
}

bool known_function(const std::string& fn) { return function_table().count(fn) > 0; }

std::vector<std::string> function_params(const std::string& fn) {
    const auto it = function_table().find(fn);
    if (it == function_table().end()) throw std::invalid_argument("unknown function '" + fn + "'");
    return it->second;
}

void validate_request(const Request& req) {
    static const std::vector<std::string> methods = {"auto", "integer", "ac", "oracle"};
    if (std::find(methods.begin(), methods.end(), req.method) == methods.end())
        throw std::invalid_argument("unknown method '" + req.method + "'");
    for (const auto& name : function_params(req.fn)) {
        const bool have = name == "m"   ? req.params.m.has_value()
                          : name == "k" ? req.params.k.has_value()
                          : name == "b" ? req.params.b.has_value()
                                        : req.params.n.has_value();
        if (!have) throw std::invalid_argument("--fn " + req.fn + " requires --" + name);
    }
    if (req.params.n && *req.params.n < 1) throw std::invalid_argument("--n must be >= 1");
    req.options.quad.validate();
}

Outcome evaluate(const Request& req) {
    if (req.method == "oracle") return evaluate_oracle(req);
    return guarded(req, [&] { return dispatch(req); });
}

Outcome evaluate_oracle(const Request& req) {
    return guarded(req, [&] { return dispatch_oracle(req); });
}

std::string to_json(const Request& req, const Outcome& out) {
    json j;
    j["function"] = req.fn;
    json params = json::object();
    for (const auto& name : function_params(req.fn)) {
        if (name == "m") params["m"] = complex_json(*req.params.m);
        if (name == "k") params["k"] = complex_json(*req.params.k);
        if (name == "b") params["b"] = complex_json(*req.params.b);
        if (name == "n") params["n"] = *req.params.n;
    }
    j["params"] = params;
    if (out.result) {
        j["value"] = complex_json(out.result->value);
        j["abs_err_estimate"] = out.result->abs_err_estimate;
    } else {
        j["value"] = nullptr;
        j["abs_err_estimate"] = nullptr;
    }
    j["method"] = out.method;
    json violations = json::array();
    for (const auto& v : out.status.violations)
        violations.push_back({{"tag", v.tag}, {"message", v.message}});
    j["domain"] = {{"valid", out.status.valid},
                   {"violations", violations},
                   {"warnings", out.status.warnings}};
    const QuadStats q = out.result ? out.result->quad : QuadStats{};
    j["quadrature"] = {{"levels", q.levels}, {"nodes", q.nodes}};
    return j.dump(2);
}

std::string to_plain(const Request& req, const Outcome& out) {
    std::ostringstream os;
    os << "function          " << req.fn << '\n';
    for (const auto& name : function_params(req.fn)) {
        os << "  " << name << std::string(16 - name.size(), ' ');
        if (name == "m") os << fmt_complex(*req.params.m);
        if (name == "k") os << fmt_complex(*req.params.k);
        if (name == "b") os << fmt_complex(*req.params.b);
        if (name == "n") os << *req.params.n;
        os << '\n';
    }
    if (out.result) {
        os << "value             " << fmt_complex(out.result->value) << '\n';
        os << "abs_err_estimate  " << fmt17(out.result->abs_err_estimate) << '\n';
    } else {
        os << "value             (none)\n";
    }
    os << "method            " << out.method << '\n';
    os << "domain            " << (out.status.valid ? "valid" : "rejected") << '\n';
    for (const auto& v : out.status.violations)
        os << "  violation       " << v.tag << ": " << v.message << '\n';
    for (const auto& w : out.status.warnings) os << "  warning         " << w << '\n';
    if (out.result)
        os << "quadrature        levels " << out.result->quad.levels << ", nodes "
           << out.result->quad.nodes << '\n';
    return os.str();
}

long Axis::count() const { return long(std::floor((stop - start) / step + 1e-9)) + 1; }

Axis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
    if (parts.size() != 4) throw std::invalid_argument("axis must be param.re|im:start:stop:step");
    Axis a;
    const std::string& comp = parts[0];
    const auto dot = comp.find('.');
    if (dot == std::string::npos) throw std::invalid_argument("axis parameter needs .re or .im");
    a.param = comp.substr(0, dot);
    const std::string part = comp.substr(dot + 1);
    if (a.param != "m" && a.param != "k" && a.param != "b")
        throw std::invalid_argument("axis parameter must be m, k or b");
    if (part != "re" && part != "im") throw std::invalid_argument("axis component must be re or im");
    a.imag = part == "im";
    a.start = parse_real(parts[1], text);
    a.stop = parse_real(parts[2], text);
    a.step = parse_real(parts[3], text);
    if (!(a.step > 0.0)) throw std::invalid_argument("axis step must be positive");
    if (a.stop < a.start) throw std::invalid_argument("axis stop must not be below start");
    return a;
}

namespace {

void set_component(Params& p, const Axis& a, double x) {
    std::optional<Complex>& slot = a.param == "m" ? p.m : a.param == "k" ? p.k : p.b;
    Complex z = slot.value_or(0.0);
    if (a.imag)
        z.imag(x);
    else
        z.real(x);
    slot = z;
}

struct SweepRow {
    double a1 = 0.0, a2 = 0.0;
    std::optional<Complex> formula, oracle;
    std::string flag;
};

SweepRow sweep_point(Request req, const Axis& ax1, const std::optional<Axis>& ax2, long i,
                     long j) {
    SweepRow row;
    row.a1 = ax1.at(i);
    set_component(req.params, ax1, row.a1);
    if (ax2) {
        row.a2 = ax2->at(j);
        set_component(req.params, *ax2, row.a2);
    }
    const Outcome f = evaluate(req);
    if (f.code == kDomain) {
        row.flag = "domain";
        return row;
    }
    if (f.result) row.formula = f.result->value;
    const Outcome o = evaluate_oracle(req);
    if (o.result) row.oracle = o.result->value;
    if (f.code != kOk)
        row.flag = "numerical-error";
    else if (!o.result)
        row.flag = "no-oracle";
    else
        row.flag = "ok";
    return row;
}

int cmd_sweep(const Request& base, const std::string& axis1, const std::string& axis2,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    const Axis ax1 = parse_axis(axis1);
    std::optional<Axis> ax2;
    if (!axis2.empty()) ax2 = parse_axis(axis2);
    const long n1 = ax1.count();
    const long n2 = ax2 ? ax2->count() : 1;
    if (double(n1) * double(n2) > 1e6) throw std::invalid_argument("sweep exceeds 1e6 grid points");
    if (base.method == "oracle") throw std::invalid_argument("sweep compares against the oracle; use another method");

    // Axes may supply the only value of a parameter.
    Request probe = base;
    set_component(probe.params, ax1, ax1.start);
    if (ax2) set_component(probe.params, *ax2, ax2->start);
    validate_request(probe);

    std::ofstream file;
    std::ostream* csv = &out;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << out_path << '\n';
            return kUsage;
        }
        csv = &file;
    }

    const long total = n1 * n2;
    std::vector<SweepRow> rows(static_cast<size_t>(total));
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx)
        rows[idx] = sweep_point(probe, ax1, ax2, idx / n2, idx % n2);

    *csv << "axis1,axis2,formula_re,formula_im,oracle_re,oracle_im,rel_err,domain_flag\n";
    std::vector<double> errs;
    std::map<std::string, long> flags;
    for (const auto& r : rows) {
        *csv << fmt17(r.a1) << ',' << (ax2 ? fmt17(r.a2) : "") << ',';
        if (r.formula)
            *csv << fmt17(r.formula->real()) << ',' << fmt17(r.formula->imag()) << ',';
        else
            *csv << ",,";
        if (r.oracle && r.flag != "domain")
            *csv << fmt17(r.oracle->real()) << ',' << fmt17(r.oracle->imag()) << ',';
        else
            *csv << ",,";
        if (r.flag == "ok") {
            const double e = std::abs(*r.formula - *r.oracle) / std::abs(*r.oracle);
            errs.push_back(e);
            *csv << fmt17(e);
        }
        *csv << ',' << r.flag << '\n';
        ++flags[r.flag];
    }
    csv->flush();
    if (!*csv) {
        err << "error: writing the sweep output failed\n";
        return kUsage;
    }

    std::ostream& summary = out_path.empty() ? err : out;
    summary << "sweep " << base.fn << ": " << total << " points";
    for (const char* f : {"ok", "domain", "no-oracle", "numerical-error"})
        summary << ", " << f << ' ' << flags[f];
    if (!errs.empty()) {
        std::sort(errs.begin(), errs.end());
        const size_t h = errs.size() / 2;
        const double median = errs.size() % 2 ? errs[h] : 0.5 * (errs[h - 1] + errs[h]);
        summary << ", max_rel_err " << fmt17(errs.back()) << ", median_rel_err " << fmt17(median);
    }
    summary << '\n';
    return kOk;
}

struct CliInputs {
    std::string fn, m, k, b, method = "auto", format = "plain", out_path, axis1, axis2, suite = "all";
    long n = 0;
    double tol = 0.0;
};

Request build_request(const CliInputs& in, const CLI::App& sub) {
    Request req;
    req.fn = in.fn;
    req.method = in.method;
    if (!known_function(in.fn)) throw std::invalid_argument("unknown function '" + in.fn + "'");
    if (sub.count("--m")) req.params.m = parse_complex(in.m);
    if (sub.count("--k")) req.params.k = parse_complex(in.k);
    if (sub.count("--b")) req.params.b = parse_complex(in.b);
    if (sub.count("--n")) req.params.n = in.n;
    if (sub.count("--tol")) req.options.quad.rel_tol = in.tol;
    if (const char* env = std::getenv("LERCH_MAX_QUAD_LEVEL")) {
        const std::string_view s(env);
        int level = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), level);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("LERCH_MAX_QUAD_LEVEL must be an integer");
        req.options.quad.max_level = level;
    }
    return req;
}

void add_eval_options(CLI::App& sub, CliInputs& in) {
    sub.add_option("--fn", in.fn, "lerch-partial, lerch-full, polylog-partial, polylog-full, "
                                  "harmonic, hp, zeta, hurwitz")
        ->required();
    sub.add_option("--m", in.m, "complex m (z = e^m)");
    sub.add_option("--k", in.k, "complex order k");
    sub.add_option("--b", in.b, "complex shift b");
    sub.add_option("--n", in.n, "number of terms of a partial sum");
    sub.add_option("--method", in.method, "auto, integer, ac or oracle");
    sub.add_option("--tol", in.tol, "relative quadrature tolerance");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lerch transcendent, polylogarithm and Hurwitz zeta evaluator", "lerch"};
    app.require_subcommand(1);
    CliInputs in;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
    add_eval_options(*eval, in);
    eval->add_option("--format", in.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    eval->add_option("--out", in.out_path, "write the record to this file");

    CLI::App* sweep = app.add_subcommand("sweep", "compare a formula with the oracle on a grid");
    add_eval_options(*sweep, in);
    sweep->add_option("--axis1", in.axis1, "param.re|im:start:stop:step")->required();
    sweep->add_option("--axis2", in.axis2, "param.re|im:start:stop:step");
    sweep->add_option("--out", in.out_path, "CSV output path (default: standard output)");

    CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
    verify->add_option("--suite", in.suite, "all, quadrature, identities or gamma")
        ->check(CLI::IsMember({"all", "quadrature", "identities", "gamma"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (verify->parsed()) return run_verify(in.suite, out);
        if (sweep->parsed()) {
            const Request req = build_request(in, *sweep);
            return cmd_sweep(req, in.axis1, in.axis2, in.out_path, out, err);
        }
        const Request req = build_request(in, *eval);
        validate_request(req);
        const Outcome res = evaluate(req);
        if (res.code == kUsage) throw std::invalid_argument(res.error);
        const std::string text = in.format == "json" ? to_json(req, res) + "\n" : to_plain(req, res);
        if (!in.out_path.empty()) {
            std::ofstream file(in.out_path, std::ios::binary);
            file << text;
            if (!file) {
                err << "error: cannot write " << in.out_path << '\n';
                return kUsage;
            }
        } else {
            out << text;
        }
        if (res.code != kOk) err << "error: " << res.error << '\n';
        return res.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }
}

}  // namespace lerch::cli
