#pragma once

// Command-line front end: eval, sweep and verify subcommands.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lerch/domain_status.hpp"
#include "lerch/options.hpp"
#include "lerch/types.hpp"

namespace lerch::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kNumerical = 3 };

/// Parses "a", "ai", "a+bi", "a-bi" (also "i", "-i"); components may use
/// scientific notation. Throws std::invalid_argument.
Complex parse_complex(const std::string& text);

struct Params {
    std::optional<Complex> m, k, b;
    std::optional<long> n;
};

struct Request {
    std::string fn;
    Params params;
    std::string method = "auto";
    EvalOptions options;
};

/// Outcome of one evaluation as reported by eval and sweep.
struct Outcome {
    int code = kOk;
    std::optional<EvalResult> result;
    DomainStatus status;
    std::string method;   // variant used, or the requested method on failure
    std::string error;
};

bool known_function(const std::string& fn);

/// Names of the parameters fn reads, in output order.
std::vector<std::string> function_params(const std::string& fn);

/// Throws std::invalid_argument on a missing parameter or an unknown fn/method.
void validate_request(const Request& req);

/// Runs the request; never throws for domain or numerical failures.
Outcome evaluate(const Request& req);

/// The same request answered by direct summation.
Outcome evaluate_oracle(const Request& req);

std::string to_json(const Request& req, const Outcome& out);
std::string to_plain(const Request& req, const Outcome& out);

/// One sweep axis: "m.re:start:stop:step".
struct Axis {
    std::string param;   // m, k or b
    bool imag = false;
    double start = 0.0, stop = 0.0, step = 1.0;
    long count() const;
    double at(long i) const { return start + double(i) * step; }
};

Axis parse_axis(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Built-in verification suites: all, quadrature, identities, gamma.
int run_verify(const std::string& suite, std::ostream& out);

}  // namespace lerch::cli
