#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cli_app.hpp"
#include "test_support.hpp"

using namespace lerch;
using namespace lerch::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lerch");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("2") == Complex(2.0, 0.0));
    CHECK(parse_complex("-3i") == Complex(0.0, -3.0));
    CHECK(parse_complex("1+7i") == Complex(1.0, 7.0));
    CHECK(parse_complex("1.5-2.25i") == Complex(1.5, -2.25));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("1e-3-2E+2i") == Complex(1e-3, -200.0));
    CHECK(parse_complex("-0.6931471805599453") == Complex(-0.6931471805599453, 0.0));
    for (const char* bad : {"", "abc", "1+", "1+2j", "1++2i", "nan", "inf", "1e400"})
        CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
}

TEST_CASE("axis parsing") {
    const Axis a = parse_axis("m.re:-3:-0.5:0.5");
    CHECK(a.param == "m");
    CHECK(!a.imag);
    CHECK(a.count() == 6);
    CHECK(a.at(5) == doctest::Approx(-0.5));
    CHECK(parse_axis("b.im:0:1:0.1").count() == 11);
    CHECK_THROWS_AS(parse_axis("m:0:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_axis("n.re:0:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_axis("m.re:0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_axis("m.re:1:0:1"), std::invalid_argument);
}

TEST_CASE("eval examples") {
    auto r = run_cli({"eval", "--fn", "zeta", "--k", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"][0].get<double>() == doctest::Approx(1.6449340668).epsilon(1e-10));
    CHECK(j["value"][1].get<double>() == 0.0);
    CHECK(j["method"] == "zeta-integral");

    r = run_cli({"eval", "--fn", "polylog-full", "--m", "-0.6931471805599453", "--k", "1", "--format", "json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["value"][0].get<double>() == doctest::Approx(0.6931472).epsilon(1e-7));

    r = run_cli({"eval", "--fn", "polylog-full", "--m", "1+7i", "--k", "2", "--format", "json"});
    CHECK(r.code == 2);
    j = nlohmann::json::parse(r.out);
    CHECK(j["value"].is_null());
    CHECK(j["domain"]["valid"] == false);
    CHECK(j["domain"]["violations"][0]["tag"] == "m-region");
}

TEST_CASE("json layout is fixed and deterministic") {
    const std::vector<std::string> args = {"eval", "--fn", "lerch-partial", "--m=-0.5+1i", "--k", "1.5",
                                           "--b", "0.3", "--n", "7", "--format", "json"};
    const Run a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"function", "params", "value", "abs_err_estimate", "method",
                                           "domain", "quadrature"});
    CHECK(j["params"].size() == 4);
    CHECK(j["params"]["m"][0].get<double>() == -0.5);
    CHECK(j["params"]["n"] == 7);
    CHECK(j["quadrature"]["nodes"].get<long>() > 0);

    const auto z = nlohmann::ordered_json::parse(run_cli({"eval", "--fn", "zeta", "--k", "3", "--format", "json"}).out);
    CHECK(z["params"].size() == 1);
}

TEST_CASE("methods and oracle") {
    for (const char* method : {"auto", "integer", "ac", "oracle"}) {
        const Run r = run_cli({"eval", "--fn", "polylog-partial", "--m", "0.5-1i", "--k", "2", "--n", "12",
                               "--method", method, "--format", "json"});
        CHECK(r.code == 0);
    }
    Request req;
    req.fn = "lerch-full";
    req.params = {Complex(-0.7, 0.4), Complex(1.5, 0.2), Complex(0.4, 0.1), std::nullopt};
    const Outcome f = evaluate(req), o = evaluate_oracle(req);
    REQUIRE(f.result);
    REQUIRE(o.result);
    CHECK(lerch::test::rel_err(f.result->value, o.result->value) <= 1e-8);
    CHECK(o.method == "oracle");

    // The oracle has no convergent sum here.
    const Run r = run_cli({"eval", "--fn", "polylog-full", "--m", "0.5+1i", "--k", "2", "--method", "oracle",
                           "--format", "json"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out)["domain"]["violations"][0]["tag"] == "oracle-region");
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"eval", "--fn", "nope", "--k", "2"}).code == 1);
    CHECK(run_cli({"eval", "--fn", "zeta"}).code == 1);
    CHECK(run_cli({"eval", "--fn", "zeta", "--k", "2x"}).code == 1);
    CHECK(run_cli({"eval", "--fn", "zeta", "--k", "2", "--method", "fast"}).code == 1);
    CHECK(run_cli({"eval", "--fn", "zeta", "--k", "2", "--format", "xml"}).code == 1);
    CHECK(run_cli({"eval", "--fn", "harmonic", "--k", "2", "--n", "0"}).code == 1);
    const Run r = run_cli({"eval", "--fn", "zeta", "--k", "2", "--tol", "-1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("quadrature level override") {
    ::setenv("LERCH_MAX_QUAD_LEVEL", "3", 1);
    Run r = run_cli({"eval", "--fn", "zeta", "--k", "1.2+3i", "--tol", "1e-14", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["quadrature"]["levels"].get<int>() <= 3);
    ::setenv("LERCH_MAX_QUAD_LEVEL", "x", 1);
    CHECK(run_cli({"eval", "--fn", "zeta", "--k", "2"}).code == 1);
    ::setenv("LERCH_MAX_QUAD_LEVEL", "40", 1);
    CHECK(run_cli({"eval", "--fn", "zeta", "--k", "2"}).code == 1);
    ::unsetenv("LERCH_MAX_QUAD_LEVEL");
}

TEST_CASE("numerical failure exit code") {
    ::setenv("LERCH_MAX_QUAD_LEVEL", "3", 1);
    const Run r = run_cli({"eval", "--fn", "polylog-full", "--m", "-0.001+6.28i", "--k", "1.01", "--tol", "1e-15"});
    ::unsetenv("LERCH_MAX_QUAD_LEVEL");
    CHECK((r.code == 0 || r.code == 3));
    if (r.code == 3) CHECK(!r.err.empty());
}

TEST_CASE("sweep over the polylog grid") {
    const Run r = run_cli({"sweep", "--fn", "polylog-full", "--k", "2", "--axis1", "m.re:-3:-0.5:0.5", "--axis2",
                           "m.im:-3:3:1"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 43);
    CHECK(rows[0] == "axis1,axis2,formula_re,formula_im,oracle_re,oracle_im,rel_err,domain_flag");
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        REQUIRE(f.size() == 8);
        CHECK(f[7] == "ok");
        CHECK(std::stod(f[6]) <= 1e-8);
    }
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(r.err.find("max_rel_err") != std::string::npos);
}

TEST_CASE("sweep lerch-partial over k and b") {
    const Run r = run_cli({"sweep", "--fn", "lerch-partial", "--m", "0.4-0.9i", "--n", "10", "--axis1",
                           "k.re:0.1:2:0.1", "--axis2", "b.re:0.1:2:0.1"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 401);
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        CHECK(f[7] == "ok");
        CHECK(std::stod(f[6]) <= 1e-8);
    }
}

TEST_CASE("sweep flags rejected points") {
    const auto path = std::filesystem::temp_directory_path() / "lerch_sweep_test.csv";
    const Run r = run_cli({"sweep", "--fn", "polylog-full", "--k", "2", "--axis1", "m.re:-0.5:0.5:0.5", "--axis2",
                           "m.im:6:7:1", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep polylog-full") != std::string::npos);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto rows = lines(text.str());
    REQUIRE(rows.size() == 7);
    int domain = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        const bool rejected = std::stod(f[0]) >= 0.0 && std::stod(f[1]) > 2.0 * 3.141592653589793;
        if (rejected) {
            ++domain;
            CHECK(f[7] == "domain");
            CHECK(f[2].empty());
            CHECK(f[6].empty());
        }
    }
    CHECK(domain == 2);
    std::filesystem::remove(path);

    CHECK(run_cli({"sweep", "--fn", "zeta", "--axis1", "k.re:2:3:1", "--out", "/nonexistent/dir/x.csv"}).code == 1);
    CHECK(run_cli({"sweep", "--fn", "zeta", "--axis1", "k.re:0:2000000:1"}).code == 1);
}

TEST_CASE("sweep marks points without an oracle") {
    const Run r = run_cli({"sweep", "--fn", "polylog-full", "--k", "2", "--axis1", "m.re:0.5:0.5:1", "--axis2",
                           "m.im:1:1:1"});
    CHECK(r.code == 0);
    const auto f = fields(lines(r.out).at(1));
    CHECK(f[7] == "no-oracle");
    CHECK(!f[2].empty());
    CHECK(f[4].empty());
}

TEST_CASE("verify suites") {
    for (const char* suite : {"quadrature", "gamma", "identities"}) {
        const Run r = run_cli({"verify", "--suite", suite});
        INFO(r.out);
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 1);
}
