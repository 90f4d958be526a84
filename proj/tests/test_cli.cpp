#include "test_support.hpp"

#include <cli.hpp>
#include <cotzeta/closedform.hpp>
#include <cotzeta/errors.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cotzeta;
using namespace cotzeta::testing;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Rational field(const nlohmann::json &j)
{
    return parse_rational(j.get<std::string>());
}

} // namespace

TEST_CASE("alpha descriptors")
{
    CHECK(cli::parse_alpha("sqrt:2") == sqrt_of(2));
    CHECK(cli::parse_alpha("golden") == quad(1, 1, 2, 5));
    CHECK(cli::parse_alpha("quad:2,1,5,3") == quad(2, 1, 5, 3));
    CHECK(cli::parse_alpha("sqrt:8") == quad(0, 2, 1, 2));
    CHECK_THROWS_AS(cli::parse_alpha("quad:1,0,2,4"), InputError);
    CHECK_THROWS_AS(cli::parse_alpha("quad:1,0,2,5"), InputError);
    CHECK_THROWS_AS(cli::parse_alpha("sqrt:9"), InputError);
    CHECK_THROWS_AS(cli::parse_alpha("sqrt:x"), InputError);
    CHECK_THROWS_AS(cli::parse_alpha("quad:1,2,3"), InputError);
    CHECK_THROWS_AS(cli::parse_alpha("pi"), InputError);
}

TEST_CASE("matrix and grid parsing")
{
    CHECK(cli::parse_matrix("3,4,2,3") == UniMat(3, 4, 2, 3));
    CHECK_THROWS_AS(cli::parse_matrix("2,8,1,2"), InputError);
    CHECK_THROWS_AS(cli::parse_matrix("3,-4,-2,3"), InputError);
    CHECK_THROWS_AS(cli::parse_matrix("1,0,1"), InputError);
    CHECK(cli::parse_grid("").empty());
    CHECK(cli::parse_grid("6,12,24") == std::vector<long>{6, 12, 24});
    CHECK_THROWS_AS(cli::parse_grid("6,,12"), InputError);
    CHECK_THROWS_AS(cli::parse_grid("0"), InputError);
    CHECK_THROWS_AS(cli::parse_grid("3/2"), InputError);
}

TEST_CASE("unit")
{
    Run r = run({"unit", "--alpha", "sqrt:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("V = (3,4;2,3)") != std::string::npos);
    CHECK(r.out.find("eta = 3 + 2*sqrt(2)") != std::string::npos);
    CHECK(r.out.find("disc = 8") != std::string::npos);
    CHECK(r.out.find("(t, u) = (6, 2)") != std::string::npos);

    r = run({"unit", "--alpha", "golden", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["matrix"] == nlohmann::json({"2", "1", "1", "1"}));
    CHECK(j["exact"]["coeff"]["a"] == "3/2");
    CHECK(j["exact"]["coeff"]["b"] == "1/2");

    CHECK(run({"unit", "--alpha", "quad:1,0,2,4"}).code == 2);
}

TEST_CASE("value")
{
    Run r = run({"value", "--alpha", "sqrt:2", "--m", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "value");
    CHECK(j["exact"]["d"] == 2);
    CHECK(j["exact"]["pi_power"] == 3);
    CHECK(j["exact"]["coeff"]["a"] == "0/1");
    CHECK(j["exact"]["coeff"]["b"] == "1/360");
    CHECK(j["precision_bits"] == 96);
    CHECK(j["decimal"].get<std::string>().rfind("1.2180415833325731174865", 0) == 0);
    CHECK(j["checks"].size() == 8);

    r = run({"value", "--alpha", "sqrt:2", "--m", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["exact"]["pi_power"] == 5);

    CHECK(run({"value", "--alpha", "sqrt:2", "--m", "1"}).code == 2);
    CHECK(run({"value", "--alpha", "sqrt:2", "--prec", "16"}).code == 2);
    CHECK(run({"value", "--alpha", "sqrt:2", "--matrix", "1,0,1,1"}).code == 2);
    CHECK(run({"value", "--alpha", "sqrt:2", "--format", "csv"}).code == 2);
    CHECK(run({"value", "--alpha", "sqrt:2", "--format", "xml"}).code == 2);
    CHECK(run({"value", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("property: value JSON round-trips through its exact fields")
{
    const std::vector<std::string> alphas{"sqrt:2", "golden", "quad:2,1,5,3", "sqrt:7", "quad:-1,-1,3,7"};
    for (const auto &alpha : alphas) {
        for (const std::string prec : {"64", "96", "200"}) {
            const Run r = run({"value", "--alpha", alpha, "--m", "3", "--prec", prec, "--format", "json"});
            REQUIRE(r.code == 0);
            const auto j = nlohmann::json::parse(r.out);
            const QuadElem coeff =
                QuadElem::from_parts(j["exact"]["d"].get<long>(), field(j["exact"]["coeff"]["a"]),
                                     field(j["exact"]["coeff"]["b"]));
            const PiValue v{coeff, j["exact"]["pi_power"].get<long>()};
            CHECK(v.to_real(j["precision_bits"].get<long>()).to_string() == j["decimal"].get<std::string>());
            CHECK(v == ba_value(cli::parse_alpha(alpha), 3));
        }
    }
}

TEST_CASE("precision from the environment")
{
    ::setenv("COTZETA_PREC", "128", 1);
    Run r = run({"value", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["precision_bits"] == 128);
    r = run({"value", "--format", "json", "--prec", "64"});
    CHECK(nlohmann::json::parse(r.out)["precision_bits"] == 64);
    ::setenv("COTZETA_PREC", "lots", 1);
    CHECK(run({"value"}).code == 2);
    ::unsetenv("COTZETA_PREC");
    r = run({"value", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["precision_bits"] == 96);
}

TEST_CASE("series and table")
{
    Run r = run({"series", "--alpha", "sqrt:2", "--m", "2", "--k", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("k,xi_k,abs_err\n1,2.76226416019682080892188", 0) == 0);

    r = run({"table", "--alpha", "sqrt:2", "--grid", ""});
    CHECK(r.code == 0);
    CHECK(r.out == "k,xi_k,abs_err\n");

    r = run({"table", "--alpha", "sqrt:2", "--m", "2", "--grid", "100,1000,10000", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 3);
    const HighPrecReal first(j["rows"][0]["abs_err"].get<std::string>(), 96);
    const HighPrecReal last(j["rows"][2]["abs_err"].get<std::string>(), 96);
    CHECK(last < first);

    CHECK(run({"series", "--alpha", "sqrt:2"}).code == 2);
    CHECK(run({"table", "--grid", "10,-1"}).code == 2);
    CHECK(run({"series", "--alpha", "quad:1,0,3,2", "--k", "5"}).code == 2);
}

TEST_CASE("json and csv output is byte identical across runs")
{
    const std::vector<std::vector<std::string>> cases{
        {"value", "--alpha", "golden", "--m", "4", "--format", "json"},
        {"table", "--alpha", "sqrt:3", "--grid", "5,50,500", "--format", "csv"},
        {"table", "--alpha", "sqrt:3", "--grid", "5,50", "--format", "json"},
        {"verify", "thm1", "--alpha", "sqrt:2", "--matrix", "1,0,1,1", "--seed", "11", "--format", "json"},
    };
    for (const auto &args : cases) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--out writes the report to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "cotzeta_cli_out.csv";
    const Run r = run({"table", "--grid", "3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().rfind("k,xi_k,abs_err\n3,", 0) == 0);
    std::filesystem::remove(path);
    CHECK(run({"table", "--grid", "3", "--out", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("verify suites")
{
    CHECK(run({"verify", "deform2", "--alpha", "sqrt:2", "--matrix", "3,4,2,3", "--m", "2", "--grid", "6,12,24,48"})
              .code == 0);
    CHECK(run({"verify", "deform1", "--alpha", "golden", "--prec", "128"}).code == 0);
    CHECK(run({"verify", "thm1", "--alpha", "sqrt:2", "--matrix", "1,0,1,1"}).code == 0);
    CHECK(run({"verify", "ba", "--alpha", "sqrt:2", "--k", "2000"}).code == 0);
    CHECK(run({"verify", "lerch", "--alpha", "sqrt:2", "--m", "2", "--k", "100000"}).code == 0);
    CHECK(run({"verify", "lemma1", "--q", "2", "--x", "1/3"}).code == 0);
    CHECK(run({"verify", "lemma1", "--q", "1", "--x", "4", "--grid", "1,10,1000"}).code == 0);
    CHECK(run({"verify", "bernoulli", "--n", "30"}).code == 0);

    const Run text = run({"verify", "bernoulli"});
    CHECK(text.out.find("[PASS] reflection") != std::string::npos);
    CHECK(text.out.find("\nPASS\n") != std::string::npos);

    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "lemma1"}).code == 2);
    CHECK(run({"verify", "deform2", "--m", "1"}).code == 2);
}

TEST_CASE("verify reports failures with exit code 1")
{
    // One term is nowhere near the closed form.
    const Run ba = run({"verify", "ba", "--alpha", "quad:1,1,1,2", "--k", "1", "--m", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(ba.out);
    CHECK(ba.code == 1);
    CHECK(j["checks"].back()["pass"] == false);

    const Run reciprocity = run({"verify", "lerch", "--alpha", "sqrt:2", "--k", "1"});
    CHECK(reciprocity.code == 1);
}

TEST_CASE("bernoulli command")
{
    Run r = run({"bernoulli", "--n", "12", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["number"] == "-691/2730");
    CHECK(j["polynomial"].size() == 13);
    CHECK(j["polynomial"].back() == "1/1");

    r = run({"bernoulli", "--n", "2"});
    CHECK(r.out.find("B_2 = 1/6") != std::string::npos);
    CHECK(run({"bernoulli"}).code == 2);
    CHECK(run({"bernoulli", "--n", "-1"}).code == 2);
}

TEST_CASE("help exits cleanly")
{
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
