#include "pathrisk/cli.hpp"
#include "pathrisk/series.hpp"
#include "support/golden.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

using pathrisk::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int code = run(args, o, e);
    return {code, o.str(), e.str()};
}

std::string fixture(const std::string& name) { return std::string(PATHRISK_GOLDEN_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pathrisk_test_" + name);
}

}  // namespace

TEST_CASE("golden outputs match byte for byte") {
    const auto outcomes = golden::run_all(PATHRISK_GOLDEN_DIR);
    REQUIRE(outcomes.size() >= 10);
    for (const auto& o : outcomes) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.matched);
    }
}

TEST_CASE("format_number uses 10 significant digits") {
    using pathrisk::cli::format_number;
    CHECK(format_number(0.08) == "0.08");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(format_number(123456789012.0) == "1.23456789e+11");
    CHECK(format_number(3.0) == "3");
}

TEST_CASE("paths reports the worked example") {
    const auto r = invoke({"paths", "-i", fixture("example.csv")});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string l; std::getline(lines, l);) rows.push_back(l);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "date,path,running_max,drawdown,peak_time,duration");
    CHECK(rows[3].find(",0.08,") != std::string::npos);

    const auto pct = invoke({"paths", "-i", fixture("example.csv"), "--percent"});
    CHECK(pct.out.find("," + pathrisk::cli::format_number(1 - std::exp(-0.08)) + ",") != std::string::npos);
    CHECK(std::fabs(1 - std::exp(-0.08) - 0.0769) < 5e-5);
}

TEST_CASE("output is deterministic and --output writes a file") {
    const auto a = invoke({"risk", "-i", fixture("series.csv"), "--window", "20"});
    const auto b = invoke({"risk", "-i", fixture("series.csv"), "--window", "20"});
    CHECK(a.out == b.out);

    const auto path = temp_file("risk.csv");
    const auto c = invoke({"risk", "-i", fixture("series.csv"), "--window", "20", "-o", path.string()});
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    CHECK(golden::read_file(path.string()) == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("simulate then fit round-trips kappa") {
    const auto path = temp_file("sim.csv");
    const auto sim = invoke({"simulate", "--kappa", "0.8", "--n", "10000", "--seed", "11", "-o", path.string()});
    REQUIRE(sim.code == 0);
    const auto again = invoke({"simulate", "--kappa", "0.8", "--n", "10000", "--seed", "11"});
    CHECK(again.out == golden::read_file(path.string()));

    const auto fit = invoke({"fit", "-i", path.string(), "--format", "json"});
    REQUIRE(fit.code == 0);
    const auto pos = fit.out.find("\"kappa_hat\": ");
    REQUIRE(pos != std::string::npos);
    const double k = std::stod(fit.out.substr(pos + 13));
    CHECK(std::fabs(k - 0.8) <= 0.02);
    CHECK(std::fabs(k - 0.8) <= 3 * std::sqrt((1 - 0.64) / 10000));
    std::filesystem::remove(path);
}

TEST_CASE("kappa-table and kappa-corr produce one row per entry") {
    const auto t = invoke({"kappa-table", "--kappas", "0.1,0.5", "--n", "1000", "--window", "100"});
    REQUIRE(t.code == 0);
    CHECK(t.out.starts_with("kappa,volatility,expected_shortfall,ced,conditional_expected_duration,alpha,window,n\n"));
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 3);

    const auto c = invoke({"kappa-corr", "--regime-length", "300", "--repeats", "2"});
    REQUIRE(c.code == 0);
    CHECK(c.out.starts_with("measure,correlation,windows\nvolatility,"));
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 5);
}

TEST_CASE("axioms via the CLI") {
    const auto r = invoke({"axioms", "--transform", "lst", "--threshold", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(invoke({"axioms", "--transform", "nonsense"}).code == 2);
    CHECK(invoke({"axioms", "--transform", "lst"}).code == 2);
}

TEST_CASE("errors: exit codes and messages") {
    const auto bad_row = invoke({"paths", "-i", fixture("bad_row.csv")});
    CHECK(bad_row.code == 1);
    CHECK(bad_row.err.find("bad_row.csv: line 3") != std::string::npos);
    CHECK(bad_row.out.empty());

    const auto bad_value = invoke({"paths", "-i", fixture("bad_value.csv")});
    CHECK(bad_value.code == 1);
    CHECK(bad_value.err.find("line 2") != std::string::npos);

    CHECK(invoke({"paths", "-i", fixture("missing.csv")}).code == 1);

    const auto flat = invoke({"episode", "-i", fixture("rising.csv")});
    CHECK(flat.code == 1);
    CHECK(flat.err.find("no drawdown") != std::string::npos);

    const auto lst0 = invoke({"lst", "-i", fixture("example.csv"), "--threshold", "0"});
    CHECK(lst0.code == 2);

    const auto small = invoke({"risk", "-i", fixture("example.csv")});
    CHECK(small.code == 1);
    CHECK(small.err.find("at least 181") != std::string::npos);

    CHECK(invoke({"fit", "-i", fixture("empty.csv")}).code == 2);
    CHECK(invoke({"risk", "-i", fixture("series.csv"), "--alpha", "1"}).code == 2);
    CHECK(invoke({"risk", "-i", fixture("series.csv"), "--window", "1"}).code == 2);
    CHECK(invoke({"risk", "-i", fixture("series.csv"), "--window", "abc"}).code == 2);
    CHECK(invoke({"simulate", "--kappa", "1.0"}).code == 2);
    CHECK(invoke({"kappa-table", "--kappas", "0.5,-1"}).code == 2);
    CHECK(invoke({"kappa-corr", "--regime-length", "50", "--repeats", "1"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"paths"}).code == 2);
    CHECK(invoke({"paths", "-i", fixture("example.csv"), "--format", "xml"}).code == 2);

    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("kappa-corr") != std::string::npos);
}
