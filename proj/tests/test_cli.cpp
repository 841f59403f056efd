#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "charnum/chern.hpp"
#include "charnum/cli.hpp"
#include "charnum/cover.hpp"
#include "charnum/genera.hpp"
#include "charnum/json_io.hpp"
#include "charnum/series.hpp"

using charnum::chern_data_from_json;
using charnum::chern_polynomial_from_json;
using charnum::CoverInput;
using charnum::cover_report;
using charnum::cover_report_from_json;
using charnum::cpn_data;
using charnum::Json;
using charnum::l_polynomial;
using charnum::l_polynomial_from_json;
using charnum::pontrjagin_class;
using charnum::Rational;
using charnum::run_cli;
using charnum::series_from_json;
using charnum::sign_series;
using charnum::to_json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// Table output is "key<padding>value" per line; recover the key/value map.
std::map<std::string, std::string> parse_rows(const std::string& text) {
    std::map<std::string, std::string> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto key_end = line.find(' ');
        if (key_end == std::string::npos) {
            rows[line] = "";
            continue;
        }
        const auto value_begin = line.find_first_not_of(' ', key_end);
        rows[line.substr(0, key_end)] =
            value_begin == std::string::npos ? "" : line.substr(value_begin);
    }
    return rows;
}

}  // namespace

TEST_CASE("chern table for the projective plane, byte for byte") {
    const CliResult result = run({"chern-cpn", "--n", "2"});
    CHECK(result.code == 0);
    CHECK(result.out == "[2]    3\n[1,1]  9\n");
    CHECK(result.err.empty());
}

TEST_CASE("chern table round-trips through json") {
    const CliResult result = run({"chern-cpn", "--n", "3", "--format", "json"});
    REQUIRE(result.code == 0);
    CHECK(chern_data_from_json(Json::parse(result.out)) == cpn_data(3));
}

TEST_CASE("ratios emits a bare rational") {
    const CliResult table = run({"ratios", "--n", "4", "--num", "3,1", "--den", "4"});
    CHECK(table.code == 0);
    CHECK(table.out == "10\n");

    const CliResult bracketed =
        run({"ratios", "--n", "4", "--num", "[3,1]", "--den", "[4]"});
    CHECK(bracketed.out == table.out);

    const CliResult json =
        run({"ratios", "--n", "4", "--num", "3,1", "--den", "4", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out == "\"10\"\n");
}

TEST_CASE("signature of projective space is one") {
    const CliResult result = run({"signature", "--cpn", "4"});
    CHECK(result.code == 0);
    CHECK(result.out == "1\n");
}

TEST_CASE("signature demands a data source") {
    const CliResult result = run({"signature"});
    CHECK(result.code == 2);
    CHECK(result.err.find("error:") == 0);
}

TEST_CASE("partitions listing in both formats") {
    const CliResult table = run({"partitions", "--n", "4"});
    CHECK(table.code == 0);
    CHECK(table.out == "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");

    const CliResult json = run({"partitions", "--n", "4", "--format", "json"});
    REQUIRE(json.code == 0);
    const Json parsed = Json::parse(json.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 5);
    CHECK(parsed[0] == Json::array({4}));
    CHECK(parsed[4] == Json::array({1, 1, 1, 1}));
}

TEST_CASE("series command matches the library expansion") {
    const CliResult json = run({"sign-series", "--d", "3", "--order", "4",
                                "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(series_from_json(Json::parse(json.out)) == sign_series(3, 4));

    const CliResult table = run({"sign-series", "--d", "3", "--order", "4"});
    const auto rows = parse_rows(table.out);
    CHECK(rows.at("t^0") == "1/3");
    CHECK(rows.at("t^1") == "0");
    CHECK(rows.at("t^2") == "8/9");
    CHECK(rows.at("t^4") == "-8/27");
}

TEST_CASE("l-genus and pontryagin round-trip through json") {
    const CliResult lg = run({"l-genus", "--k", "2", "--format", "json"});
    REQUIRE(lg.code == 0);
    CHECK(l_polynomial_from_json(Json::parse(lg.out)) == l_polynomial(2));

    const CliResult pc = run({"pontryagin", "--k", "1", "--n", "4",
                              "--format", "json"});
    REQUIRE(pc.code == 0);
    CHECK(chern_polynomial_from_json(Json::parse(pc.out)) == pontrjagin_class(1, 4));
}

TEST_CASE("cover report table carries the worked example") {
    const CliResult result =
        run({"cover", "--d", "2", "--chi-m", "3", "--chi-n", "-4"});
    REQUIRE(result.code == 0);
    const auto rows = parse_rows(result.out);
    CHECK(rows.at("sigma_X") == "3");
    CHECK(rows.at("chi_X") == "10");
    CHECK(rows.at("defect_n2") == "-1");
    CHECK(rows.at("defect_m_slope") == "-1");
    CHECK(rows.at("normal_chern") == "[-2]");
    CHECK(rows.at("sigma_M_prime") == "1");
    CHECK(rows.at("obstruction_polynomial") == "[-2/3, 4/3, -2/3]");
    CHECK(rows.at("identically_zero") == "false");
    CHECK(rows.at("nonvanishing_roots") == "[]");
}

TEST_CASE("cover json equals the library report") {
    const CliResult result = run({"cover", "--d", "2", "--chi-m", "3",
                                  "--chi-n", "-4", "--format", "json"});
    REQUIRE(result.code == 0);

    CoverInput input;
    input.n = 2;
    input.d = 2;
    input.m = 1;
    input.chi_M = 3;
    input.chi_N = -4;
    CHECK(cover_report_from_json(Json::parse(result.out)) == cover_report(input, 1000));
}

TEST_CASE("cover accepts the same input from a json file") {
    CoverInput input;
    input.n = 2;
    input.d = 3;
    input.m = 2;
    input.chi_M = 6;
    input.chi_N = -6;
    const std::string path = "cli_cover_input.json";
    {
        std::ofstream file(path);
        file << to_json(input).dump(2) << "\n";
    }
    const CliResult from_file = run({"cover", "--input", path, "--format", "json"});
    const CliResult from_flags = run({"cover", "--d", "3", "--m", "2", "--chi-m", "6",
                                      "--chi-n", "-6", "--format", "json"});
    std::remove(path.c_str());
    REQUIRE(from_file.code == 0);
    CHECK(from_file.out == from_flags.out);

    const CliResult conflict = run({"cover", "--input", path, "--d", "3"});
    CHECK(conflict.code == 2);
}

TEST_CASE("obstruction evaluation flag") {
    const CliResult table = run({"obstruction", "--d", "2", "--chi-m", "3",
                                 "--chi-n", "-4", "--at", "5"});
    REQUIRE(table.code == 0);
    const auto rows = parse_rows(table.out);
    CHECK(rows.at("obstruction_polynomial") == "[-2/3, 4/3, -2/3]");
    CHECK(rows.at("value_at_d(5)") == "-32/15");
    CHECK(rows.at("scan_bound") == "1000");

    const CliResult json = run({"obstruction", "--d", "2", "--chi-m", "3",
                                "--chi-n", "-4", "--at", "5", "--format", "json"});
    REQUIRE(json.code == 0);
    const Json parsed = Json::parse(json.out);
    CHECK(parsed.at("at_d") == 5);
    CHECK(parsed.at("value_at_d") == "-32/15");
}

TEST_CASE("identically zero obstruction exits with the degenerate code") {
    const CliResult result = run({"obstruction", "--n", "4", "--d", "2",
                                  "--chi-m", "3", "--chi-n", "0",
                                  "--normal-chern", "0,0"});
    CHECK(result.code == 3);
    const auto rows = parse_rows(result.out);
    CHECK(rows.at("identically_zero") == "true");
    CHECK(rows.at("nonvanishing_roots") == "[]");

    const CliResult cover = run({"cover", "--n", "4", "--d", "2", "--chi-m", "3",
                                 "--chi-n", "0", "--normal-chern", "0,0"});
    CHECK(cover.code == 3);
}

TEST_CASE("negative rational flag values parse") {
    const CliResult result =
        run({"cover", "--n", "4", "--d", "2", "--chi-m", "3", "--chi-n", "-10",
             "--normal-chern", "-3/2,45", "--format", "json"});
    REQUIRE(result.code == 0);
    const Json parsed = Json::parse(result.out);
    CHECK(parsed.at("input").at("normal_chern") == Json::array({"-3/2", "45"}));
}

TEST_CASE("output is deterministic across reruns") {
    const std::vector<std::string> args = {"cover", "--d", "5", "--m", "3",
                                           "--chi-m", "9", "--chi-n", "-8",
                                           "--format", "json"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);

    const CliResult table_a = run({"l-genus", "--k", "4"});
    const CliResult table_b = run({"l-genus", "--k", "4"});
    CHECK(table_a.out == table_b.out);
}

TEST_CASE("validation failures use exit code two") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);

    const CliResult odd = run({"cover", "--n", "3", "--d", "2", "--chi-m", "3",
                               "--chi-n", "-4"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("error:") == 0);

    CHECK(run({"ratios", "--n", "4", "--num", "oops", "--den", "4"}).code == 2);
    CHECK(run({"signature", "--input", "no_such_file.json"}).code == 2);
    CHECK(run({"cover", "--d", "2", "--chi-m", "3", "--chi-n", "-4",
               "--scan-bound", "1"})
              .code == 2);
    CHECK(run({"sign-series", "--d", "0", "--order", "4"}).code == 2);
    CHECK(run({"chern-cpn", "--n", "2", "--format", "yaml"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("cover") != std::string::npos);

    const CliResult sub = run({"cover", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--scan-bound") != std::string::npos);
}
