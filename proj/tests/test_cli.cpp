#include "gti/cli.hpp"
#include "gti/hmd.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gti::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GTI_TEST_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "gti_cli_tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

// "GTI <value>" line printed by plot chord.
double printed_gti(const std::string& out) {
    for (const auto& line : lines_of(out)) {
        if (line.rfind("GTI ", 0) == 0) return std::stod(line.substr(4));
    }
    FAIL("no GTI line");
    return NAN;
}

} // namespace

TEST_CASE("weibull command") {
    SUBCASE("default reproduces the nine shape rows") {
        auto r = run({"weibull"});
        CHECK(r.code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 10);
        CHECK(lines[0].rfind("beta", 0) == 0);
        CHECK(lines[1].find("0.666667") != std::string::npos);
        CHECK(lines[5].find("Constant mortality rate") != std::string::npos);
        CHECK(lines[7].rfind("0.333333  -0.5 ", 0) == 0);
        CHECK(lines[9].find("Rejuvenating") != std::string::npos);
    }
    SUBCASE("json keeps full precision") {
        auto r = run({"weibull", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["rows"].size() == 9);
        CHECK(j["rows"][0]["gti"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(j["rows"][4]["class"] == "NonAgeing");
    }
    SUBCASE("single shape") {
        auto r = run({"weibull", "--beta", "1"});
        CHECK(r.code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 2);
        CHECK(lines[1] == "1     0    Constant mortality rate");
    }
    SUBCASE("nonpositive shape is a usage error") {
        CHECK(run({"weibull", "--beta", "-1"}).code == 2);
        CHECK(run({"weibull", "--beta", "0"}).code == 2);
        CHECK(run({"weibull", "--beta", "abc"}).code == 2);
    }
}

TEST_CASE("compute command") {
    SUBCASE("constant hazard table") {
        auto r = run({"compute", "--file", data("constant_mx.txt"), "--year", "2000"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["file"].is_string());
        CHECK(j["year"] == 2000);
        CHECK(j["sex"] == "total");
        CHECK(j["hazard_source"] == "mx");
        CHECK(j["median_age_at_death"].is_number());
        REQUIRE(j["rows"].size() == 3);
        double previous = 0.0;
        for (const auto& row : j["rows"]) {
            CHECK(row.size() == 5);
            CHECK(row["T"].get<double>() > previous);
            previous = row["T"].get<double>();
            CHECK(std::abs(row["gti"].get<double>()) < 1e-9);
            CHECK(row["survival"].is_number());
            CHECK(row["h_eff"].get<double>() == doctest::Approx(0.02).epsilon(1e-9));
            CHECK(row["class"] == "NonAgeing");
        }
    }
    SUBCASE("cutoffs are sorted and csv has a header") {
        auto r = run({"compute", "--file", data("model_two_years.txt"), "--year", "2009",
                      "--cutoff", "65", "--cutoff", "25", "--format", "csv"});
        REQUIRE(r.code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 3);
        CHECK(lines[0] == "file,year,sex,hazard_source,T,gti,survival,h_eff,class,median_age_at_death");
        CHECK(lines[1].find(",2009,total,mx,25,") != std::string::npos);
        CHECK(lines[2].find(",2009,total,mx,65,") != std::string::npos);
    }
    SUBCASE("cutoff beyond the open-ended interval") {
        auto r = run({"compute", "--file", data("constant_mx.txt"), "--year", "2000", "--cutoff",
                      "150"});
        CHECK(r.code == 3);
        CHECK(r.err.find("150") != std::string::npos);
    }
    SUBCASE("parse failures exit 1 with a line number") {
        auto r = run({"compute", "--file", data("lt_missing_datum.txt"), "--year", "1990",
                      "--cutoff", "1"});
        CHECK(r.code == 1);
        CHECK(r.err.find("line 5") != std::string::npos);
        CHECK(run({"compute", "--file", data("no_such_file.txt"), "--year", "1990"}).code == 1);
    }
    SUBCASE("missing year names the file") {
        auto r = run({"compute", "--file", data("constant_mx.txt"), "--year", "1999"});
        CHECK(r.code == 1);
        CHECK(r.err.find("constant_mx.txt") != std::string::npos);
    }
    SUBCASE("bad flags") {
        CHECK(run({"compute", "--file", data("constant_mx.txt")}).code == 2);
        CHECK(run({"compute", "--file", data("constant_mx.txt"), "--year", "2000",
                   "--hazard-source", "lx"})
                  .code == 2);
        CHECK(run({"compute", "--file", data("constant_mx.txt"), "--year", "2000", "--cutoff",
                   "-5"})
                  .code == 2);
        CHECK(run({"compute", "--file", data("constant_mx.txt"), "--year", "2000", "--sex",
                   "female"})
                  .code == 2);
        CHECK(run({"compute", "--file", data("constant_mx.txt"), "--year", "2000", "--format",
                   "xml"})
                  .code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
    }
    SUBCASE("qx hazard source") {
        auto r = run({"compute", "--file", data("constant_mx.txt"), "--year", "2000",
                      "--hazard-source", "qx"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["hazard_source"] == "qx");
        for (const auto& row : j["rows"]) CHECK(std::abs(row["gti"].get<double>()) < 1e-4);
    }
}

TEST_CASE("compare command") {
    const auto file = data("model_two_years.txt");
    SUBCASE("delta column is the difference of the two reports") {
        auto r = run({"compare", "--file", file, "--year", "1921", "--year", "2009", "--format",
                      "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["rows"].size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            const double a = j["a"]["rows"][i]["gti"], b = j["b"]["rows"][i]["gti"];
            CHECK(j["rows"][i]["delta"].get<double>() == b - a);
        }
        CHECK(j["a"]["year"] == 1921);
        CHECK(j["b"]["year"] == 2009);
    }
    SUBCASE("same input twice") {
        auto r = run({"compare", "--file", file, "--file", file, "--year", "2009", "--year",
                      "2009", "--format", "csv"});
        REQUIRE(r.code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 4);
        for (std::size_t i = 1; i < lines.size(); ++i)
            CHECK(lines[i].substr(lines[i].rfind(',') + 1) == "0");
    }
    SUBCASE("table layout") {
        auto r = run({"compare", "--file", file, "--year", "1921", "--year", "2009"});
        REQUIRE(r.code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 5);
        CHECK(lines[0].find("GTI 1921") != std::string::npos);
        CHECK(lines[0].find("GTI 2009") != std::string::npos);
        CHECK(lines[4].rfind("median", 0) == 0);
    }
    SUBCASE("missing year is tagged with its input") {
        auto r = run({"compare", "--file", file, "--year", "1921", "--year", "1950"});
        CHECK(r.code == 1);
        CHECK(r.err.find("input B") != std::string::npos);
        CHECK(r.err.find("model_two_years.txt") != std::string::npos);
    }
}

TEST_CASE("plot command") {
    SUBCASE("chord of H = t^2") {
        const auto out = temp_path("chord_beta2.csv");
        auto r = run({"plot", "chord", "--beta", "2", "--cutoff", "1", "--steps", "1000", "--out",
                      out});
        REQUIRE(r.code == 0);
        CHECK(std::abs(printed_gti(r.out) - 1.0 / 3.0) < 1e-6);
        auto lines = lines_of(gti::hmd::read_file(out));
        CHECK(lines.front() == "t,H,h_eff_t");
        CHECK(lines.size() == 1002);
        CHECK(lines.back() == "1,1,1");
    }
    SUBCASE("chord agrees with compute on the same table") {
        const auto file = data("model_two_years.txt");
        auto chord = run({"plot", "chord", "--file", file, "--year", "2009", "--cutoff", "65",
                          "--out", temp_path("chord_2009.csv")});
        REQUIRE(chord.code == 0);
        auto compute = run({"compute", "--file", file, "--year", "2009", "--cutoff", "65"});
        REQUIRE(compute.code == 0);
        const double g = nlohmann::json::parse(compute.out)["rows"][0]["gti"];
        CHECK(std::abs(printed_gti(chord.out) - g) <= 1e-12);
    }
    SUBCASE("rates for two years") {
        const auto out = temp_path("rates.csv");
        auto r = run({"plot", "rates", "--file", data("model_mx.txt"), "--year", "1921", "--year",
                      "2009", "--out", out});
        REQUIRE(r.code == 0);
        auto lines = lines_of(gti::hmd::read_file(out));
        REQUIRE(lines.size() == 112);
        CHECK(lines[0] == "age,mx_1921,mx_2009");
        CHECK(lines[1] == "0,0.10406,0.006312");
        CHECK(lines[111].rfind("110,", 0) == 0);
    }
    SUBCASE("rates from a life-table file") {
        auto r = run({"plot", "rates", "--file", data("model_two_years.txt"), "--year", "2009",
                      "--out", temp_path("rates_lt.csv")});
        CHECK(r.code == 0);
    }
    SUBCASE("usage errors") {
        CHECK(run({"plot", "chord", "--beta", "2", "--cutoff", "1"}).code == 2);
        CHECK(run({"plot", "histogram", "--out", temp_path("x.csv")}).code == 2);
        CHECK(run({"plot", "chord", "--beta", "2", "--out", temp_path("x.csv")}).code == 2);
    }
}

TEST_CASE("identical invocations write identical bytes") {
    const auto file = data("model_two_years.txt");
    for (const char* format : {"json", "csv"}) {
        const auto a = temp_path(std::string("det_a.") + format);
        const auto b = temp_path(std::string("det_b.") + format);
        for (const auto& path : {a, b}) {
            REQUIRE(run({"compute", "--file", file, "--year", "1921", "--format", format, "--out",
                         path})
                        .code == 0);
        }
        CHECK(gti::hmd::read_file(a) == gti::hmd::read_file(b));
    }
}
