#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlab/cli.hpp"

using namespace rlab::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("csv layout") {
    Table t;
    t.columns = {"a", "b", "c"};
    t.rows.push_back({{"a", std::int64_t(3)}, {"b", 0.1}, {"c", true}});
    t.rows.push_back({{"a", std::string("x")}});
    CHECK(to_csv(t) == "#schema=1\na,b,c\n3,0.10000000000000001,true\nx,,\n");
}

TEST_CASE("json layout") {
    Table t;
    t.columns = {"a", "b"};
    t.rows.push_back({{"a", std::int64_t(3)}, {"b", 0.5}});
    t.rows.push_back({{"b", false}});
    const auto j = nlohmann::json::parse(to_json(t));
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0]["a"] == 3);
    CHECK(j[0]["b"] == 0.5);
    CHECK_FALSE(j[1].contains("a"));
}

TEST_CASE("list parsing") {
    CHECK(parse_int_list("1..4") == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(parse_int_list("4,16, 64") == std::vector<std::int64_t>{4, 16, 64});
    CHECK(parse_int_list("1..2,7") == std::vector<std::int64_t>{1, 2, 7});
    CHECK(parse_double_list("0.25,0.5") == std::vector<double>{0.25, 0.5});
    CHECK_THROWS_AS((void)parse_int_list("3..1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_int_list("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_int_list("2.5"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_double_list("a,b"), std::invalid_argument);
}

TEST_CASE("every subcommand succeeds on small inputs") {
    const std::vector<std::vector<std::string>> cases = {
        {"lowerbound"},
        {"type2", "--n", "2..8"},
        {"quasilin", "--trials", "120", "--exact-trials", "50"},
        {"fdb", "--trials", "20"},
        {"duality", "--trials", "3", "--N-max", "64"},
        {"diagrams", "--samples", "10"},
        {"zomega", "--samples", "512", "--trials", "2"},
        {"algebra"},
    };
    for (const auto& args : cases) {
        INFO(args[0]);
        const Result r = invoke(args);
        CHECK(r.code == kExitOk);
        CHECK(r.err.empty());
        CHECK(r.out.rfind("#schema=1\n", 0) == 0);
        CHECK(r.out.find('\r') == std::string::npos);
    }
}

TEST_CASE("output is deterministic and seed dependent") {
    const std::vector<std::string> a{"fdb", "--trials", "10"};
    CHECK(invoke(a).out == invoke(a).out);
    const std::vector<std::string> q{"--seed", "5", "quasilin", "--trials", "110", "--exact-trials", "20"};
    CHECK(invoke(q).out == invoke(q).out);
    std::vector<std::string> b{"--seed", "1"};
    b.insert(b.end(), a.begin(), a.end());
    CHECK(invoke(a).out != invoke(b).out);
}

TEST_CASE("json output parses as an array of flat records") {
    const Result r = invoke({"--format", "json", "lowerbound", "--m", "1", "--N", "4,16"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    for (const auto& rec : j) {
        CHECK(rec.is_object());
        for (const auto& [k, v] : rec.items()) CHECK_FALSE(v.is_structured());
    }
    CHECK(j[1]["N"] == 16);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"lowerbound", "--theta", "1.5"}).code == kExitUsage);
    CHECK(invoke({"lowerbound", "--m", "abc"}).code == kExitUsage);
    CHECK(invoke({"--format", "xml", "lowerbound"}).code == kExitUsage);
    CHECK(invoke({"diagrams", "--which", "nope"}).code == kExitUsage);
    CHECK(invoke({"zomega", "--profiles", "0.7:2"}).code == kExitUsage);
    CHECK(invoke({"type2", "--m", "9"}).code == kExitUsage);
}

TEST_CASE("violated assertions exit with 1 and are listed") {
    const Result r = invoke({"type2", "--n", "4,8,16", "--ell2-max", "0", "--spread", "1.0"});
    CHECK(r.code == kExitAssertion);
    CHECK(r.err.find("violation:") != std::string::npos);
    CHECK(r.out.rfind("#schema=1\n", 0) == 0);
}

TEST_CASE("output file") {
    const std::string path = "rlab_cli_test_output.csv";
    const Result r = invoke({"--output", path, "algebra"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == invoke({"algebra"}).out);
    std::remove(path.c_str());
}
