#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "fewlee/cli.hpp"

using namespace fewlee;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze text output") {
    const Run r = run({"analyze", "--p", "3", "--m", "3", "--gens", "1,1,0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[1242, 6, 810]") != std::string::npos);
    CHECK(r.out.find("1+6z^810+702z^828+18z^864+2z^972") != std::string::npos);
    CHECK(r.out.find("dual distance class: 2") != std::string::npos);
}

TEST_CASE("analyze methods agree") {
    std::string first;
    for (const char* method : {"brute", "analytic", "table", "auto"}) {
        const Run r = run({"analyze", "--p", "3", "--m", "2", "--gens", "1,0", "--method", method, "--format", "csv"});
        CHECK(r.code == kExitOk);
        if (first.empty()) first = r.out;
        CHECK(r.out == first);
    }
    CHECK(first == "weight,frequency\n0,1\n84,72\n90,6\n108,2\n");
}

TEST_CASE("json output survives a parse and dump round trip") {
    const Run r = run({"analyze", "--p", "3", "--m", "3", "--gens", "1,0,0", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["n"] == 1350);
    CHECK(j["k"] == 6);
    CHECK(j["d"] == 900);
    CHECK(j["meets_griesmer"] == true);
    CHECK(j["distance_optimal"] == "PROVEN");
    CHECK(j["dual_distance_class"] == "2");
}

TEST_CASE("invalid input exits with 2") {
    CHECK(run({"analyze", "--p", "4", "--m", "2", "--gens", "1,0"}).code == kExitInvalidInput);
    CHECK(run({"analyze", "--p", "3", "--m", "2", "--gens", "1,3"}).code == kExitInvalidInput);
    CHECK(run({"analyze", "--p", "3", "--m", "2", "--gens", "1,0,0"}).code == kExitInvalidInput);
    CHECK(run({"analyze", "--p", "3", "--m", "2", "--gens", "a,b"}).code == kExitInvalidInput);
    CHECK(run({"analyze", "--p", "2", "--m", "2", "--gens", "1,0", "--method", "analytic"}).code ==
          kExitInvalidInput);
    CHECK(run({"analyze", "--p", "3", "--m", "3", "--gens", "1,1,1", "--method", "table"}).code ==
          kExitInvalidInput);
    CHECK(run({"verify", "--family", "4", "--p", "3", "--m", "3", "--r", "1"}).code == kExitInvalidInput);
    CHECK(run({"verify", "--family", "1", "--p", "3", "--m", "3", "--r", "3"}).code == kExitInvalidInput);
    CHECK(run({"table5", "--p", "3", "--m", "2"}).code == kExitInvalidInput);
    CHECK(run({"frobnicate"}).code == kExitInvalidInput);
    CHECK(run({"analyze", "--p"}).code == kExitInvalidInput);
}

TEST_CASE("binary prime runs by brute force") {
    const Run r = run({"analyze", "--p", "2", "--m", "2", "--gens", "1,0", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("weight,frequency\n0,1\n", 0) == 0);
}

TEST_CASE("budget exhaustion exits with 3") {
    CHECK(run({"analyze", "--p", "5", "--m", "3", "--gens", "4,4,4", "--budget", "10"}).code == kExitBudget);
    CHECK(run({"verify", "--family", "1", "--p", "7", "--m", "4", "--r", "1", "--budget", "1000"}).code ==
          kExitBudget);
}

TEST_CASE("dropped generators produce a warning") {
    const Run r = run({"analyze", "--p", "3", "--m", "2", "--gens", "1,0;0,0", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify passes on families, including when a table is skipped") {
    const Run f = run({"verify", "--family", "2", "--p", "3", "--m", "3", "--r", "1..2"});
    CHECK(f.code == kExitOk);
    CHECK(f.out.find("2/2 cases passed") != std::string::npos);

    const Run s = run({"verify", "--family", "4", "--p", "5", "--m", "3", "--r", "1", "--threads", "2"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find("table skipped") != std::string::npos);
}

TEST_CASE("random verification is reproducible from its seed") {
    const std::vector<std::string> args = {"verify", "--random", "4", "--p", "3", "--m", "2", "--seed", "11"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("4/4 cases passed") != std::string::npos);
    const Run c = run({"verify", "--random", "4", "--p", "3", "--m", "2", "--seed", "12"});
    CHECK(c.out != a.out);
}

TEST_CASE("table5 csv") {
    const Run r = run({"table5", "--p", "7", "--m", "3,4", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("p,n,k,d,label,flag\n", 0) == 0);
    CHECK(r.out.find("11595146") != std::string::npos);
    CHECK(r.out.find("210684") != std::string::npos);
    const Run three = run({"table5", "--p", "3", "--m", "3", "--format", "csv"});
    CHECK(three.out == "p,n,k,d,label,flag\n"
                       "3,1350,6,900,Optimal*,\"\"\n"
                       "3,1296,6,864,Distance optimal,\"\"\n"
                       "3,1134,6,756,Optimal*,\"\"\n"
                       "3,972,6,648,Distance optimal,\"\"\n");
}

TEST_CASE("--out writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "fewlee_cli_test.csv";
    const Run r = run({"analyze", "--p", "3", "--m", "2", "--gens", "2,0", "--format", "csv", "--out", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == "weight,frequency\n0,1\n72,78\n108,2\n");
    std::filesystem::remove(path);
}

TEST_CASE("matrix export") {
    const Run r = run({"matrix", "--p", "3", "--m", "2", "--gens", "1,0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("3 2 4 126\n", 0) == 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == kExitOk);
}

}
