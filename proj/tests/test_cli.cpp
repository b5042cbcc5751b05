#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "chomp3/cli.hpp"

using namespace chomp3;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("compute to standard output") {
        auto r = run({"compute", "--n", "2"});
        CHECK(r.code == cli::kOk);
        CHECK(r.out == "q,r,f\n0,0,1\n1,0,2\n1,1,3\n2,0,3\n2,1,2\n2,2,4\n");
        CHECK_FALSE(r.err.empty());

        r = run({"compute", "--n", "0"});
        CHECK(r.out == "q,r,f\n0,0,1\n");

        r = run({"compute", "--n", "1", "--format", "runs", "--engine", "reference"});
        CHECK(r.out == "0;0:1,1:2\n1;1:3\n");
    }

    TEST_CASE("compute to a file is deterministic") {
        const auto dir = std::filesystem::temp_directory_path() / "chomp3_cli_test";
        std::filesystem::create_directories(dir);
        for (const char* fmt : {"csv", "jsonl", "runs"}) {
            const auto a = dir / (std::string("a.") + fmt);
            const auto b = dir / (std::string("b.") + fmt);
            CHECK(run({"compute", "--n", "150", "--format", fmt, "--out", a.string()}).code == 0);
            CHECK(run({"compute", "--n", "150", "--format", fmt, "--out", b.string()}).code == 0);
            CHECK(slurp(a) == slurp(b));
            CHECK_FALSE(slurp(a).empty());
        }
        CHECK(run({"compute", "--n", "3", "--out", (dir / "missing" / "x.csv").string()}).code ==
              cli::kUsage);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("move") {
        CHECK(run({"move", "--n", "1"}).out == "n=1 kind=diagonal cut=2:0 target=1,0,0\n");
        CHECK(run({"move", "--n", "2"}).out == "n=2 kind=rowstart cut=3:1 target=2,2,1\n");
        CHECK(run({"move", "--n", "5"}).out == "n=5 kind=rowstart cut=3:3 target=5,5,3\n");
        CHECK(run({"move", "--n", "6", "--engine", "reference"}).out ==
              "n=6 kind=diagonal cut=2:3 target=6,3,3\n");
        CHECK(run({"move", "--n", "0"}).code == cli::kUsage);
        CHECK(run({"move"}).code == cli::kUsage);
    }

    TEST_CASE("query") {
        auto r = run({"query", "2,2,1"});
        CHECK(r.code == 0);
        CHECK(r.out == "P\n");
        CHECK(run({"query", "2,2,2"}).out == "N winning: 3:1 -> 2,2,1\n");
        CHECK(run({"query", "1,0,0"}).out == "P\n");
        CHECK(run({"query", "3,1,0"}).out == "N winning: 1:2 -> 2,1,0\n");
        r = run({"query", "2,1,3"});
        CHECK(r.code == cli::kUsage);
        CHECK(r.out.empty());
        CHECK(run({"query", "2 2 2"}).code == cli::kUsage);
    }

    TEST_CASE("verify streams one JSON line per check") {
        auto r = run({"verify", "--n", "5", "--oracle-bound", "3", "--cubic-bound", "5"});
        CHECK(r.code == cli::kOk);
        std::istringstream lines(r.out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            const auto j = nlohmann::json::parse(line);
            CHECK(j["passed"] == true);
            ++count;
        }
        CHECK(count == 9);
    }

    TEST_CASE("verify with an injected fault fails with a counterexample") {
        auto r = run({"verify", "--n", "20", "--oracle-bound", "10", "--cubic-bound", "20",
                      "--inject-fault", "2,1,3"});
        CHECK(r.code == cli::kVerificationFailed);
        CHECK(r.out.find("\"passed\":false") != std::string::npos);
        CHECK(r.out.find("\"counterexample\":{") != std::string::npos);

        CHECK(run({"verify", "--n", "5", "--inject-fault", "2,1"}).code == cli::kUsage);
        CHECK(run({"verify", "--n", "5", "--inject-fault", "9,1,3", "--oracle-bound", "0",
                   "--cubic-bound", "0"})
                  .code == cli::kUsage);
    }

    TEST_CASE("verify bounds") {
        CHECK(run({"verify", "--n", "5"}).code == cli::kUsage);  // default oracle bound 120
        CHECK(run({"verify", "--n", "5", "--oracle-bound", "0", "--cubic-bound", "0"}).code == 0);
    }

    TEST_CASE("memory ceiling") {
        auto r = run({"compute", "--n", "3000", "--memory-ceiling", "1m"});
        CHECK(r.code == cli::kResourceCeiling);
        CHECK(r.out.empty());
        CHECK(
            run({"compute", "--n", "3000", "--engine", "reference", "--memory-ceiling", "1000000"})
                .code == cli::kResourceCeiling);
    }

    TEST_CASE("usage errors") {
        CHECK(run({}).code == cli::kUsage);
        CHECK(run({"frobnicate"}).code == cli::kUsage);
        CHECK(run({"compute", "--format", "xml"}).code == cli::kUsage);
        CHECK(run({"compute", "--engine", "fast"}).code == cli::kUsage);
        CHECK(run({"compute", "--n", "-3"}).code == cli::kUsage);
        CHECK(run({"--help"}).code == cli::kOk);
    }

    TEST_CASE("play") {
        auto r = run({"play", "--n", "2", "--engine-first"});
        CHECK(r.code == 0);
        CHECK(r.out.find("engine plays 3:1 -> 2,2,1") != std::string::npos);

        r = run({"play", "--n", "1"}, "4 9\n2 0\n");
        CHECK(r.code == 0);
        CHECK(r.out.find("enter a move") != std::string::npos);
        CHECK(r.out.find("The engine is left with the poisoned square and loses.") !=
              std::string::npos);
        CHECK(run({"play", "--n", "0"}).code == cli::kUsage);
    }
}
