#include <doctest.h>

#include <sstream>

#include "chomp3/errors.hpp"
#include "chomp3/recurrence.hpp"
#include "chomp3/table_io.hpp"

using namespace chomp3;

namespace {

std::string dump(const FTable& t, ExportFormat f) {
    std::ostringstream out;
    write_table(out, t, f);
    return out.str();
}

}  // namespace

TEST_SUITE("table-io") {
    TEST_CASE("format names") {
        CHECK(parse_format("csv") == ExportFormat::Csv);
        CHECK(parse_format("jsonl") == ExportFormat::Jsonl);
        CHECK(parse_format("runs") == ExportFormat::Runs);
        CHECK_THROWS_AS(parse_format("CSV"), FormatError);
        CHECK_THROWS_AS(parse_format(""), FormatError);
    }

    TEST_CASE("csv") {
        CHECK(dump(build_sparse(2), ExportFormat::Csv) ==
              "q,r,f\n0,0,1\n1,0,2\n1,1,3\n2,0,3\n2,1,2\n2,2,4\n");
        CHECK(dump(build_reference(0), ExportFormat::Csv) == "q,r,f\n0,0,1\n");
    }

    TEST_CASE("jsonl") {
        CHECK(dump(build_sparse(1), ExportFormat::Jsonl) ==
              "{\"q\":0,\"r\":0,\"f\":1,\"mex_cell\":true}\n"
              "{\"q\":1,\"r\":0,\"f\":2,\"mex_cell\":true}\n"
              "{\"q\":1,\"r\":1,\"f\":3,\"mex_cell\":true}\n");
        const std::string s = dump(build_sparse(3), ExportFormat::Jsonl);
        CHECK(s.find("{\"q\":3,\"r\":1,\"f\":2,\"mex_cell\":false}\n") != std::string::npos);
    }

    TEST_CASE("runs") {
        const std::string s = dump(build_sparse(5), ExportFormat::Runs);
        CHECK(s ==
              "0;0:1,1:2,2:3,3:4,4:5,5:6\n"
              "1;1:3,2:2\n"
              "2;2:4,3:5,4:6,5:7\n"
              "3;3:6,4:7,5:5\n"
              "4;4:8,5:9\n"
              "5;5:10\n");
        CHECK(dump(build_reference(5), ExportFormat::Runs) == s);
    }

    TEST_CASE("round trips") {
        for (const Value n : {0, 1, 7, 120}) {
            CAPTURE(n);
            const FTable t = build_sparse(n);
            std::istringstream csv(dump(t, ExportFormat::Csv));
            std::istringstream jsonl(dump(t, ExportFormat::Jsonl));
            const FTable a = read_csv(csv);
            const FTable b = read_jsonl(jsonl);
            CHECK(a.n_max() == n);
            CHECK(b.n_max() == n);
            CHECK_FALSE(first_mismatch(a, t).has_value());
            CHECK_FALSE(first_mismatch(b, t).has_value());
            CHECK(dump(a, ExportFormat::Csv) == dump(t, ExportFormat::Csv));
            CHECK(dump(b, ExportFormat::Jsonl) == dump(t, ExportFormat::Jsonl));
        }
    }

    TEST_CASE("malformed input") {
        const char* bad_csv[] = {
            "",
            "q,r,x\n0,0,1\n",
            "q,r,f\n",
            "q,r,f\n0,0\n",
            "q,r,f\n0,0,1\n1,1,3\n",
            "q,r,f\n0,0,1\n1,0,2\n",
            "q,r,f\n0,0,one\n",
            "q,r,f\n0,0,1\n1,0,2\n1,1,3\n0,0,1\n",
        };
        for (const char* text : bad_csv) {
            CAPTURE(text);
            std::istringstream in(text);
            CHECK_THROWS_AS(read_csv(in), FormatError);
        }
        const char* bad_jsonl[] = {
            "",
            "{\"q\":0,\"r\":0,\"f\":1}\n",
            "{\"q\":0,\"r\":0,\"f\":1,\"mex_cell\":true\n",
            "{\"q\":0,\"r\":1,\"f\":1,\"mex_cell\":true}\n",
            "[1,2,3]\n",
        };
        for (const char* text : bad_jsonl) {
            CAPTURE(text);
            std::istringstream in(text);
            CHECK_THROWS_AS(read_jsonl(in), FormatError);
        }
    }
}
