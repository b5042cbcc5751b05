// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include <sys/resource.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "chomp3/cli.hpp"
#include "chomp3/oracle.hpp"
#include "chomp3/recurrence.hpp"
#include "chomp3/verify.hpp"
#include "support.hpp"

using namespace chomp3;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

long peak_rss_kib() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, in, out, err);
    return out.str();
}

// Every n <= 100: `move` prints exactly one opening move, and it is the only
// winning move the retrograde solve finds from [n,n,n].
Verdict opening_moves() {
    const Value limit = 100;
    const auto start = Clock::now();
    const OutcomeTable outcomes = solve(limit);
    for (Value n = 1; n <= limit; ++n) {
        int code = 0;
        const std::string line = run_cli({"move", "--n", std::to_string(n)}, code);
        const auto truth = winning_moves_bruteforce(Position3(n, n, n), outcomes);
        if (code != cli::kOk || truth.size() != 1) {
            return {false, "n=" + std::to_string(n) + " exit " + std::to_string(code) +
                               ", oracle has " + std::to_string(truth.size()) + " winning moves"};
        }
        const std::string expected =
            "cut=" + truth.front().cut() + " target=" + truth.front().result.to_string() + "\n";
        if (line.find(expected) == std::string::npos || line.find('\n') != line.size() - 1) {
            return {false,
                    "n=" + std::to_string(n) + " printed '" + line + "', oracle " + expected};
        }
    }
    const double s = seconds_since(start);
    return {s < 5.0,
            "n <= 100 all unique and oracle-matched in " + std::to_string(s) + " s (limit 5 s)"};
}

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    const FTable table = build_sparse(120);
    const VerificationReport report = check_against_oracle(table, 120);
    const double s = seconds_since(start);
    if (!report.passed) return {false, "against_oracle failed: " + to_jsonl(report)};
    return {s < 60.0, std::to_string(report.cells_scanned) + " positions in " + std::to_string(s) +
                          " s (limit 60 s)"};
}

Verdict check_suite() {
    const auto start = Clock::now();
    const FTable table = build_sparse(2000);
    const auto reports = run_suite(table, SuiteBounds{std::nullopt, Value{150}});
    const double s = seconds_since(start);
    for (const auto& r : reports) {
        if (!r.passed) return {false, to_jsonl(r)};
    }
    return {reports.size() == 8 && s < 120.0, std::to_string(reports.size()) +
                                                  " checks at n_max 2000, cubic bound 150, in " +
                                                  std::to_string(s) + " s (limit 120 s)"};
}

Verdict engine_equivalence() {
    const auto start = Clock::now();
    const auto mismatch = first_mismatch(build_reference(2000), build_sparse(2000));
    const double s = seconds_since(start);
    if (mismatch) {
        return {false, "cell (" + std::to_string(mismatch->q) + "," + std::to_string(mismatch->r) +
                           "): " + std::to_string(mismatch->left) + " vs " +
                           std::to_string(mismatch->right)};
    }
    return {s < 30.0, "2,003,001 cells agree in " + std::to_string(s) + " s (limit 30 s)"};
}

Verdict scale() {
    const Value n = 50'000;
    const std::size_t ceiling = 4'000'000'000;
    const auto start = Clock::now();
    const FTable table = build_sparse(n, ResourceLimits{ceiling});
    const double build_s = seconds_since(start);
    const VerificationReport report = check_partition(table);
    const double s = seconds_since(start);
    const long rss_kib = peak_rss_kib();
    const double rss_gb = rss_kib * 1024.0 / 1e9;
    std::ostringstream detail;
    detail << "n_max 50000: build " << build_s << " s, partition "
           << (report.passed ? "exactly one opening move for every n" : to_jsonl(report))
           << ", total " << s << " s (limit 900 s), table " << table.memory_bytes() / 1e9
           << " GB, peak RSS " << rss_gb << " GB (limit 4 GB)";
    return {report.passed && s < 900.0 && rss_kib * 1024.0 <= ceiling, detail.str()};
}

// Flip 50 random cells with q inside the oracle bound to another value; the
// full suite at the default bounds must reject every corrupted table.
Verdict sensitivity() {
    const Value n = 2000;
    const Value oracle_bound = 120;
    const Value cubic_bound = 150;
    const auto start = Clock::now();
    const FTable clean = build_reference(n);
    test::Rng rng(20240611);
    int detected = 0;
    std::string missed;
    for (int i = 0; i < 50; ++i) {
        const Value q = rng.uniform(0, oracle_bound);
        const Value r = rng.uniform(0, q);
        const Value f = clean.f(q, r);
        Value v = rng.uniform(1, 2 * q + 1);
        if (v >= f) ++v;  // uniform over [1, 2q+2] without f
        FTable table = clean;
        table.overwrite(q, r, v);

        const std::function<VerificationReport()> checks[] = {
            [&] { return check_against_oracle(table, oracle_bound); },
            [&] { return check_nonattacking(table); },
            [&] { return check_diagonal_max(table); },
            [&] { return check_partition(table); },
            [&] { return check_rowstart_propagation(table); },
            [&] { return check_interval_blocking(table, cubic_bound); },
            [&] { return check_rightmost_hole(table, cubic_bound); },
            [&] { return check_mex_cells(table); },
            [&] { return check_recurrence(table); },
        };
        bool caught = false;
        for (const auto& check : checks) {
            if (!check().passed) {
                caught = true;
                break;
            }
        }
        if (caught) {
            ++detected;
        } else {
            missed +=
                " (" + std::to_string(q) + "," + std::to_string(r) + ")->" + std::to_string(v);
        }
    }
    return {detected == 50, std::to_string(detected) + "/50 flips detected in " +
                                std::to_string(seconds_since(start)) + " s" +
                                (missed.empty() ? "" : "; missed" + missed)};
}

Verdict determinism() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("chomp3_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    std::string detail;
    bool ok = true;
    for (const char* format : {"csv", "jsonl", "runs"}) {
        const auto a = dir / (std::string("first.") + format);
        const auto b = dir / (std::string("second.") + format);
        int code_a = 0;
        int code_b = 0;
        run_cli({"compute", "--n", "1000", "--format", format, "--out", a.string()}, code_a);
        run_cli({"compute", "--n", "1000", "--format", format, "--out", b.string()}, code_b);
        const std::string x = slurp(a);
        const bool same = code_a == 0 && code_b == 0 && !x.empty() && x == slurp(b);
        ok = ok && same;
        detail += std::string(detail.empty() ? "" : ", ") + format + " " +
                  std::to_string(x.size()) + " bytes " + (same ? "identical" : "DIFFER");
    }
    std::filesystem::remove_all(dir);
    return {ok, "n_max 1000: " + detail};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "opening moves for n <= 100", opening_moves},
        {2, "oracle equivalence to 120", oracle_equivalence},
        {3, "check suite at 2000 / 150", check_suite},
        {4, "engine equivalence at 2000", engine_equivalence},
        {5, "scale to 50000", scale},
        {6, "fault sensitivity", sensitivity},
        {7, "deterministic export", determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Verdict o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.passed ? 0 : 1;
        std::cout << "criterion " << c.id << " " << (o.passed ? "PASS" : "FAIL") << " " << c.name
                  << ": " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
