#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chomp3/ftable.hpp"
#include "chomp3/limits.hpp"

namespace chomp3 {

/// Result of one universally quantified check over a finite range. A failed
/// report carries the first violation in the check's scan order.
struct VerificationReport {
    std::string name;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    bool passed = true;
    std::optional<nlohmann::ordered_json> counterexample;
    std::uint64_t cells_scanned = 0;
    std::chrono::milliseconds elapsed{0};
};

/// One JSON object per line: name, bounds, passed, counterexample,
/// cells_scanned, elapsed_ms.
std::string to_jsonl(const VerificationReport& report);

// Pairwise exclusions between P-positions:
//   (a) f(q,0..q) pairwise distinct for each q;
//   (b) s < t1 < t2 < p never has f(t1,s) = f(t2,s) = p;
//   (c) f(p,r) = p implies p not in R(q,r) for r <= q < p.
VerificationReport check_nonattacking(const FTable& table);

// f(q,r) > q implies a mex cell with {1..q} contained in B(q,r).
// Scans column by column; R(q,r) is grown from stored values as q increases.
VerificationReport check_mex_cells(const FTable& table);

// Every cell satisfies the recurrence from the stored values: f(q,r) =
// f(q-1,r) when q > r and f(q-1,r) < q, else mex B(q,r), with the branch flag
// matching.
VerificationReport check_recurrence(const FTable& table);

// r < q < p <= scan_bound, p not in C(q,r), p in C(t,r) for all q < t < p
// implies {q+1..p-1} contained in C(q,r).
VerificationReport check_interval_blocking(const FTable& table, Value scan_bound);

// Same hypotheses plus f(q,r) > q implies f(q,r) >= p.
VerificationReport check_rightmost_hole(const FTable& table, Value scan_bound);

// f(q,q) = max_r f(q,r) and f(q,q) > q.
VerificationReport check_diagonal_max(const FTable& table);

// f(p,r) = p implies p in C(q,r) for every r < q < p.
VerificationReport check_rowstart_propagation(const FTable& table);

// Every 1 <= n <= n_max has exactly one opening-move witness: either a unique
// a < n with f(a,a) = n, or a unique r < n with f(n,r) = n, never both.
VerificationReport check_partition(const FTable& table);

// Outcome of every position with p <= oracle_bound and the winning moves
// from every [n,n,n] agree with a fresh retrograde solve.
VerificationReport check_against_oracle(const FTable& table, Value oracle_bound,
                                        const ResourceLimits& limits = {});

struct SuiteBounds {
    std::optional<Value> oracle_bound;  // skipped when empty
    std::optional<Value> cubic_bound;   // skipped when empty
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Runs every check in a fixed order, handing each report to `sink` as soon
/// as it is ready. Throws OutOfRange if a bound exceeds the table's n_max.
std::vector<VerificationReport> run_suite(const FTable& table, const SuiteBounds& bounds,
                                          const ResourceLimits& limits = {},
                                          const ReportSink& sink = {});

/// Builds the table with the chosen engine, then runs the suite.
std::vector<VerificationReport> run_suite(Value n_max, const SuiteBounds& bounds,
                                          Layout engine = Layout::Sparse,
                                          const ResourceLimits& limits = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace chomp3
