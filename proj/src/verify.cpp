#include "chomp3/verify.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "chomp3/errors.hpp"
#include "chomp3/oracle.hpp"
#include "chomp3/recurrence.hpp"

namespace chomp3 {

using json = nlohmann::ordered_json;

namespace {

VerificationReport make_report(std::string name, json bounds) {
    VerificationReport report;
    report.name = std::move(name);
    report.bounds = std::move(bounds);
    return report;
}

template <class Body>
VerificationReport timed(std::string name, json bounds, Body&& body) {
    VerificationReport report = make_report(std::move(name), std::move(bounds));
    const auto start = std::chrono::steady_clock::now();
    body(report);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

void fail(VerificationReport& report, json counterexample) {
    report.passed = false;
    report.counterexample = std::move(counterexample);
}

// Dense storage bound for value-indexed scratch. Correct tables stay far
// below it; a corrupted cell with a huge value falls back to the hash map.
std::size_t dense_width(const FTable& table) {
    Value m = 0;
    for (Value q = 0; q <= table.n_max(); ++q) {
        for (Value r = 0; r <= q; ++r) m = std::max(m, table.f(q, r));
    }
    return static_cast<std::size_t>(std::min(m, 4 * table.n_max() + 4)) + 2;
}

/// Reusable value -> payload map; an entry is live iff its stamp equals the
/// current generation, so clearing is O(1).
class Marks {
public:
    explicit Marks(std::size_t width) : dense_(width) {}

    void next() {
        ++gen_;
        sparse_.clear();
    }
    void mark(Value v, Value payload = 0) { slot(v) = {gen_, payload}; }
    bool has(Value v) const {
        if (v < dense_.size()) return dense_[v].stamp == gen_;
        auto it = sparse_.find(v);
        return it != sparse_.end() && it->second.stamp == gen_;
    }
    /// Payload of a marked value.
    Value at(Value v) const {
        return v < dense_.size() ? dense_[v].payload : sparse_.at(v).payload;
    }

private:
    struct Entry {
        std::uint32_t stamp = 0;
        Value payload = 0;
    };
    Entry& slot(Value v) { return v < dense_.size() ? dense_[v] : sparse_[v]; }

    std::vector<Entry> dense_;
    std::unordered_map<Value, Entry> sparse_;
    std::uint32_t gen_ = 1;
};

/// Cell reader for the heavy scans: sparse tables are expanded into a dense
/// copy when it fits a modest budget, since run lookups dominate otherwise.
class CellView {
public:
    explicit CellView(const FTable& table) : table_(table) {
        const Value n = table.n_max();
        const std::size_t cells = static_cast<std::size_t>((n + 1) * (n + 2) / 2);
        if (table.layout() != Layout::Sparse || cells * (sizeof(Value) + 1) > kBudget) return;
        values_.resize(cells);
        mex_.assign(cells, 0);
        for (Value r = 0; r <= n; ++r) {
            std::optional<Run> open;
            auto fill_to = [&](Value end) {
                for (Value q = open->q_start; q < end; ++q) values_[tri(q) + r] = open->value;
            };
            table.for_each_run(r, [&](const Run& run) {
                if (open) fill_to(run.q_start);
                mex_[tri(run.q_start) + r] = 1;
                open = run;
            });
            fill_to(n + 1);
        }
    }

    Value f(Value q, Value r) const {
        return values_.empty() ? table_.f(q, r) : values_[tri(q) + r];
    }
    bool is_mex_cell(Value q, Value r) const {
        return values_.empty() ? table_.is_mex_cell(q, r) : mex_[tri(q) + r] != 0;
    }

private:
    static constexpr std::size_t kBudget = std::size_t{256} << 20;
    static std::size_t tri(Value q) { return static_cast<std::size_t>(q * (q + 1) / 2); }

    const FTable& table_;
    std::vector<Value> values_;
    std::vector<std::uint8_t> mex_;
};

}  // namespace

std::string to_jsonl(const VerificationReport& report) {
    json j;
    j["name"] = report.name;
    j["bounds"] = report.bounds;
    j["passed"] = report.passed;
    j["counterexample"] = report.counterexample ? *report.counterexample : json(nullptr);
    j["cells_scanned"] = report.cells_scanned;
    j["elapsed_ms"] = report.elapsed.count();
    return j.dump();
}

VerificationReport check_nonattacking(const FTable& table) {
    const Value n = table.n_max();
    return timed("nonattacking", {{"n_max", n}}, [&](VerificationReport& report) {
        Marks seen(dense_width(table));

        // (a) distinct along each q.
        for (Value q = 0; q <= n; ++q) {
            seen.next();
            for (Value r = 0; r <= q; ++r) {
                const Value v = table.f(q, r);
                ++report.cells_scanned;
                if (seen.has(v)) {
                    fail(report,
                         {{"part", "a"}, {"q", q}, {"r1", seen.at(v)}, {"r2", r}, {"value", v}});
                    return;
                }
                seen.mark(v, r);
            }
        }

        // (b) within column s, value p is hit at most once by rows s < t < p.
        for (Value s = 0; s <= n; ++s) {
            seen.next();
            for (Value t = s + 1; t <= n; ++t) {
                const Value p = table.f(t, s);
                ++report.cells_scanned;
                if (t >= p) continue;
                if (seen.has(p)) {
                    fail(report,
                         {{"part", "b"}, {"s", s}, {"t1", seen.at(p)}, {"t2", t}, {"p", p}});
                    return;
                }
                seen.mark(p, t);
            }
        }

        // (c) R(q,r) only grows with q, so q = p-1 is the strongest case; the
        // smallest q reached by the offending element is reported.
        for (Value p = 1; p <= n; ++p) {
            for (Value r = 0; r < p; ++r) {
                if (table.f(p, r) != p) continue;
                for (Value a = 0; a < r; ++a) {
                    ++report.cells_scanned;
                    if (table.f(a, a) == p) {
                        fail(report, {{"part", "c"},
                                      {"p", p},
                                      {"r", r},
                                      {"q", r},
                                      {"source", "diagonal"},
                                      {"a", a}});
                        return;
                    }
                }
                for (Value a = r; a + 1 < p; ++a) {
                    ++report.cells_scanned;
                    if (table.f(a, r) == p) {
                        fail(report, {{"part", "c"},
                                      {"p", p},
                                      {"r", r},
                                      {"q", a + 1},
                                      {"source", "column"},
                                      {"a", a}});
                        return;
                    }
                }
            }
        }
    });
}

VerificationReport check_mex_cells(const FTable& table) {
    const Value n = table.n_max();
    return timed("mex_cells", {{"n_max", n}}, [&](VerificationReport& report) {
        const CellView view(table);
        const std::size_t width = dense_width(table);
        Marks in_r(width);
        Marks in_c(width);

        for (Value r = 0; r <= n; ++r) {
            // R(r,r) = {f(a,a) : a < r}; covered = |R n [1..q]|.
            in_r.next();
            Value covered = 0;
            for (Value a = 0; a < r; ++a) {
                const Value v = view.f(a, a);
                if (!in_r.has(v)) {
                    in_r.mark(v);
                    if (v >= 1 && v <= r) ++covered;
                }
            }
            for (Value q = r; q <= n; ++q) {
                if (q > r) {
                    // Threshold rises to q, then R gains f(q-1,r).
                    if (in_r.has(q)) ++covered;
                    const Value v = view.f(q - 1, r);
                    if (!in_r.has(v)) {
                        in_r.mark(v);
                        if (v >= 1 && v <= q) ++covered;
                    }
                }
                const Value fq = view.f(q, r);
                ++report.cells_scanned;
                if (fq <= q) continue;
                if (!view.is_mex_cell(q, r)) {
                    fail(report, {{"q", q}, {"r", r}, {"f", fq}, {"reason", "not a mex cell"}});
                    return;
                }
                in_c.next();
                Value total = covered;
                for (Value b = 0; b < r; ++b) {
                    const Value v = view.f(q, b);
                    if (v >= 1 && v <= q && !in_r.has(v) && !in_c.has(v)) {
                        in_c.mark(v);
                        ++total;
                    }
                }
                if (total != q) {
                    const BlockedSets sets = blocked_sets(q, r, table);
                    Value missing = 1;
                    while (std::binary_search(sets.all.begin(), sets.all.end(), missing)) ++missing;
                    fail(report, {{"q", q},
                                  {"r", r},
                                  {"f", fq},
                                  {"missing", missing},
                                  {"reason", "value <= q absent from B(q,r)"}});
                    return;
                }
            }
        }
    });
}

namespace {

enum class HoleConclusion { IntervalBlocking, RightmostHole };

VerificationReport scan_hole_hypothesis(const FTable& table, Value scan_bound,
                                        HoleConclusion conclusion) {
    const bool interval = conclusion == HoleConclusion::IntervalBlocking;
    return timed(
        interval ? "interval_blocking" : "rightmost_hole",
        {{"n_max", table.n_max()}, {"scan_bound", scan_bound}}, [&](VerificationReport& report) {
            if (scan_bound > table.n_max()) {
                throw OutOfRange("scan bound " + std::to_string(scan_bound) + " exceeds n_max " +
                                 std::to_string(table.n_max()));
            }

            // first_col[t][v]: smallest b with f(t,b) = v, or kNone. Then
            // v in C(t,r) iff first_col[t][v] < r.
            constexpr Value kNone = std::numeric_limits<Value>::max();
            // Only values up to scan_bound are ever queried.
            const Value width = scan_bound + 1;
            std::vector<std::vector<Value>> first_col(scan_bound + 1,
                                                      std::vector<Value>(width, kNone));
            for (Value t = 0; t <= scan_bound; ++t) {
                for (Value b = t + 1; b-- > 0;) {
                    const Value v = table.f(t, b);
                    if (v < width) first_col[t][v] = b;
                }
            }
            auto in_c = [&](Value v, Value t, Value r) { return v < width && first_col[t][v] < r; };

            for (Value p = 2; p <= scan_bound; ++p) {
                for (Value r = 0; r + 2 <= p; ++r) {
                    // Walking q downward, the hypothesis "p in C(t,r) for all q < t < p"
                    // holds until the first q with p not in C(q,r); only that q can
                    // satisfy both hypotheses.
                    for (Value q = p - 1; q > r; --q) {
                        ++report.cells_scanned;
                        if (in_c(p, q, r)) continue;
                        if (interval) {
                            for (Value v = q + 1; v < p; ++v) {
                                if (!in_c(v, q, r)) {
                                    fail(report, {{"r", r}, {"q", q}, {"p", p}, {"missing", v}});
                                    return;
                                }
                            }
                        } else {
                            const Value f = table.f(q, r);
                            if (f > q && f < p) {
                                fail(report, {{"r", r}, {"q", q}, {"p", p}, {"f", f}});
                                return;
                            }
                        }
                        break;
                    }
                }
            }
        });
}

}  // namespace

VerificationReport check_interval_blocking(const FTable& table, Value scan_bound) {
    return scan_hole_hypothesis(table, scan_bound, HoleConclusion::IntervalBlocking);
}

VerificationReport check_rightmost_hole(const FTable& table, Value scan_bound) {
    return scan_hole_hypothesis(table, scan_bound, HoleConclusion::RightmostHole);
}

VerificationReport check_recurrence(const FTable& table) {
    const Value n = table.n_max();
    return timed("recurrence", {{"n_max", n}}, [&](VerificationReport& report) {
        const CellView view(table);
        const std::size_t width = dense_width(table);
        Marks in_r(width);
        Marks in_c(width);

        for (Value r = 0; r <= n; ++r) {
            // covered = |R(q,r) n [1..q]|; R only grows with q.
            Value covered = 0;
            auto add_r = [&](Value v, Value q) {
                if (in_r.has(v)) return;
                in_r.mark(v);
                if (v >= 1 && v <= q) ++covered;
            };
            in_r.next();
            for (Value a = 0; a < r; ++a) add_r(view.f(a, a), r);
            Value r_mex = 1;
            for (Value q = r; q <= n; ++q) {
                ++report.cells_scanned;
                const Value f = view.f(q, r);
                const bool flagged = view.is_mex_cell(q, r);
                if (q > r) {
                    if (in_r.has(q)) ++covered;
                    const Value prev = view.f(q - 1, r);
                    add_r(prev, q);
                    if (prev < q) {
                        if (f != prev || flagged) {
                            fail(report, {{"q", q},
                                          {"r", r},
                                          {"f", f},
                                          {"expected", prev},
                                          {"mex_cell", flagged},
                                          {"reason",
                                           "constant branch: expected f(q-1,r), not a mex cell"}});
                            return;
                        }
                        continue;
                    }
                }
                in_c.next();
                Value c_only = 0;
                for (Value b = 0; b < r; ++b) {
                    const Value v = view.f(q, b);
                    if (in_c.has(v)) continue;
                    in_c.mark(v);
                    if (v >= 1 && v <= q && !in_r.has(v)) ++c_only;
                }
                // With {1..q} blocked the mex lies past q; otherwise below it.
                Value m = q + 1;
                if (covered + c_only != q) {
                    while (in_r.has(r_mex)) ++r_mex;
                    m = r_mex;
                }
                while (in_r.has(m) || in_c.has(m)) ++m;
                if (f != m || !flagged) {
                    fail(report, {{"q", q},
                                  {"r", r},
                                  {"f", f},
                                  {"expected", m},
                                  {"mex_cell", flagged},
                                  {"reason", "mex branch: expected mex B(q,r), a mex cell"}});
                    return;
                }
            }
        }
    });
}

VerificationReport check_diagonal_max(const FTable& table) {
    const Value n = table.n_max();
    return timed("diagonal_max", {{"n_max", n}}, [&](VerificationReport& report) {
        for (Value q = 0; q <= n; ++q) {
            const Value diag = table.f(q, q);
            ++report.cells_scanned;
            if (diag <= q) {
                fail(report, {{"q", q}, {"f_diag", diag}, {"reason", "f(q,q) <= q"}});
                return;
            }
            for (Value r = 0; r < q; ++r) {
                ++report.cells_scanned;
                const Value v = table.f(q, r);
                if (v > diag) {
                    fail(report, {{"q", q},
                                  {"r", r},
                                  {"f", v},
                                  {"f_diag", diag},
                                  {"reason", "off-diagonal value exceeds f(q,q)"}});
                    return;
                }
            }
        }
    });
}

VerificationReport check_rowstart_propagation(const FTable& table) {
    const Value n = table.n_max();
    return timed("rowstart_propagation", {{"n_max", n}}, [&](VerificationReport& report) {
        struct RowStart {
            Value p;
            Value r;
        };
        std::vector<RowStart> starts;
        for (Value p = 1; p <= n; ++p) {
            for (Value r = 0; r < p; ++r) {
                ++report.cells_scanned;
                if (table.f(p, r) == p) starts.push_back({p, r});
            }
        }

        // Row q's value -> first column holding it.
        Marks column_of(dense_width(table));
        for (Value q = 1; q <= n; ++q) {
            column_of.next();
            for (Value b = q + 1; b-- > 0;) column_of.mark(table.f(q, b), b);
            for (const RowStart& s : starts) {
                if (!(s.r < q && q < s.p)) continue;
                ++report.cells_scanned;
                if (!column_of.has(s.p) || column_of.at(s.p) >= s.r) {
                    fail(report, {{"p", s.p}, {"r", s.r}, {"q", q}, {"reason", "p not in C(q,r)"}});
                    return;
                }
            }
        }
    });
}

VerificationReport check_partition(const FTable& table) {
    const Value n = table.n_max();
    return timed("partition", {{"n_max", n}}, [&](VerificationReport& report) {
        // Any diagonal witness a of n has a < n because f(a,a) > a; values are
        // only certified for n <= n_max.
        std::vector<std::uint32_t> diagonal_hits(n + 1, 0);
        std::vector<Value> diagonal_witness(n + 1, 0);
        for (Value a = 0; a <= n; ++a) {
            const Value v = table.f(a, a);
            ++report.cells_scanned;
            if (v >= 1 && v <= n && a < v) {
                ++diagonal_hits[v];
                diagonal_witness[v] = a;
            }
        }
        const auto row_starts = row_start_set(table);

        for (Value k = 1; k <= n; ++k) {
            ++report.cells_scanned;
            const auto it = row_starts.find(k);
            const std::size_t s_hits = it == row_starts.end() ? 0 : it->second.size();
            const std::size_t d_hits = diagonal_hits[k];
            if (d_hits + s_hits == 1) continue;

            json cx = {{"n", k}, {"diagonal_witnesses", d_hits}, {"rowstart_witnesses", s_hits}};
            if (d_hits > 0 && s_hits > 0) {
                cx["reason"] = "n in both D and S";
            } else if (d_hits + s_hits == 0) {
                cx["reason"] = "n in neither D nor S";
            } else {
                cx["reason"] = "more than one witness";
            }
            if (d_hits > 0) cx["a"] = diagonal_witness[k];
            if (s_hits > 0) cx["r"] = it->second;
            fail(report, std::move(cx));
            return;
        }
    });
}

VerificationReport check_against_oracle(const FTable& table, Value oracle_bound,
                                        const ResourceLimits& limits) {
    return timed("against_oracle", {{"n_max", table.n_max()}, {"oracle_bound", oracle_bound}},
                 [&](VerificationReport& report) {
                     if (oracle_bound > table.n_max()) {
                         throw OutOfRange("oracle bound " + std::to_string(oracle_bound) +
                                          " exceeds n_max " + std::to_string(table.n_max()));
                     }
                     const OutcomeTable oracle = solve(oracle_bound, limits);

                     for (Value p = 1; p <= oracle_bound; ++p) {
                         for (Value q = 0; q <= p; ++q) {
                             for (Value r = 0; r <= q; ++r) {
                                 const Position3 pos(p, q, r);
                                 ++report.cells_scanned;
                                 const Outcome mine = is_p_position(table, pos);
                                 const Outcome truth = oracle.at(pos);
                                 if (mine != truth) {
                                     fail(report, {{"position", pos.to_string()},
                                                   {"table", to_string(mine)},
                                                   {"oracle", to_string(truth)}});
                                     return;
                                 }
                             }
                         }
                     }
                     auto cuts = [](const std::vector<Move>& ms) {
                         std::vector<std::string> out;
                         for (const Move& m : ms) out.push_back(m.cut());
                         return out;
                     };
                     for (Value k = 1; k <= oracle_bound; ++k) {
                         const Position3 start(k, k, k);
                         const auto mine = winning_moves(table, start);
                         const auto truth = winning_moves_bruteforce(start, oracle);
                         if (mine != truth) {
                             fail(report, {{"position", start.to_string()},
                                           {"table_moves", cuts(mine)},
                                           {"oracle_moves", cuts(truth)}});
                             return;
                         }
                     }
                 });
}

std::vector<VerificationReport> run_suite(const FTable& table, const SuiteBounds& bounds,
                                          const ResourceLimits& limits, const ReportSink& sink) {
    if (bounds.oracle_bound && *bounds.oracle_bound > table.n_max()) {
        throw OutOfRange("oracle bound exceeds n_max");
    }
    if (bounds.cubic_bound && *bounds.cubic_bound > table.n_max()) {
        throw OutOfRange("cubic bound exceeds n_max");
    }
    std::vector<VerificationReport> reports;
    auto emit = [&](VerificationReport report) {
        if (sink) sink(report);
        reports.push_back(std::move(report));
    };
    emit(check_nonattacking(table));
    emit(check_mex_cells(table));
    emit(check_recurrence(table));
    emit(check_diagonal_max(table));
    emit(check_rowstart_propagation(table));
    emit(check_partition(table));
    if (bounds.cubic_bound) {
        emit(check_interval_blocking(table, *bounds.cubic_bound));
        emit(check_rightmost_hole(table, *bounds.cubic_bound));
    }
    if (bounds.oracle_bound) emit(check_against_oracle(table, *bounds.oracle_bound, limits));
    return reports;
}

std::vector<VerificationReport> run_suite(Value n_max, const SuiteBounds& bounds, Layout engine,
                                          const ResourceLimits& limits) {
    const FTable table =
        engine == Layout::Dense ? build_reference(n_max, limits) : build_sparse(n_max, limits);
    return run_suite(table, bounds, limits);
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.passed; });
}

}  // namespace chomp3
