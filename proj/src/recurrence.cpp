#include "chomp3/recurrence.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "chomp3/errors.hpp"

namespace chomp3 {

Value mex(std::span<const Value> values) {
    // The answer is at most |values| + 1, so larger entries never matter.
    std::vector<char> seen(values.size() + 2, 0);
    for (Value v : values) {
        if (v >= 1 && v < seen.size()) seen[v] = 1;
    }
    Value k = 1;
    while (seen[k]) ++k;
    return k;
}

namespace {

std::vector<Value> sorted_unique(std::vector<Value> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

BlockedSets blocked_sets(Value q, Value r, const FTable& table) {
    if (r > q || q > table.n_max()) {
        throw OutOfRange("blocked_sets(" + std::to_string(q) + "," + std::to_string(r) +
                         ") outside table with n_max " + std::to_string(table.n_max()));
    }
    std::vector<Value> row2;
    std::vector<Value> row3;
    row2.reserve(q);
    row3.reserve(r);
    for (Value a = 0; a < r; ++a) row2.push_back(table.f(a, a));
    for (Value a = r; a < q; ++a) row2.push_back(table.f(a, r));
    for (Value b = 0; b < r; ++b) row3.push_back(table.f(q, b));

    BlockedSets out;
    out.row2 = sorted_unique(std::move(row2));
    out.row3 = sorted_unique(std::move(row3));
    std::set_union(out.row2.begin(), out.row2.end(), out.row3.begin(), out.row3.end(),
                   std::back_inserter(out.all));
    return out;
}

FTable build_reference(Value n_max, const ResourceLimits& limits) {
    if (n_max > (Value{1} << 32)) throw ResourceExhausted("n_max too large for a dense table");
    const std::size_t cells = static_cast<std::size_t>((n_max + 1) * (n_max + 2) / 2);
    limits.require(cells * (2 * sizeof(Value) + 1), "dense table");

    FTable table = FTable::make_dense(n_max);
    // Column-major copies so the blocked set reads contiguous memory; it is
    // still rebuilt from scratch for every mex cell.
    std::vector<std::vector<Value>> columns(n_max + 1);
    std::vector<Value> diagonal;
    std::vector<Value> row;
    std::vector<Value> blocked;
    for (Value q = 0; q <= n_max; ++q) {
        row.clear();
        for (Value r = 0; r <= q; ++r) {
            std::vector<Value>& column = columns[r];
            Value v = 0;
            bool is_mex = true;
            if (q > r && column.back() < q) {
                v = column.back();
                is_mex = false;
            } else {
                blocked.assign(diagonal.begin(), diagonal.begin() + r);
                blocked.insert(blocked.end(), column.begin(), column.end());
                blocked.insert(blocked.end(), row.begin(), row.end());
                v = mex(blocked);
            }
            table.set(q, r, v, is_mex);
            column.push_back(v);
            row.push_back(v);
        }
        diagonal.push_back(row.back());
    }
    return table;
}

class SparseTableBuilder {
public:
    SparseTableBuilder(Value n_max, const ResourceLimits& limits)
        : n_max_(n_max), limits_(limits) {}

    FTable build() {
        const std::size_t columns = static_cast<std::size_t>(n_max_) + 1;
        const std::size_t per_column =
            sizeof(detail::PackedColumn) + sizeof(Bits) + 3 * sizeof(Value);
        if (n_max_ > std::numeric_limits<std::uint32_t>::max()) {
            throw ResourceExhausted("n_max too large");
        }
        limits_.require(columns * per_column, "sparse table working set");

        FTable table;
        table.n_max_ = n_max_;
        table.layout_ = Layout::Sparse;
        table.columns_.resize(columns);
        current_.assign(columns, 0);
        diagonal_.assign(columns, 0);
        col_bits_.resize(columns);
        col_cursor_.assign(columns, 1);
        fixed_bytes_ = columns * per_column;

        for (Value q = 0; q <= n_max_; ++q) {
            sweep_row(q, table);
            limits_.require(footprint(), "sparse table");
        }
        return table;
    }

private:
    using Word = std::uint64_t;
    using Bits = std::vector<Word>;
    static constexpr std::size_t kWordBits = 64;
    // Scans read up to four words past the word holding the answer.
    static constexpr std::size_t kPadWords = 6;

    void sweep_row(Value q, FTable& table) {
        row_.assign(width_, 0);
        Value row_cursor = 1;
        for (Value r = 0; r <= q; ++r) {
            if (r > 0) {
                // C(q,r) gains f(q,r-1); the diagonal prefix gains f(r-1,r-1).
                set_bit(row_, current_[r - 1]);
                set_bit(row_, diagonal_[r - 1]);
                while (test_bit(row_, row_cursor)) ++row_cursor;
            }
            Value v;
            if (q > r && current_[r] < q) {
                v = current_[r];
            } else {
                v = mex_cell(q, r, row_cursor);
                record_run(table.columns_[r], q, r, v);
                if (v <= q) settle(table.columns_[r], r);
            }
            current_[r] = v;
            if (r == q) diagonal_[q] = v;
        }
    }

    Value mex_cell(Value q, Value r, Value row_cursor) {
        Bits& col = col_bits_[r];
        if (q == r) {
            col.assign(width_, 0);
            col_cursor_[r] = 1;
            ++active_columns_;
        }
        if (col.size() < width_) col.resize(width_, 0);
        if (row_.size() < width_) row_.resize(width_, 0);

        const Value start = std::max(row_cursor, col_cursor_[r]);
        const Word* a = row_.data();
        const Word* b = col.data();
        std::size_t w = start / kWordBits;
        Word m = a[w] | b[w] | ((Word{1} << (start % kWordBits)) - 1);
        if (m == ~Word{0}) {
            for (++w;; w += 4) {
                const Word m0 = a[w] | b[w];
                const Word m1 = a[w + 1] | b[w + 1];
                const Word m2 = a[w + 2] | b[w + 2];
                const Word m3 = a[w + 3] | b[w + 3];
                if ((m0 & m1 & m2 & m3) != ~Word{0}) {
                    if (m0 != ~Word{0}) {
                        m = m0;
                    } else if (m1 != ~Word{0}) {
                        m = m1, w += 1;
                    } else if (m2 != ~Word{0}) {
                        m = m2, w += 2;
                    } else {
                        m = m3, w += 3;
                    }
                    break;
                }
            }
        }
        const Value v = w * kWordBits + static_cast<Value>(std::countr_one(m));

        grow_to_hold(v);
        if (col.size() < width_) col.resize(width_, 0);
        set_bit(col, v);
        while (test_bit(col, col_cursor_[r])) ++col_cursor_[r];
        return v;
    }

    void record_run(detail::PackedColumn& col, Value q, Value r, Value v) {
        const std::size_t before = col.bytes();
        if (col.tail.empty() && q == r + col.head_size() &&
            v <= std::numeric_limits<std::uint32_t>::max() &&
            col.head_size() < std::numeric_limits<std::uint32_t>::max()) {
            col.push_head(static_cast<std::uint32_t>(v));
        } else {
            col.tail.push_back(Run{q, v});
        }
        stored_bytes_ += col.bytes() - before;
    }

    // Once f(q,r) <= q the column is constant from here on: drop its bit-vector
    // and trim its run storage.
    void settle(detail::PackedColumn& col, Value r) {
        Bits().swap(col_bits_[r]);
        --active_columns_;
        const std::size_t before = col.bytes();
        col.shrink();
        stored_bytes_ -= before - col.bytes();
    }

    void grow_to_hold(Value v) {
        const std::size_t need = v / kWordBits + kPadWords;
        if (need > width_) width_ = std::max(need, width_ + width_ / 4);
        if (row_.size() < width_) row_.resize(width_, 0);
    }

    static void set_bit(Bits& bits, Value k) { bits[k / kWordBits] |= Word{1} << (k % kWordBits); }
    static bool test_bit(const Bits& bits, Value k) {
        return (bits[k / kWordBits] >> (k % kWordBits)) & 1;
    }

    std::size_t footprint() const {
        return fixed_bytes_ + stored_bytes_ + (active_columns_ + 1) * width_ * sizeof(Word);
    }

    Value n_max_;
    ResourceLimits limits_;
    std::size_t width_ = 8;
    Bits row_;
    std::vector<Value> current_;   // f(q-1,r) before visiting (q,r), f(q,r) after
    std::vector<Value> diagonal_;  // f(a,a)
    std::vector<Bits> col_bits_;   // {f(a,r) : r <= a < q} for unsettled columns
    std::vector<Value> col_cursor_;
    std::size_t active_columns_ = 0;
    std::size_t fixed_bytes_ = 0;
    std::size_t stored_bytes_ = 0;
};

FTable build_sparse(Value n_max, const ResourceLimits& limits) {
    return SparseTableBuilder(n_max, limits).build();
}

Outcome is_p_position(const FTable& table, const Position3& pos) {
    if (pos.q() > table.n_max()) {
        throw OutOfRange("position " + pos.to_string() +
                         " needs n_max >= " + std::to_string(pos.q()));
    }
    return table.f(pos.q(), pos.r()) == pos.p() ? Outcome::P : Outcome::N;
}

std::vector<Move> winning_moves(const FTable& table, const Position3& pos) {
    if (pos.p() > table.n_max()) {
        throw OutOfRange("position " + pos.to_string() +
                         " needs n_max >= " + std::to_string(pos.p()));
    }
    std::vector<Move> out;
    for (Move& m : moves(pos)) {
        if (is_p_position(table, m.result) == Outcome::P) out.push_back(std::move(m));
    }
    return out;
}

std::set<Value> diagonal_set(const FTable& table) {
    std::set<Value> out;
    for (Value a = 0; a <= table.n_max(); ++a) out.insert(table.f(a, a));
    return out;
}

std::map<Value, std::vector<Value>> row_start_set(const FTable& table) {
    std::map<Value, std::vector<Value>> out;
    for (Value r = 0; r <= table.n_max(); ++r) {
        // A run of value v over [start, end] holds f(v,r) = v iff start <= v <= end.
        bool have = false;
        Run prev{0, 0};
        auto close = [&](Value end) {
            if (have && prev.value > r && prev.q_start <= prev.value && prev.value <= end) {
                out[prev.value].push_back(r);
            }
        };
        table.for_each_run(r, [&](const Run& run) {
            close(run.q_start - 1);
            prev = run;
            have = true;
        });
        close(table.n_max());
    }
    return out;
}

const char* to_string(OpeningKind kind) noexcept {
    return kind == OpeningKind::Diagonal ? "diagonal" : "rowstart";
}

OpeningMove unique_opening_move(const FTable& table, Value n) {
    if (n < 1 || n > table.n_max()) {
        throw OutOfRange("opening move for n=" + std::to_string(n) +
                         " needs 1 <= n <= n_max=" + std::to_string(table.n_max()));
    }
    std::vector<Value> diagonal;
    std::vector<Value> row_start;
    for (Value a = 0; a < n; ++a) {
        if (table.f(a, a) == n) diagonal.push_back(a);
    }
    for (Value r = 0; r < n; ++r) {
        if (table.f(n, r) == n) row_start.push_back(r);
    }

    if (diagonal.size() + row_start.size() != 1) {
        std::ostringstream dump;
        dump << "n=" << n << " diagonal witnesses a:";
        for (Value a : diagonal) dump << ' ' << a;
        dump << " | row-start witnesses r:";
        for (Value r : row_start) dump << ' ' << r;
        dump << " | f(" << n << ",0.." << n << "):";
        for (Value r = 0; r <= n; ++r) dump << ' ' << table.f(n, r);
        dump << " | f(a,a) a<" << n << ":";
        for (Value a = 0; a < n; ++a) dump << ' ' << table.f(a, a);
        throw TheoremViolation("THEOREM-VIOLATION: [" + std::to_string(n) + "," +
                                   std::to_string(n) + "," + std::to_string(n) + "] has " +
                                   std::to_string(diagonal.size() + row_start.size()) +
                                   " opening-move witnesses",
                               dump.str());
    }

    const Position3 start(n, n, n);
    if (!diagonal.empty()) {
        const Value a = diagonal.front();
        Move m = make_move(start, 2, a);
        return {n, OpeningKind::Diagonal, a, m.result, m};
    }
    const Value r = row_start.front();
    Move m = make_move(start, 3, r);
    return {n, OpeningKind::RowStart, r, m.result, m};
}

}  // namespace chomp3
