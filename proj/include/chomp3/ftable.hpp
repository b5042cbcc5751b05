#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace chomp3 {

using Value = std::uint64_t;

enum class Layout { Dense, Sparse };

/// f(q,r) = value for q_start <= q < next run's q_start (or through n_max).
struct Run {
    Value q_start;
    Value value;

    friend bool operator==(const Run&, const Run&) = default;
};

struct SparseColumn {
    Value r;
    std::vector<Run> runs;

    friend bool operator==(const SparseColumn&, const SparseColumn&) = default;
};

namespace detail {

/// Column storage for sparse tables. The head holds f(r + i, r) for
/// i < head_size(), each a run start, as 16-bit offsets from a 32-bit base
/// per block of kBlock entries; offsets that do not fit are patched.
struct PackedColumn {
    static constexpr std::size_t kBlock = 64;
    static constexpr std::int16_t kPatched = INT16_MIN;

    struct Patch {
        std::uint32_t index;
        std::uint32_t value;
    };

    std::vector<std::uint32_t> bases;
    std::vector<std::int16_t> offsets;
    std::vector<Patch> patches;  // sorted by index
    std::vector<Run> tail;       // runs after the head, explicit starts

    std::size_t head_size() const noexcept { return offsets.size(); }
    Value head(std::size_t i) const;
    void push_head(std::uint32_t value);
    void shrink();
    std::size_t bytes() const noexcept;
};

}  // namespace detail

/// Triangular table of f(q,r) for 0 <= r <= q <= n_max, with the branch of
/// the recurrence that produced each cell.
///
/// Dense tables store every cell. Sparse tables store each column as runs:
/// a packed head for the consecutive mex cells starting at q = r, followed by
/// explicit 64-bit runs for anything that does not fit that shape. In a
/// sparse table the mex cells are exactly the run starts.
class FTable {
public:
    /// Empty dense table sized for n_max; every cell must then be set.
    static FTable make_dense(Value n_max);

    Value n_max() const noexcept { return n_max_; }
    Layout layout() const noexcept { return layout_; }

    /// f(q,r). Throws OutOfRange unless r <= q <= n_max.
    Value f(Value q, Value r) const;

    /// Whether (q,r) took the mex branch. Throws OutOfRange like f.
    bool is_mex_cell(Value q, Value r) const;

    /// Visits the runs of column r in q order.
    void for_each_run(Value r, const std::function<void(const Run&)>& visit) const;

    /// Runs of column r (materialized).
    SparseColumn column(Value r) const;

    /// Dense only: store a cell value and branch flag.
    void set(Value q, Value r, Value value, bool mex_cell);

    /// Replace a single cell value, keeping its branch flag. Dense tables only;
    /// used to inject faults when exercising the checkers.
    void overwrite(Value q, Value r, Value value);

    /// Approximate heap footprint.
    std::size_t memory_bytes() const noexcept;

    /// Number of cells whose mex flag is set.
    std::size_t mex_cell_count() const;

private:
    friend class SparseTableBuilder;

    static std::size_t tri(Value q) noexcept { return static_cast<std::size_t>(q * (q + 1) / 2); }
    void require_cell(Value q, Value r) const;

    Value n_max_ = 0;
    Layout layout_ = Layout::Dense;
    std::vector<Value> dense_values_;
    std::vector<std::uint8_t> dense_mex_;
    std::vector<detail::PackedColumn> columns_;
};

struct CellMismatch {
    Value q;
    Value r;
    Value left;
    Value right;
};

/// First cell (q-major, r ascending) where the two tables differ, comparing
/// up to the smaller n_max. Both value and branch flag are compared; for a
/// flag-only difference `left == right`.
std::optional<CellMismatch> first_mismatch(const FTable& a, const FTable& b);

}  // namespace chomp3
