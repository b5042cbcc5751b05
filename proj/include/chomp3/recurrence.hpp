#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chomp3/ftable.hpp"
#include "chomp3/limits.hpp"
#include "chomp3/oracle.hpp"
#include "chomp3/position.hpp"

namespace chomp3 {

/// Smallest positive integer not in `values`. Zero entries are ignored.
Value mex(std::span<const Value> values);

/// Values excluded when computing f(q,r):
///   row2  R = {f(a,a) : a < r} u {f(a,r) : r <= a < q}   (cutting the second row)
///   row3  C = {f(q,b) : b < r}                           (cutting the third row)
///   all   B = R u C
/// Each set is sorted and duplicate-free.
struct BlockedSets {
    std::vector<Value> row2;
    std::vector<Value> row3;
    std::vector<Value> all;
};

/// Recomputes R, C and B from the stored values of `table`.
BlockedSets blocked_sets(Value q, Value r, const FTable& table);

/// Straightforward dense evaluation: q ascending, r ascending, and a freshly
/// materialized blocked set for every mex cell.
FTable build_reference(Value n_max, const ResourceLimits& limits = {});

/// Row sweep that keeps the third-row blocked values and the diagonal prefix
/// in one bit-vector per row, and the distinct values of each unsettled
/// column in another; a mex cell is the first zero of their union, scanned
/// a word at a time from the larger of the two cursors. Columns are stored as
/// runs.
FTable build_sparse(Value n_max, const ResourceLimits& limits = {});

/// f(q,r); O(1) dense, O(log runs) sparse.
inline Value f_lookup(const FTable& table, Value q, Value r) { return table.f(q, r); }

/// P iff f(q,r) == p. Requires pos.q() <= n_max.
Outcome is_p_position(const FTable& table, const Position3& pos);

/// Moves from `pos` to P-positions. Requires pos.p() <= n_max.
std::vector<Move> winning_moves(const FTable& table, const Position3& pos);

/// {f(a,a) : a <= n_max}.
std::set<Value> diagonal_set(const FTable& table);

/// p -> every r < p with f(p,r) = p, for p <= n_max. Read off the column runs.
std::map<Value, std::vector<Value>> row_start_set(const FTable& table);

enum class OpeningKind { Diagonal, RowStart };

const char* to_string(OpeningKind kind) noexcept;

struct OpeningMove {
    Value n;
    OpeningKind kind;
    Value parameter;  // a with f(a,a) = n, or r with f(n,r) = n
    Position3 target;
    Move move;
};

/// The winning first move from [n,n,n]. Throws OutOfRange unless
/// 1 <= n <= n_max, and TheoremViolation (with a dump of the diagonal
/// witnesses and row n) unless exactly one diagonal or row-start witness
/// exists.
OpeningMove unique_opening_move(const FTable& table, Value n);

}  // namespace chomp3
