#pragma once

#include <cstdint>
#include <vector>

#include "chomp3/limits.hpp"
#include "chomp3/position.hpp"

namespace chomp3 {

enum class Outcome : std::uint8_t { P, N };

const char* to_string(Outcome o) noexcept;

/// Outcome of every three-row position with first row at most `bound`,
/// computed by plain retrograde analysis over the move rules. Shares no code
/// with the recurrence engines.
class OutcomeTable {
public:
    Length bound() const noexcept { return bound_; }

    /// Number of valid positions covered.
    std::size_t size() const noexcept;

    bool contains(const Position3& pos) const noexcept { return pos.p() <= bound_; }

    /// Throws OutOfRange for positions with p > bound.
    Outcome at(const Position3& pos) const;

    friend bool operator==(const OutcomeTable&, const OutcomeTable&) = default;

private:
    friend OutcomeTable solve(Length bound, const ResourceLimits& limits);

    enum class Cell : std::uint8_t { Unresolved, P, N };

    static std::size_t index(Length p, Length q, Length r) noexcept {
        return p * (p + 1) * (p + 2) / 6 + q * (q + 1) / 2 + r;
    }

    Length bound_ = 0;
    std::vector<Cell> cells_;
};

/// Retrograde solve of all positions with p <= bound (bound >= 1).
/// Positions are resolved in lexicographic (p,q,r) order; every option of a
/// position precedes it in that order, and solve aborts if one does not.
OutcomeTable solve(Length bound, const ResourceLimits& limits = {});

/// The moves from `pos` whose result is a P-position in `table`.
std::vector<Move> winning_moves_bruteforce(const Position3& pos, const OutcomeTable& table);

}  // namespace chomp3
