#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace chomp3 {

using Length = std::uint64_t;

/// Three-row Chomp position [p,q,r] with p >= q >= r >= 0 and p >= 1.
///
/// Rows are stored sorted; the constructor rejects unsorted input instead of
/// reordering it.
class Position3 {
public:
    Position3(Length p, Length q, Length r);

    Length p() const noexcept { return p_; }
    Length q() const noexcept { return q_; }
    Length r() const noexcept { return r_; }

    Length squares() const noexcept { return p_ + q_ + r_; }

    /// "p,q,r"
    std::string to_string() const;

    friend auto operator<=>(const Position3&, const Position3&) = default;

private:
    Length p_;
    Length q_;
    Length r_;
};

std::ostream& operator<<(std::ostream& os, const Position3& pos);

/// Parses the literal "p,q,r" (decimal, no spaces). Throws InvalidPosition.
Position3 parse_position(std::string_view literal);

struct Move {
    int row;            // 1, 2 or 3
    Length new_length;  // length the row is cut to
    Position3 result;

    /// "row:new_length"
    std::string cut() const;

    friend bool operator==(const Move&, const Move&) = default;
};

std::ostream& operator<<(std::ostream& os, const Move& move);

/// Applies the truncation of `row` to `new_length`; throws InvalidPosition
/// if the cut is not a legal move from `pos`.
Move make_move(const Position3& pos, int row, Length new_length);

/// All legal moves, ordered by row ascending, then new_length descending.
/// Cutting row 1 to zero (taking the poisoned square) is not a legal move.
std::vector<Move> moves(const Position3& pos);

/// Positions reachable in one move, deduplicated and sorted ascending.
std::vector<Position3> options(const Position3& pos);

}  // namespace chomp3

template <>
struct std::hash<chomp3::Position3> {
    std::size_t operator()(const chomp3::Position3& pos) const noexcept {
        std::size_t h = std::hash<chomp3::Length>{}(pos.p());
        h = h * 1000003u ^ std::hash<chomp3::Length>{}(pos.q());
        h = h * 1000003u ^ std::hash<chomp3::Length>{}(pos.r());
        return h;
    }
};
