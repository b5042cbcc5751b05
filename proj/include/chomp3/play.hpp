#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "chomp3/ftable.hpp"
#include "chomp3/position.hpp"

namespace chomp3 {

/// The engine's reply from `pos`: the first winning move if one exists,
/// otherwise the move leaving the most squares (first in move order on
/// ties). Empty only at [1,0,0].
std::optional<Move> engine_move(const FTable& table, const Position3& pos);

/// Parses "row length" typed by a player. On failure returns a message
/// suitable for re-prompting.
std::variant<Move, std::string> parse_player_move(std::string_view line, const Position3& pos);

/// Rows drawn top to bottom; 'X' is the poisoned square.
std::string render(const Position3& pos);

enum class FirstPlayer { Human, Engine };

/// Plays one game on the terminal streams. Returns when a player is left
/// with only the poisoned square or when input ends.
int play_session(const FTable& table, const Position3& start, FirstPlayer first, std::istream& in,
                 std::ostream& out);

}  // namespace chomp3
