#include "chomp3/play.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "chomp3/errors.hpp"
#include "chomp3/recurrence.hpp"

namespace chomp3 {

std::optional<Move> engine_move(const FTable& table, const Position3& pos) {
    const auto winning = winning_moves(table, pos);
    if (!winning.empty()) return winning.front();

    std::optional<Move> best;
    for (const Move& m : moves(pos)) {
        if (!best || m.result.squares() > best->result.squares()) best = m;
    }
    return best;
}

namespace {

constexpr const char* kUsage =
    "enter a move as '<row> <length>', e.g. '3 1' cuts row 3 to length 1";

bool parse_number(std::string_view token, Length& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return !token.empty() && ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::variant<Move, std::string> parse_player_move(std::string_view line, const Position3& pos) {
    std::istringstream ss{std::string(line)};
    std::string row_tok, len_tok, extra;
    if (!(ss >> row_tok >> len_tok) || (ss >> extra)) return std::string(kUsage);

    Length row = 0;
    Length length = 0;
    if (!parse_number(row_tok, row) || !parse_number(len_tok, length) || row < 1 || row > 3) {
        return std::string(kUsage);
    }
    try {
        return make_move(pos, static_cast<int>(row), length);
    } catch (const InvalidPosition&) {
        return "illegal move from " + pos.to_string() + "; " + kUsage;
    }
}

std::string render(const Position3& pos) {
    std::string out;
    const Length rows[] = {pos.p(), pos.q(), pos.r()};
    for (int i = 0; i < 3; ++i) {
        out += std::to_string(i + 1) + " |";
        for (Length j = 0; j < rows[i]; ++j) out += (i == 0 && j == 0) ? " X" : " #";
        out += '\n';
    }
    return out;
}

int play_session(const FTable& table, const Position3& start, FirstPlayer first, std::istream& in,
                 std::ostream& out) {
    Position3 pos = start;
    bool human_turn = first == FirstPlayer::Human;
    const Position3 poison_only(1, 0, 0);

    while (true) {
        out << render(pos);
        if (pos == poison_only) {
            out << (human_turn ? "You are" : "The engine is")
                << " left with the poisoned square and loses.\n";
            return 0;
        }
        if (human_turn) {
            std::optional<Move> chosen;
            while (!chosen) {
                out << "your move (row length): " << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\ninput closed, game abandoned\n";
                    return 0;
                }
                auto parsed = parse_player_move(line, pos);
                if (auto* m = std::get_if<Move>(&parsed)) {
                    chosen = *m;
                } else {
                    out << std::get<std::string>(parsed) << '\n';
                }
            }
            out << "you play " << *chosen << '\n';
            pos = chosen->result;
        } else {
            const Move m = *engine_move(table, pos);
            out << "engine plays " << m << '\n';
            pos = m.result;
        }
        human_turn = !human_turn;
    }
}

}  // namespace chomp3
