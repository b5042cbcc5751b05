#include "chomp3/position.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chomp3/errors.hpp"

namespace chomp3 {

Position3::Position3(Length p, Length q, Length r) : p_(p), q_(q), r_(r) {
    if (!(p >= q && q >= r)) {
        throw InvalidPosition("rows must be nonincreasing: " + to_string());
    }
    if (p == 0) {
        throw InvalidPosition("the first row must keep the poisoned square");
    }
}

std::string Position3::to_string() const {
    return std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Position3& pos) {
    return os << '[' << pos.to_string() << ']';
}

namespace {

Length parse_length(std::string_view field, std::string_view literal) {
    Length value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (field.empty() || !std::all_of(first, last, [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidPosition("malformed position literal '" + std::string(literal) + "'");
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw InvalidPosition("malformed position literal '" + std::string(literal) + "'");
    }
    return value;
}

}  // namespace

Position3 parse_position(std::string_view literal) {
    const auto c1 = literal.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : literal.find(',', c1 + 1);
    if (c2 == std::string_view::npos || literal.find(',', c2 + 1) != std::string_view::npos) {
        throw InvalidPosition("expected 'p,q,r', got '" + std::string(literal) + "'");
    }
    return Position3(parse_length(literal.substr(0, c1), literal),
                     parse_length(literal.substr(c1 + 1, c2 - c1 - 1), literal),
                     parse_length(literal.substr(c2 + 1), literal));
}

std::string Move::cut() const { return std::to_string(row) + ":" + std::to_string(new_length); }

std::ostream& operator<<(std::ostream& os, const Move& move) {
    return os << move.cut() << " -> " << move.result.to_string();
}

Move make_move(const Position3& pos, int row, Length a) {
    switch (row) {
        case 1:
            if (a >= 1 && a < pos.p()) {
                return {1, a, Position3(a, std::min(pos.q(), a), std::min(pos.r(), a))};
            }
            break;
        case 2:
            if (a < pos.q()) {
                return {2, a, Position3(pos.p(), a, std::min(pos.r(), a))};
            }
            break;
        case 3:
            if (a < pos.r()) {
                return {3, a, Position3(pos.p(), pos.q(), a)};
            }
            break;
        default:
            break;
    }
    throw InvalidPosition("illegal move " + std::to_string(row) + ":" + std::to_string(a) +
                          " from " + pos.to_string());
}

std::vector<Move> moves(const Position3& pos) {
    std::vector<Move> out;
    out.reserve(pos.p() - 1 + pos.q() + pos.r());
    for (Length a = pos.p() - 1; a >= 1; --a) out.push_back(make_move(pos, 1, a));
    for (Length a = pos.q(); a-- > 0;) out.push_back(make_move(pos, 2, a));
    for (Length a = pos.r(); a-- > 0;) out.push_back(make_move(pos, 3, a));
    return out;
}

std::vector<Position3> options(const Position3& pos) {
    std::vector<Position3> out;
    for (const Move& m : moves(pos)) out.push_back(m.result);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace chomp3
