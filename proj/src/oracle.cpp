#include "chomp3/oracle.hpp"

#include <cstdlib>
#include <iostream>

#include "chomp3/errors.hpp"

namespace chomp3 {

const char* to_string(Outcome o) noexcept { return o == Outcome::P ? "P" : "N"; }

std::size_t OutcomeTable::size() const noexcept {
    // Every (p,q,r) with bound >= p >= q >= r, minus the empty board.
    return cells_.empty() ? 0 : cells_.size() - 1;
}

Outcome OutcomeTable::at(const Position3& pos) const {
    if (!contains(pos)) {
        throw OutOfRange("position " + pos.to_string() + " outside oracle bound " +
                         std::to_string(bound_));
    }
    return cells_[index(pos.p(), pos.q(), pos.r())] == Cell::P ? Outcome::P : Outcome::N;
}

OutcomeTable solve(Length bound, const ResourceLimits& limits) {
    if (bound < 1) throw OutOfRange("oracle bound must be at least 1");
    // Guard the cubic before it overflows.
    if (bound > (Length{1} << 20)) {
        throw ResourceExhausted("oracle bound " + std::to_string(bound) + " is too large");
    }
    const std::size_t n_cells = OutcomeTable::index(bound + 1, 0, 0);
    limits.require(n_cells * sizeof(OutcomeTable::Cell), "oracle table");

    OutcomeTable table;
    table.bound_ = bound;
    table.cells_.assign(n_cells, OutcomeTable::Cell::Unresolved);

    using Cell = OutcomeTable::Cell;
    for (Length p = 1; p <= bound; ++p) {
        for (Length q = 0; q <= p; ++q) {
            for (Length r = 0; r <= q; ++r) {
                const Position3 pos(p, q, r);
                bool has_p_option = false;
                for (const Move& m : moves(pos)) {
                    const Position3& x = m.result;
                    const Cell c = table.cells_[OutcomeTable::index(x.p(), x.q(), x.r())];
                    if (c == Cell::Unresolved) {
                        std::cerr << "oracle: option " << x << " of " << pos
                                  << " evaluated out of order\n";
                        std::abort();
                    }
                    if (c == Cell::P) {
                        has_p_option = true;
                        break;
                    }
                }
                table.cells_[OutcomeTable::index(p, q, r)] = has_p_option ? Cell::N : Cell::P;
            }
        }
    }
    return table;
}

std::vector<Move> winning_moves_bruteforce(const Position3& pos, const OutcomeTable& table) {
    if (!table.contains(pos)) {
        throw OutOfRange("position " + pos.to_string() + " outside oracle bound " +
                         std::to_string(table.bound()));
    }
    std::vector<Move> out;
    for (Move& m : moves(pos)) {
        if (table.at(m.result) == Outcome::P) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace chomp3
