#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chomp3/ftable.hpp"
#include "chomp3/oracle.hpp"

namespace chomp3::test {

// f(q,r) for q <= 14, read off a retrograde solve at bound 40: the unique
// p > r with [p, min(p,q), r] a P-position.
inline const std::vector<std::vector<Value>> kSmallTable = {
    {1},
    {2, 3},
    {3, 2, 4},
    {4, 2, 5, 6},
    {5, 2, 6, 7, 8},
    {6, 2, 7, 5, 9, 10},
    {7, 2, 8, 5, 10, 9, 11},
    {8, 2, 9, 5, 7, 11, 12, 13},
    {9, 2, 10, 5, 7, 12, 13, 14, 15},
    {10, 2, 11, 5, 7, 13, 9, 12, 14, 16},
    {11, 2, 12, 5, 7, 14, 9, 15, 16, 17, 18},
    {12, 2, 13, 5, 7, 15, 9, 16, 17, 14, 19, 20},
    {13, 2, 14, 5, 7, 16, 9, 17, 12, 18, 20, 19, 21},
    {14, 2, 15, 5, 7, 17, 9, 18, 12, 19, 21, 22, 23, 24},
    {15, 2, 16, 5, 7, 18, 9, 19, 12, 20, 14, 17, 22, 23, 25},
};

// Winning first move from [n,n,n] for n = 1..40, same solve: "row:length".
inline const std::vector<const char*> kOpeningCuts = {
    "2:0",  "3:1",  "2:1",  "2:2",  "3:3",  "2:3",  "3:4",  "2:4",  "3:6",  "2:5",
    "2:6",  "3:8",  "2:7",  "3:10", "2:8",  "2:9",  "3:12", "2:10", "3:13", "2:11",
    "2:12", "3:15", "3:16", "2:13", "2:14", "3:18", "2:15", "2:16", "3:20", "2:17",
    "3:21", "2:18", "3:23", "2:19", "2:20", "3:25", "2:21", "3:27", "2:22", "2:23",
};

/// Independent reading of f from an outcome table: the unique p > r, p <= bound,
/// with [p, min(p,q), r] a P-position, or nullopt if none lies within the bound.
inline std::optional<Value> f_from_outcomes(Value q, Value r, const OutcomeTable& outcomes) {
    for (Value p = r + 1; p <= outcomes.bound(); ++p) {
        if (outcomes.at(Position3(p, std::min(p, q), r)) == Outcome::P) return p;
    }
    return std::nullopt;
}

/// Deterministic generator for the property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
    }

    Position3 position(Length max_p) {
        const Length p = uniform(1, max_p);
        const Length q = uniform(0, p);
        const Length r = uniform(0, q);
        return Position3(p, q, r);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace chomp3::test
