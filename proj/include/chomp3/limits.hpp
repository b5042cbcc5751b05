#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace chomp3 {

inline constexpr std::size_t kDefaultMemoryCeiling = std::size_t{4} << 30;  // 4 GiB

struct ResourceLimits {
    std::size_t memory_ceiling = kDefaultMemoryCeiling;

    /// Throws ResourceExhausted if `bytes` exceeds the ceiling.
    void require(std::size_t bytes, const std::string& what) const;
};

}  // namespace chomp3
