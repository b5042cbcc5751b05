#include "chomp3/limits.hpp"

#include "chomp3/errors.hpp"

namespace chomp3 {

void ResourceLimits::require(std::size_t bytes, const std::string& what) const {
    if (bytes > memory_ceiling) {
        throw ResourceExhausted(what + " needs " + std::to_string(bytes) +
                                " bytes, memory ceiling is " + std::to_string(memory_ceiling));
    }
}

}  // namespace chomp3
