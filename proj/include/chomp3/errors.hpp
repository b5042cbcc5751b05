#pragma once

#include <stdexcept>
#include <string>

namespace chomp3 {

/// Rejected position literal or row lengths that are not nonincreasing.
class InvalidPosition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed table file or unknown format name.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table or oracle was queried outside the range it covers.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Requested computation would exceed the configured memory ceiling.
class ResourceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The opening-move alternatives did not resolve to exactly one move.
/// Carries a dump of the cells involved.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& what, std::string dump)
        : std::runtime_error(what), dump_(std::move(dump)) {}

    const std::string& dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

}  // namespace chomp3
