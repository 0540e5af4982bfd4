#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synkit {

/// Raised when an automaton document cannot be parsed or validated.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a construction would exceed a configured resource cap.
/// The message always names the cap that was hit.
class LimitError : public std::runtime_error {
public:
    LimitError(const std::string& what, std::size_t limit)
        : std::runtime_error(what), limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

} // namespace synkit
