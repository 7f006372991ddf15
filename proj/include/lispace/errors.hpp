#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lispace {

/// Input bytes could not be decoded as a sequence. Carries the 1-based index
/// of the offending token plus its line (1-based) and byte offset (0-based).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t token, std::size_t line,
               std::size_t byte_offset)
        : std::runtime_error(message + " (token " + std::to_string(token) + ", line " +
                             std::to_string(line) + ", byte " + std::to_string(byte_offset) + ")"),
          token_(token),
          line_(line),
          byte_offset_(byte_offset) {}

    std::size_t token() const noexcept { return token_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t token_;
    std::size_t line_;
    std::size_t byte_offset_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant did not hold: an anchor pile was not fully consumed
/// by a pass, a forward/reversed pile intersection came up empty, or no
/// storable pile existed in a selection window although the budget regime
/// guarantees one. Always a bug or corrupted input state, never a user error.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lispace
