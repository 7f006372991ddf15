#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace lispace {

/// One input element: its value and its zero-based position in the original
/// sequence. Positions are global and never renumbered by filtered views,
/// so piles from independent runs can be intersected by position.
struct Element {
    std::int64_t value = 0;
    std::size_t position = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) {
    return os << e.value << "@" << e.position;
}

enum class Direction { forward, backward };

}  // namespace lispace
