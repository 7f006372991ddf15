#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "lispace/element.hpp"
#include "lispace/errors.hpp"

namespace lispace {

/// Open value interval (lower, upper); an unset bound is unbounded. Both
/// bounds are strict: increasing subsequences are strict, and the recursion
/// passes a pivot's value as both a new lower and a new upper bound. The
/// unbounded states double as the -inf/+inf sentinels of the dummy piles, so
/// extreme integer values never collide with legal input.
struct ValueWindow {
    std::optional<std::int64_t> lower;  // exclusive
    std::optional<std::int64_t> upper;  // exclusive

    static ValueWindow all() { return {}; }
    static ValueWindow below(std::int64_t ub) { return {std::nullopt, ub}; }
    static ValueWindow above(std::int64_t lb) { return {lb, std::nullopt}; }
    static ValueWindow between(std::int64_t lb, std::int64_t ub) { return {lb, ub}; }

    bool contains(std::int64_t v) const {
        return (!lower || v > *lower) && (!upper || v < *upper);
    }

    ValueWindow intersect(const ValueWindow& other) const {
        ValueWindow out;
        out.lower = !lower ? other.lower
                           : (!other.lower ? lower : std::max(*lower, *other.lower));
        out.upper = !upper ? other.upper
                           : (!other.upper ? upper : std::min(*upper, *other.upper));
        return out;
    }
};

/// Half-open position range [begin, end) within the parent source.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    static IndexRange full(std::size_t n) { return {0, n}; }
    std::size_t size() const { return end - begin; }
    bool empty() const { return begin >= end; }
};

/// A filtered slice of a source: the elements of `range` whose values lie
/// strictly inside `window`. Positions stay global.
struct View {
    ValueWindow window;
    IndexRange range;

    static View full(std::size_t n) { return {ValueWindow::all(), IndexRange::full(n)}; }
};

/// Cumulative access counters of one source.
///   - reads: total element fetches;
///   - forward_passes / backward_passes: completed traversals of a nonempty
///     active range (partial scans count toward seek_cost only);
///   - reversals: changes of cursor direction;
///   - seek_cost: sum of |i - j| over consecutive accesses, the travel cost
///     of a sequential-access medium.
struct AccessStats {
    std::uint64_t reads = 0;
    std::uint64_t forward_passes = 0;
    std::uint64_t backward_passes = 0;
    std::uint64_t reversals = 0;
    std::uint64_t seek_cost = 0;

    friend bool operator==(const AccessStats&, const AccessStats&) = default;
};

inline AccessStats operator-(const AccessStats& a, const AccessStats& b) {
    return {a.reads - b.reads, a.forward_passes - b.forward_passes,
            a.backward_passes - b.backward_passes, a.reversals - b.reversals,
            a.seek_cost - b.seek_cost};
}

namespace detail {

template <typename Visitor>
bool invoke_visitor(Visitor&& visit, const Element& e) {
    if constexpr (std::is_void_v<std::invoke_result_t<Visitor&, const Element&>>) {
        visit(e);
        return true;
    } else {
        return visit(e);
    }
}

}  // namespace detail

/// Read-only sequential-access input. All element access funnels through
/// scan(), which meters reads, passes, reversals and cursor travel. A source
/// and its counters are confined to one computation at a time; distinct
/// sources over the same data may run concurrently.
class SequenceSource {
public:
    virtual ~SequenceSource() = default;
    SequenceSource(const SequenceSource&) = delete;
    SequenceSource& operator=(const SequenceSource&) = delete;

    std::size_t size() const { return size_; }
    const AccessStats& stats() const { return stats_; }

    void reset_stats() {
        stats_ = {};
        has_last_ = false;
        last_direction_ = 0;
    }

    /// Visit the elements of `range` whose values lie strictly inside
    /// `window`, in the requested direction, carrying original positions.
    /// Every element of the range costs one read whether or not it passes
    /// the filter; a completed scan of a nonempty range costs one pass. The
    /// visitor may return bool; returning false stops the scan early, which
    /// charges the partial travel but no pass. Returns this scan's delta.
    template <typename Visitor>
    AccessStats scan(Direction dir, const ValueWindow& window, IndexRange range,
                     Visitor&& visit) {
        if (range.begin > range.end || range.end > size_)
            throw std::out_of_range("scan range outside source");
        const AccessStats before = stats_;
        bool completed = true;
        if (dir == Direction::forward) {
            for (std::size_t i = range.begin; i < range.end; ++i) {
                const std::int64_t v = read(i);
                if (!window.contains(v)) continue;
                if (!detail::invoke_visitor(visit, Element{v, i})) {
                    completed = false;
                    break;
                }
            }
        } else {
            for (std::size_t i = range.end; i-- > range.begin;) {
                const std::int64_t v = read(i);
                if (!window.contains(v)) continue;
                if (!detail::invoke_visitor(visit, Element{v, i})) {
                    completed = false;
                    break;
                }
            }
        }
        if (completed && !range.empty()) {
            if (dir == Direction::forward)
                ++stats_.forward_passes;
            else
                ++stats_.backward_passes;
        }
        return stats_ - before;
    }

    template <typename Visitor>
    AccessStats scan(Direction dir, const View& view, Visitor&& visit) {
        return scan(dir, view.window, view.range, std::forward<Visitor>(visit));
    }

    template <typename Visitor>
    AccessStats scan_all(Direction dir, Visitor&& visit) {
        return scan(dir, ValueWindow::all(), IndexRange::full(size_),
                    std::forward<Visitor>(visit));
    }

protected:
    explicit SequenceSource(std::size_t size) : size_(size) {}

    /// Raw fetch without accounting; index is always < size().
    virtual std::int64_t fetch(std::size_t index) = 0;

private:
    std::int64_t read(std::size_t index) {
        if (has_last_) {
            stats_.seek_cost +=
                index >= last_index_ ? index - last_index_ : last_index_ - index;
            const int step = index > last_index_ ? 1 : (index < last_index_ ? -1 : 0);
            if (step != 0) {
                if (last_direction_ != 0 && step != last_direction_) ++stats_.reversals;
                last_direction_ = step;
            }
        }
        has_last_ = true;
        last_index_ = index;
        ++stats_.reads;
        return fetch(index);
    }

    std::size_t size_;
    AccessStats stats_{};
    bool has_last_ = false;
    std::size_t last_index_ = 0;
    int last_direction_ = 0;
};

enum class FileFormat { text, binary };

/// In-memory source over the given values, counters zeroed.
std::unique_ptr<SequenceSource> open_array(std::vector<std::int64_t> values);

/// Streaming source over a file. Text: ASCII decimal integers separated by
/// whitespace, optional leading '-'. Binary: little-endian signed 64-bit
/// integers, no header. The file is validated (and its length counted) up
/// front; afterwards elements are re-read through a small block cache, so
/// working memory stays at a constant number of words plus the I/O buffer.
std::unique_ptr<SequenceSource> open_file(const std::filesystem::path& path,
                                          FileFormat format);

}  // namespace lispace
