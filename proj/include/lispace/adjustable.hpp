#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lispace/budget.hpp"
#include "lispace/element.hpp"
#include "lispace/errors.hpp"
#include "lispace/patience.hpp"
#include "lispace/sequence.hpp"

namespace lispace {

/// A pile stored explicitly as a filtering anchor. Index 0 is the dummy
/// sentinel pile (-inf ahead of a forward run, +inf ahead of a reversed one),
/// represented by an empty element list rather than extreme values. The
/// lease carries the meter charge for the stored elements.
struct AnchorPile {
    std::size_t index = 0;
    Direction direction = Direction::forward;
    std::vector<Element> elements;
    MeterLease storage;

    bool is_dummy() const { return index == 0; }

    static AnchorPile dummy(Direction dir) { return {0, dir, {}, {}}; }

    /// Anchor from an explicitly known pile (tests, callers holding full
    /// families). Uncharged.
    static AnchorPile from_pile(const Pile& pile, Direction dir) {
        return {pile.index, dir, pile.elements, {}};
    }
};

/// Sizes |P_{i+1}| .. |P_{min(j, lis)}| computed from anchor P_i; when the
/// target pile j stayed empty, lis_found holds the exact lis of the view.
struct PileSizeReport {
    std::size_t base_index = 0;
    std::vector<std::size_t> sizes;
    std::optional<std::size_t> lis_found;

    std::size_t size_of(std::size_t pile_index) const {
        return sizes.at(pile_index - base_index - 1);
    }
};

/// Placement callback of the filtered simulation: 1-based pile index and the
/// element pushed there. Returning false stops the pass early.
using PlacementSink = std::function<bool(std::size_t, const Element&)>;

/// One filtered pass of (reversed) patience sorting that reconstructs piles
/// (anchor.index, j] only: elements of earlier piles are skipped via the
/// anchor (matched by position, compared against its current top), elements
/// of later piles via the current top of pile j. Reports every placement to
/// `on_place` when given and counts the elements passing the view filter
/// into `visited` when given. Working memory: 2(j - i) + O(1) words.
PileSizeReport simulate_piles(SequenceSource& source, const View& view,
                              const AnchorPile& anchor, std::size_t j,
                              BudgetMeter& meter, const PlacementSink& on_place = {},
                              std::size_t* visited = nullptr);

/// Pile sizes from a stored anchor in one pass (no placement sink exposed).
PileSizeReport pile_sizes_from(SequenceSource& source, const View& view,
                               const AnchorPile& anchor, std::size_t j,
                               BudgetMeter& meter);

/// Materialize pile j itself, recording its elements in push order.
/// Requires anchor.index < j <= lis of the view; throws std::invalid_argument
/// past the lis (use pile_sizes_from first).
AnchorPile compute_pile(SequenceSource& source, const View& view,
                        const AnchorPile& anchor, std::size_t j, BudgetMeter& meter);

/// Stream pile j without storing it: the visitor sees each element as it is
/// pushed (for a reversed run that is increasing value order). The visitor
/// may return bool; false stops the pass.
template <typename Visitor>
void enumerate_pile(SequenceSource& source, const View& view, const AnchorPile& anchor,
                    std::size_t j, BudgetMeter& meter, Visitor&& visit) {
    bool stopped = false;
    const PileSizeReport report = simulate_piles(
        source, view, anchor, j, meter, [&](std::size_t pile, const Element& e) {
            if (pile != j) return true;
            if (!detail::invoke_visitor(visit, e)) {
                stopped = true;
                return false;
            }
            return true;
        });
    if (!stopped && report.lis_found)
        throw std::invalid_argument("pile index exceeds the lis of the view");
}

/// Per-run instrumentation of adjustable_length.
struct AdjustableTrace {
    std::size_t iterations = 0;    // anchor windows processed (passes <= 2x)
    std::size_t view_length = 0;   // elements passing the view filter
    std::size_t effective_s = 0;   // budget after clamping
    std::vector<std::pair<std::size_t, std::size_t>> anchors;  // (index, size)
};

/// Memory-adjustable lis: repeatedly computes the sizes of the next 2s piles
/// from the current anchor, then stores the deepest pile of size <= s in the
/// upper half of that window as the new anchor. Peak working memory is the
/// fixed arena_words(s); passes are at most 2*ceil(lis/s) + 2 once
/// s >= ceil(sqrt(n)). Below that regime the algorithm stays correct but may
/// store a larger anchor when no small pile exists in a window.
std::size_t adjustable_length(SequenceSource& source, const View& view, Budget budget,
                              BudgetMeter& meter, AdjustableTrace* trace = nullptr,
                              Direction dir = Direction::forward);

namespace detail {

/// Next anchor from a full 2s-window size report: deepest pile of size <= s
/// in the upper half of the window; below the budget regime, progressively
/// weaker fallbacks keep the run moving.
std::size_t choose_anchor_index(const PileSizeReport& report, std::size_t s,
                                bool regime);

}  // namespace detail

}  // namespace lispace
