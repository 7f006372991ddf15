#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lispace/budget.hpp"
#include "lispace/element.hpp"
#include "lispace/sequence.hpp"

namespace lispace {

/// A pile built by (reversed) patience sorting: elements in push order, so
/// back() is the top. Forward piles are non-increasing in value and strictly
/// increasing in position; reversed piles mirror both.
struct Pile {
    std::size_t index = 0;  // 1-based pile number
    std::vector<Element> elements;

    const Element& top() const { return elements.back(); }
};

struct PileFamily {
    Direction direction = Direction::forward;
    std::vector<Pile> piles;

    std::size_t lis() const { return piles.size(); }
};

struct LisResult {
    std::size_t length = 0;
    /// Extracted subsequence in increasing position order, when requested.
    std::optional<std::vector<Element>> subsequence;
};

/// Observer invoked after every push with the 1-based pile index and the
/// element; lets tests replay a run step by step.
using PushObserver = std::function<void(std::size_t, const Element&)>;

/// Full Patience Sorting: scans left to right, places each element on the
/// leftmost pile whose top is >= the element, opens a new pile otherwise.
/// The final pile count equals the lis. Stores every pile; the memory-hungry
/// reference the budgeted algorithms are measured against.
PileFamily ps_piles(SequenceSource& source, BudgetMeter* meter = nullptr,
                    const PushObserver& on_push = {});

/// Reversed Patience Sorting: scans right to left with mirrored comparisons
/// (leftmost pile whose top is <= the element; new pile when the element is
/// below every top). Pile count equals the lis; pile j holds exactly the
/// elements whose longest increasing subsequence starting there has length j.
PileFamily rps_piles(SequenceSource& source, BudgetMeter* meter = nullptr,
                     const PushObserver& on_push = {});

/// Full run plus back-pointers: extracts the lis by walking predecessors
/// from the top of the last pile (fixed choice, for reproducible output).
LisResult ps_extract(SequenceSource& source, BudgetMeter* meter = nullptr);

/// Tops-only Patience Sorting over a filtered view. Returns an element of
/// the final pile (the one most recently pushed there), or nullopt when
/// nothing survives the filter. Working memory: one word per pile plus
/// constants.
std::optional<Element> bounded_topmost_run(SequenceSource& source,
                                           const ValueWindow& window,
                                           const IndexRange& range,
                                           BudgetMeter* meter = nullptr);

/// Lis extraction for views whose lis k is small: k tops-only runs, each
/// upper-bounded by the previous output, buffering the k outputs and
/// emitting them in increasing position order. Working memory O(k) words.
LisResult base_case_lis(SequenceSource& source, const ValueWindow& window,
                        const IndexRange& range, BudgetMeter* meter = nullptr);

}  // namespace lispace
