#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "lispace/adjustable.hpp"
#include "lispace/budget.hpp"
#include "lispace/element.hpp"
#include "lispace/patience.hpp"
#include "lispace/sequence.hpp"

namespace lispace {

/// An element known to be the rank-th member of some longest increasing
/// subsequence of the view: it sits in forward pile P_rank and reversed pile
/// Q_{lis - rank + 1}.
struct NearMid {
    std::size_t rank = 0;
    Element element;
    std::size_t lis_value = 0;
};

/// Find a near-mid element: materialize the shallowest forward pile P_k with
/// k >= ceil(lis/2) and |P_k| <= s, then stream the reversed pile
/// Q_{lis-k+1} and return the first streamed element whose position occurs
/// in P_k. The intersection is never empty; an empty one raises
/// IntegrityError. Peak working memory is the fixed arena_words(s).
NearMid near_mid(SequenceSource& source, const View& view, Budget budget,
                 BudgetMeter& meter);

namespace detail {
NearMid near_mid_with_lis(SequenceSource& source, const View& view, Budget budget,
                          BudgetMeter& meter, std::size_t lis);
}

/// Split a view at a pivot element of a longest increasing subsequence:
/// left = positions before the pivot with values below it, right = positions
/// after it with values above it, both within the parent window. Pure
/// arithmetic on bounds, no copying; lis(left) + 1 + lis(right) = lis(view).
std::pair<View, View> split(const View& view, const Element& pivot);

using ElementSink = std::function<void(const Element&)>;

/// Extraction instrumentation.
struct ReconstructTrace {
    std::size_t max_depth = 0;
    std::size_t peak_words = 0;
};

/// Emit a longest increasing subsequence of the view in increasing position
/// order: small-lis views (lis <= 3|view|/s, or lis <= 2) go to
/// base_case_lis; otherwise recurse around a near-mid pivot. Frames charge a
/// constant number of words each, so peak memory stays within
/// arena_words(s) + 8 * depth.
void recursive_lis(SequenceSource& source, const View& view, Budget budget,
                   BudgetMeter& meter, const ElementSink& emit,
                   ReconstructTrace* trace = nullptr);

/// Whole-input wrapper: collects the emitted subsequence into a LisResult.
/// The collection buffer is the output, outside the working-space budget.
LisResult find_lis(SequenceSource& source, Budget budget,
                   ReconstructTrace* trace = nullptr);

}  // namespace lispace
