#include "lispace/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lispace {

namespace detail {

NearMid near_mid_with_lis(SequenceSource& source, const View& view, Budget budget,
                          BudgetMeter& meter, std::size_t lis) {
    if (lis == 0) throw std::invalid_argument("near-mid element of an empty view");
    const std::size_t n = view.range.size();
    const std::size_t s = effective_budget(budget.s, n);
    const bool regime = s * s >= n;
    const std::size_t k_min = (lis + 1) / 2;  // ceil(lis/2)

    ReservedArena arena(meter, arena_words(s));
    BudgetMeter& scratch = arena.scratch();

    // Phase 1: materialize the shallowest storable pile P_k with k >= k_min.
    AnchorPile anchor = AnchorPile::dummy(Direction::forward);
    AnchorPile mid_pile;
    std::size_t k = 0;
    for (;;) {
        const std::size_t j = std::min(anchor.index + 2 * s, lis);
        const PileSizeReport report = simulate_piles(source, view, anchor, j, scratch);
        if (report.lis_found)
            throw IntegrityError("pile window ended before the known lis");

        const std::size_t lo = std::max(k_min, anchor.index + 1);
        std::optional<std::size_t> pick;
        for (std::size_t c = lo; c <= j && !pick; ++c)
            if (report.size_of(c) <= s) pick = c;
        if (!pick && j == lis) {
            // No storable pile at or past k_min (only reachable below the
            // budget regime): take the smallest one and accept the size.
            std::size_t best = lo;
            for (std::size_t c = lo + 1; c <= lis; ++c)
                if (report.size_of(c) < report.size_of(best)) best = c;
            pick = best;
        }
        if (pick) {
            k = *pick;
            mid_pile = compute_pile(source, view, anchor, k, scratch);
            break;
        }
        const std::size_t target = choose_anchor_index(report, s, regime);
        anchor = compute_pile(source, view, anchor, target, scratch);
    }

    // Phase 2: stream the reversed pile Q_{lis-k+1} and return its first
    // element that also lies in P_k. Membership is by position, through a
    // sorted index over the stored pile.
    const std::size_t rev_target = lis - k + 1;
    AnchorPile rev_anchor = AnchorPile::dummy(Direction::backward);
    while (rev_anchor.index + 2 * s < rev_target) {
        const std::size_t j = rev_anchor.index + 2 * s;
        const PileSizeReport report =
            simulate_piles(source, view, rev_anchor, j, scratch);
        if (report.lis_found)
            throw IntegrityError("reversed pile window ended before the known lis");
        const std::size_t target = choose_anchor_index(report, s, regime);
        rev_anchor = compute_pile(source, view, rev_anchor, target, scratch);
    }

    std::vector<std::size_t> positions;
    positions.reserve(mid_pile.elements.size());
    for (const Element& e : mid_pile.elements) positions.push_back(e.position);
    std::sort(positions.begin(), positions.end());
    MeterLease index_lease(scratch, positions.size() * kWordBits);

    std::optional<Element> hit;
    enumerate_pile(source, view, rev_anchor, rev_target, scratch,
                   [&](const Element& e) {
                       if (std::binary_search(positions.begin(), positions.end(),
                                              e.position)) {
                           hit = e;
                           return false;
                       }
                       return true;
                   });
    if (!hit)
        throw IntegrityError("forward and reversed piles share no position");
    return {k, *hit, lis};
}

}  // namespace detail

NearMid near_mid(SequenceSource& source, const View& view, Budget budget,
                 BudgetMeter& meter) {
    const std::size_t lis = adjustable_length(source, view, budget, meter);
    return detail::near_mid_with_lis(source, view, budget, meter, lis);
}

std::pair<View, View> split(const View& view, const Element& pivot) {
    const View left{{view.window.lower, pivot.value},
                    {view.range.begin, pivot.position}};
    const View right{{pivot.value, view.window.upper},
                     {pivot.position + 1, view.range.end}};
    return {left, right};
}

namespace {

class Extractor {
public:
    Extractor(SequenceSource& source, Budget budget, BudgetMeter& meter,
              const ElementSink& emit)
        : source_(source), budget_(budget), meter_(meter), emit_(emit) {}

    void run(const View& view, std::size_t depth) {
        MeterLease frame(meter_, 8 * kWordBits);
        max_depth_ = std::max(max_depth_, depth);

        AdjustableTrace trace;
        const std::size_t lis =
            adjustable_length(source_, view, budget_, meter_, &trace);
        if (lis == 0) return;

        // Base case for short subsequences; lis <= 2 is always a base case
        // since the near-mid rank window degenerates there.
        if (lis <= 2 || lis * budget_.s <= 3 * trace.view_length) {
            const LisResult base =
                base_case_lis(source_, view.window, view.range, &meter_);
            for (const Element& e : *base.subsequence) emit_(e);
            return;
        }

        const NearMid mid =
            detail::near_mid_with_lis(source_, view, budget_, meter_, lis);
        const auto [left, right] = split(view, mid.element);
        run(left, depth + 1);
        emit_(mid.element);
        run(right, depth + 1);
    }

    std::size_t max_depth() const { return max_depth_; }

private:
    SequenceSource& source_;
    Budget budget_;
    BudgetMeter& meter_;
    const ElementSink& emit_;
    std::size_t max_depth_ = 0;
};

}  // namespace

void recursive_lis(SequenceSource& source, const View& view, Budget budget,
                   BudgetMeter& meter, const ElementSink& emit,
                   ReconstructTrace* trace) {
    if (budget.s < 2) throw std::invalid_argument("budget must be at least 2");
    // The budget is clamped once against the root view and never rescaled
    // down the recursion.
    const Budget effective{effective_budget(budget.s, view.range.size())};
    Extractor extractor(source, effective, meter, emit);
    extractor.run(view, 1);
    if (trace) {
        trace->max_depth = extractor.max_depth();
        trace->peak_words = meter.peak_words();
    }
}

LisResult find_lis(SequenceSource& source, Budget budget, ReconstructTrace* trace) {
    BudgetMeter meter;
    std::vector<Element> collected;  // output buffer, outside the budget
    ReconstructTrace local;
    recursive_lis(
        source, View::full(source.size()), budget, meter,
        [&](const Element& e) { collected.push_back(e); }, &local);
    if (trace) *trace = local;
    return {collected.size(), std::move(collected)};
}

}  // namespace lispace
