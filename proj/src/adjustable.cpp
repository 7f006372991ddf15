#include "lispace/adjustable.hpp"

#include <algorithm>

namespace lispace {
namespace {

bool precedes(Direction dir, std::int64_t a, std::int64_t b) {
    return dir == Direction::forward ? a < b : a > b;
}

}  // namespace

PileSizeReport simulate_piles(SequenceSource& source, const View& view,
                              const AnchorPile& anchor, std::size_t j,
                              BudgetMeter& meter, const PlacementSink& on_place,
                              std::size_t* visited) {
    const std::size_t i = anchor.index;
    if (j <= i) throw std::invalid_argument("target pile must lie beyond the anchor");
    const std::size_t span = j - i;
    const Direction dir = anchor.direction;

    MeterLease workspace(meter, (2 * span + 8) * kWordBits);
    std::vector<std::int64_t> tops(span);      // valid prefix [0, built)
    std::vector<std::size_t> counts(span, 0);
    std::size_t built = 0;  // piles constructed beyond the anchor
    std::size_t r = 0;      // anchor elements consumed so far
    bool stopped = false;

    source.scan(dir, view.window, view.range, [&](const Element& e) {
        if (visited) ++*visited;
        if (!anchor.elements.empty()) {
            // The anchor's elements arrive in push order; identity is by
            // position, never by value.
            if (r < anchor.elements.size() &&
                e.position == anchor.elements[r].position) {
                if (e.value != anchor.elements[r].value)
                    throw IntegrityError(
                        "anchor element disagrees with the source value");
                ++r;
                return true;
            }
            // Earlier piles sort before the anchor's current top. Before the
            // anchor's first element arrives, everything unmatched is earlier.
            if (r == 0 || precedes(dir, e.value, anchor.elements[r - 1].value))
                return true;
        }
        // Later piles: once pile j exists, anything beyond its top is out.
        if (built == span && precedes(dir, tops[span - 1], e.value)) return true;

        std::size_t h;
        if (built == 0 || precedes(dir, tops[built - 1], e.value)) {
            h = built++;
        } else {
            const auto first = tops.begin();
            h = static_cast<std::size_t>(
                std::lower_bound(first, first + static_cast<std::ptrdiff_t>(built),
                                 e.value,
                                 [dir](std::int64_t top, std::int64_t v) {
                                     return precedes(dir, top, v);
                                 }) -
                first);
        }
        tops[h] = e.value;
        ++counts[h];
        if (on_place && !on_place(i + 1 + h, e)) {
            stopped = true;
            return false;
        }
        return true;
    });

    if (!stopped && r != anchor.elements.size())
        throw IntegrityError("anchor pile not fully consumed by the pass");

    PileSizeReport report;
    report.base_index = i;
    report.sizes.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(built));
    if (built < span) report.lis_found = i + built;
    return report;
}

PileSizeReport pile_sizes_from(SequenceSource& source, const View& view,
                               const AnchorPile& anchor, std::size_t j,
                               BudgetMeter& meter) {
    return simulate_piles(source, view, anchor, j, meter);
}

AnchorPile compute_pile(SequenceSource& source, const View& view,
                        const AnchorPile& anchor, std::size_t j, BudgetMeter& meter) {
    AnchorPile out{j, anchor.direction, {}, MeterLease(meter, 0)};
    const PileSizeReport report = simulate_piles(
        source, view, anchor, j, meter, [&](std::size_t pile, const Element& e) {
            if (pile == j) {
                out.elements.push_back(e);
                out.storage.grow_words(2);
            }
            return true;
        });
    if (report.lis_found)
        throw std::invalid_argument("pile index exceeds the lis of the view");
    return out;
}

namespace detail {

// Anchor selection, shared by adjustable_length and the near-mid search.
// Primary rule: deepest pile of size <= s in the upper half (i+s+1 .. i+2s)
// of the window. In the budget regime (s^2 >= range length) the averaging
// bound guarantees a hit, so anything else is an integrity violation. Below
// the regime we fall back to the whole window and finally to the smallest
// pile available, trading the anchor-size bound for progress.
std::size_t choose_anchor_index(const PileSizeReport& report, std::size_t s,
                                bool regime) {
    const std::size_t i = report.base_index;
    const std::size_t window = report.sizes.size();  // == 2s when lis not found
    auto size_at = [&](std::size_t off) { return report.sizes[off]; };

    const std::size_t half = std::min(window, s);
    for (std::size_t off = window; off-- > half;)
        if (size_at(off) <= s) return i + 1 + off;
    if (regime)
        throw IntegrityError("no pile of size <= s in the selection window");
    for (std::size_t off = half; off-- > 0;)
        if (size_at(off) <= s) return i + 1 + off;
    std::size_t best = window - 1;
    for (std::size_t off = window; off-- > 0;)
        if (size_at(off) < size_at(best)) best = off;
    return i + 1 + best;
}

}  // namespace detail

std::size_t adjustable_length(SequenceSource& source, const View& view, Budget budget,
                              BudgetMeter& meter, AdjustableTrace* trace,
                              Direction dir) {
    if (budget.s < 2) throw std::invalid_argument("budget must be at least 2");
    const std::size_t n = view.range.size();
    const std::size_t s = effective_budget(budget.s, n);
    const bool regime = s * s >= n;

    ReservedArena arena(meter, arena_words(s));
    BudgetMeter& scratch = arena.scratch();

    AnchorPile anchor = AnchorPile::dummy(dir);
    if (trace) *trace = {0, 0, s, {}};
    bool first_pass = true;
    for (;;) {
        if (trace) ++trace->iterations;
        const std::size_t j = anchor.index + 2 * s;
        std::size_t visited = 0;
        const PileSizeReport report =
            simulate_piles(source, view, anchor, j, scratch, {},
                           (trace && first_pass) ? &visited : nullptr);
        if (trace && first_pass) trace->view_length = visited;
        first_pass = false;

        if (report.lis_found) return *report.lis_found;

        const std::size_t target = detail::choose_anchor_index(report, s, regime);
        anchor = compute_pile(source, view, anchor, target, scratch);
        if (trace) trace->anchors.emplace_back(target, anchor.elements.size());
    }
}

}  // namespace lispace
