#include "lispace/patience.hpp"

#include <algorithm>

#include "lispace/errors.hpp"

namespace lispace {
namespace {

// Pile-order comparison: "a sorts before b among the tops". Forward tops
// increase left to right, reversed tops decrease.
bool precedes(Direction dir, std::int64_t a, std::int64_t b) {
    return dir == Direction::forward ? a < b : a > b;
}

// Leftmost pile that accepts v (top >= v forward, top <= v reversed).
// Tops are strictly ordered, so the binary search has no ties.
std::size_t placement(const std::vector<std::int64_t>& tops, std::size_t built,
                      Direction dir, std::int64_t v) {
    const auto first = tops.begin();
    return static_cast<std::size_t>(
        std::lower_bound(first, first + static_cast<std::ptrdiff_t>(built), v,
                         [dir](std::int64_t top, std::int64_t x) {
                             return precedes(dir, top, x);
                         }) -
        first);
}

PileFamily family_run(SequenceSource& source, Direction dir, BudgetMeter* meter,
                      const PushObserver& on_push) {
    PileFamily family{dir, {}};
    std::vector<std::int64_t> tops;
    MeterLease lease = meter ? MeterLease(*meter, 8 * kWordBits) : MeterLease();
    source.scan_all(dir, [&](const Element& e) {
        std::size_t j;
        if (tops.empty() || precedes(dir, tops.back(), e.value)) {
            j = tops.size();
            tops.push_back(e.value);
            family.piles.push_back(Pile{j + 1, {}});
            lease.grow_words(1);  // one more top
        } else {
            j = placement(tops, tops.size(), dir, e.value);
            tops[j] = e.value;
        }
        family.piles[j].elements.push_back(e);
        lease.grow_words(2);  // stored element
        if (on_push) on_push(j + 1, e);
    });
    return family;
}

}  // namespace

PileFamily ps_piles(SequenceSource& source, BudgetMeter* meter,
                    const PushObserver& on_push) {
    return family_run(source, Direction::forward, meter, on_push);
}

PileFamily rps_piles(SequenceSource& source, BudgetMeter* meter,
                     const PushObserver& on_push) {
    return family_run(source, Direction::backward, meter, on_push);
}

LisResult ps_extract(SequenceSource& source, BudgetMeter* meter) {
    std::vector<std::int64_t> tops;
    std::vector<std::vector<Element>> piles;
    // predecessors[j][t]: top of pile j-1 when piles[j][t] was pushed
    std::vector<std::vector<Element>> predecessors;
    MeterLease lease = meter ? MeterLease(*meter, 8 * kWordBits) : MeterLease();
    source.scan_all(Direction::forward, [&](const Element& e) {
        std::size_t j;
        if (tops.empty() || tops.back() < e.value) {
            j = tops.size();
            tops.push_back(e.value);
            piles.emplace_back();
            predecessors.emplace_back();
            lease.grow_words(1);
        } else {
            j = placement(tops, tops.size(), Direction::forward, e.value);
            tops[j] = e.value;
        }
        if (j > 0) {
            predecessors[j].push_back(piles[j - 1].back());
            lease.grow_words(2);
        }
        piles[j].push_back(e);
        lease.grow_words(2);
    });

    LisResult result;
    result.length = piles.size();
    std::vector<Element> seq;
    if (!piles.empty()) {
        seq.reserve(piles.size());
        std::size_t j = piles.size() - 1;
        std::size_t t = piles[j].size() - 1;  // seed from the final pile's top
        seq.push_back(piles[j][t]);
        while (j > 0) {
            const Element prev = predecessors[j][t];
            --j;
            t = static_cast<std::size_t>(
                std::find_if(piles[j].begin(), piles[j].end(),
                             [&](const Element& x) { return x.position == prev.position; }) -
                piles[j].begin());
            seq.push_back(prev);
        }
        std::reverse(seq.begin(), seq.end());
    }
    result.subsequence = std::move(seq);
    return result;
}

namespace {

struct TopmostOutcome {
    std::optional<Element> final_pile_element;
    std::size_t pile_count = 0;
};

TopmostOutcome topmost_run(SequenceSource& source, const ValueWindow& window,
                           const IndexRange& range, BudgetMeter* meter) {
    std::vector<std::int64_t> tops;  // one word per pile
    std::optional<Element> last_on_final;
    MeterLease lease = meter ? MeterLease(*meter, 4 * kWordBits) : MeterLease();
    source.scan(Direction::forward, window, range, [&](const Element& e) {
        if (tops.empty() || tops.back() < e.value) {
            tops.push_back(e.value);
            last_on_final = e;
            lease.grow_words(1);
        } else {
            const std::size_t j = placement(tops, tops.size(), Direction::forward, e.value);
            tops[j] = e.value;
            if (j + 1 == tops.size()) last_on_final = e;
        }
    });
    return {last_on_final, tops.size()};
}

}  // namespace

std::optional<Element> bounded_topmost_run(SequenceSource& source,
                                           const ValueWindow& window,
                                           const IndexRange& range, BudgetMeter* meter) {
    return topmost_run(source, window, range, meter).final_pile_element;
}

LisResult base_case_lis(SequenceSource& source, const ValueWindow& window,
                        const IndexRange& range, BudgetMeter* meter) {
    MeterLease buffer = meter ? MeterLease(*meter, 4 * kWordBits) : MeterLease();
    const TopmostOutcome first = topmost_run(source, window, range, meter);
    if (!first.final_pile_element) return {0, std::vector<Element>{}};

    const std::size_t k = first.pile_count;
    std::vector<Element> out;
    out.reserve(k);
    out.push_back(*first.final_pile_element);
    buffer.grow_words(2);
    while (out.size() < k) {
        const Element& prev = out.back();
        const ValueWindow next_window{window.lower, prev.value};
        const IndexRange next_range{range.begin, prev.position};
        const TopmostOutcome run = topmost_run(source, next_window, next_range, meter);
        if (!run.final_pile_element)
            throw IntegrityError("base case run produced no predecessor element");
        out.push_back(*run.final_pile_element);
        buffer.grow_words(2);
    }
    std::reverse(out.begin(), out.end());
    return {k, std::move(out)};
}

}  // namespace lispace
