#include "lispace/permutation.hpp"

#include <optional>
#include <stdexcept>

namespace lispace {

bool validate_permutation(SequenceSource& source, BudgetMeter* meter) {
    const std::size_t n = source.size();
    FlagTable seen(n, meter);
    MeterLease lease = meter ? MeterLease(*meter, 4 * kWordBits) : MeterLease();
    bool ok = true;
    source.scan_all(Direction::forward, [&](const Element& e) {
        if (e.value < 1 || e.value > static_cast<std::int64_t>(n)) {
            ok = false;
            return false;
        }
        const std::size_t idx = static_cast<std::size_t>(e.value) - 1;
        if (seen.test(idx)) {
            ok = false;
            return false;
        }
        seen.set(idx);
        return true;
    });
    return ok;
}

std::size_t perm_lis_length(SequenceSource& source, BudgetMeter* meter,
                            const MarkObserver& on_mark) {
    const std::size_t n = source.size();
    if (n == 0) return 0;
    FlagTable used(n, meter);
    MeterLease lease = meter ? MeterLease(*meter, 8 * kWordBits) : MeterLease();
    std::size_t piles = 0;
    std::size_t used_count = 0;
    while (used_count < n) {
        ++piles;
        std::optional<std::int64_t> top;  // current left-to-right minimum
        std::size_t marked = 0;
        source.scan_all(Direction::forward, [&](const Element& e) {
            if (e.value < 1 || e.value > static_cast<std::int64_t>(n))
                throw std::invalid_argument("input is not a permutation of 1..n");
            const std::size_t idx = static_cast<std::size_t>(e.value) - 1;
            if (!used.test(idx) && (!top || e.value < *top)) {
                used.set(idx);
                top = e.value;
                ++marked;
                if (on_mark) on_mark(piles, e);
            }
        });
        if (marked == 0)
            throw std::invalid_argument("input is not a permutation of 1..n");
        used_count += marked;
    }
    return piles;
}

}  // namespace lispace
