#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lispace/budget.hpp"
#include "lispace/element.hpp"
#include "lispace/sequence.hpp"

namespace lispace {

/// n single-bit used/unused flags, charged on the meter as exactly n bits.
class FlagTable {
public:
    FlagTable(std::size_t n, BudgetMeter* meter)
        : blocks_((n + 63) / 64, 0),
          lease_(meter ? MeterLease(*meter, n) : MeterLease()) {}

    bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }

private:
    std::vector<std::uint64_t> blocks_;
    MeterLease lease_;
};

/// True iff the source holds exactly the values 1..n, each once.
/// One pass plus an n-bit table.
bool validate_permutation(SequenceSource& source, BudgetMeter* meter = nullptr);

/// Observer for perm_lis_length: (outer iteration, element marked used).
/// The elements marked in iteration i are exactly pile P_i of ps_piles.
using MarkObserver = std::function<void(std::size_t, const Element&)>;

/// lis of a permutation of 1..n with n bits plus a constant number of words:
/// repeatedly strips the left-to-right minima subsequence of the unused
/// elements, one pass per pile. Throws std::invalid_argument when the input
/// turns out not to be a permutation.
std::size_t perm_lis_length(SequenceSource& source, BudgetMeter* meter = nullptr,
                            const MarkObserver& on_mark = {});

}  // namespace lispace
