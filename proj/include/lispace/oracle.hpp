#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lispace/element.hpp"

namespace lispace::oracle {

// Quadratic dynamic-programming ground truth. Deliberately shares no code
// with the patience machinery; tests rely on that independence. Exempt from
// all working-space budgets.

/// Length of a longest strictly increasing subsequence.
std::size_t dp_lis_length(std::span<const std::int64_t> values);

/// For each position i, the length of the longest strictly increasing
/// subsequence ending at i (entries are >= 1, maximum equals the lis).
std::vector<std::size_t> dp_ending_table(std::span<const std::int64_t> values);

/// One valid longest increasing subsequence, by backtracking the table.
std::vector<Element> dp_lis_extract(std::span<const std::int64_t> values);

}  // namespace lispace::oracle
