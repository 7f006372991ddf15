#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lispace/element.hpp"
#include "lispace/patience.hpp"

namespace lispace::testing {

// Worked example used throughout: lis = 4.
inline std::vector<std::int64_t> sigma1() { return {2, 8, 4, 9, 5, 1, 7, 6, 3}; }

inline std::vector<std::int64_t> values_of(const Pile& pile) {
    std::vector<std::int64_t> out;
    for (const Element& e : pile.elements) out.push_back(e.value);
    return out;
}

inline std::vector<std::size_t> positions_of(const Pile& pile) {
    std::vector<std::size_t> out;
    for (const Element& e : pile.elements) out.push_back(e.position);
    return out;
}

inline std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::size_t n,
                                               std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out(n);
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    for (auto& v : out) v = lo + static_cast<std::int64_t>(rng() % width);
    return out;
}

inline std::vector<std::int64_t> shuffled_identity(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::int64_t> out(n);
    std::iota(out.begin(), out.end(), 1);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

/// True iff `candidate` is a strictly increasing subsequence of `values`
/// (consistent positions, consistent values, strictly increasing in both).
inline bool is_valid_lis_of(const std::vector<std::int64_t>& values,
                            const std::vector<Element>& candidate,
                            std::size_t expected_length) {
    if (candidate.size() != expected_length) return false;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (candidate[i].position >= values.size()) return false;
        if (values[candidate[i].position] != candidate[i].value) return false;
        if (i > 0 && candidate[i - 1].position >= candidate[i].position) return false;
        if (i > 0 && candidate[i - 1].value >= candidate[i].value) return false;
    }
    return true;
}

/// Calls fn(values) for every permutation of 1..n.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
    std::vector<std::int64_t> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
        fn(values);
    } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace lispace::testing
