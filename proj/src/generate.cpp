#include "lispace/generate.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace lispace {
namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    return rng() % k;  // bias is irrelevant here; determinism is the point
}

}  // namespace

std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::int64_t> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(values[i - 1], values[bounded(rng, i)]);
    return values;
}

std::vector<std::int64_t> random_multiset(std::size_t n, std::uint64_t seed) {
    std::vector<std::int64_t> values(n);
    std::mt19937_64 rng(seed);
    for (auto& v : values) v = static_cast<std::int64_t>(bounded(rng, n)) + 1;
    return values;
}

std::vector<std::int64_t> hard_instance(std::size_t half_length, std::uint64_t seed) {
    if (half_length == 0)
        throw std::invalid_argument("hard instance needs half_length >= 1");
    const std::size_t n = half_length;
    const std::vector<std::int64_t> inner = random_permutation(2 * n, seed);

    std::vector<std::int64_t> out;
    out.reserve(4 * n);
    out.insert(out.end(), inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::int64_t v = static_cast<std::int64_t>(4 * n);
         v >= static_cast<std::int64_t>(2 * n + 2); --v)
        out.push_back(v);
    out.insert(out.end(), inner.begin() + static_cast<std::ptrdiff_t>(n), inner.end());
    out.push_back(static_cast<std::int64_t>(2 * n + 1));
    return out;
}

}  // namespace lispace
