#include <doctest.h>

#include <algorithm>
#include <set>

#include "lispace/generate.hpp"
#include "lispace/oracle.hpp"
#include "test_support.hpp"

using namespace lispace;

TEST_CASE("generators are deterministic under their seed") {
    CHECK(random_permutation(50, 7) == random_permutation(50, 7));
    CHECK(random_multiset(50, 7) == random_multiset(50, 7));
    CHECK(hard_instance(20, 7) == hard_instance(20, 7));
    CHECK(random_permutation(50, 7) != random_permutation(50, 8));
}

TEST_CASE("random_permutation is a permutation of 1..n") {
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
        const auto values = random_permutation(100, seed);
        std::set<std::int64_t> seen(values.begin(), values.end());
        CHECK(seen.size() == 100);
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == 100);
    }
}

TEST_CASE("hard instance layout and lis relation") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::size_t n = 1 + seed % 50;
        const auto inner = random_permutation(2 * n, seed);
        const auto outer = hard_instance(n, seed);
        REQUIRE(outer.size() == 4 * n);

        // layout: first half of inner, 4n..2n+2 descending, second half, 2n+1
        for (std::size_t i = 0; i < n; ++i) CHECK(outer[i] == inner[i]);
        for (std::size_t i = 0; i < 2 * n - 1; ++i)
            CHECK(outer[n + i] == static_cast<std::int64_t>(4 * n - i));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(outer[3 * n - 1 + i] == inner[n + i]);
        CHECK(outer.back() == static_cast<std::int64_t>(2 * n + 1));

        std::set<std::int64_t> seen(outer.begin(), outer.end());
        CHECK(seen.size() == 4 * n);

        CHECK(oracle::dp_lis_length(outer) == oracle::dp_lis_length(inner) + 1);
    }
}

TEST_CASE("hard instance of half-length 1 built from <1,2>") {
    // pick a seed whose embedded permutation of {1,2} is the identity
    for (std::uint64_t seed = 1; seed < 64; ++seed) {
        if (random_permutation(2, seed) != std::vector<std::int64_t>{1, 2}) continue;
        CHECK(hard_instance(1, seed) == std::vector<std::int64_t>{1, 4, 2, 3});
        CHECK(oracle::dp_lis_length(hard_instance(1, seed)) == 3);
        return;
    }
    FAIL("no seed with identity inner permutation found");
}

TEST_CASE("hard instance rejects n = 0") {
    CHECK_THROWS_AS(hard_instance(0, 1), std::invalid_argument);
}
