#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lispace {

// Deterministic input generators: identical (n, seed) gives byte-identical
// output on every platform (mt19937_64 plus a fixed modulo reduction; no
// std::uniform_int_distribution, whose mapping is implementation-defined).

/// Random permutation of 1..n.
std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed);

/// n values drawn uniformly from 1..n, repetitions likely.
std::vector<std::int64_t> random_multiset(std::size_t n, std::uint64_t seed);

/// Adversary for sequential-access algorithms. Embeds a random permutation
/// pi' of 1..2n as pi'_1 | <4n, 4n-1, ..., 2n+2> | pi'_2 | <2n+1>, where
/// pi'_1 and pi'_2 are the halves of pi'. The output is a permutation of
/// 1..4n with lis equal to lis(pi') + 1, and any algorithm relating the two
/// halves must carry information across the long decreasing middle block.
std::vector<std::int64_t> hard_instance(std::size_t half_length, std::uint64_t seed);

}  // namespace lispace
