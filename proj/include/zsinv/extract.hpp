#pragma once

#include "zsinv/product.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zsinv {

/// A hypothesis of one of the constructive procedures does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonempty index set J (0-based, increasing) with signs such that
/// sum eps_j * y_j == 0 (mod n).
struct SignedSubset {
    std::vector<std::size_t> indices;
    std::vector<int> signs;

    bool verify(const std::vector<long long>& ys, long long n) const;
};

/// Signed zero-sum mod n from s > log2(n) integers. Subset sums are hashed in
/// order of increasing popcount; the first repeated residue gives two subsets
/// A (seen first) and B, and J = A xor B with +1 on A\B and -1 on B\A.
/// A zero residue (collision with the empty set) gives all signs +1.
SignedSubset signed_zero_mod(const std::vector<long long>& ys, long long n);

/// Even-length 1-product subsequence of at most 2 floor(log2 n) + 2
/// reflections of D_2n.
Certificate dihedral_even_extract(const Sequence& reflections);

struct EqualPairs {
    Sequence first;
    Sequence second;
};
/// Disjoint W1, W2 of the rotations with |W1| = |W2| <= floor(log2 n) + 1 and
/// pi(W1) = pi(W2).
EqualPairs dihedral_equal_pairs(const Sequence& rotations);

/// Reorders a signed 1-product certificate over D_2n that uses a reflection
/// into an unsigned one over the same multiset.
Certificate signed_to_product(const Certificate& cert, const GroupPtr& d2n);

/// Signed 1-product subsequence of S over D_2n, |S| >= 2 floor(log2 n) + 2.
Certificate dpm_extract(const Sequence& s);

/// Signed 1-product subsequence of odd length over C_n, n odd, |S| >= n.
Certificate odd_pm_extract(const Sequence& s);

struct BlockDecomposition {
    std::vector<Sequence> blocks;
    std::vector<Certificate> certificates;
    Sequence remainder;
};

/// Returns a 1-product subsequence certificate of the current sequence, or
/// nullopt if none of the required shape exists.
using BlockFinder = std::function<std::optional<Certificate>(const Sequence&)>;

BlockFinder exact_length_blocks(int length);
BlockFinder bounded_length_blocks(int max_length);

/// Repeatedly removes blocks while |current| >= threshold. A finder that
/// fails above the threshold means the engine contradicts the cited result,
/// so it is reported as std::logic_error.
BlockDecomposition greedy_decompose(const Sequence& s, const BlockFinder& finder, int threshold);

/// Blocks of length 2n from a sequence over D_2n (guaranteed while |S| >= 3n).
BlockDecomposition dihedral_block_decompose(const Sequence& s);

/// Nonempty index subset (0-based) whose lengths sum to 0 mod d, from exactly
/// d lengths, via colliding prefix sums.
std::vector<std::size_t> block_zero_sum_select(const std::vector<long long>& lengths, long long d);

/// 1-product subsequence of length divisible by d over D_2n with gcd(n, d) = 1
/// and |S| >= nd + 1, assembled from short 1-product blocks.
Certificate dihedral_coprime_extract(const Sequence& s, int d);

struct CauchyDavenportCheck {
    long long bound = 0;
    std::vector<long long> sumset;
    bool ok = false;
};

/// |A_1 + ... + A_k| against min{q, sum |A_i| - k + 1} in Z_q, q prime.
CauchyDavenportCheck cauchy_davenport_check(const std::vector<std::vector<long long>>& sets, long long q);

}  // namespace zsinv
