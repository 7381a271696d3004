#pragma once

#include "zsinv/product.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace zsinv {

enum class InvariantKind {
    davenport,             ///< D(G)
    plus_minus_davenport,  ///< D_pm(G)
    sdN,                   ///< s_dN(G)
    s_exact,               ///< s_k(G), subsequence of length exactly k
    s_leq,                 ///< s_<=k(G)
};

std::string_view invariant_name(InvariantKind k);
InvariantKind parse_invariant(std::string_view name);

/// Freeness predicate whose maximal free length determines the invariant.
ProductQuery invariant_predicate(InvariantKind k, int param);

struct SearchOptions {
    int length_cap = 0;  ///< 0 selects the default cap
    bool orbit_pruning = true;
    int threads = 1;
    int automorphism_cap = 24;
};

struct SearchStats {
    std::uint64_t nodes = 0;          ///< free multisets expanded
    std::uint64_t orbits_pruned = 0;  ///< free but non-canonical multisets skipped
    bool pruning_used = false;
    double wall_seconds = 0;
};

enum class SearchStatus { exact, undetermined_at_cap };

struct InvariantResult {
    InvariantKind kind = InvariantKind::davenport;
    GroupPtr group;
    int param = 1;
    int length_cap = 0;
    SearchStatus status = SearchStatus::exact;
    /// The invariant when exact; cap + 1 (a lower bound) when undetermined.
    int value = 0;
    /// Free multiset of length value - 1 (or of length cap when undetermined).
    Sequence witness;
    SearchStats stats;

    bool exact() const { return status == SearchStatus::exact; }
};

InvariantResult compute_invariant(const GroupPtr& g, InvariantKind kind, int param, const SearchOptions& opts = {});
InvariantResult compute_sdN(const GroupPtr& g, int d, const SearchOptions& opts = {});
InvariantResult compute_davenport(const GroupPtr& g, const SearchOptions& opts = {});
InvariantResult compute_dpm(const GroupPtr& g, const SearchOptions& opts = {});
InvariantResult compute_s_exact(const GroupPtr& g, int k, const SearchOptions& opts = {});
InvariantResult compute_s_leq(const GroupPtr& g, int k, const SearchOptions& opts = {});

struct FreeClass {
    Sequence representative;
    std::size_t orbit_size = 1;
};

/// All free multisets of exactly `length`, one canonical representative per
/// automorphism orbit (every multiset when orbit pruning is off or
/// unavailable).
std::vector<FreeClass> classify_free(const GroupPtr& g, const ProductQuery& predicate, int length,
                                     const SearchOptions& opts = {});

/// Known closed forms, where one applies.
std::optional<long long> predict_sdN(const FiniteGroup& g, long long d);
std::optional<long long> predict_s_exact(const FiniteGroup& g, long long k);
std::optional<long long> predict_s_leq(const FiniteGroup& g, long long k);
/// s_k(G) is infinite when some g has g^k != 1: g^[N] is then k-1-product
/// free for every N. Returns that g (lowest index).
std::optional<Element> s_exact_infinite_witness(const FiniteGroup& g, long long k);

int default_length_cap(const FiniteGroup& g, InvariantKind kind, int param);

}  // namespace zsinv
