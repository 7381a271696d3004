#pragma once

#include "zsinv/sequence.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsinv {

/// Thrown when a product table would exceed the desk-scale limits.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LengthRule { any, exactly, multiple_of, at_most, odd };

/// Which nonempty subsequences count: a length rule, ordinary or signed
/// products, and the product value sought.
struct ProductQuery {
    LengthRule rule = LengthRule::any;
    int param = 0;
    bool is_signed = false;
    Element target = kIdentity;

    bool accepts_length(int len) const;
    std::string describe() const;
};

// Freeness predicates: S is free for the query when no nonempty subsequence
// matching the length rule has the identity among its (signed) products.
ProductQuery product_free();                ///< 1 not in Sigma(S)
ProductQuery n_product_free(int k);         ///< 1 not in Sigma_k(S)
ProductQuery dN_free(int d);                ///< 1 not in Sigma_dN(S)
ProductQuery leq_free(int k);               ///< 1 not in Sigma_<=k(S)
ProductQuery pm_product_free();             ///< 1 not in Sigma_pm(S)
ProductQuery signed_odd_query();            ///< signed product 1 with odd length

struct Certificate {
    enum class Kind { product, signed_product };

    OrderedTuple tuple;
    Element target = kIdentity;
    Kind kind = Kind::product;

    /// Recomputes the ordered product by table lookups.
    bool verify(const FiniteGroup& g) const;
    /// Whether the tuple's multiset divides s.
    bool fits_in(const Sequence& s) const;
};

struct ProductLimits {
    int max_length = 40;
    std::size_t max_states = std::size_t{1} << 26;
};

/// Product sets of every sub-multiset of a growing sequence.
///
/// States are sub-multisets T, indexed in mixed radix over the distinct
/// elements in push order. Elements must be pushed in nondecreasing index
/// order, so each push appends one block of new states (those using the new
/// copy) and pop truncates it again. products(T) is the set of pi over all
/// orderings of T, built by the last-element recursion
///     products(T) = U_{g in supp T} products(T - g) * g,
/// and the signed table additionally allows g^-1.
class ProductTable {
public:
    explicit ProductTable(GroupPtr g, bool track_signed = false, ProductLimits limits = {});
    explicit ProductTable(const Sequence& s, bool track_signed = false, ProductLimits limits = {});

    void push(Element g);
    void pop();

    const GroupPtr& group() const { return group_; }
    bool tracks_signed() const { return track_signed_; }
    int length() const { return length_; }
    std::size_t state_count() const { return memo_.size(); }
    std::size_t full_state() const { return memo_.size() - 1; }
    /// First state created by the most recent push.
    std::size_t last_block_begin() const { return blocks_.empty() ? 0 : blocks_.back(); }

    ElementSet products(std::size_t state) const { return memo_[state]; }
    ElementSet signed_products(std::size_t state) const { return signed_memo_[state]; }
    int state_length(std::size_t state) const { return lengths_[state]; }
    Sequence state_sequence(std::size_t state) const;
    Sequence base() const { return state_sequence(full_state()); }

    /// First nonempty state in [begin, end) matching the query.
    std::optional<std::size_t> find_state(const ProductQuery& q, std::size_t begin, std::size_t end) const;
    std::optional<std::size_t> find_state(const ProductQuery& q) const { return find_state(q, 1, state_count()); }

    /// Ordered witness that `target` is a product of the given state,
    /// rebuilt backwards choosing the lowest usable element at each step.
    Certificate certificate(std::size_t state, Element target, bool is_signed) const;

private:
    struct Digit {
        Element element;
        int count = 0;
        std::size_t stride = 1;
    };

    int digit_value(std::size_t state, std::size_t d) const;

    GroupPtr group_;
    bool track_signed_;
    ProductLimits limits_;
    int length_ = 0;
    std::vector<Digit> digits_;
    std::vector<ElementSet> memo_;
    std::vector<ElementSet> signed_memo_;
    std::vector<std::uint8_t> lengths_;
    std::vector<std::size_t> blocks_;
    std::vector<std::size_t> odometer_;
};

/// Pi(S), or Pi_pm(S) when is_signed; Pi of the empty sequence is {1}.
ElementSet full_products(const Sequence& s, bool is_signed = false);

/// Sigma_k(S) for every k (index 0 holds the empty product {1}).
struct SubsetProducts {
    std::vector<ElementSet> by_length;
    std::vector<ElementSet> signed_by_length;  // empty unless requested

    ElementSet sigma() const;                  ///< Sigma(S), nonempty subsequences
    ElementSet sigma_k(int k) const;
    ElementSet sigma_leq(int k) const;
    ElementSet sigma_geq(int k) const;
    ElementSet sigma_dN(int d) const;
    ElementSet sigma_even() const;             ///< Sigma_E, even nonempty lengths
    ElementSet sigma_odd() const;              ///< Sigma_O
    ElementSet signed_sigma() const;           ///< Sigma_pm(S)
};
SubsetProducts subset_products(const Sequence& s, bool with_signed = false);

/// Subset sums for abelian groups by the bitset knapsack recursion over the
/// terms one at a time; index k holds Sigma_k(S).
std::vector<ElementSet> abelian_subset_products(const Sequence& s);

struct FreenessResult {
    bool free = true;
    std::optional<Certificate> violation;
};
FreenessResult freeness(const Sequence& s, const ProductQuery& predicate);

/// Subsequence whose (signed) product equals q.target and whose length
/// satisfies q's rule. Exact: nullopt means none exists.
std::optional<Certificate> find_subsequence(const Sequence& s, const ProductQuery& q, ProductLimits limits = {});

/// S is nonempty, 1 is a (signed) product of S, and every proper nonempty
/// subsequence is (signed) product-free.
bool is_minimal_product_sequence(const Sequence& s, bool is_signed = false);

/// Odd-length variant: |S| is odd, 1 is a signed product of S, and no proper
/// subsequence of odd length has 1 as a signed product.
bool is_minimal_odd_signed_sequence(const Sequence& s);

}  // namespace zsinv
