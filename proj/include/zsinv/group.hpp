#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zsinv {

// Groups are stored as dense multiplication tables; element sets fit in two
// machine words, so the order is capped here.
inline constexpr int kMaxOrder = 128;

struct Element {
    std::uint8_t index = 0;
    constexpr Element() = default;
    constexpr explicit Element(int i) : index(static_cast<std::uint8_t>(i)) {}
    constexpr int value() const { return index; }
    constexpr auto operator<=>(const Element&) const = default;
};

inline constexpr Element kIdentity{0};

/// Subset of a group of order at most 128, one bit per element index.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t low, std::uint64_t high = 0) : w_{low, high} {}
    static constexpr ElementSet single(Element g)
    {
        ElementSet s;
        s.insert(g);
        return s;
    }
    static constexpr ElementSet all(int order)
    {
        auto ones = [](int k) { return k >= 64 ? ~std::uint64_t{0} : k <= 0 ? 0 : (std::uint64_t{1} << k) - 1; };
        return ElementSet(ones(order), ones(order - 64));
    }
    constexpr bool contains(Element g) const { return (w_[g.index >> 6] >> (g.index & 63)) & 1U; }
    constexpr void insert(Element g) { w_[g.index >> 6] |= std::uint64_t{1} << (g.index & 63); }
    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
    constexpr int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    constexpr std::uint64_t word(int i) const { return w_[i]; }
    constexpr ElementSet& operator|=(ElementSet o)
    {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b)
    {
        return ElementSet(a.w_[0] & b.w_[0], a.w_[1] & b.w_[1]);
    }
    friend constexpr bool operator==(ElementSet, ElementSet) = default;

    std::vector<Element> elements() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (int i = 0; i < 2; ++i)
            for (std::uint64_t b = w_[i]; b != 0; b &= b - 1)
                f(Element(64 * i + std::countr_zero(b)));
    }

private:
    std::uint64_t w_[2] = {0, 0};
};

enum class Family { cyclic, abelian_product, dihedral, metacyclic };

std::string_view family_name(Family f);

/// Coset of the distinguished cyclic subgroup H = <y>: for dihedral groups
/// 0 is H (rotations) and 1 is N (reflections); for metacyclic groups the
/// class is the exponent of x in the normal form x^a y^b.
struct CosetClass {
    int value = 0;
    constexpr auto operator<=>(const CosetClass&) const = default;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Immutable finite group given by its Cayley table. The identity is always
/// element 0.
class FiniteGroup {
public:
    int order() const { return order_; }
    Family family() const { return family_; }
    const std::vector<int>& params() const { return params_; }

    Element mul(Element a, Element b) const { return table_[a.index * order_ + b.index]; }
    Element inv(Element a) const { return inverse_[a.index]; }
    Element identity() const { return kIdentity; }
    Element power(Element g, long long k) const;

    const std::string& label(Element g) const { return labels_[g.index]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Parse a word in the named generators, e.g. "xy^2", "x^2y^3", "1".
    Element parse_element(std::string_view word) const;
    /// Generator names usable in parse_element ("x","y" or "y" or "a","b",...).
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<Element>& named_generators() const { return named_generators_; }

    /// Image of the set under right multiplication by g.
    ElementSet right_translate(ElementSet s, Element g) const;

    int element_order(Element g) const;
    /// Maximum element order (the nonstandard exponent for nonabelian groups).
    int exponent() const;
    bool is_abelian() const;

    bool has_coset_structure() const { return family_ == Family::dihedral || family_ == Family::metacyclic; }
    CosetClass coset_class(Element g) const;
    int coset_count() const;
    /// Exponent b of y in the normal form x^a y^b (dihedral/metacyclic/cyclic).
    int y_exponent(Element g) const;
    /// Element x^a y^b for families with a normal form.
    Element normal_form(int a, int b) const;

    /// Invariant factors 1 < n_1 | n_2 | ... (abelian groups only).
    std::vector<int> canonical_invariants() const;
    /// D*(G) = 1 + sum (n_i - 1) over the canonical invariants (abelian only).
    int d_star() const;

    bool check_associative() const;
    bool check_latin_square() const;
    bool check_inverses() const;
    /// Family relations on the named generators.
    bool check_relations() const;

    std::string spec_string() const;

private:
    friend GroupPtr make_cyclic(int);
    friend GroupPtr make_abelian(const std::vector<int>&);
    friend GroupPtr make_dihedral(int);
    friend GroupPtr make_metacyclic(int, int, int);

    FiniteGroup() = default;
    void finish();

    int order_ = 0;
    Family family_ = Family::cyclic;
    std::vector<int> params_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::vector<std::string> labels_;
    std::vector<std::string> generator_names_;
    std::vector<Element> named_generators_;
    int byte_positions_ = 0;
    std::vector<ElementSet> right_bytes_;  // [g][byte position][byte value]
};

GroupPtr make_cyclic(int n);
GroupPtr make_abelian(const std::vector<int>& invariants);
GroupPtr make_dihedral(int n);
GroupPtr make_metacyclic(int p, int q, int s);

/// Parse "C:n", "A:n1,n2,...", "D:n" (order 2n) or "M:p,q,s".
GroupPtr parse_group_spec(std::string_view spec);

/// Multiplicative order of s modulo q, or 0 if gcd(s, q) != 1.
int multiplicative_order(long long s, long long q);
bool is_prime(long long n);
int floor_log2(long long n);

/// Elementary-divisor reduction of a list of cyclic orders to 1 < n_1 | ... | n_r.
std::vector<int> invariant_factors(const std::vector<int>& orders);

/// Map between groups, stored as an image table.
struct GroupMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<Element> image;
    bool homomorphism = true;
    std::string name;

    Element operator()(Element g) const { return image[g.index]; }
    bool is_multiplicative() const;
    bool is_bijective() const;
};

/// Every automorphism of G, or nullopt when |G| exceeds cap (orbit pruning
/// unavailable). The identity map is always first.
std::optional<std::vector<GroupMap>> automorphisms(const GroupPtr& g, int cap = 24);

/// phi_alpha on D_2n: x -> x y^alpha, y -> y.
GroupMap dihedral_phi(const GroupPtr& d2n, int alpha);
/// psi: D_2n -> C_n, x y^a -> a, y^b -> b (not a homomorphism).
GroupMap dihedral_psi(const GroupPtr& d2n);

}  // namespace zsinv
