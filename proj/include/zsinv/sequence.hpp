#pragma once

#include "zsinv/group.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zsinv {

/// Multiset over a finite group: v_g(S) for every element g.
class Sequence {
public:
    using Counts = std::array<std::uint8_t, kMaxOrder>;

    Sequence() = default;
    explicit Sequence(GroupPtr group);
    Sequence(GroupPtr group, const std::vector<Element>& terms);

    const GroupPtr& group() const { return group_; }
    const Counts& counts() const { return counts_; }

    int count(Element g) const { return counts_[g.index]; }
    void add(Element g, int times = 1);
    void remove(Element g, int times = 1);

    int length() const { return length_; }
    bool empty() const { return length_ == 0; }
    /// h(S), the maximum multiplicity.
    int max_multiplicity() const;
    ElementSet support() const;
    bool is_squarefree() const { return max_multiplicity() <= 1; }
    /// Whether other | *this.
    bool divides(const Sequence& other) const;

    /// Terms in nondecreasing element order.
    std::vector<Element> terms() const;

    friend bool operator==(const Sequence& a, const Sequence& b) { return a.counts_ == b.counts_; }
    friend bool operator<(const Sequence& a, const Sequence& b) { return a.counts_ < b.counts_; }

private:
    GroupPtr group_;
    Counts counts_{};
    int length_ = 0;
};

/// Ordered list of terms, optionally with a sign per term (g or g^-1).
struct OrderedTuple {
    std::vector<Element> elements;
    std::vector<int> signs;  // empty, or +1/-1 per element

    bool is_signed() const { return !signs.empty(); }
    int sign(std::size_t i) const { return signs.empty() ? 1 : signs[i]; }
    std::size_t size() const { return elements.size(); }
    /// Left-to-right product, applying signs.
    Element product(const FiniteGroup& g) const;
    Sequence as_sequence(const GroupPtr& g) const;
};

Sequence concat(const Sequence& a, const Sequence& b);
/// max{0, v_g(a) - v_g(b)} per element.
Sequence subtract(const Sequence& a, const Sequence& b);
Sequence intersect(const Sequence& a, const Sequence& b);

struct SequenceStats {
    int length = 0;
    int max_multiplicity = 0;
    ElementSet support;
    bool squarefree = true;
};
SequenceStats stats(const Sequence& s);

/// Split by coset of H = <y> (dihedral and metacyclic groups).
std::map<CosetClass, Sequence> coset_split(const Sequence& s);

/// Parse "x^[5],y^2,xy" (label, optionally followed by ^[multiplicity]).
Sequence parse_sequence(const GroupPtr& g, std::string_view text);
std::string format_sequence(const Sequence& s);

/// Visitor returns false to stop the enumeration.
using MultisetVisitor = std::function<bool(const Sequence&)>;
/// Returns false to reject a prefix; must be monotone (a rejected multiset
/// has every extension rejected too).
using MultisetPrune = std::function<bool(const Sequence&)>;

/// Depth-first enumeration of all multisets of the given length, built in
/// nondecreasing element order. Returns the number of full-length multisets
/// visited.
std::uint64_t enumerate_multisets(const GroupPtr& g, int length, const MultisetVisitor& visit,
                                  const MultisetPrune& keep = {});

/// Enumerates the extensions of `prefix` (whose largest element bounds the
/// next choice) up to the target length. Used to split the DFS frontier.
std::uint64_t enumerate_extensions(const Sequence& prefix, int length, const MultisetVisitor& visit,
                                   const MultisetPrune& keep = {});

/// Surviving prefixes at the given depth, in DFS order.
std::vector<Sequence> enumeration_frontier(const GroupPtr& g, int depth, const MultisetPrune& keep = {});

/// Image of the multiset under an element map.
Sequence apply_map(const GroupMap& map, const Sequence& s);

/// True when no map sends s to a multiset whose sorted term list is
/// lexicographically smaller (equivalently, whose counts vector is larger).
bool is_canonical(const Sequence& s, const std::vector<GroupMap>& maps);
/// Orbit representative with the lexicographically smallest sorted term list.
Sequence canonical_form(const Sequence& s, const std::vector<GroupMap>& maps);
/// Number of distinct images of s under the maps (orbit size when the maps
/// form the full automorphism group).
std::size_t orbit_size(const Sequence& s, const std::vector<GroupMap>& maps);

}  // namespace zsinv
