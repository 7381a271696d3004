#include "zsinv/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace zsinv {

namespace {

void require_same_group(const Sequence& a, const Sequence& b)
{
    if (a.group() != b.group() && (a.group() == nullptr || b.group() == nullptr || a.group()->spec_string() != b.group()->spec_string()))
        throw std::invalid_argument("sequences are over different groups");
}

}  // namespace

Sequence::Sequence(GroupPtr group) : group_(std::move(group)) {}

Sequence::Sequence(GroupPtr group, const std::vector<Element>& terms) : group_(std::move(group))
{
    for (Element g : terms)
        add(g);
}

void Sequence::add(Element g, int times)
{
    if (g.index >= group_->order())
        throw std::invalid_argument("element index out of range");
    if (counts_[g.index] + times > 255)
        throw std::length_error("multiplicity exceeds 255");
    counts_[g.index] = static_cast<std::uint8_t>(counts_[g.index] + times);
    length_ += times;
}

void Sequence::remove(Element g, int times)
{
    if (counts_[g.index] < times)
        throw std::invalid_argument("removing more copies than present");
    counts_[g.index] = static_cast<std::uint8_t>(counts_[g.index] - times);
    length_ -= times;
}

int Sequence::max_multiplicity() const
{
    return *std::max_element(counts_.begin(), counts_.end());
}

ElementSet Sequence::support() const
{
    ElementSet s;
    for (int i = 0; i < kMaxOrder; ++i)
        if (counts_[i] > 0)
            s.insert(Element(i));
    return s;
}

bool Sequence::divides(const Sequence& other) const
{
    for (int i = 0; i < kMaxOrder; ++i)
        if (other.counts_[i] > counts_[i])
            return false;
    return true;
}

std::vector<Element> Sequence::terms() const
{
    std::vector<Element> out;
    out.reserve(length_);
    for (int i = 0; i < kMaxOrder; ++i)
        for (int k = 0; k < counts_[i]; ++k)
            out.push_back(Element(i));
    return out;
}

Element OrderedTuple::product(const FiniteGroup& g) const
{
    if (!signs.empty() && signs.size() != elements.size())
        throw std::invalid_argument("sign vector length does not match tuple length");
    Element acc = kIdentity;
    for (std::size_t i = 0; i < elements.size(); ++i)
        acc = g.mul(acc, sign(i) < 0 ? g.inv(elements[i]) : elements[i]);
    return acc;
}

Sequence OrderedTuple::as_sequence(const GroupPtr& g) const
{
    return Sequence(g, elements);
}

Sequence concat(const Sequence& a, const Sequence& b)
{
    require_same_group(a, b);
    Sequence out = a;
    for (int i = 0; i < kMaxOrder; ++i)
        if (b.counts()[i] > 0)
            out.add(Element(i), b.counts()[i]);
    return out;
}

Sequence subtract(const Sequence& a, const Sequence& b)
{
    require_same_group(a, b);
    Sequence out(a.group());
    for (int i = 0; i < kMaxOrder; ++i) {
        int v = a.counts()[i] - b.counts()[i];
        if (v > 0)
            out.add(Element(i), v);
    }
    return out;
}

Sequence intersect(const Sequence& a, const Sequence& b)
{
    require_same_group(a, b);
    Sequence out(a.group());
    for (int i = 0; i < kMaxOrder; ++i) {
        int v = std::min(a.counts()[i], b.counts()[i]);
        if (v > 0)
            out.add(Element(i), v);
    }
    return out;
}

SequenceStats stats(const Sequence& s)
{
    SequenceStats st;
    st.length = s.length();
    st.max_multiplicity = s.max_multiplicity();
    st.support = s.support();
    st.squarefree = st.max_multiplicity <= 1;
    return st;
}

std::map<CosetClass, Sequence> coset_split(const Sequence& s)
{
    const auto& g = *s.group();
    if (!g.has_coset_structure())
        throw std::invalid_argument("coset split needs a dihedral or metacyclic group");
    std::map<CosetClass, Sequence> parts;
    for (int c = 0; c < g.coset_count(); ++c)
        parts.emplace(CosetClass{c}, Sequence(s.group()));
    for (int i = 0; i < g.order(); ++i)
        if (s.counts()[i] > 0)
            parts[g.coset_class(Element(i))].add(Element(i), s.counts()[i]);
    return parts;
}

Sequence parse_sequence(const GroupPtr& g, std::string_view text)
{
    Sequence out(g);
    std::string_view rest = text;
    auto all_space = [](std::string_view v) {
        return std::all_of(v.begin(), v.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    };
    if (all_space(rest))
        return out;
    while (true) {
        auto comma = rest.find(',');
        std::string term(rest.substr(0, comma));
        std::erase_if(term, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (term.empty())
            throw std::invalid_argument("empty term in sequence '" + std::string(text) + "'");
        int mult = 1;
        auto bracket = term.find("^[");
        if (bracket != std::string::npos) {
            if (term.back() != ']')
                throw std::invalid_argument("unterminated multiplicity in term '" + term + "'");
            std::string num = term.substr(bracket + 2, term.size() - bracket - 3);
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad multiplicity in term '" + term + "'");
            mult = std::stoi(num);
            term.resize(bracket);
        }
        if (mult > 0)
            out.add(g->parse_element(term), mult);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_sequence(const Sequence& s)
{
    std::string out;
    for (int i = 0; i < s.group()->order(); ++i) {
        int c = s.counts()[i];
        if (c == 0)
            continue;
        if (!out.empty())
            out += ',';
        out += s.group()->label(Element(i));
        if (c > 1)
            out += "^[" + std::to_string(c) + "]";
    }
    return out;
}

namespace {

struct Enumerator {
    int target;
    const MultisetVisitor& visit;
    const MultisetPrune& keep;
    std::uint64_t visited = 0;
    bool stopped = false;

    void run(Sequence& cur, int next)
    {
        if (cur.length() == target) {
            ++visited;
            if (!visit(cur))
                stopped = true;
            return;
        }
        const int order = cur.group()->order();
        for (int g = next; g < order && !stopped; ++g) {
            cur.add(Element(g));
            if (!keep || keep(cur))
                run(cur, g);
            cur.remove(Element(g));
        }
    }
};

int last_element(const Sequence& s)
{
    for (int i = s.group()->order() - 1; i >= 0; --i)
        if (s.counts()[i] > 0)
            return i;
    return 0;
}

}  // namespace

std::uint64_t enumerate_multisets(const GroupPtr& g, int length, const MultisetVisitor& visit,
                                  const MultisetPrune& keep)
{
    if (length < 0)
        throw std::invalid_argument("length must be nonnegative");
    return enumerate_extensions(Sequence(g), length, visit, keep);
}

std::uint64_t enumerate_extensions(const Sequence& prefix, int length, const MultisetVisitor& visit,
                                   const MultisetPrune& keep)
{
    Enumerator e{length, visit, keep};
    Sequence cur = prefix;
    if (cur.length() <= length)
        e.run(cur, last_element(prefix));
    return e.visited;
}

std::vector<Sequence> enumeration_frontier(const GroupPtr& g, int depth, const MultisetPrune& keep)
{
    std::vector<Sequence> out;
    enumerate_multisets(
        g, depth,
        [&](const Sequence& s) {
            out.push_back(s);
            return true;
        },
        keep);
    return out;
}

Sequence apply_map(const GroupMap& map, const Sequence& s)
{
    Sequence out(map.target);
    for (int i = 0; i < s.group()->order(); ++i)
        if (s.counts()[i] > 0)
            out.add(map.image[i], s.counts()[i]);
    return out;
}

namespace {

// Compare counts of the image of s under map against s: returns true if the
// image's counts vector is lexicographically larger.
bool image_is_smaller(const Sequence& s, const GroupMap& map)
{
    Sequence::Counts img{};
    const int order = s.group()->order();
    for (int i = 0; i < order; ++i)
        img[map.image[i].index] = s.counts()[i];
    for (int i = 0; i < order; ++i) {
        if (img[i] != s.counts()[i])
            return img[i] > s.counts()[i];
    }
    return false;
}

}  // namespace

bool is_canonical(const Sequence& s, const std::vector<GroupMap>& maps)
{
    for (const auto& m : maps)
        if (image_is_smaller(s, m))
            return false;
    return true;
}

Sequence canonical_form(const Sequence& s, const std::vector<GroupMap>& maps)
{
    Sequence best = s;
    for (const auto& m : maps) {
        Sequence img = apply_map(m, s);
        if (img.counts() > best.counts())
            best = img;
    }
    return best;
}

std::size_t orbit_size(const Sequence& s, const std::vector<GroupMap>& maps)
{
    std::set<Sequence::Counts> seen;
    for (const auto& m : maps)
        seen.insert(apply_map(m, s).counts());
    return seen.size();
}

}  // namespace zsinv
