#include "zsinv/product.hpp"

#include <algorithm>
#include <sstream>

namespace zsinv {

bool ProductQuery::accepts_length(int len) const
{
    if (len < 1)
        return false;
    switch (rule) {
    case LengthRule::any: return true;
    case LengthRule::exactly: return len == param;
    case LengthRule::multiple_of: return len % param == 0;
    case LengthRule::at_most: return len <= param;
    case LengthRule::odd: return len % 2 == 1;
    }
    return false;
}

std::string ProductQuery::describe() const
{
    std::ostringstream os;
    os << (is_signed ? "signed " : "");
    switch (rule) {
    case LengthRule::any: os << "any length"; break;
    case LengthRule::exactly: os << "length " << param; break;
    case LengthRule::multiple_of: os << "length divisible by " << param; break;
    case LengthRule::at_most: os << "length at most " << param; break;
    case LengthRule::odd: os << "odd length"; break;
    }
    return os.str();
}

ProductQuery product_free() { return {}; }

ProductQuery n_product_free(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    return {LengthRule::exactly, k};
}

ProductQuery dN_free(int d)
{
    if (d < 1)
        throw std::invalid_argument("d must be positive");
    return {LengthRule::multiple_of, d};
}

ProductQuery leq_free(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    return {LengthRule::at_most, k};
}

ProductQuery pm_product_free() { return {LengthRule::any, 0, true}; }

ProductQuery signed_odd_query() { return {LengthRule::odd, 0, true}; }

bool Certificate::verify(const FiniteGroup& g) const
{
    if (tuple.elements.empty())
        return false;
    if (kind == Kind::product && tuple.is_signed())
        for (int s : tuple.signs)
            if (s != 1)
                return false;
    for (int s : tuple.signs)
        if (s != 1 && s != -1)
            return false;
    for (Element e : tuple.elements)
        if (e.index >= g.order())
            return false;
    return tuple.product(g) == target;
}

bool Certificate::fits_in(const Sequence& s) const
{
    return s.divides(tuple.as_sequence(s.group()));
}

ProductTable::ProductTable(GroupPtr g, bool track_signed, ProductLimits limits)
    : group_(std::move(g)), track_signed_(track_signed), limits_(limits)
{
    memo_.push_back(ElementSet::single(kIdentity));
    if (track_signed_)
        signed_memo_.push_back(ElementSet::single(kIdentity));
    lengths_.push_back(0);
}

ProductTable::ProductTable(const Sequence& s, bool track_signed, ProductLimits limits)
    : ProductTable(s.group(), track_signed, limits)
{
    for (Element e : s.terms())
        push(e);
}

void ProductTable::push(Element g)
{
    if (g.index >= group_->order())
        throw std::invalid_argument("element index out of range");
    if (!digits_.empty() && g < digits_.back().element)
        throw std::invalid_argument("elements must be pushed in nondecreasing order");
    if (length_ + 1 > limits_.max_length)
        throw CapacityError("sequence length exceeds the product engine limit of "
                            + std::to_string(limits_.max_length));

    const std::size_t old_size = memo_.size();
    if (digits_.empty() || digits_.back().element != g)
        digits_.push_back({g, 0, old_size});
    Digit& top = digits_.back();
    const std::size_t block = top.stride;
    if (old_size + block > limits_.max_states)
        throw CapacityError("product table would exceed " + std::to_string(limits_.max_states) + " states");
    ++top.count;
    ++length_;
    blocks_.push_back(old_size);

    memo_.resize(old_size + block);
    lengths_.resize(old_size + block);
    if (track_signed_)
        signed_memo_.resize(old_size + block);

    const FiniteGroup& G = *group_;
    const std::size_t lower = digits_.size() - 1;
    odometer_.assign(lower, 0);
    const Element g_inv = G.inv(g);

    for (std::size_t idx = old_size; idx < old_size + block; ++idx) {
        const std::size_t prev = idx - block;
        ElementSet acc = G.right_translate(memo_[prev], g);
        ElementSet sacc;
        if (track_signed_)
            sacc = G.right_translate(signed_memo_[prev], g) | G.right_translate(signed_memo_[prev], g_inv);
        for (std::size_t d = 0; d < lower; ++d) {
            if (odometer_[d] == 0)
                continue;
            const Digit& dg = digits_[d];
            const std::size_t from = idx - dg.stride;
            acc |= G.right_translate(memo_[from], dg.element);
            if (track_signed_)
                sacc |= G.right_translate(signed_memo_[from], dg.element)
                      | G.right_translate(signed_memo_[from], G.inv(dg.element));
        }
        memo_[idx] = acc;
        if (track_signed_)
            signed_memo_[idx] = sacc;
        lengths_[idx] = static_cast<std::uint8_t>(lengths_[prev] + 1);

        for (std::size_t d = 0; d < lower; ++d) {
            if (++odometer_[d] <= static_cast<std::size_t>(digits_[d].count))
                break;
            odometer_[d] = 0;
        }
    }
}

void ProductTable::pop()
{
    if (digits_.empty())
        throw std::logic_error("pop on an empty product table");
    const std::size_t begin = blocks_.back();
    blocks_.pop_back();
    memo_.resize(begin);
    lengths_.resize(begin);
    if (track_signed_)
        signed_memo_.resize(begin);
    if (--digits_.back().count == 0)
        digits_.pop_back();
    --length_;
}

int ProductTable::digit_value(std::size_t state, std::size_t d) const
{
    const Digit& dg = digits_[d];
    return static_cast<int>((state / dg.stride) % static_cast<std::size_t>(dg.count + 1));
}

Sequence ProductTable::state_sequence(std::size_t state) const
{
    Sequence s(group_);
    for (std::size_t d = 0; d < digits_.size(); ++d) {
        int v = digit_value(state, d);
        if (v > 0)
            s.add(digits_[d].element, v);
    }
    return s;
}

std::optional<std::size_t> ProductTable::find_state(const ProductQuery& q, std::size_t begin, std::size_t end) const
{
    if (q.is_signed && !track_signed_)
        throw std::logic_error("signed query on a table built without signed products");
    const auto& table = q.is_signed ? signed_memo_ : memo_;
    begin = std::max<std::size_t>(begin, 1);
    for (std::size_t idx = begin; idx < end; ++idx)
        if (q.accepts_length(lengths_[idx]) && table[idx].contains(q.target))
            return idx;
    return std::nullopt;
}

Certificate ProductTable::certificate(std::size_t state, Element target, bool is_signed) const
{
    if (is_signed && !track_signed_)
        throw std::logic_error("signed certificate requested from an unsigned table");
    const auto& table = is_signed ? signed_memo_ : memo_;
    if (!table[state].contains(target))
        throw std::invalid_argument("target is not a product of this state");

    const FiniteGroup& G = *group_;
    Certificate cert;
    cert.target = target;
    cert.kind = is_signed ? Certificate::Kind::signed_product : Certificate::Kind::product;
    std::vector<Element> rev;
    std::vector<int> rev_signs;
    Element t = target;
    while (state != 0) {
        bool stepped = false;
        for (std::size_t d = 0; d < digits_.size() && !stepped; ++d) {
            if (digit_value(state, d) == 0)
                continue;
            const Element g = digits_[d].element;
            const std::size_t from = state - digits_[d].stride;
            for (int sign : {1, -1}) {
                if (sign < 0 && !is_signed)
                    break;
                const Element factor = sign > 0 ? g : G.inv(g);
                const Element rest = G.mul(t, G.inv(factor));
                if (table[from].contains(rest)) {
                    rev.push_back(g);
                    rev_signs.push_back(sign);
                    t = rest;
                    state = from;
                    stepped = true;
                    break;
                }
            }
        }
        if (!stepped)
            throw std::logic_error("product table back-pointer walk failed");
    }
    cert.tuple.elements.assign(rev.rbegin(), rev.rend());
    if (is_signed)
        cert.tuple.signs.assign(rev_signs.rbegin(), rev_signs.rend());
    return cert;
}

ElementSet full_products(const Sequence& s, bool is_signed)
{
    ProductTable t(s, is_signed);
    return is_signed ? t.signed_products(t.full_state()) : t.products(t.full_state());
}

ElementSet SubsetProducts::sigma() const
{
    ElementSet out;
    for (std::size_t k = 1; k < by_length.size(); ++k)
        out |= by_length[k];
    return out;
}

ElementSet SubsetProducts::sigma_k(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= by_length.size())
        return {};
    return by_length[k];
}

ElementSet SubsetProducts::sigma_leq(int k) const
{
    ElementSet out;
    for (std::size_t j = 1; j < by_length.size() && static_cast<int>(j) <= k; ++j)
        out |= by_length[j];
    return out;
}

ElementSet SubsetProducts::sigma_geq(int k) const
{
    ElementSet out;
    for (std::size_t j = std::max(1, k); j < by_length.size(); ++j)
        out |= by_length[j];
    return out;
}

ElementSet SubsetProducts::sigma_dN(int d) const
{
    if (d < 1)
        throw std::invalid_argument("d must be positive");
    ElementSet out;
    for (std::size_t j = d; j < by_length.size(); j += d)
        out |= by_length[j];
    return out;
}

ElementSet SubsetProducts::sigma_even() const
{
    ElementSet out;
    for (std::size_t j = 2; j < by_length.size(); j += 2)
        out |= by_length[j];
    return out;
}

ElementSet SubsetProducts::sigma_odd() const
{
    ElementSet out;
    for (std::size_t j = 1; j < by_length.size(); j += 2)
        out |= by_length[j];
    return out;
}

ElementSet SubsetProducts::signed_sigma() const
{
    ElementSet out;
    for (std::size_t k = 1; k < signed_by_length.size(); ++k)
        out |= signed_by_length[k];
    return out;
}

SubsetProducts subset_products(const Sequence& s, bool with_signed)
{
    ProductTable t(s, with_signed);
    SubsetProducts out;
    out.by_length.assign(s.length() + 1, ElementSet());
    if (with_signed)
        out.signed_by_length.assign(s.length() + 1, ElementSet());
    for (std::size_t idx = 0; idx < t.state_count(); ++idx) {
        out.by_length[t.state_length(idx)] |= t.products(idx);
        if (with_signed)
            out.signed_by_length[t.state_length(idx)] |= t.signed_products(idx);
    }
    return out;
}

std::vector<ElementSet> abelian_subset_products(const Sequence& s)
{
    const FiniteGroup& G = *s.group();
    if (!G.is_abelian())
        throw std::invalid_argument("abelian subset-sum engine needs an abelian group");
    std::vector<ElementSet> dp(s.length() + 1);
    dp[0] = ElementSet::single(kIdentity);
    int used = 0;
    for (Element g : s.terms()) {
        ++used;
        for (int k = used; k >= 1; --k)
            dp[k] |= G.right_translate(dp[k - 1], g);
    }
    return dp;
}

FreenessResult freeness(const Sequence& s, const ProductQuery& predicate)
{
    auto cert = find_subsequence(s, predicate);
    return {!cert.has_value(), std::move(cert)};
}

std::optional<Certificate> find_subsequence(const Sequence& s, const ProductQuery& q, ProductLimits limits)
{
    if (q.rule == LengthRule::multiple_of || q.rule == LengthRule::exactly || q.rule == LengthRule::at_most)
        if (q.param < 1)
            throw std::invalid_argument("length parameter must be positive");
    if (q.rule == LengthRule::exactly && q.param > s.length())
        return std::nullopt;
    ProductTable t(s.group(), q.is_signed, limits);
    for (Element e : s.terms()) {
        t.push(e);
        if (auto hit = t.find_state(q, t.last_block_begin(), t.state_count()))
            return t.certificate(*hit, q.target, q.is_signed);
    }
    return std::nullopt;
}

bool is_minimal_product_sequence(const Sequence& s, bool is_signed)
{
    if (s.empty())
        return false;
    ProductTable t(s, is_signed);
    auto set_of = [&](std::size_t i) { return is_signed ? t.signed_products(i) : t.products(i); };
    if (!set_of(t.full_state()).contains(kIdentity))
        return false;
    for (std::size_t idx = 1; idx < t.full_state(); ++idx)
        if (set_of(idx).contains(kIdentity))
            return false;
    return true;
}

bool is_minimal_odd_signed_sequence(const Sequence& s)
{
    if (s.length() % 2 == 0)
        return false;
    ProductTable t(s, true);
    if (!t.signed_products(t.full_state()).contains(kIdentity))
        return false;
    for (std::size_t idx = 1; idx < t.full_state(); ++idx)
        if (t.state_length(idx) % 2 == 1 && t.signed_products(idx).contains(kIdentity))
            return false;
    return true;
}

}  // namespace zsinv
