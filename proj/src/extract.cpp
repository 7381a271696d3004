#include "zsinv/extract.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

namespace zsinv {

namespace {

long long mod(long long v, long long n)
{
    return ((v % n) + n) % n;
}

const FiniteGroup& require_dihedral(const Sequence& s)
{
    if (!s.group() || s.group()->family() != Family::dihedral)
        throw PreconditionError("sequence must be over a dihedral group");
    return *s.group();
}

Certificate single_term(Element g, bool is_signed)
{
    Certificate c;
    c.tuple.elements = {g};
    if (is_signed) {
        c.tuple.signs = {1};
        c.kind = Certificate::Kind::signed_product;
    }
    return c;
}

std::optional<Element> repeated(const Sequence& s)
{
    for (int i = 0; i < s.group()->order(); ++i)
        if (s.counts()[i] >= 2)
            return Element(i);
    return std::nullopt;
}

}  // namespace

bool SignedSubset::verify(const std::vector<long long>& ys, long long n) const
{
    if (indices.empty() || indices.size() != signs.size())
        return false;
    long long acc = 0;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= ys.size() || !seen.insert(indices[i]).second)
            return false;
        if (signs[i] != 1 && signs[i] != -1)
            return false;
        acc = mod(acc + signs[i] * mod(ys[indices[i]], n), n);
    }
    return acc == 0;
}

SignedSubset signed_zero_mod(const std::vector<long long>& ys, long long n)
{
    if (n < 1)
        throw PreconditionError("modulus must be positive");
    const std::size_t s = ys.size();
    // s > log2(n)  <=>  2^s > n
    if (s == 0 || (s < 63 && (1LL << s) <= n))
        throw PreconditionError("bound not met: need more than log2(n) integers");
    const std::size_t width = std::min<std::size_t>(s, 62);

    std::vector<long long> res(width);
    for (std::size_t i = 0; i < width; ++i)
        res[i] = mod(ys[i], n);

    std::unordered_map<long long, std::uint64_t> seen;
    seen.emplace(0, 0);
    for (std::size_t k = 1; k <= width; ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << width;
        while (mask < limit) {
            long long sum = 0;
            for (std::uint64_t b = mask; b != 0; b &= b - 1)
                sum += res[std::countr_zero(b)];
            sum %= n;
            auto [it, inserted] = seen.emplace(sum, mask);
            if (!inserted) {
                const std::uint64_t a = it->second;
                SignedSubset out;
                for (std::size_t i = 0; i < width; ++i) {
                    const bool in_a = (a >> i) & 1U, in_b = (mask >> i) & 1U;
                    if (in_a != in_b) {
                        out.indices.push_back(i);
                        out.signs.push_back(in_a || a == 0 ? 1 : -1);
                    }
                }
                return out;
            }
            // next mask with the same popcount (Gosper)
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw std::logic_error("pigeonhole failed in signed_zero_mod");
}

Certificate dihedral_even_extract(const Sequence& reflections)
{
    const FiniteGroup& G = require_dihedral(reflections);
    const int n = G.params()[0];
    for (Element g : reflections.terms())
        if (G.coset_class(g).value != 1)
            throw PreconditionError("dihedral_even_extract expects reflections only");
    // a repeated reflection is a 1-product pair whatever the length
    Certificate cert;
    if (auto g = repeated(reflections)) {
        cert.tuple.elements = {*g, *g};
        return cert;
    }
    const int L = floor_log2(n);
    if (reflections.length() / 2 <= L)
        throw PreconditionError("need floor(|T|/2) > floor(log2 n)");
    const auto terms = reflections.terms();
    std::vector<long long> diffs;
    for (int i = 0; i <= L; ++i)
        diffs.push_back(G.y_exponent(terms[2 * i]) - G.y_exponent(terms[2 * i + 1]));
    const SignedSubset j = signed_zero_mod(diffs, n);
    // (x y^a)(x y^b) = y^(b - a): the pair in order contributes -delta,
    // reversed it contributes +delta.
    for (std::size_t t = 0; t < j.indices.size(); ++t) {
        const Element first = terms[2 * j.indices[t]], second = terms[2 * j.indices[t] + 1];
        if (j.signs[t] > 0) {
            cert.tuple.elements.push_back(second);
            cert.tuple.elements.push_back(first);
        }
        else {
            cert.tuple.elements.push_back(first);
            cert.tuple.elements.push_back(second);
        }
    }
    if (!cert.verify(G))
        throw std::logic_error("dihedral_even_extract produced an invalid certificate");
    return cert;
}

EqualPairs dihedral_equal_pairs(const Sequence& rotations)
{
    const FiniteGroup& G = require_dihedral(rotations);
    const int n = G.params()[0];
    for (Element g : rotations.terms())
        if (G.coset_class(g).value != 0)
            throw PreconditionError("dihedral_equal_pairs expects rotations only");
    EqualPairs out{Sequence(rotations.group()), Sequence(rotations.group())};
    if (auto g = repeated(rotations)) {
        out.first.add(*g);
        out.second.add(*g);
        return out;
    }
    const int L = floor_log2(n);
    if (rotations.length() / 2 <= L)
        throw PreconditionError("need floor(|T|/2) > floor(log2 n)");
    const auto terms = rotations.terms();
    std::vector<long long> diffs;
    for (int i = 0; i <= L; ++i)
        diffs.push_back(G.y_exponent(terms[2 * i]) - G.y_exponent(terms[2 * i + 1]));
    const SignedSubset j = signed_zero_mod(diffs, n);
    for (std::size_t t = 0; t < j.indices.size(); ++t) {
        const Element a = terms[2 * j.indices[t]], b = terms[2 * j.indices[t] + 1];
        out.first.add(j.signs[t] > 0 ? a : b);
        out.second.add(j.signs[t] > 0 ? b : a);
    }
    return out;
}

Certificate signed_to_product(const Certificate& cert, const GroupPtr& d2n)
{
    if (!d2n || d2n->family() != Family::dihedral)
        throw PreconditionError("signed_to_product works over dihedral groups");
    const FiniteGroup& G = *d2n;
    if (!cert.verify(G) || cert.target != kIdentity)
        throw PreconditionError("input is not a valid 1-product certificate");
    const auto& elems = cert.tuple.elements;
    const bool all_plus = std::all_of(cert.tuple.signs.begin(), cert.tuple.signs.end(), [](int s) { return s == 1; });
    if (cert.kind == Certificate::Kind::product || all_plus) {
        Certificate out = cert;
        out.kind = Certificate::Kind::product;
        out.tuple.signs.clear();
        return out;
    }

    std::vector<std::size_t> reflections;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (G.coset_class(elems[i]).value == 1)
            reflections.push_back(i);
    if (reflections.empty())
        throw PreconditionError("not applicable: the certificate uses no reflection");

    // A rotation's effective exponent sign flips once per reflection to its
    // right. Keep the reflections in order, put the rotations whose effective
    // sign is -1 just before the last reflection and the rest after it.
    std::vector<Element> before_last, after_last;
    int reflections_right = static_cast<int>(reflections.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (G.coset_class(elems[i]).value == 1) {
            --reflections_right;
            continue;
        }
        const int effective = cert.tuple.sign(i) * (reflections_right % 2 == 0 ? 1 : -1);
        (effective > 0 ? after_last : before_last).push_back(elems[i]);
    }

    Certificate out;
    for (std::size_t r = 0; r + 1 < reflections.size(); ++r)
        out.tuple.elements.push_back(elems[reflections[r]]);
    out.tuple.elements.insert(out.tuple.elements.end(), before_last.begin(), before_last.end());
    out.tuple.elements.push_back(elems[reflections.back()]);
    out.tuple.elements.insert(out.tuple.elements.end(), after_last.begin(), after_last.end());
    if (!out.verify(G))
        throw std::logic_error("signed_to_product rearrangement failed");
    return out;
}

Certificate dpm_extract(const Sequence& s)
{
    const FiniteGroup& G = require_dihedral(s);
    const int n = G.params()[0];
    const int L = floor_log2(n) + 1;
    if (s.length() < 2 * L)
        throw PreconditionError("need |S| >= 2 floor(log2 n) + 2");

    if (s.count(kIdentity) > 0)
        return single_term(kIdentity, true);

    Certificate cert;
    cert.kind = Certificate::Kind::signed_product;
    if (auto g = repeated(s)) {
        const bool reflection = G.coset_class(*g).value == 1;
        cert.tuple.elements = {*g, *g};
        cert.tuple.signs = {1, reflection ? 1 : -1};
        return cert;
    }

    std::vector<Element> refl, rot;
    for (Element g : s.terms())
        (G.coset_class(g).value == 1 ? refl : rot).push_back(g);

    struct Item {
        bool pair;
        std::size_t at;
    };
    std::vector<Item> items;
    std::vector<long long> values;
    for (std::size_t i = 0; i + 1 < refl.size(); i += 2) {
        items.push_back({true, i});
        values.push_back(G.y_exponent(refl[i]) - G.y_exponent(refl[i + 1]));
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
        items.push_back({false, i});
        values.push_back(G.y_exponent(rot[i]));
    }
    items.resize(L);
    values.resize(L);

    const SignedSubset j = signed_zero_mod(values, n);
    for (std::size_t t = 0; t < j.indices.size(); ++t) {
        const Item& it = items[j.indices[t]];
        if (it.pair) {
            const Element first = refl[it.at], second = refl[it.at + 1];
            cert.tuple.elements.push_back(j.signs[t] > 0 ? second : first);
            cert.tuple.elements.push_back(j.signs[t] > 0 ? first : second);
            cert.tuple.signs.push_back(1);
            cert.tuple.signs.push_back(1);
        }
        else {
            cert.tuple.elements.push_back(rot[it.at]);
            cert.tuple.signs.push_back(j.signs[t]);
        }
    }
    if (!cert.verify(G))
        throw std::logic_error("dpm_extract produced an invalid certificate");
    return cert;
}

Certificate odd_pm_extract(const Sequence& s)
{
    if (!s.group() || s.group()->family() != Family::cyclic)
        throw PreconditionError("odd_pm_extract works over cyclic groups");
    const int n = s.group()->order();
    if (n % 2 == 0)
        throw PreconditionError("odd_pm_extract needs n odd");
    if (s.length() < n)
        throw PreconditionError("odd_pm_extract needs |S| >= n");
    auto cert = find_subsequence(s, signed_odd_query());
    if (!cert)
        throw std::logic_error("no odd signed 1-product subsequence found; contradicts the existence result");
    return *cert;
}

BlockFinder exact_length_blocks(int length)
{
    return [length](const Sequence& s) { return find_subsequence(s, n_product_free(length)); };
}

BlockFinder bounded_length_blocks(int max_length)
{
    return [max_length](const Sequence& s) { return find_subsequence(s, leq_free(max_length)); };
}

BlockDecomposition greedy_decompose(const Sequence& s, const BlockFinder& finder, int threshold)
{
    if (threshold < 1)
        throw PreconditionError("threshold must be positive");
    BlockDecomposition out;
    Sequence current = s;
    while (current.length() >= threshold) {
        auto cert = finder(current);
        if (!cert)
            throw std::logic_error("block finder failed above its guarantee threshold");
        Sequence block = cert->tuple.as_sequence(s.group());
        current = subtract(current, block);
        out.blocks.push_back(std::move(block));
        out.certificates.push_back(std::move(*cert));
    }
    out.remainder = current;
    return out;
}

BlockDecomposition dihedral_block_decompose(const Sequence& s)
{
    const FiniteGroup& G = require_dihedral(s);
    const int n = G.params()[0];
    return greedy_decompose(s, exact_length_blocks(2 * n), 3 * n);
}

std::vector<std::size_t> block_zero_sum_select(const std::vector<long long>& lengths, long long d)
{
    if (d < 1)
        throw PreconditionError("d must be positive");
    if (lengths.size() != static_cast<std::size_t>(d))
        throw PreconditionError("block_zero_sum_select needs exactly d lengths");
    std::unordered_map<long long, std::size_t> first_seen{{0, 0}};
    long long prefix = 0;
    for (std::size_t j = 1; j <= lengths.size(); ++j) {
        prefix = mod(prefix + lengths[j - 1], d);
        auto [it, inserted] = first_seen.emplace(prefix, j);
        if (!inserted) {
            std::vector<std::size_t> out;
            for (std::size_t k = it->second; k < j; ++k)
                out.push_back(k);
            return out;
        }
    }
    throw std::logic_error("prefix-sum pigeonhole failed");
}

Certificate dihedral_coprime_extract(const Sequence& s, int d)
{
    const FiniteGroup& G = require_dihedral(s);
    const int n = G.params()[0];
    if (d < 1 || std::gcd(n, d) != 1)
        throw PreconditionError("dihedral_coprime_extract needs gcd(n, d) = 1");
    if (s.length() < n * d + 1)
        throw PreconditionError("need |S| >= nd + 1");

    // Any n + 1 terms contain a 1-product subsequence of length at most n, so
    // d blocks can always be removed.
    auto finder = bounded_length_blocks(n);
    std::vector<Certificate> blocks;
    Sequence current = s;
    for (int i = 0; i < d; ++i) {
        auto cert = finder(current);
        if (!cert)
            throw std::logic_error("short block extraction failed");
        current = subtract(current, cert->tuple.as_sequence(s.group()));
        blocks.push_back(std::move(*cert));
    }
    std::vector<long long> lengths;
    for (const auto& b : blocks)
        lengths.push_back(static_cast<long long>(b.tuple.size()));
    Certificate out;
    for (std::size_t i : block_zero_sum_select(lengths, d)) {
        const auto& e = blocks[i].tuple.elements;
        out.tuple.elements.insert(out.tuple.elements.end(), e.begin(), e.end());
    }
    if (!out.verify(G) || out.tuple.size() % d != 0)
        throw std::logic_error("coprime extraction produced an invalid certificate");
    return out;
}

CauchyDavenportCheck cauchy_davenport_check(const std::vector<std::vector<long long>>& sets, long long q)
{
    if (!is_prime(q))
        throw PreconditionError("Cauchy-Davenport check needs q prime");
    if (sets.empty())
        throw PreconditionError("need at least one set");
    std::vector<char> acc(q, 0);
    acc[0] = 1;
    long long total = 0;
    for (const auto& a : sets) {
        std::set<long long> reduced;
        for (long long v : a)
            reduced.insert(mod(v, q));
        if (reduced.empty())
            throw PreconditionError("sets must be nonempty");
        total += static_cast<long long>(reduced.size());
        std::vector<char> next(q, 0);
        for (long long x = 0; x < q; ++x)
            if (acc[x])
                for (long long v : reduced)
                    next[(x + v) % q] = 1;
        acc.swap(next);
    }
    CauchyDavenportCheck out;
    for (long long x = 0; x < q; ++x)
        if (acc[x])
            out.sumset.push_back(x);
    out.bound = std::min<long long>(q, total - static_cast<long long>(sets.size()) + 1);
    out.ok = static_cast<long long>(out.sumset.size()) >= out.bound;
    return out;
}

}  // namespace zsinv
