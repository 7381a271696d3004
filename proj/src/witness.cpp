#include "zsinv/witness.hpp"

#include <numeric>
#include <stdexcept>

namespace zsinv {

namespace {

constexpr std::string_view kNames[] = {"dihedral-main", "metacyclic",          "dihedral-coprime",
                                       "dihedral-nN",   "generic-identity-pad", "inverse-family"};
constexpr WitnessName kValues[] = {WitnessName::dihedral_main, WitnessName::metacyclic,
                                   WitnessName::dihedral_coprime, WitnessName::dihedral_nN,
                                   WitnessName::generic_identity_pad, WitnessName::inverse_family};

Witness finish(WitnessSpec spec, Sequence seq, bool must_be_free = true)
{
    if (seq.length() != spec.expected_length)
        throw std::logic_error("witness length " + std::to_string(seq.length()) + " != expected " +
                               std::to_string(spec.expected_length));
    Witness w{std::move(spec), std::move(seq), false};
    w.free = freeness(w.sequence, w.spec.predicate).free;
    if (must_be_free && !w.free)
        throw std::logic_error("constructed witness " + format_sequence(w.sequence) + " is not free");
    return w;
}

Sequence dihedral_main_sequence(const GroupPtr& g, int n, int d)
{
    Sequence s(g);
    s.add(g->normal_form(1, 0), 2 * d - 1);
    for (int i = 0; i < floor_log2(n); ++i)
        s.add(g->normal_form(0, (1 << i) % n));
    return s;
}

}  // namespace

std::string_view witness_name(WitnessName n)
{
    for (std::size_t i = 0; i < std::size(kValues); ++i)
        if (kValues[i] == n)
            return kNames[i];
    return "unknown";
}

WitnessName parse_witness_name(std::string_view s)
{
    for (std::size_t i = 0; i < std::size(kNames); ++i)
        if (kNames[i] == s)
            return kValues[i];
    throw std::invalid_argument("unknown witness '" + std::string(s) + "'");
}

Witness dihedral_main_witness(int n, int d)
{
    if (n < 3 || d < 1 || d % 2 == 0 || d % n != 0)
        throw std::invalid_argument("dihedral-main needs n >= 3, d odd and n | d");
    auto g = make_dihedral(n);
    WitnessSpec spec{WitnessName::dihedral_main, {n, d}, 2 * d + floor_log2(n) - 1, dN_free(d)};
    return finish(std::move(spec), dihedral_main_sequence(g, n, d));
}

Witness dihedral_coprime_witness(int n, int d)
{
    if (n < 3 || d < 1 || std::gcd(n, d) != 1)
        throw std::invalid_argument("dihedral-coprime needs n >= 3 and gcd(n, d) = 1");
    auto g = make_dihedral(n);
    Sequence s(g);
    s.add(g->normal_form(1, 0));
    s.add(g->normal_form(0, 1), n * d - 1);
    WitnessSpec spec{WitnessName::dihedral_coprime, {n, d}, n * d, dN_free(d)};
    return finish(std::move(spec), std::move(s));
}

Witness dihedral_nN_witness(int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("dihedral-nN needs odd n >= 3");
    auto w = dihedral_main_witness(n, n);
    w.spec.name = WitnessName::dihedral_nN;
    w.spec.params = {n};
    return w;
}

Sequence metacyclic_literal_sequence(int p, int q, int s, int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    auto g = make_metacyclic(p, q, s);
    const int kp = k * p;
    const int d = std::lcm(kp, q) + std::gcd(kp, q) - 1;
    Sequence w(g);
    w.add(g->normal_form(1, 0), p - 1);
    w.add(g->normal_form(0, 1), d - 1);
    return w;
}

Witness metacyclic_witness(int p, int q, int s, int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    auto g = make_metacyclic(p, q, s);
    const int kp = k * p;
    const int d = std::lcm(kp, q) + std::gcd(kp, q) - 1;
    WitnessSpec spec{WitnessName::metacyclic, {p, q, s, k}, p + d - 2, dN_free(kp)};
    if (k % q != 0)
        return finish(std::move(spec), metacyclic_literal_sequence(p, q, s, k));
    // d - 1 = kp + q - 2 here
    Sequence w(g);
    w.add(g->normal_form(1, 0), p - 1);
    w.add(kIdentity, kp - 1);
    w.add(g->normal_form(0, 1), q - 1);
    return finish(std::move(spec), std::move(w));
}

Witness generic_identity_pad(const Sequence& s1, int d)
{
    if (d < 1)
        throw std::invalid_argument("d must be positive");
    if (!freeness(s1, product_free()).free)
        throw std::invalid_argument("S1 is not product-free");
    Sequence w = s1;
    w.add(kIdentity, d - 1);
    WitnessSpec spec{WitnessName::generic_identity_pad, {d}, s1.length() + d - 1, dN_free(d)};
    return finish(std::move(spec), std::move(w));
}

Witness inverse_family(int n, int variant, const std::vector<int>& params)
{
    if (variant == 1) {
        if (n < 4 || params.size() != 2)
            throw std::invalid_argument("variant 1 needs n >= 4 and params t,s");
        const int t = params[0], s = params[1];
        if (t < 1 || t > n - 1 || std::gcd(t, n) != 1)
            throw std::invalid_argument("variant 1 needs 1 <= t <= n-1 and gcd(t, n) = 1");
        auto g = make_dihedral(n);
        Sequence w(g);
        w.add(g->normal_form(0, t), n - 1);
        w.add(g->normal_form(1, ((s % n) + n) % n));
        return finish({WitnessName::inverse_family, {n, 1, t, s}, n, product_free()}, std::move(w));
    }
    if (variant == 2) {
        if (n != 3)
            throw std::invalid_argument("variant 2 is defined for n = 3 only");
        auto g = make_dihedral(3);
        Sequence w(g);
        std::vector<int> p = {3, 2};
        if (params.empty()) {
            w.add(g->normal_form(1, 0));
            w.add(g->normal_form(1, 1));
            w.add(g->normal_form(1, 2));
        }
        else if (params.size() == 2) {
            const int t = params[0], nu = params[1];
            if (t != 2 && t != 3)
                throw std::invalid_argument("variant 2 takes t in {2, 3}");
            w.add(g->normal_form(0, t % 3), 2);
            w.add(g->normal_form(1, ((nu % 3) + 3) % 3));
            p.push_back(t);
            p.push_back(nu);
        }
        else
            throw std::invalid_argument("variant 2 takes no params or t,nu");
        return finish({WitnessName::inverse_family, p, 3, product_free()}, std::move(w), false);
    }
    throw std::invalid_argument("variant must be 1 or 2");
}

}  // namespace zsinv
