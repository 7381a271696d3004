#include "zsinv/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace zsinv {

std::vector<Element> ElementSet::elements() const
{
    std::vector<Element> out;
    for_each([&](Element g) { out.push_back(g); });
    return out;
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::abelian_product: return "abelian-product";
    case Family::dihedral: return "dihedral";
    case Family::metacyclic: return "metacyclic";
    }
    return "unknown";
}

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int floor_log2(long long n)
{
    if (n < 1)
        throw std::invalid_argument("floor_log2 of non-positive value");
    return 63 - std::countl_zero(static_cast<unsigned long long>(n));
}

int multiplicative_order(long long s, long long q)
{
    long long r = ((s % q) + q) % q;
    if (std::gcd(r, q) != 1)
        return 0;
    long long acc = r % q;
    for (int k = 1; k <= q; ++k) {
        if (acc == 1 % q)
            return k;
        acc = acc * r % q;
    }
    return 0;
}

std::vector<int> invariant_factors(const std::vector<int>& orders)
{
    // Split every factor into prime powers, then recombine the largest powers
    // of each prime into the last factor, the next largest into the one
    // before, and so on.
    std::vector<std::pair<int, std::vector<int>>> by_prime;
    for (int n : orders) {
        if (n < 1)
            throw std::invalid_argument("cyclic factor orders must be positive");
        int m = n;
        for (int p = 2; p <= m; ++p) {
            if (m % p != 0)
                continue;
            int pk = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            auto it = std::find_if(by_prime.begin(), by_prime.end(), [&](auto& e) { return e.first == p; });
            if (it == by_prime.end())
                by_prime.push_back({p, {pk}});
            else
                it->second.push_back(pk);
        }
    }
    std::size_t rank = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        rank = std::max(rank, powers.size());
    }
    std::vector<int> result(rank, 1);
    for (auto& [p, powers] : by_prime)
        for (std::size_t i = 0; i < powers.size(); ++i)
            result[rank - 1 - i] *= powers[i];
    return result;
}

Element FiniteGroup::power(Element g, long long k) const
{
    long long ord = element_order(g);
    k = ((k % ord) + ord) % ord;
    Element acc = kIdentity;
    for (long long i = 0; i < k; ++i)
        acc = mul(acc, g);
    return acc;
}

ElementSet FiniteGroup::right_translate(ElementSet s, Element g) const
{
    const ElementSet* tab = &right_bytes_[static_cast<std::size_t>(g.index) * byte_positions_ * 256];
    ElementSet out;
    for (int w = 0; w < 2; ++w)
        for (std::uint64_t bits = s.word(w), pos = 8 * static_cast<std::uint64_t>(w); bits != 0; ++pos, bits >>= 8)
            out |= tab[pos * 256 + (bits & 0xFF)];
    return out;
}

int FiniteGroup::element_order(Element g) const
{
    int k = 1;
    for (Element acc = g; acc != kIdentity; acc = mul(acc, g))
        ++k;
    return k;
}

int FiniteGroup::exponent() const
{
    int best = 1;
    for (int i = 0; i < order_; ++i)
        best = std::max(best, element_order(Element(i)));
    return best;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(Element(a), Element(b)) != mul(Element(b), Element(a)))
                return false;
    return true;
}

CosetClass FiniteGroup::coset_class(Element g) const
{
    switch (family_) {
    case Family::dihedral: return {g.index / params_[0]};
    case Family::metacyclic: return {g.index / params_[1]};
    default: throw std::invalid_argument("group family has no coset structure");
    }
}

int FiniteGroup::coset_count() const
{
    switch (family_) {
    case Family::dihedral: return 2;
    case Family::metacyclic: return params_[0];
    default: throw std::invalid_argument("group family has no coset structure");
    }
}

int FiniteGroup::y_exponent(Element g) const
{
    switch (family_) {
    case Family::cyclic: return g.index;
    case Family::dihedral: return g.index % params_[0];
    case Family::metacyclic: return g.index % params_[1];
    default: throw std::invalid_argument("group family has no x^a y^b normal form");
    }
}

Element FiniteGroup::normal_form(int a, int b) const
{
    auto mod = [](int v, int m) { return ((v % m) + m) % m; };
    switch (family_) {
    case Family::cyclic: return Element(mod(b, params_[0]));
    case Family::dihedral: return Element(mod(a, 2) * params_[0] + mod(b, params_[0]));
    case Family::metacyclic: return Element(mod(a, params_[0]) * params_[1] + mod(b, params_[1]));
    default: throw std::invalid_argument("group family has no x^a y^b normal form");
    }
}

std::vector<int> FiniteGroup::canonical_invariants() const
{
    if (family_ == Family::cyclic || family_ == Family::abelian_product)
        return invariant_factors(params_);
    throw std::invalid_argument("canonical invariants are defined for abelian groups only");
}

int FiniteGroup::d_star() const
{
    int total = 1;
    for (int n : canonical_invariants())
        total += n - 1;
    return total;
}

bool FiniteGroup::check_associative() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) {
            Element ab = mul(Element(a), Element(b));
            for (int c = 0; c < order_; ++c)
                if (mul(ab, Element(c)) != mul(Element(a), mul(Element(b), Element(c))))
                    return false;
        }
    return true;
}

bool FiniteGroup::check_latin_square() const
{
    for (int a = 0; a < order_; ++a) {
        ElementSet row, col;
        for (int b = 0; b < order_; ++b) {
            row.insert(mul(Element(a), Element(b)));
            col.insert(mul(Element(b), Element(a)));
        }
        if (row.size() != order_ || col.size() != order_)
            return false;
    }
    return true;
}

bool FiniteGroup::check_inverses() const
{
    for (int a = 0; a < order_; ++a) {
        Element g(a);
        if (mul(g, kIdentity) != g || mul(kIdentity, g) != g)
            return false;
        if (mul(g, inv(g)) != kIdentity || mul(inv(g), g) != kIdentity)
            return false;
    }
    return true;
}

bool FiniteGroup::check_relations() const
{
    switch (family_) {
    case Family::cyclic: {
        if (order_ == 1)
            return true;
        return element_order(named_generators_[0]) == params_[0];
    }
    case Family::abelian_product: {
        std::size_t j = 0;
        for (int n : params_) {
            if (n == 1)
                continue;
            if (element_order(named_generators_[j++]) != n)
                return false;
        }
        return is_abelian();
    }
    case Family::dihedral: {
        int n = params_[0];
        Element x = named_generators_[0], y = named_generators_[1];
        return power(x, 2) == kIdentity && element_order(y) == n && mul(x, y) == mul(power(y, n - 1), x);
    }
    case Family::metacyclic: {
        int p = params_[0], q = params_[1], s = params_[2];
        Element x = named_generators_[0], y = named_generators_[1];
        return element_order(x) == p && element_order(y) == q && mul(y, x) == mul(x, power(y, s))
            && multiplicative_order(s, q) == p;
    }
    }
    return false;
}

std::string FiniteGroup::spec_string() const
{
    std::ostringstream os;
    switch (family_) {
    case Family::cyclic: os << "C:" << params_[0]; break;
    case Family::dihedral: os << "D:" << params_[0]; break;
    case Family::abelian_product:
    case Family::metacyclic:
        os << (family_ == Family::metacyclic ? "M:" : "A:");
        for (std::size_t i = 0; i < params_.size(); ++i)
            os << (i ? "," : "") << params_[i];
        break;
    }
    return os.str();
}

void FiniteGroup::finish()
{
    inverse_.assign(order_, kIdentity);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(Element(a), Element(b)) == kIdentity)
                inverse_[a] = Element(b);

    byte_positions_ = (order_ + 7) / 8;
    right_bytes_.assign(static_cast<std::size_t>(order_) * byte_positions_ * 256, ElementSet());
    for (int g = 0; g < order_; ++g)
        for (int pos = 0; pos < byte_positions_; ++pos)
            for (int byte = 1; byte < 256; ++byte) {
                ElementSet img;
                for (int bit = 0; bit < 8; ++bit) {
                    int a = pos * 8 + bit;
                    if ((byte >> bit) & 1) {
                        if (a >= order_)
                            break;
                        img.insert(mul(Element(a), Element(g)));
                    }
                }
                right_bytes_[(static_cast<std::size_t>(g) * byte_positions_ + pos) * 256 + byte] = img;
            }
}

namespace {

std::string power_label(const std::string& gen, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return gen;
    return gen + "^" + std::to_string(e);
}

std::string normal_label(int a, int b)
{
    std::string s = power_label("x", a) + power_label("y", b);
    return s.empty() ? "1" : s;
}

void check_order(long long order)
{
    if (order > kMaxOrder)
        throw std::invalid_argument("group order " + std::to_string(order) + " exceeds the supported maximum of "
                                    + std::to_string(kMaxOrder));
}

}  // namespace

GroupPtr make_cyclic(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclic group order must be at least 1");
    check_order(n);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->family_ = Family::cyclic;
    g->params_ = {n};
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g->table_[a * n + b] = Element((a + b) % n);
    for (int b = 0; b < n; ++b)
        g->labels_.push_back(normal_label(0, b));
    if (n > 1) {
        g->generator_names_ = {"y"};
        g->named_generators_ = {Element(1)};
    }
    g->finish();
    return g;
}

GroupPtr make_abelian(const std::vector<int>& invariants)
{
    if (invariants.empty())
        throw std::invalid_argument("abelian group needs at least one invariant");
    long long order = 1;
    for (int n : invariants) {
        if (n < 1)
            throw std::invalid_argument("abelian invariants must be positive");
        order *= n;
        check_order(order);
    }
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = static_cast<int>(order);
    g->family_ = Family::abelian_product;
    g->params_ = invariants;

    const std::size_t r = invariants.size();
    std::vector<int> stride(r, 1);
    for (std::size_t i = 1; i < r; ++i)
        stride[i] = stride[i - 1] * invariants[i - 1];
    auto digits = [&](int idx) {
        std::vector<int> d(r);
        for (std::size_t i = 0; i < r; ++i)
            d[i] = (idx / stride[i]) % invariants[i];
        return d;
    };

    const int n = g->order_;
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            int c = 0;
            for (std::size_t i = 0; i < r; ++i)
                c += ((da[i] + db[i]) % invariants[i]) * stride[i];
            g->table_[a * n + b] = Element(c);
        }
    }

    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        std::string s;
        for (std::size_t i = 0; i < r; ++i)
            s += power_label(names[i], da[i]);
        g->labels_.push_back(s.empty() ? "1" : s);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (invariants[i] == 1)
            continue;
        g->generator_names_.push_back(names[i]);
        g->named_generators_.push_back(Element(stride[i]));
    }
    g->finish();
    return g;
}

GroupPtr make_dihedral(int n)
{
    if (n < 3)
        throw std::invalid_argument("dihedral group D_2n requires n >= 3");
    check_order(2LL * n);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = 2 * n;
    g->family_ = Family::dihedral;
    g->params_ = {n};
    const int order = 2 * n;
    g->table_.resize(static_cast<std::size_t>(order) * order);
    // (x^a y^b)(x^c y^d) = x^(a+c) y^((-1)^c b + d)
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < n; ++d) {
                    int e = (((c == 0 ? b : -b) + d) % n + n) % n;
                    g->table_[(a * n + b) * order + c * n + d] = Element(((a + c) % 2) * n + e);
                }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b)
            g->labels_.push_back(normal_label(a, b));
    g->generator_names_ = {"x", "y"};
    g->named_generators_ = {Element(n), Element(1)};
    g->finish();
    return g;
}

GroupPtr make_metacyclic(int p, int q, int s)
{
    if (p == 2)
        throw std::invalid_argument("metacyclic group with p = 2 is dihedral; use D:" + std::to_string(q));
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("metacyclic group requires p and q prime");
    if (p < 3)
        throw std::invalid_argument("metacyclic group requires p >= 3");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("metacyclic group requires p | q - 1");
    int ord = multiplicative_order(s, q);
    if (ord != p)
        throw std::invalid_argument("invalid presentation: ord_" + std::to_string(q) + "(" + std::to_string(s)
                                    + ") = " + std::to_string(ord) + " != " + std::to_string(p));
    check_order(static_cast<long long>(p) * q);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = p * q;
    g->family_ = Family::metacyclic;
    g->params_ = {p, q, ((s % q) + q) % q};
    const int order = p * q;
    std::vector<int> spow(p, 1);
    for (int i = 1; i < p; ++i)
        spow[i] = spow[i - 1] * g->params_[2] % q;
    g->table_.resize(static_cast<std::size_t>(order) * order);
    // (x^a y^b)(x^c y^d) = x^(a+c) y^(b s^c + d)
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < q; ++d)
                    g->table_[(a * q + b) * order + c * q + d] = Element(((a + c) % p) * q + (b * spow[c] + d) % q);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            g->labels_.push_back(normal_label(a, b));
    g->generator_names_ = {"x", "y"};
    g->named_generators_ = {Element(q), Element(1)};
    g->finish();
    return g;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    while (true) {
        auto comma = s.find(',');
        auto tok = trim(s.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad integer '" + std::string(tok) + "' in group spec");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Element FiniteGroup::parse_element(std::string_view word) const
{
    std::string w;
    for (char c : word)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '.')
            w.push_back(c);
    if (w.empty())
        throw std::invalid_argument("empty element word");
    if (w == "1" || w == "e")
        return kIdentity;
    Element acc = kIdentity;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = 0;
        for (; j < generator_names_.size(); ++j)
            if (w.compare(i, generator_names_[j].size(), generator_names_[j]) == 0)
                break;
        if (j == generator_names_.size())
            throw std::invalid_argument("unknown generator in element '" + w + "' for group " + spec_string());
        i += generator_names_[j].size();
        long long e = 1;
        if (i < w.size() && w[i] == '^') {
            ++i;
            bool neg = i < w.size() && w[i] == '-';
            if (neg)
                ++i;
            std::size_t start = i;
            while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i])))
                ++i;
            if (start == i)
                throw std::invalid_argument("missing exponent in element '" + w + "'");
            e = std::stoll(w.substr(start, i - start));
            if (neg)
                e = -e;
        }
        acc = mul(acc, power(named_generators_[j], e));
    }
    return acc;
}

GroupPtr parse_group_spec(std::string_view spec)
{
    spec = trim(spec);
    auto colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw std::invalid_argument("group spec must look like C:n, A:n1,n2, D:n or M:p,q,s");
    auto kind = spec.substr(0, colon);
    auto args = parse_int_list(spec.substr(colon + 1));
    if (kind == "C" && args.size() == 1)
        return make_cyclic(args[0]);
    if (kind == "A")
        return make_abelian(args);
    if (kind == "D" && args.size() == 1)
        return make_dihedral(args[0]);
    if (kind == "M" && args.size() == 3)
        return make_metacyclic(args[0], args[1], args[2]);
    throw std::invalid_argument("unrecognized group spec '" + std::string(spec) + "'");
}

bool GroupMap::is_multiplicative() const
{
    const int n = source->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image[source->mul(Element(a), Element(b)).index] != target->mul(image[a], image[b]))
                return false;
    return true;
}

bool GroupMap::is_bijective() const
{
    if (source->order() != target->order())
        return false;
    ElementSet seen;
    for (Element g : image)
        seen.insert(g);
    return seen.size() == target->order();
}

std::optional<std::vector<GroupMap>> automorphisms(const GroupPtr& g, int cap)
{
    const int n = g->order();
    if (n > cap)
        return std::nullopt;

    std::vector<GroupMap> result;
    const auto& gens = g->named_generators();
    if (gens.empty()) {
        std::vector<Element> id(n);
        for (int i = 0; i < n; ++i)
            id[i] = Element(i);
        result.push_back({g, g, id, true, "id"});
        return result;
    }

    std::vector<int> gen_order;
    for (Element e : gens)
        gen_order.push_back(g->element_order(e));

    std::vector<Element> images(gens.size(), kIdentity);
    std::vector<Element> table(n);
    std::vector<bool> assigned(n);

    // Extend the generator images to the whole group by BFS on the Cayley
    // graph; a conflict means the assignment is not a homomorphism.
    auto try_extend = [&]() -> bool {
        std::fill(assigned.begin(), assigned.end(), false);
        table[0] = kIdentity;
        assigned[0] = true;
        std::queue<Element> todo;
        todo.push(kIdentity);
        while (!todo.empty()) {
            Element h = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                Element next = g->mul(h, gens[j]);
                Element img = g->mul(table[h.index], images[j]);
                if (!assigned[next.index]) {
                    assigned[next.index] = true;
                    table[next.index] = img;
                    todo.push(next);
                }
                else if (table[next.index] != img)
                    return false;
            }
        }
        return true;
    };

    std::vector<int> choice(gens.size(), 0);
    while (true) {
        bool orders_ok = true;
        for (std::size_t j = 0; j < gens.size() && orders_ok; ++j) {
            images[j] = Element(choice[j]);
            orders_ok = g->element_order(images[j]) == gen_order[j];
        }
        if (orders_ok && try_extend()) {
            GroupMap m{g, g, table, true, ""};
            if (m.is_bijective() && m.is_multiplicative())
                result.push_back(std::move(m));
        }
        std::size_t j = 0;
        while (j < choice.size() && ++choice[j] == n)
            choice[j++] = 0;
        if (j == choice.size())
            break;
    }

    std::sort(result.begin(), result.end(), [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
    // identity has image[i] = i, which is lexicographically smallest among
    // bijections fixing 0, so it is already first
    for (std::size_t i = 0; i < result.size(); ++i)
        result[i].name = i == 0 ? "id" : "aut" + std::to_string(i);
    return result;
}

GroupMap dihedral_phi(const GroupPtr& d2n, int alpha)
{
    if (d2n->family() != Family::dihedral)
        throw std::invalid_argument("phi_alpha is defined on dihedral groups");
    const int n = d2n->params()[0];
    alpha = ((alpha % n) + n) % n;
    std::vector<Element> image(2 * n);
    // x^a y^b -> (x y^alpha)^a y^b
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b)
            image[a * n + b] = d2n->normal_form(a, a * alpha + b);
    return {d2n, d2n, image, true, "phi_" + std::to_string(alpha)};
}

GroupMap dihedral_psi(const GroupPtr& d2n)
{
    if (d2n->family() != Family::dihedral)
        throw std::invalid_argument("psi is defined on dihedral groups");
    const int n = d2n->params()[0];
    auto cn = make_cyclic(n);
    std::vector<Element> image(2 * n);
    for (int i = 0; i < 2 * n; ++i)
        image[i] = Element(i % n);
    return {d2n, cn, image, false, "psi"};
}

}  // namespace zsinv
