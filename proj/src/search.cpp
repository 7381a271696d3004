#include "zsinv/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace zsinv {

std::string_view invariant_name(InvariantKind k)
{
    switch (k) {
    case InvariantKind::davenport: return "davenport";
    case InvariantKind::plus_minus_davenport: return "dpm";
    case InvariantKind::sdN: return "sdn";
    case InvariantKind::s_exact: return "s-exact";
    case InvariantKind::s_leq: return "s-leq";
    }
    return "unknown";
}

InvariantKind parse_invariant(std::string_view name)
{
    for (auto k : {InvariantKind::davenport, InvariantKind::plus_minus_davenport, InvariantKind::sdN,
                   InvariantKind::s_exact, InvariantKind::s_leq})
        if (invariant_name(k) == name)
            return k;
    throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

ProductQuery invariant_predicate(InvariantKind k, int param)
{
    switch (k) {
    case InvariantKind::davenport: return product_free();
    case InvariantKind::plus_minus_davenport: return pm_product_free();
    case InvariantKind::sdN: return dN_free(param);
    case InvariantKind::s_exact: return n_product_free(param);
    case InvariantKind::s_leq: return leq_free(param);
    }
    throw std::invalid_argument("unknown invariant kind");
}

std::optional<long long> predict_sdN(const FiniteGroup& g, long long d)
{
    if (d < 1)
        return std::nullopt;
    switch (g.family()) {
    case Family::cyclic:
    case Family::abelian_product: {
        auto inv = g.canonical_invariants();
        if (inv.empty())
            return d;
        if (inv.size() == 1) {
            long long n = inv[0];
            return std::lcm(n, d) + std::gcd(n, d) - 1;
        }
        if (inv.size() == 2) {
            long long m = inv[0], n = inv[1];
            return std::lcm(n, d) + std::gcd(n, std::lcm(m, d)) + std::gcd(m, d) - 2;
        }
        return std::nullopt;
    }
    case Family::dihedral: {
        long long n = g.params()[0];
        if (d % 2 == 1 && d % n == 0)
            return 2 * d + floor_log2(n);
        if (std::gcd(n, d) == 1)
            return n * d + 1;
        return std::nullopt;
    }
    case Family::metacyclic: {
        long long p = g.params()[0], q = g.params()[1];
        if (d % p != 0)
            return std::nullopt;
        return std::lcm(d, q) + p - 2 + std::gcd(d, q);
    }
    }
    return std::nullopt;
}

std::optional<long long> predict_s_exact(const FiniteGroup& g, long long k)
{
    if (k < 1 || s_exact_infinite_witness(g, k))
        return std::nullopt;
    if (g.family() == Family::cyclic) {
        long long n = g.order();
        return k + n - 1;  // s_dn(C_n) = (d + 1) n - 1
    }
    if (g.family() == Family::dihedral && k == g.order())
        return 3LL * g.params()[0];
    return std::nullopt;
}

std::optional<long long> predict_s_leq(const FiniteGroup& g, long long k)
{
    if (g.family() == Family::dihedral && k == g.params()[0])
        return k + 1;
    if (g.family() == Family::cyclic && k >= g.order())
        return g.order();
    return std::nullopt;
}

std::optional<Element> s_exact_infinite_witness(const FiniteGroup& g, long long k)
{
    for (int i = 0; i < g.order(); ++i)
        if (g.power(Element(i), k) != kIdentity)
            return Element(i);
    return std::nullopt;
}

int default_length_cap(const FiniteGroup& g, InvariantKind kind, int param)
{
    const int order = g.order();
    switch (kind) {
    case InvariantKind::davenport:
    case InvariantKind::plus_minus_davenport:
        // D_pm(G) <= D(G) <= |G|
        if (auto p = predict_sdN(g, 1))
            return static_cast<int>(std::min<long long>(*p + 2, order));
        return order;
    case InvariantKind::sdN:
        // d blocks of length <= |G| plus a zero-sum selection of their
        // lengths mod d give s_dN(G) <= d |G|
        if (auto p = predict_sdN(g, param))
            return static_cast<int>(std::min<long long>(*p + 2, static_cast<long long>(param) * order));
        return param * order;
    case InvariantKind::s_exact:
        if (auto p = predict_s_exact(g, param))
            return static_cast<int>(*p + 2);
        return order + param + 1;
    case InvariantKind::s_leq:
        if (auto p = predict_s_leq(g, param))
            return static_cast<int>(*p + 2);
        return 2 * order;
    }
    return order;
}

namespace {

struct TaskResult {
    int best_length = -1;
    Sequence best;
    std::vector<Sequence> collected;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
};

/// DFS over free multisets in nondecreasing element order. A child is
/// expanded only if it is free (checked on the states its new term creates)
/// and canonical under the supplied automorphisms; canonical multisets are
/// closed under removing their largest term, so every orbit is reached.
class FreeSearch {
public:
    FreeSearch(const GroupPtr& g, const ProductQuery& pred, int cap, const std::vector<GroupMap>* autos,
               int collect_length)
        : group_(g), pred_(pred), cap_(cap), autos_(autos), collect_length_(collect_length),
          table_(g, pred.is_signed, ProductLimits{std::max(cap, 1), std::size_t{1} << 26}), cur_(g)
    {
    }

    /// Extends `cur_` by g; returns whether the extension is free and
    /// canonical. On false the extension is undone.
    bool try_push(Element g, TaskResult& out)
    {
        table_.push(g);
        cur_.add(g);
        last_ = g.index;
        if (table_.find_state(pred_, table_.last_block_begin(), table_.state_count())) {
            undo();
            return false;
        }
        if (autos_ && !is_canonical(cur_, *autos_)) {
            ++out.pruned;
            undo();
            return false;
        }
        return true;
    }

    void undo()
    {
        table_.pop();
        cur_.remove(Element(last_));
        recompute_last();
    }

    void visit(TaskResult& out)
    {
        ++out.nodes;
        if (cur_.length() > out.best_length) {
            out.best_length = cur_.length();
            out.best = cur_;
        }
        if (cur_.length() == collect_length_)
            out.collected.push_back(cur_);
    }

    void dfs(TaskResult& out)
    {
        visit(out);
        if (cur_.length() >= cap_)
            return;
        const int start = last_;
        for (int g = start; g < group_->order(); ++g) {
            if (try_push(Element(g), out)) {
                last_ = g;
                dfs(out);
                undo();
            }
            last_ = start;
        }
    }

    /// Pushes a fixed prefix (already known to be free and canonical).
    void load(const std::vector<Element>& prefix)
    {
        for (Element g : prefix) {
            table_.push(g);
            cur_.add(g);
            last_ = g.index;
        }
    }

    const Sequence& current() const { return cur_; }
    int last() const { return last_; }
    void set_last(int l) { last_ = l; }

private:
    void recompute_last()
    {
        last_ = 0;
        for (int i = group_->order() - 1; i >= 0; --i)
            if (cur_.counts()[i] > 0) {
                last_ = i;
                break;
            }
    }

    GroupPtr group_;
    ProductQuery pred_;
    int cap_;
    const std::vector<GroupMap>* autos_;
    int collect_length_;
    ProductTable table_;
    Sequence cur_;
    int last_ = 0;
};

struct Unit {
    std::vector<Element> prefix;
    bool expand = true;  // false: record the prefix node only (depth-1 heads)
};

struct SearchOutcome {
    int best_length = -1;
    Sequence best;
    std::vector<Sequence> collected;
    SearchStats stats;
};

SearchOutcome run_search(const GroupPtr& g, const ProductQuery& pred, int cap, const SearchOptions& opts,
                         int collect_length)
{
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::vector<GroupMap>> autos;
    if (opts.orbit_pruning)
        autos = automorphisms(g, opts.automorphism_cap);
    const std::vector<GroupMap>* maps = autos ? &*autos : nullptr;
    if (maps && maps->size() <= 1)
        maps = nullptr;

    // Units in DFS pre-order: the root, each free canonical depth-1 node, and
    // the subtree of each free canonical depth-2 node.
    SearchOutcome outcome;
    std::vector<TaskResult> head_results;
    std::vector<Unit> units;
    {
        FreeSearch root(g, pred, cap, maps, collect_length);
        TaskResult r;
        root.visit(r);
        head_results.push_back(std::move(r));
        units.push_back({{}, false});
        if (cap >= 1) {
            for (int a = 0; a < g->order(); ++a) {
                TaskResult ra;
                if (!root.try_push(Element(a), ra)) {
                    head_results.push_back(std::move(ra));
                    units.push_back({{}, false});
                    continue;
                }
                root.set_last(a);
                root.visit(ra);
                if (cap >= 2) {
                    for (int b = a; b < g->order(); ++b) {
                        if (root.try_push(Element(b), ra)) {
                            units.push_back({{Element(a), Element(b)}, true});
                            root.undo();
                        }
                        root.set_last(a);
                    }
                }
                head_results.push_back(std::move(ra));
                units.push_back({{}, false});
                root.undo();
            }
        }
    }

    // Expandable units get their own result slots; heads already have theirs.
    std::vector<std::size_t> expand_index;
    for (std::size_t i = 0; i < units.size(); ++i)
        if (units[i].expand)
            expand_index.push_back(i);
    std::vector<TaskResult> task_results(expand_index.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= expand_index.size())
                return;
            const Unit& u = units[expand_index[t]];
            FreeSearch s(g, pred, cap, maps, collect_length);
            s.load(u.prefix);
            s.dfs(task_results[t]);
        }
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || expand_index.size() <= 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Merge in pre-order. Heads are interleaved with the subtrees they own.
    std::size_t head = 0, task = 0;
    auto absorb = [&](TaskResult& r) {
        if (r.best_length > outcome.best_length) {
            outcome.best_length = r.best_length;
            outcome.best = r.best;
        }
        for (auto& s : r.collected)
            outcome.collected.push_back(std::move(s));
        outcome.stats.nodes += r.nodes;
        outcome.stats.orbits_pruned += r.pruned;
    };
    for (const Unit& u : units) {
        if (u.expand)
            absorb(task_results[task++]);
        else
            absorb(head_results[head++]);
    }
    outcome.stats.pruning_used = maps != nullptr;
    outcome.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

}  // namespace

InvariantResult compute_invariant(const GroupPtr& g, InvariantKind kind, int param, const SearchOptions& opts)
{
    if (kind == InvariantKind::davenport || kind == InvariantKind::plus_minus_davenport)
        param = 1;
    if (param < 1)
        throw std::invalid_argument("invariant parameter must be positive");
    const ProductQuery pred = invariant_predicate(kind, param);
    const int cap = opts.length_cap > 0 ? opts.length_cap : default_length_cap(*g, kind, param);

    auto outcome = run_search(g, pred, cap, opts, -1);

    InvariantResult r;
    r.kind = kind;
    r.group = g;
    r.param = param;
    r.length_cap = cap;
    r.stats = outcome.stats;
    r.witness = outcome.best;
    if (outcome.best_length >= cap) {
        r.status = SearchStatus::undetermined_at_cap;
        r.value = cap + 1;
        if (kind == InvariantKind::s_exact)
            if (auto e = s_exact_infinite_witness(*g, param)) {
                Sequence w(g);
                w.add(*e, cap);
                r.witness = w;
            }
    }
    else {
        r.status = SearchStatus::exact;
        r.value = outcome.best_length + 1;
    }
    return r;
}

InvariantResult compute_sdN(const GroupPtr& g, int d, const SearchOptions& opts)
{
    return compute_invariant(g, InvariantKind::sdN, d, opts);
}

InvariantResult compute_davenport(const GroupPtr& g, const SearchOptions& opts)
{
    return compute_invariant(g, InvariantKind::davenport, 1, opts);
}

InvariantResult compute_dpm(const GroupPtr& g, const SearchOptions& opts)
{
    return compute_invariant(g, InvariantKind::plus_minus_davenport, 1, opts);
}

InvariantResult compute_s_exact(const GroupPtr& g, int k, const SearchOptions& opts)
{
    return compute_invariant(g, InvariantKind::s_exact, k, opts);
}

InvariantResult compute_s_leq(const GroupPtr& g, int k, const SearchOptions& opts)
{
    return compute_invariant(g, InvariantKind::s_leq, k, opts);
}

std::vector<FreeClass> classify_free(const GroupPtr& g, const ProductQuery& predicate, int length,
                                     const SearchOptions& opts)
{
    if (length < 0)
        throw std::invalid_argument("length must be nonnegative");
    // multisets of the given length: C(|G| + L - 1, L)
    const double log_count = std::lgamma(g->order() + length) - std::lgamma(length + 1) - std::lgamma(g->order());
    if (log_count > std::log(4e9))
        throw std::invalid_argument("classification refused: search space too large");

    auto outcome = run_search(g, predicate, length, opts, length);
    std::optional<std::vector<GroupMap>> autos;
    if (outcome.stats.pruning_used)
        autos = automorphisms(g, opts.automorphism_cap);

    std::vector<FreeClass> out;
    for (auto& s : outcome.collected) {
        const std::size_t size = autos ? orbit_size(s, *autos) : 1;
        out.push_back({std::move(s), size});
    }
    return out;
}

}  // namespace zsinv
