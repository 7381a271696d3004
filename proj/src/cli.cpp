#include "zsinv/cli.hpp"

#include "zsinv/extract.hpp"
#include "zsinv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace zsinv {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string emit = "json";
    std::string out_path;
    std::optional<int> threads;
    std::uint64_t seed = 1;
    bool timing = false;
};

int resolve_threads(const Common& c)
{
    if (c.threads)
        return std::max(1, *c.threads);
    if (const char* env = std::getenv("ZSINV_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        }
        catch (const std::exception&) {
            throw std::invalid_argument("ZSINV_THREADS is not a number");
        }
    }
    return 1;
}

json stats_json(const SearchStats& s, bool timing)
{
    json j{{"nodes", s.nodes}, {"orbits_pruned", s.orbits_pruned}, {"pruning_used", s.pruning_used}};
    if (timing)
        j["wall_seconds"] = s.wall_seconds;
    return j;
}

template <typename T>
json opt_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

json row_json(const VerifyRow& r, bool timing)
{
    return json{{"group", r.group},
                {"invariant", r.invariant},
                {"params", r.params},
                {"predicted", opt_json(r.predicted)},
                {"computed", opt_json(r.computed)},
                {"relation", relation_name(r.relation)},
                {"provenance", provenance_name(r.provenance)},
                {"status", r.status == SearchStatus::exact ? "exact" : "undetermined-at-cap"},
                {"match", r.match},
                {"flagged", r.flagged},
                {"witness", r.witness ? json(format_sequence(*r.witness)) : json(nullptr)},
                {"witness_length", r.witness ? json(r.witness->length()) : json(nullptr)},
                {"witness_free", r.witness_free},
                {"stats", stats_json(r.stats, timing)},
                {"note", r.note}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::string scalar_text(const json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v)
            s += (s.empty() ? "" : ";") + scalar_text(e);
        return s;
    }
    return v.dump();
}

// Fixed column order for result rows.
constexpr const char* kRowColumns[] = {"group",      "invariant", "params", "predicted", "computed",
                                       "relation",   "provenance", "status", "match",     "flagged",
                                       "witness",    "witness_length", "witness_free"};

std::string render_csv(const json& report)
{
    std::ostringstream os;
    const auto& results = report["results"];
    const bool rows = !results.empty() && results[0].contains("provenance");
    if (rows) {
        os << "command";
        for (const char* c : kRowColumns)
            os << ',' << c;
        os << ",nodes,orbits_pruned";
        if (results[0]["stats"].contains("wall_seconds"))
            os << ",wall_seconds";
        os << ",note\n";
        for (const auto& r : results) {
            os << csv_field(report["command"].get<std::string>());
            for (const char* c : kRowColumns)
                os << ',' << csv_field(scalar_text(r[c]));
            os << ',' << r["stats"]["nodes"].dump() << ',' << r["stats"]["orbits_pruned"].dump();
            if (r["stats"].contains("wall_seconds"))
                os << ',' << r["stats"]["wall_seconds"].dump();
            os << ',' << csv_field(r["note"].get<std::string>()) << '\n';
        }
        return os.str();
    }
    os << "key,value\n";
    for (std::size_t i = 0; i < results.size(); ++i)
        for (const auto& [k, v] : results[i].items())
            os << csv_field(std::to_string(i) + "." + k) << ',' << csv_field(scalar_text(v)) << '\n';
    return os.str();
}

json make_report(const std::string& command, json parameters)
{
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"parameters", std::move(parameters)},
                {"results", json::array()}};
}

void emit(const json& report, const Common& c, std::ostream& out)
{
    std::string text;
    if (c.emit == "json")
        text = report.dump(2) + "\n";
    else if (c.emit == "csv")
        text = render_csv(report);
    else
        throw std::invalid_argument("--emit must be json or csv");
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot write " + c.out_path);
    f << text;
}

void add_common(CLI::App* sub, Common& c, bool search)
{
    sub->add_option("--emit", c.emit, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_path, "Write the report to a file instead of stdout");
    if (search) {
        sub->add_option("--threads", c.threads, "Worker threads (fallback: ZSINV_THREADS)");
        sub->add_flag("--timing", c.timing, "Include wall time in the report (breaks byte stability)");
    }
}

ProductQuery predicate_from(std::optional<int> d, std::optional<int> k, std::optional<int> leq, bool pm)
{
    int given = (d ? 1 : 0) + (k ? 1 : 0) + (leq ? 1 : 0) + (pm ? 1 : 0);
    if (given > 1)
        throw std::invalid_argument("use at most one of --d, --k, --leq, --pm");
    if (d)
        return dN_free(*d);
    if (k)
        return n_product_free(*k);
    if (leq)
        return leq_free(*leq);
    if (pm)
        return pm_product_free();
    return product_free();
}

json cert_json(const Certificate& c, const FiniteGroup& g)
{
    json terms = json::array();
    for (std::size_t i = 0; i < c.tuple.size(); ++i) {
        std::string t = g.label(c.tuple.elements[i]);
        if (c.tuple.sign(i) < 0)
            t += "^-1";
        terms.push_back(t);
    }
    return json{{"ordered", terms},
                {"length", c.tuple.size()},
                {"signed", c.kind == Certificate::Kind::signed_product},
                {"product", g.label(c.tuple.product(g))},
                {"verified", c.verify(g)}};
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text)
{
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pair '" + item + "' is not n:d");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

std::vector<std::vector<int>> parse_instances(const std::string& text)
{
    std::vector<std::vector<int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<int> inst;
        std::stringstream is(item);
        std::string num;
        while (std::getline(is, num, ':'))
            inst.push_back(std::stoi(num));
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoll(item));
    return out;
}

struct Args {
    Common common;
    std::string group;
    std::string invariant;
    std::optional<int> d, k, leq, cap, n, p, q, s, t, nu;
    bool pm = false;
    bool no_pruning = false;
    bool table = false;
    bool check = false;
    bool witness_only = false;
    std::string seq;
    std::string suite;
    std::string family;
    std::string instances;
    std::string pairs;
    std::string ints;
    std::string method;
    std::string name;
    int max_n = 5;
    int samples = 0;
    int variant = 1;
};

int cmd_group(const Args& a, std::ostream& out)
{
    auto g = parse_group_spec(a.group);
    auto report = make_report("group", json{{"group", a.group}});
    json r{{"group", g->spec_string()},
           {"family", family_name(g->family())},
           {"order", g->order()},
           {"exponent", g->exponent()},
           {"abelian", g->is_abelian()},
           {"elements", g->labels()},
           {"associative", g->check_associative()},
           {"latin_square", g->check_latin_square()},
           {"inverses", g->check_inverses()},
           {"relations", g->check_relations()}};
    if (g->is_abelian()) {
        r["invariant_factors"] = g->canonical_invariants();
        r["d_star"] = g->d_star();
    }
    if (auto autos = automorphisms(g))
        r["automorphisms"] = autos->size();
    else
        r["automorphisms"] = nullptr;
    if (a.table) {
        json rows = json::array();
        for (int i = 0; i < g->order(); ++i) {
            json row = json::array();
            for (int j = 0; j < g->order(); ++j)
                row.push_back(g->label(g->mul(Element(i), Element(j))));
            rows.push_back(row);
        }
        r["table"] = rows;
    }
    report["results"].push_back(r);
    emit(report, a.common, out);
    return kExitOk;
}

int cmd_compute(const Args& a, std::ostream& out)
{
    auto g = parse_group_spec(a.group);
    const auto kind = parse_invariant(a.invariant);
    int param = 1;
    if (kind == InvariantKind::sdN)
        param = a.d.value_or(1);
    else if (kind == InvariantKind::s_exact || kind == InvariantKind::s_leq) {
        if (!a.k)
            throw std::invalid_argument("--k is required for " + a.invariant);
        param = *a.k;
    }
    SearchOptions opts;
    opts.length_cap = a.cap.value_or(0);
    opts.orbit_pruning = !a.no_pruning;
    opts.threads = resolve_threads(a.common);

    std::optional<long long> predicted;
    switch (kind) {
    case InvariantKind::davenport: predicted = predict_sdN(*g, 1); break;
    case InvariantKind::sdN: predicted = predict_sdN(*g, param); break;
    case InvariantKind::s_exact: predicted = predict_s_exact(*g, param); break;
    case InvariantKind::s_leq: predicted = predict_s_leq(*g, param); break;
    case InvariantKind::plus_minus_davenport: break;
    }
    json params{{"group", a.group}, {"invariant", a.invariant}, {"param", param}};
    if (a.cap)
        params["cap"] = *a.cap;
    params["orbit_pruning"] = opts.orbit_pruning;
    auto report = make_report("compute", params);

    auto row = verify_instance(g, kind, param, predicted, Relation::equal, opts);
    json r = row_json(row, a.common.timing);
    if (!row.predicted && row.status == SearchStatus::exact)
        r["match"] = nullptr;
    if (kind == InvariantKind::s_exact && row.status == SearchStatus::undetermined_at_cap) {
        if (auto e = s_exact_infinite_witness(*g, param)) {
            r["infinite"] = true;
            r["note"] = "infinite: " + g->label(*e) + "^" + std::to_string(param) + " != 1, so " + g->label(*e) +
                        "^[N] is free for every N";
        }
    }
    report["results"].push_back(r);
    emit(report, a.common, out);
    if (row.status == SearchStatus::undetermined_at_cap)
        return kExitUndetermined;
    if (row.predicted && !row.match)
        return kExitMismatch;
    return kExitOk;
}

int cmd_verify(const Args& a, std::ostream& out)
{
    VerifyReport rep;
    SearchOptions opts;
    opts.threads = resolve_threads(a.common);
    opts.orbit_pruning = !a.no_pruning;
    json params;
    if (!a.family.empty()) {
        params = json{{"family", a.family}, {"instances", a.instances}};
        rep = verify_formula(parse_formula_family(a.family), parse_instances(a.instances), opts);
    }
    else {
        if (a.suite.empty())
            throw std::invalid_argument("verify needs --suite or --family");
        SuiteArgs sa;
        sa.max_n = a.max_n;
        sa.pairs = a.pairs.empty() ? std::vector<std::pair<int, int>>{} : parse_pairs(a.pairs);
        sa.p = a.p.value_or(3);
        sa.q = a.q.value_or(7);
        sa.s = a.s.value_or(2);
        sa.k = a.k.value_or(1);
        sa.samples = a.samples;
        sa.seed = a.common.seed;
        sa.witness_only = a.witness_only;
        sa.search = opts;
        params = json{{"suite", a.suite}, {"max_n", sa.max_n}, {"pairs", a.pairs}, {"p", sa.p}, {"q", sa.q},
                      {"s", sa.s}, {"k", sa.k}, {"samples", sa.samples}, {"seed", sa.seed},
                      {"witness_only", sa.witness_only}};
        rep = run_suite(a.suite, sa);
    }
    auto report = make_report("verify", params);
    for (const auto& r : rep.rows)
        report["results"].push_back(row_json(r, a.common.timing));
    report["all_match"] = rep.all_match();
    emit(report, a.common, out);
    if (!rep.all_match())
        return rep.any_undetermined() ? kExitUndetermined : kExitMismatch;
    return kExitOk;
}

int cmd_check_free(const Args& a, std::ostream& out)
{
    auto g = parse_group_spec(a.group);
    auto seq = parse_sequence(g, a.seq);
    auto pred = predicate_from(a.d, a.k, a.leq, a.pm);
    auto res = freeness(seq, pred);
    auto report = make_report("check-free", json{{"group", a.group}, {"sequence", a.seq}, {"predicate", pred.describe()}});
    json r{{"sequence", format_sequence(seq)}, {"length", seq.length()}, {"predicate", pred.describe()}, {"free", res.free}};
    r["violation"] = res.violation ? cert_json(*res.violation, *g) : json(nullptr);
    report["results"].push_back(r);
    emit(report, a.common, out);
    return kExitOk;
}

int cmd_find_subseq(const Args& a, std::ostream& out)
{
    auto g = parse_group_spec(a.group);
    auto seq = parse_sequence(g, a.seq);
    auto pred = predicate_from(a.d, a.k, a.leq, a.pm);
    auto cert = find_subsequence(seq, pred);
    auto report = make_report("find-subseq", json{{"group", a.group}, {"sequence", a.seq}, {"query", pred.describe()}});
    json r{{"sequence", format_sequence(seq)}, {"query", pred.describe()}, {"found", cert.has_value()}};
    r["certificate"] = cert ? cert_json(*cert, *g) : json(nullptr);
    report["results"].push_back(r);
    emit(report, a.common, out);
    return kExitOk;
}

GroupPtr dihedral_from(const Args& a)
{
    if (!a.group.empty())
        return parse_group_spec(a.group);
    if (!a.n)
        throw std::invalid_argument("--n or --group is required");
    return make_dihedral(*a.n);
}

int cmd_extract(const Args& a, std::ostream& out)
{
    std::string m = a.method;
    // accepted short tags
    if (m == "2.5") m = "signed-zero-mod";
    else if (m == "2.6i") m = "even-reflections";
    else if (m == "2.6ii") m = "equal-rotations";
    else if (m == "2.7") m = "dihedral-pm";
    else if (m == "2.10") m = "odd-pm";

    json params{{"method", m}};
    json r;
    if (m == "signed-zero-mod") {
        if (!a.n)
            throw std::invalid_argument("--n is required");
        auto ys = parse_ints(a.ints);
        auto res = signed_zero_mod(ys, *a.n);
        params["ints"] = a.ints;
        params["n"] = *a.n;
        json idx = json::array(), signs = json::array();
        long long sum = 0;
        for (std::size_t i = 0; i < res.indices.size(); ++i) {
            idx.push_back(res.indices[i] + 1);
            signs.push_back(res.signs[i] > 0 ? "+" : "-");
            sum += res.signs[i] * ys[res.indices[i]];
        }
        r = json{{"J", idx}, {"signs", signs}, {"signed_sum", sum}, {"valid", res.verify(ys, *a.n)}};
    }
    else {
        GroupPtr g = m == "odd-pm" ? (a.group.empty() ? make_cyclic(a.n.value_or(0)) : parse_group_spec(a.group))
                                   : dihedral_from(a);
        auto seq = parse_sequence(g, a.seq);
        params["group"] = g->spec_string();
        params["sequence"] = a.seq;
        r["sequence"] = format_sequence(seq);
        if (m == "even-reflections")
            r["certificate"] = cert_json(dihedral_even_extract(seq), *g);
        else if (m == "equal-rotations") {
            auto eq = dihedral_equal_pairs(seq);
            r["first"] = format_sequence(eq.first);
            r["second"] = format_sequence(eq.second);
            r["product_first"] = g->label(full_products(eq.first).elements().front());
        }
        else if (m == "dihedral-pm") {
            auto c = dpm_extract(seq);
            r["certificate"] = cert_json(c, *g);
            try {
                r["unsigned"] = cert_json(signed_to_product(c, g), *g);
            }
            catch (const PreconditionError&) {
                r["unsigned"] = nullptr;
            }
        }
        else if (m == "odd-pm")
            r["certificate"] = cert_json(odd_pm_extract(seq), *g);
        else if (m == "decompose") {
            auto dec = dihedral_block_decompose(seq);
            json blocks = json::array();
            for (const auto& b : dec.blocks)
                blocks.push_back(format_sequence(b));
            r["blocks"] = blocks;
            r["remainder"] = format_sequence(dec.remainder);
        }
        else if (m == "coprime") {
            if (!a.d)
                throw std::invalid_argument("--d is required");
            params["d"] = *a.d;
            r["certificate"] = cert_json(dihedral_coprime_extract(seq, *a.d), *g);
        }
        else
            throw std::invalid_argument("unknown extraction method '" + a.method + "'");
    }
    auto report = make_report("extract", params);
    report["results"].push_back(r);
    emit(report, a.common, out);
    return kExitOk;
}

int cmd_witness(const Args& a, std::ostream& out)
{
    auto need = [](const std::optional<int>& v, const char* flag) {
        if (!v)
            throw std::invalid_argument(std::string(flag) + " is required");
        return *v;
    };
    const auto name = parse_witness_name(a.name);
    Witness w;
    switch (name) {
    case WitnessName::dihedral_main: w = dihedral_main_witness(need(a.n, "--n"), need(a.d, "--d")); break;
    case WitnessName::dihedral_coprime: w = dihedral_coprime_witness(need(a.n, "--n"), need(a.d, "--d")); break;
    case WitnessName::dihedral_nN: w = dihedral_nN_witness(need(a.n, "--n")); break;
    case WitnessName::metacyclic:
        w = metacyclic_witness(need(a.p, "--p"), need(a.q, "--q"), need(a.s, "--s"), need(a.k, "--k"));
        break;
    case WitnessName::generic_identity_pad: {
        auto g = parse_group_spec(a.group);
        w = generic_identity_pad(parse_sequence(g, a.seq), need(a.d, "--d"));
        break;
    }
    case WitnessName::inverse_family: {
        std::vector<int> params;
        if (a.variant == 1)
            params = {need(a.t, "--t"), need(a.s, "--s")};
        else if (a.t)
            params = {*a.t, need(a.nu, "--nu")};
        w = inverse_family(need(a.n, "--n"), a.variant, params);
        break;
    }
    }
    auto report = make_report("witness", json{{"name", a.name}, {"params", w.spec.params}});
    json r{{"name", witness_name(w.spec.name)},
           {"sequence", format_sequence(w.sequence)},
           {"length", w.sequence.length()},
           {"expected_length", w.spec.expected_length},
           {"predicate", w.spec.predicate.describe()}};
    if (a.check) {
        auto res = freeness(w.sequence, w.spec.predicate);
        r["free"] = res.free;
        r["violation"] = res.violation ? cert_json(*res.violation, *w.sequence.group()) : json(nullptr);
    }
    report["results"].push_back(r);
    emit(report, a.common, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"zsinv: zero-sum invariants of small finite groups", "zsinv"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    Args a;

    auto* group = app.add_subcommand("group", "Show a group's elements and checks");
    group->add_option("--group", a.group, "C:n, A:n1,n2,..., D:n or M:p,q,s")->required();
    group->add_flag("--table", a.table, "Include the Cayley table");
    add_common(group, a.common, false);

    auto* compute = app.add_subcommand("compute", "Compute an invariant by exhaustive search");
    compute->add_option("--group", a.group)->required();
    compute->add_option("--invariant", a.invariant, "davenport, dpm, sdn, s-exact or s-leq")->required();
    compute->add_option("--d", a.d, "d for sdn");
    compute->add_option("--k", a.k, "k for s-exact and s-leq");
    compute->add_option("--cap", a.cap, "Length cap (default: prediction + 2 or a safe bound)");
    compute->add_flag("--no-pruning", a.no_pruning, "Disable automorphism orbit pruning");
    compute->add_option("--seed", a.common.seed);
    add_common(compute, a.common, true);

    auto* verify = app.add_subcommand("verify", "Check closed forms against computation");
    verify->add_option("--suite", a.suite, "Named suite");
    verify->add_option("--family", a.family, "cyclic, rank2, dihedral-odd, dihedral-coprime, metacyclic, abelian-dstar");
    verify->add_option("--instances", a.instances, "Instances for --family, e.g. 4:6,3:2");
    verify->add_option("--max-n", a.max_n);
    verify->add_option("--pairs", a.pairs, "n:d pairs, e.g. 3:3,3:9");
    verify->add_option("--p", a.p);
    verify->add_option("--q", a.q);
    verify->add_option("--s", a.s);
    verify->add_option("--k", a.k);
    verify->add_option("--samples", a.samples, "Random samples for sampled suites");
    verify->add_option("--seed", a.common.seed);
    verify->add_flag("--witness-only", a.witness_only, "Skip exhaustive searches");
    verify->add_flag("--no-pruning", a.no_pruning);
    add_common(verify, a.common, true);

    auto add_predicate = [&](CLI::App* sub) {
        sub->add_option("--group", a.group)->required();
        sub->add_option("--seq", a.seq, "e.g. x^[5],y")->required();
        sub->add_option("--d", a.d, "length divisible by d");
        sub->add_option("--k", a.k, "length exactly k");
        sub->add_option("--leq", a.leq, "length at most k");
        sub->add_flag("--pm", a.pm, "signed products");
        add_common(sub, a.common, false);
    };
    auto* check = app.add_subcommand("check-free", "Decide whether a sequence is free");
    add_predicate(check);
    auto* find = app.add_subcommand("find-subseq", "Find a 1-product subsequence");
    add_predicate(find);

    auto* extract = app.add_subcommand("extract", "Run a constructive extraction");
    extract->add_option("--method,--lemma", a.method,
                        "signed-zero-mod, even-reflections, equal-rotations, dihedral-pm, odd-pm, decompose, coprime")
        ->required();
    extract->add_option("--ints", a.ints);
    extract->add_option("--n", a.n);
    extract->add_option("--d", a.d);
    extract->add_option("--group", a.group);
    extract->add_option("--seq", a.seq);
    add_common(extract, a.common, false);

    auto* witness = app.add_subcommand("witness", "Build an extremal sequence");
    witness->add_option("--name", a.name,
                        "dihedral-main, dihedral-coprime, dihedral-nN, metacyclic, generic-identity-pad, inverse-family")
        ->required();
    witness->add_option("--n", a.n);
    witness->add_option("--d", a.d);
    witness->add_option("--p", a.p);
    witness->add_option("--q", a.q);
    witness->add_option("--s", a.s);
    witness->add_option("--k", a.k);
    witness->add_option("--t", a.t);
    witness->add_option("--nu", a.nu);
    witness->add_option("--variant", a.variant);
    witness->add_option("--group", a.group);
    witness->add_option("--seq", a.seq);
    witness->add_flag("--check", a.check, "Re-check freeness");
    add_common(witness, a.common, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (group->parsed())
            return cmd_group(a, out);
        if (compute->parsed())
            return cmd_compute(a, out);
        if (verify->parsed())
            return cmd_verify(a, out);
        if (check->parsed())
            return cmd_check_free(a, out);
        if (find->parsed())
            return cmd_find_subseq(a, out);
        if (extract->parsed())
            return cmd_extract(a, out);
        if (witness->parsed())
            return cmd_witness(a, out);
    }
    catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUndetermined;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::out_of_range& e) {
        err << "error: number out of range: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace zsinv
