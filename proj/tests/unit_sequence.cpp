#include <doctest.h>

#include "zsinv/sequence.hpp"

#include <random>
#include <set>

using namespace zsinv;

TEST_CASE("sequence arithmetic")
{
    auto g = make_dihedral(3);
    auto s = [&](const char* t) { return parse_sequence(g, t); };

    CHECK(concat(s("x,y"), s("y")) == s("x,y^[2]"));
    CHECK(subtract(s("x,y,y"), s("y^[3]")) == s("x"));
    CHECK(intersect(s("x^[2],y"), s("x,y^[3]")) == s("x,y"));

    auto a = s("x^[3],xy,y^2");
    auto b = s("x,y^2");
    CHECK(a.divides(b));
    CHECK(!b.divides(a));
    CHECK(concat(subtract(a, b), b) == a);

    CHECK_THROWS_AS(concat(s("x"), parse_sequence(make_cyclic(3), "y")), std::invalid_argument);
    Sequence e(g);
    CHECK_THROWS_AS(e.remove(Element(1)), std::invalid_argument);
}

TEST_CASE("stats")
{
    auto g = make_dihedral(3);
    auto st = stats(Sequence(g));
    CHECK(st.length == 0);
    CHECK(st.max_multiplicity == 0);
    CHECK(st.support.empty());
    CHECK(st.squarefree);

    st = stats(parse_sequence(g, "x^[5],y"));
    CHECK(st.length == 6);
    CHECK(st.max_multiplicity == 5);
    CHECK(st.support.size() == 2);
    CHECK(!st.squarefree);

    CHECK(parse_sequence(g, "x,xy,xy^2").is_squarefree());
}

TEST_CASE("coset split")
{
    auto d6 = make_dihedral(3);
    auto parts = coset_split(parse_sequence(d6, "x^[3],y^2"));
    CHECK(parts[CosetClass{1}] == parse_sequence(d6, "x^[3]"));
    CHECK(parts[CosetClass{0}] == parse_sequence(d6, "y^2"));
    CHECK(coset_split(parse_sequence(d6, "y,y^2"))[CosetClass{1}].empty());

    auto g21 = make_metacyclic(3, 7, 2);
    auto s = parse_sequence(g21, "x,y,x^2y^3");
    auto p = coset_split(s);
    CHECK(p[CosetClass{1}] == parse_sequence(g21, "x"));
    CHECK(p[CosetClass{0}] == parse_sequence(g21, "y"));
    CHECK(p[CosetClass{2}] == parse_sequence(g21, "x^2y^3"));
    Sequence back(g21);
    for (auto& [c, part] : p)
        back = concat(back, part);
    CHECK(back == s);

    CHECK_THROWS_AS(coset_split(parse_sequence(make_cyclic(4), "y")), std::invalid_argument);
}

TEST_CASE("text format round trip")
{
    for (const char* spec : {"C:6", "A:2,4", "D:5", "M:3,7,2"}) {
        auto g = parse_group_spec(spec);
        std::mt19937_64 rng(7);
        for (int t = 0; t < 200; ++t) {
            Sequence s(g);
            const int len = static_cast<int>(rng() % 12);
            for (int i = 0; i < len; ++i)
                s.add(Element(static_cast<int>(rng() % g->order())));
            CHECK(parse_sequence(g, format_sequence(s)) == s);
        }
    }
    auto g = make_dihedral(3);
    CHECK(parse_sequence(g, "x^[5], y").length() == 6);
    CHECK(parse_sequence(g, "").empty());
    CHECK_THROWS_AS(parse_sequence(g, "x^[5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence(g, "x^[a]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence(g, "x,,y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence(g, "q"), std::invalid_argument);
}

TEST_CASE("ordered tuples")
{
    auto g = make_dihedral(3);
    OrderedTuple t{{g->parse_element("x"), g->parse_element("xy")}, {}};
    CHECK(t.product(*g) == g->parse_element("y"));
    t.signs = {1, -1};
    CHECK(t.product(*g) == g->parse_element("y"));  // reflections are involutions
    OrderedTuple r{{g->parse_element("y"), g->parse_element("y")}, {1, -1}};
    CHECK(r.product(*g) == kIdentity);
    CHECK(r.as_sequence(g) == parse_sequence(g, "y^[2]"));
}

TEST_CASE("multiset enumeration")
{
    auto count = [](const GroupPtr& g, int len) {
        return enumerate_multisets(g, len, [](const Sequence&) { return true; });
    };
    CHECK(count(make_cyclic(2), 2) == 3);
    CHECK(count(make_cyclic(3), 2) == 6);
    CHECK(count(make_dihedral(3), 4) == 126);  // C(9, 4)
    CHECK(count(make_cyclic(5), 0) == 1);

    std::vector<Sequence> seen;
    enumerate_multisets(make_cyclic(2), 2, [&](const Sequence& s) {
        seen.push_back(s);
        return true;
    });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0].count(kIdentity) == 2);
    CHECK(seen[2].count(Element(1)) == 2);

    auto c3 = make_cyclic(3);
    std::uint64_t n = enumerate_multisets(c3, 3, [](const Sequence& s) {
        CHECK(s.count(kIdentity) == 0);
        return true;
    }, [](const Sequence& s) { return s.count(kIdentity) == 0; });
    CHECK(n == 4);  // multisets of size 3 over {y, y^2}

    // early stop
    int visits = 0;
    enumerate_multisets(c3, 2, [&](const Sequence&) { return ++visits < 2; });
    CHECK(visits == 2);

    auto frontier = enumeration_frontier(make_dihedral(3), 2);
    CHECK(frontier.size() == 21);
    std::uint64_t total = 0;
    for (const auto& f : frontier)
        total += enumerate_extensions(f, 4, [](const Sequence&) { return true; });
    CHECK(total == 126);
}

TEST_CASE("canonical forms")
{
    auto g = make_dihedral(3);
    auto autos = *automorphisms(g);

    auto s = parse_sequence(g, "xy^[2],y");
    auto c = canonical_form(s, autos);
    CHECK(c.count(g->parse_element("x")) == 2);  // x-anchored representative
    CHECK(canonical_form(c, autos) == c);
    CHECK(is_canonical(c, autos));
    CHECK(!is_canonical(s, autos));

    auto ones = parse_sequence(g, "1^[4]");
    CHECK(canonical_form(ones, autos) == ones);
    CHECK(orbit_size(ones, autos) == 1);
    CHECK(orbit_size(parse_sequence(g, "x,xy,xy^2"), autos) == 1);
    CHECK(orbit_size(parse_sequence(g, "y,y,x"), autos) == 6);

    std::mt19937_64 rng(3);
    for (const char* spec : {"D:4", "A:2,4", "C:7", "M:3,7,2"}) {
        auto h = parse_group_spec(spec);
        auto maps = *automorphisms(h);
        for (int t = 0; t < 100; ++t) {
            Sequence r(h);
            for (int i = 0; i < 5; ++i)
                r.add(Element(static_cast<int>(rng() % h->order())));
            auto cf = canonical_form(r, maps);
            CHECK(is_canonical(cf, maps));
            for (const auto& m : maps)
                CHECK(canonical_form(apply_map(m, r), maps) == cf);
        }
    }
}
