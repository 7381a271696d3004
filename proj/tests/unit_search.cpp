#include <doctest.h>

#include "zsinv/search.hpp"

using namespace zsinv;

TEST_CASE("spec examples for the invariant search")
{
    CHECK(compute_sdN(make_cyclic(3), 1).value == 3);
    CHECK(compute_sdN(make_dihedral(3), 3).value == 7);
    CHECK(compute_sdN(make_dihedral(3), 2).value == 7);
    CHECK(compute_davenport(make_dihedral(4)).value == 5);
    CHECK(compute_davenport(make_abelian({2, 2})).value == 3);
    CHECK(compute_s_exact(make_dihedral(3), 6).value == 9);
    CHECK(compute_s_exact(make_cyclic(3), 3).value == 5);
    CHECK(compute_s_leq(make_dihedral(3), 3).value == 4);
    CHECK(compute_s_leq(make_dihedral(5), 5).value == 6);
    for (int n = 1; n <= 7; ++n)
        CHECK(compute_s_leq(make_cyclic(n), n).value == n);
}

TEST_CASE("plus-minus Davenport constant of D_6")
{
    auto r = compute_dpm(make_dihedral(3));
    CHECK(r.exact());
    CHECK(r.value <= 4);
    CHECK(freeness(r.witness, pm_product_free()).free);
    CHECK(r.witness.length() == r.value - 1);
}

TEST_CASE("infinite exact-length invariant is reported at the cap")
{
    auto g = make_dihedral(3);
    auto r = compute_s_exact(g, 3);
    CHECK(!r.exact());
    CHECK(r.status == SearchStatus::undetermined_at_cap);
    CHECK(r.value == r.length_cap + 1);
    CHECK(r.witness.count(g->parse_element("x")) == r.length_cap);
    CHECK(freeness(r.witness, n_product_free(3)).free);
    CHECK(s_exact_infinite_witness(*g, 3) == g->parse_element("x"));
    CHECK(!s_exact_infinite_witness(*g, 6));
}

TEST_CASE("cap too small is undetermined, never wrong")
{
    SearchOptions o;
    o.length_cap = 5;
    auto r = compute_sdN(make_dihedral(3), 3, o);
    CHECK(!r.exact());
    CHECK(r.value == 6);
    CHECK(r.witness.length() == 5);
    CHECK(freeness(r.witness, dN_free(3)).free);

    o.length_cap = 6;
    r = compute_sdN(make_dihedral(3), 3, o);
    CHECK(!r.exact());
    o.length_cap = 7;
    r = compute_sdN(make_dihedral(3), 3, o);
    CHECK(r.exact());
    CHECK(r.value == 7);
}

TEST_CASE("pruning changes node counts, not values")
{
    SearchOptions on, off;
    off.orbit_pruning = false;
    for (const char* spec : {"C:1", "C:2", "C:3", "C:4", "C:5", "C:6", "C:7", "C:8", "C:9", "C:10", "A:2,2", "A:2,4",
                             "D:3", "D:4", "D:5"}) {
        auto g = parse_group_spec(spec);
        CAPTURE(spec);
        for (int d = 1; d <= 3; ++d) {
            auto a = compute_sdN(g, d, on);
            auto b = compute_sdN(g, d, off);
            CHECK(a.value == b.value);
            CHECK(a.exact());
            CHECK(b.stats.orbits_pruned == 0);
            CHECK(!b.stats.pruning_used);
            if (g->order() > 2)
                CHECK(a.stats.nodes <= b.stats.nodes);
        }
    }
}

TEST_CASE("thread count does not change results")
{
    SearchOptions one, many;
    many.threads = 8;
    for (const char* spec : {"D:3", "D:4", "C:6", "A:2,4"}) {
        auto g = parse_group_spec(spec);
        for (int d = 1; d <= 3; ++d) {
            auto a = compute_sdN(g, d, one);
            auto b = compute_sdN(g, d, many);
            CHECK(a.value == b.value);
            CHECK(a.witness == b.witness);
            CHECK(a.stats.nodes == b.stats.nodes);
            CHECK(a.stats.orbits_pruned == b.stats.orbits_pruned);
        }
    }
}

TEST_CASE("closed-form predictions")
{
    CHECK(predict_sdN(*make_cyclic(4), 6) == 13);
    CHECK(predict_sdN(*make_abelian({2, 4}), 2) == 6);
    CHECK(predict_sdN(*make_abelian({2, 2}), 2) == 4);
    CHECK(predict_sdN(*make_dihedral(3), 9) == 19);
    CHECK(predict_sdN(*make_dihedral(4), 3) == 13);
    CHECK(!predict_sdN(*make_dihedral(4), 2));
    CHECK(predict_sdN(*make_metacyclic(3, 7, 2), 3) == 23);
    CHECK(predict_sdN(*make_cyclic(1), 4) == 4);
    CHECK(!predict_sdN(*make_abelian({2, 2, 2}), 2));
    CHECK(predict_s_exact(*make_cyclic(3), 6) == 8);
    CHECK(!predict_s_exact(*make_cyclic(3), 4));
    CHECK(predict_s_leq(*make_dihedral(4), 4) == 5);

    CHECK(default_length_cap(*make_dihedral(3), InvariantKind::sdN, 3) == 9);
    CHECK(default_length_cap(*make_dihedral(4), InvariantKind::sdN, 2) == 16);
    CHECK(default_length_cap(*make_dihedral(4), InvariantKind::davenport, 1) == 7);
}

TEST_CASE("invariant names")
{
    CHECK(parse_invariant("sdn") == InvariantKind::sdN);
    CHECK(parse_invariant("s-exact") == InvariantKind::s_exact);
    CHECK(invariant_name(InvariantKind::plus_minus_davenport) == "dpm");
    CHECK_THROWS_AS(parse_invariant("nope"), std::invalid_argument);
    CHECK_THROWS_AS(compute_sdN(make_cyclic(3), 0), std::invalid_argument);
}

TEST_CASE("classification of free sequences")
{
    auto c3 = make_cyclic(3);
    auto cls = classify_free(c3, product_free(), 2);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].orbit_size == 2);
    CHECK(cls[0].representative.max_multiplicity() == 2);

    SearchOptions off;
    off.orbit_pruning = false;
    auto all = classify_free(c3, product_free(), 2, off);
    CHECK(all.size() == 2);

    auto d8 = make_dihedral(4);
    cls = classify_free(d8, product_free(), 4);
    std::size_t total = 0;
    for (const auto& c : cls)
        total += c.orbit_size;
    CHECK(cls.size() == 1);
    CHECK(total == 8);

    CHECK(classify_free(d8, product_free(), 5).empty());
    CHECK_THROWS_AS(classify_free(make_abelian({2, 2, 2, 2, 2, 2}), product_free(), 30), std::invalid_argument);
}
