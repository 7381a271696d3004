#include <doctest.h>

#include "zsinv/product.hpp"

using namespace zsinv;

namespace {

ElementSet set_of(const GroupPtr& g, std::initializer_list<const char*> words)
{
    ElementSet s;
    for (const char* w : words)
        s.insert(g->parse_element(w));
    return s;
}

}  // namespace

TEST_CASE("full products")
{
    auto d6 = make_dihedral(3);
    CHECK(full_products(parse_sequence(d6, "x,x")) == set_of(d6, {"1"}));
    CHECK(full_products(parse_sequence(d6, "x,xy")) == set_of(d6, {"y", "y^2"}));
    CHECK(full_products(Sequence(d6)) == set_of(d6, {"1"}));
    auto c6 = make_cyclic(6);
    CHECK(full_products(parse_sequence(c6, "y,y^2")) == set_of(c6, {"y^3"}));
    CHECK(full_products(parse_sequence(d6, "y"), true) == set_of(d6, {"y", "y^2"}));
}

TEST_CASE("subset products by length")
{
    auto c3 = make_cyclic(3);
    auto sp = subset_products(parse_sequence(c3, "y^[3]"));
    CHECK(sp.sigma_k(1) == set_of(c3, {"y"}));
    CHECK(sp.sigma_k(2) == set_of(c3, {"y^2"}));
    CHECK(sp.sigma_k(3) == set_of(c3, {"1"}));
    CHECK(sp.sigma_dN(3).contains(kIdentity));
    CHECK(sp.sigma() == set_of(c3, {"1", "y", "y^2"}));
    CHECK(sp.sigma_leq(2) == set_of(c3, {"y", "y^2"}));
    CHECK(sp.sigma_geq(3) == set_of(c3, {"1"}));
    CHECK(sp.sigma_even() == set_of(c3, {"y^2"}));
    CHECK(sp.sigma_odd() == set_of(c3, {"y", "1"}));
    CHECK(sp.sigma_k(7).empty());

    auto d6 = make_dihedral(3);
    CHECK(!subset_products(parse_sequence(d6, "x^[5],y")).sigma_dN(3).contains(kIdentity));
    CHECK(!subset_products(parse_sequence(d6, "x,y^[5]")).sigma_dN(2).contains(kIdentity));
    CHECK_THROWS_AS(subset_products(parse_sequence(d6, "x")).sigma_dN(0), std::invalid_argument);

    auto signed_sp = subset_products(parse_sequence(c3, "y,y"), true);
    CHECK(signed_sp.signed_sigma().contains(kIdentity));
    CHECK(!signed_sp.sigma().contains(kIdentity));
}

TEST_CASE("freeness predicates")
{
    auto d10 = make_dihedral(5);
    CHECK(freeness(parse_sequence(d10, "y^[4],x"), product_free()).free);

    auto c3 = make_cyclic(3);
    auto r = freeness(parse_sequence(c3, "y^[3]"), product_free());
    CHECK(!r.free);
    REQUIRE(r.violation);
    CHECK(r.violation->tuple.size() == 3);
    CHECK(r.violation->verify(*c3));

    auto d6 = make_dihedral(3);
    CHECK(freeness(parse_sequence(d6, "x^[5],y"), dN_free(3)).free);
    CHECK(!freeness(parse_sequence(d6, "x^[6]"), dN_free(3)).free);
    CHECK(freeness(parse_sequence(d6, "x,y^[2]"), product_free()).free);
    CHECK(!freeness(parse_sequence(d6, "y,y"), pm_product_free()).free);
    CHECK(freeness(parse_sequence(d6, "y,y"), product_free()).free);
    CHECK(!freeness(parse_sequence(d6, "x,x,y"), leq_free(2)).free);
    CHECK(freeness(parse_sequence(d6, "y^[3]"), leq_free(2)).free);
    CHECK(!freeness(parse_sequence(d6, "y^[3]"), n_product_free(3)).free);
    CHECK(freeness(Sequence(d6), product_free()).free);

    CHECK_THROWS_AS(dN_free(0), std::invalid_argument);
    CHECK_THROWS_AS(n_product_free(0), std::invalid_argument);
}

TEST_CASE("find_subsequence")
{
    auto d6 = make_dihedral(3);
    auto c = find_subsequence(parse_sequence(d6, "x^[9]"), dN_free(3));
    REQUIRE(c);
    CHECK(c->tuple.size() == 6);
    CHECK(c->verify(*d6));

    auto s = parse_sequence(d6, "x,x,y,y^2");
    auto c4 = find_subsequence(s, n_product_free(4));
    REQUIRE(c4);
    CHECK(c4->tuple.size() == 4);
    CHECK(c4->verify(*d6));
    CHECK(c4->fits_in(s));
    CHECK(c4->tuple.as_sequence(d6) == s);

    CHECK(!find_subsequence(parse_sequence(d6, "y"), product_free()));

    ProductQuery target = product_free();
    target.target = d6->parse_element("xy");
    auto ct = find_subsequence(parse_sequence(d6, "x,y^2,y^2"), target);
    REQUIRE(ct);
    CHECK(ct->tuple.product(*d6) == d6->parse_element("xy"));

    auto c5 = make_cyclic(5);
    auto odd = find_subsequence(parse_sequence(c5, "y,y,y^2"), signed_odd_query());
    REQUIRE(odd);
    CHECK(odd->tuple.size() % 2 == 1);
    CHECK(odd->verify(*c5));
}

TEST_CASE("certificates are deterministic and checked")
{
    auto d6 = make_dihedral(3);
    auto s = parse_sequence(d6, "x,xy,xy^2,y");
    auto a = find_subsequence(s, product_free());
    auto b = find_subsequence(s, product_free());
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->tuple.elements == b->tuple.elements);

    Certificate bad = *a;
    bad.target = d6->parse_element("y");
    CHECK(!bad.verify(*d6));
    Certificate wrong_multiset;
    wrong_multiset.tuple.elements = {d6->parse_element("xy^2"), d6->parse_element("xy^2")};
    CHECK(!wrong_multiset.fits_in(s));
}

TEST_CASE("minimal product sequences")
{
    auto c5 = make_cyclic(5);
    CHECK(is_minimal_product_sequence(parse_sequence(c5, "y^[5]")));
    CHECK(!is_minimal_product_sequence(parse_sequence(c5, "y^[6]")));
    CHECK(!is_minimal_product_sequence(parse_sequence(c5, "y^[4]")));
    CHECK(is_minimal_product_sequence(parse_sequence(c5, "y,y^4")));
    CHECK(is_minimal_product_sequence(parse_sequence(c5, "y,y"), true));
    CHECK(!is_minimal_product_sequence(Sequence(c5)));
}

TEST_CASE("product table push and pop")
{
    auto d6 = make_dihedral(3);
    ProductTable t(d6);
    t.push(d6->parse_element("y"));
    t.push(d6->parse_element("y"));
    CHECK(t.state_count() == 3);
    t.push(d6->parse_element("x"));
    CHECK(t.state_count() == 6);
    CHECK(t.products(t.full_state()) == full_products(parse_sequence(d6, "y,y,x")));
    t.pop();
    CHECK(t.state_count() == 3);
    CHECK(t.base() == parse_sequence(d6, "y^[2]"));
    CHECK_THROWS_AS(t.push(kIdentity), std::invalid_argument);  // order violated

    ProductTable empty(d6);
    CHECK_THROWS_AS(empty.pop(), std::logic_error);

    ProductTable tiny(d6, false, ProductLimits{3, 1000});
    for (int i = 0; i < 3; ++i)
        tiny.push(Element(1));
    CHECK_THROWS_AS(tiny.push(Element(1)), CapacityError);

    ProductTable small(d6, false, ProductLimits{40, 8});
    small.push(Element(1));
    small.push(Element(2));
    small.push(Element(3));
    CHECK_THROWS_AS(small.push(Element(4)), CapacityError);

    auto big = make_cyclic(2);
    Sequence s(big);
    s.add(Element(1), 41);
    CHECK_THROWS_AS(ProductTable(s, false), CapacityError);
}

TEST_CASE("abelian subset sums")
{
    auto g = make_abelian({2, 4});
    auto s = parse_sequence(g, "a,b,b^[2],ab^3");
    auto fast = abelian_subset_products(s);
    auto slow = subset_products(s);
    for (int k = 0; k <= s.length(); ++k)
        CHECK(fast[k] == slow.by_length[k]);
    CHECK_THROWS_AS(abelian_subset_products(parse_sequence(make_dihedral(3), "x")), std::invalid_argument);
}

TEST_CASE("query descriptions")
{
    CHECK(dN_free(3).accepts_length(6));
    CHECK(!dN_free(3).accepts_length(0));
    CHECK(!dN_free(3).accepts_length(4));
    CHECK(leq_free(2).accepts_length(1));
    CHECK(!leq_free(2).accepts_length(3));
    CHECK(signed_odd_query().accepts_length(3));
    CHECK(!signed_odd_query().accepts_length(2));
    CHECK(dN_free(3).describe() == "length divisible by 3");
}
