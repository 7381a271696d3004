#include <doctest.h>

#include "zsinv/extract.hpp"

using namespace zsinv;

TEST_CASE("signed zero-sum mod n")
{
    auto r = signed_zero_mod({1, 2, 4}, 7);
    CHECK(r.indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.signs == std::vector<int>{1, 1, 1});

    r = signed_zero_mod({3, 5}, 3);
    CHECK(r.indices == std::vector<std::size_t>{0});
    CHECK(r.signs == std::vector<int>{1});

    r = signed_zero_mod({1, 1}, 2);
    CHECK(r.indices == std::vector<std::size_t>{0, 1});
    CHECK(r.signs == std::vector<int>{1, -1});
    CHECK(r.verify({1, 1}, 2));

    CHECK_THROWS_AS(signed_zero_mod({1, 2}, 4), PreconditionError);
    CHECK_THROWS_AS(signed_zero_mod({}, 1), PreconditionError);
    try {
        signed_zero_mod({1, 2}, 5);
    }
    catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("bound not met") != std::string::npos);
    }
    SignedSubset empty;
    CHECK(!empty.verify({1}, 1));
}

TEST_CASE("even-length reflection extraction")
{
    auto d8 = make_dihedral(4);
    auto c = dihedral_even_extract(parse_sequence(d8, "x,x,xy"));
    CHECK(c.tuple.elements == std::vector<Element>{d8->parse_element("x"), d8->parse_element("x")});

    auto t = parse_sequence(d8, "x,xy,xy,xy^3");
    c = dihedral_even_extract(t);
    CHECK(c.tuple.size() == 2);

    auto d16 = make_dihedral(8);
    t = parse_sequence(d16, "x,xy,xy^2,xy^3,xy^4,xy^5,xy^6,xy^7");
    c = dihedral_even_extract(t);
    CHECK(c.verify(*d16));
    CHECK(c.fits_in(t));
    CHECK(c.tuple.size() % 2 == 0);
    CHECK(c.tuple.size() <= 6);

    auto d6 = make_dihedral(3);
    CHECK_THROWS_AS(dihedral_even_extract(parse_sequence(d6, "xy,xy^2")), PreconditionError);
    CHECK_THROWS_AS(dihedral_even_extract(parse_sequence(d6, "y,xy,xy^2,x")), PreconditionError);
}

TEST_CASE("equal-product rotation pairs")
{
    auto d8 = make_dihedral(4);
    auto p = dihedral_equal_pairs(parse_sequence(d8, "y,y,y^2,y^3"));
    CHECK(p.first == parse_sequence(d8, "y"));
    CHECK(p.second == parse_sequence(d8, "y"));

    auto d32 = make_dihedral(16);
    auto t = parse_sequence(d32, "y,y^2,y^3,y^4,y^5,y^6,y^7,y^8,y^9,y^10");
    p = dihedral_equal_pairs(t);
    CHECK(p.first.length() == p.second.length());
    CHECK(p.first.length() >= 1);
    CHECK(p.first.length() <= 5);
    CHECK(full_products(p.first) == full_products(p.second));
    CHECK(t.divides(concat(p.first, p.second)));

    CHECK_THROWS_AS(dihedral_equal_pairs(parse_sequence(d8, "y,y^2")), PreconditionError);
    CHECK_THROWS_AS(dihedral_equal_pairs(parse_sequence(d32, "y,y^2,y^3,y^4,y^5")), PreconditionError);
}

TEST_CASE("signed to unsigned rearrangement")
{
    auto d6 = make_dihedral(3);
    auto x = d6->parse_element("x"), y = d6->parse_element("y");
    // x y x = y^-1
    Certificate c;
    c.kind = Certificate::Kind::signed_product;
    c.tuple.elements = {x, y, x, y};
    c.tuple.signs = {1, 1, 1, 1};
    REQUIRE(c.verify(*d6));
    auto u = signed_to_product(c, d6);
    CHECK(u.verify(*d6));
    CHECK(u.tuple.as_sequence(d6) == c.tuple.as_sequence(d6));

    c.tuple.signs = {1, -1, 1, -1};
    REQUIRE(c.verify(*d6));
    u = signed_to_product(c, d6);
    CHECK(u.kind == Certificate::Kind::product);
    CHECK(u.verify(*d6));
    CHECK(u.tuple.as_sequence(d6) == c.tuple.as_sequence(d6));

    Certificate rot;
    rot.kind = Certificate::Kind::signed_product;
    rot.tuple.elements = {y, y};
    rot.tuple.signs = {1, -1};
    CHECK_THROWS_AS(signed_to_product(rot, d6), PreconditionError);

    Certificate plain;
    plain.tuple.elements = {x, x};
    CHECK(signed_to_product(plain, d6).tuple.elements == plain.tuple.elements);
}

TEST_CASE("plus-minus extraction over dihedral groups")
{
    auto d6 = make_dihedral(3);
    auto s = parse_sequence(d6, "y^[4]");
    auto c = dpm_extract(s);
    CHECK(c.verify(*d6));
    CHECK(c.fits_in(s));

    c = dpm_extract(parse_sequence(d6, "1,y,xy,x"));
    CHECK(c.tuple.elements == std::vector<Element>{kIdentity});

    c = dpm_extract(parse_sequence(d6, "x,x,y,xy"));
    CHECK(c.tuple.elements == std::vector<Element>{d6->parse_element("x"), d6->parse_element("x")});

    auto d16 = make_dihedral(8);
    s = parse_sequence(d16, "y,y^3,xy,xy^2,xy^4,xy^7,y^6,x");
    c = dpm_extract(s);
    CHECK(c.verify(*d16));
    CHECK(c.fits_in(s));

    CHECK_THROWS_AS(dpm_extract(parse_sequence(d6, "y,y")), PreconditionError);
}

TEST_CASE("odd signed extraction over cyclic groups")
{
    auto c5 = make_cyclic(5);
    auto c = odd_pm_extract(parse_sequence(c5, "1,y,y,y,y"));
    CHECK(c.tuple.size() == 1);

    c = odd_pm_extract(parse_sequence(c5, "y^[5]"));
    CHECK(c.tuple.size() == 5);
    CHECK(c.verify(*c5));

    auto s = parse_sequence(c5, "y,y,y^4,y^2,y^2");
    c = odd_pm_extract(s);
    CHECK(c.tuple.size() % 2 == 1);
    CHECK(c.verify(*c5));
    CHECK(c.fits_in(s));

    CHECK_THROWS_AS(odd_pm_extract(parse_sequence(make_cyclic(4), "y^[4]")), PreconditionError);
    CHECK_THROWS_AS(odd_pm_extract(parse_sequence(c5, "y^[4]")), PreconditionError);
    CHECK_THROWS_AS(odd_pm_extract(parse_sequence(make_dihedral(3), "y^[6]")), PreconditionError);
}

TEST_CASE("block decomposition")
{
    auto d6 = make_dihedral(3);
    auto s = parse_sequence(d6, "x^[5],y,xy^[4],y^2^[3],1^[6]");
    REQUIRE(s.length() == 19);
    auto dec = dihedral_block_decompose(s);
    CHECK(dec.blocks.size() == 2);
    CHECK(dec.remainder.length() == 7);
    Sequence back = dec.remainder;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        CHECK(dec.blocks[i].length() == 6);
        CHECK(dec.certificates[i].verify(*d6));
        CHECK(dec.certificates[i].tuple.as_sequence(d6) == dec.blocks[i]);
        back = concat(back, dec.blocks[i]);
    }
    CHECK(back == s);

    auto shorter = parse_sequence(d6, "x,y");
    dec = dihedral_block_decompose(shorter);
    CHECK(dec.blocks.empty());
    CHECK(dec.remainder == shorter);

    auto nine = parse_sequence(d6, "x^[6],y,y,xy");
    dec = dihedral_block_decompose(nine);
    CHECK(dec.blocks.size() == 1);

    // a finder that never succeeds above its threshold is a hard failure
    BlockFinder never = [](const Sequence&) { return std::optional<Certificate>{}; };
    CHECK_THROWS_AS(greedy_decompose(nine, never, 3), std::logic_error);
}

TEST_CASE("zero-sum selection of block lengths")
{
    CHECK(block_zero_sum_select({1, 1, 1}, 3) == std::vector<std::size_t>{0, 1, 2});
    auto pick = block_zero_sum_select({2, 3, 4}, 3);
    long long sum = 0;
    for (auto i : pick)
        sum += std::vector<long long>{2, 3, 4}[i];
    CHECK(sum % 3 == 0);
    CHECK(!pick.empty());
    CHECK(block_zero_sum_select({5}, 1) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(block_zero_sum_select({1, 2}, 3), PreconditionError);
}

TEST_CASE("coprime extraction")
{
    auto d6 = make_dihedral(3);
    auto s = parse_sequence(d6, "x,y^[6]");
    auto c = dihedral_coprime_extract(s, 2);
    CHECK(c.verify(*d6));
    CHECK(c.fits_in(s));
    CHECK(c.tuple.size() % 2 == 0);
    CHECK_THROWS_AS(dihedral_coprime_extract(parse_sequence(d6, "x,y^[5]"), 2), PreconditionError);
    CHECK_THROWS_AS(dihedral_coprime_extract(s, 3), PreconditionError);
}

TEST_CASE("Cauchy-Davenport checker")
{
    auto r = cauchy_davenport_check({{0, 1}, {0, 1}}, 5);
    CHECK(r.sumset == std::vector<long long>{0, 1, 2});
    CHECK(r.bound == 3);
    CHECK(r.ok);

    r = cauchy_davenport_check({{1, 3}}, 7);
    CHECK(r.bound == 2);
    CHECK(r.ok);

    r = cauchy_davenport_check({{1, 2, 4}, {1, 2, 4}, {1, 2, 4}}, 7);
    CHECK(r.bound == 7);
    CHECK(r.sumset.size() == 7);

    CHECK_THROWS_AS(cauchy_davenport_check({{0}}, 6), PreconditionError);
    CHECK_THROWS_AS(cauchy_davenport_check({{0}, {}}, 5), PreconditionError);
}
