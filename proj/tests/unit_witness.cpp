#include <doctest.h>

#include "zsinv/witness.hpp"

using namespace zsinv;

TEST_CASE("main dihedral witness")
{
    auto w = dihedral_main_witness(3, 3);
    auto g = w.sequence.group();
    CHECK(w.sequence == parse_sequence(g, "x^[5],y"));
    CHECK(w.free);
    w = dihedral_main_witness(5, 5);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x^[9],y,y^2"));
    CHECK(w.sequence.length() == 11);
    w = dihedral_main_witness(3, 9);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x^[17],y"));
    CHECK_THROWS_AS(dihedral_main_witness(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_main_witness(3, 5), std::invalid_argument);
}

TEST_CASE("coprime dihedral witness")
{
    auto w = dihedral_coprime_witness(3, 2);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x,y^[5]"));
    CHECK(w.free);
    w = dihedral_coprime_witness(3, 1);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x,y^[2]"));
    w = dihedral_coprime_witness(5, 2);
    CHECK(w.sequence.length() == 10);
    CHECK_THROWS_AS(dihedral_coprime_witness(4, 2), std::invalid_argument);
}

TEST_CASE("nN dihedral witness")
{
    CHECK(dihedral_nN_witness(3).sequence.length() == 6);
    CHECK(dihedral_nN_witness(5).sequence.length() == 11);
    auto w = dihedral_nN_witness(7);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x^[13],y,y^2"));
    CHECK(w.free);
    CHECK_THROWS_AS(dihedral_nN_witness(4), std::invalid_argument);
}

TEST_CASE("metacyclic witness")
{
    auto w = metacyclic_witness(3, 7, 2, 1);
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "x^[2],y^[20]"));
    CHECK(w.sequence.length() == 22);
    CHECK(w.free);

    // when q | k the literal x^[p-1] y^[d-1] contains y^[kp]
    auto literal = metacyclic_literal_sequence(3, 7, 2, 7);
    CHECK(literal.length() == 28);
    CHECK(!freeness(literal, dN_free(21)).free);
    w = metacyclic_witness(3, 7, 2, 7);
    CHECK(w.sequence.length() == 28);
    CHECK(w.free);

    // length 43 is past the engine's length limit, so it cannot be checked
    CHECK(metacyclic_literal_sequence(3, 7, 2, 2).length() == 43);
    CHECK_THROWS_AS(metacyclic_witness(3, 7, 2, 2), CapacityError);
    CHECK_THROWS_AS(metacyclic_witness(3, 7, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(metacyclic_witness(3, 7, 2, 0), std::invalid_argument);
}

TEST_CASE("identity padding")
{
    auto c3 = make_cyclic(3);
    auto w = generic_identity_pad(parse_sequence(c3, "y^[2]"), 2);
    CHECK(w.sequence == parse_sequence(c3, "1,y,y"));
    CHECK(w.free);
    CHECK(generic_identity_pad(parse_sequence(c3, "y^[2]"), 1).sequence == parse_sequence(c3, "y^[2]"));

    auto d6 = make_dihedral(3);
    w = generic_identity_pad(parse_sequence(d6, "x,y^[2]"), 3);
    CHECK(w.sequence.length() == 5);
    CHECK(w.free);
    CHECK_THROWS_AS(generic_identity_pad(parse_sequence(c3, "y^[3]"), 2), std::invalid_argument);
}

TEST_CASE("inverse families")
{
    auto w = inverse_family(5, 1, {2, 1});
    CHECK(w.sequence == parse_sequence(w.sequence.group(), "y^2^[4],xy"));
    CHECK(w.free);
    CHECK(inverse_family(3, 2, {}).free);
    CHECK(inverse_family(3, 2, {2, 0}).free);
    CHECK(!inverse_family(3, 2, {3, 0}).free);  // y^3 = 1
    CHECK_THROWS_AS(inverse_family(4, 1, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(inverse_family(3, 1, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(inverse_family(4, 2, {}), std::invalid_argument);
}

TEST_CASE("witness names")
{
    CHECK(parse_witness_name("dihedral-main") == WitnessName::dihedral_main);
    CHECK(witness_name(WitnessName::generic_identity_pad) == "generic-identity-pad");
    CHECK_THROWS_AS(parse_witness_name("x"), std::invalid_argument);
}
