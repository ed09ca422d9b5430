// Construction-level checks: cyclic/abelian/direct/semidirect builders,
// table arithmetic, and the axiom verifier.
#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twc/group.hpp"

using namespace twc;

TEST_CASE("cyclic group basics") {
    const Group z6 = build_cyclic(6);
    REQUIRE(z6.order == 6);
    REQUIRE(z6.identity == 0);
    CHECK(z6.op(2, 5) == 1);
    CHECK(z6.inv[4] == 2);
    CHECK(z6.pow(1, 35) == 5);
    CHECK(z6.pow(5, -1) == 1);
    CHECK(z6.element_order(1) == 6);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.generators == std::vector<elem>{1});
    CHECK(z6.label(3) == "3");
    for (elem x = 0; x < 6; ++x)
        CHECK(z6.element_order(x) == oracle::element_order(z6, x));
}

TEST_CASE("trivial group") {
    const Group z1 = build_cyclic(1);
    REQUIRE(z1.order == 1);
    CHECK(z1.generators.empty());
    CHECK(verify_group_axioms(z1, 0).ok);
}

TEST_CASE("abelian product of cyclics") {
    const Group g = build_abelian({2, 3});
    REQUIRE(g.order == 6);
    // (1,0) has index 3 (last component fastest), (0,1) has index 1.
    CHECK(g.element_order(3) == 2);
    CHECK(g.element_order(1) == 3);
    CHECK(g.op(3, 1) == 4);
    CHECK(g.label(4) == "(1,1)");
    CHECK(g.generators == std::vector<elem>{3, 1});
    CHECK(g.is_abelian());

    // Single-component spec degenerates to the cyclic table.
    const Group a9 = build_abelian({9});
    const Group z9 = build_cyclic(9);
    CHECK(a9.mul == z9.mul);
    CHECK(a9.labels == z9.labels);
}

TEST_CASE("abelian components of order one are dropped from generators") {
    const Group g = build_abelian({1, 4});
    CHECK(g.order == 4);
    CHECK(g.generators == std::vector<elem>{1});
    CHECK(verify_group_axioms(g, 0).ok);
}

TEST_CASE("direct product") {
    const Group z2 = build_cyclic(2);
    const Group z3 = build_cyclic(3);
    const Group g = direct_product(z2, z3);
    REQUIRE(g.order == 6);
    // (1,1) sits at index 1*3+1 = 4 and has order 6.
    CHECK(g.element_order(4) == 6);
    CHECK(g.label(4) == "(1,1)");
    CHECK(verify_group_axioms(g, 0).ok);

    // G x trivial keeps the table bit-identical.
    const Group z4 = build_cyclic(4);
    const Group padded = direct_product(z4, build_cyclic(1));
    CHECK(padded.mul == z4.mul);
    CHECK(padded.inv == z4.inv);
}

TEST_CASE("semidirect product Z27 by Z9 via a -> 4a") {
    const Group z27 = build_cyclic(27);
    std::vector<elem> psi(27);
    for (elem a = 0; a < 27; ++a) psi[a] = static_cast<elem>((4 * a) % 27);
    const Group g = semidirect_product(z27, 9, psi);
    REQUIRE(g.order == 243);
    REQUIRE(g.generators.size() == 2);
    const elem x = g.generators[0];
    const elem y = g.generators[1];
    CHECK(g.label(x) == "(1,0)");
    CHECK(g.label(y) == "(0,1)");
    CHECK(g.element_order(x) == 27);
    CHECK(g.element_order(y) == 9);
    // Defining relation y x y^-1 = x^4.
    CHECK(g.op(g.op(y, x), g.inv[y]) == g.pow(x, 4));
    CHECK(verify_group_axioms(g, 0).ok);
}

TEST_CASE("semidirect rejects an action whose power is not the identity") {
    const Group z27 = build_cyclic(27);
    std::vector<elem> psi(27);
    for (elem a = 0; a < 27; ++a) psi[a] = static_cast<elem>((4 * a) % 27);
    // 4^3 = 64 = 10 mod 27, so psi^3 != id.
    CHECK_THROWS_AS(semidirect_product(z27, 3, psi), SpecError);
    // Non-bijective map is rejected outright.
    std::vector<elem> bad(27, 0);
    CHECK_THROWS_AS(semidirect_product(z27, 9, bad), SpecError);
}

TEST_CASE("axiom verifier uses sampled associativity beyond the threshold") {
    const Group big = build_cyclic(600);
    const AxiomReport r = verify_group_axioms(big, 7);
    CHECK(r.ok);
    CHECK_FALSE(r.associativity_exhaustive);

    const Group small = build_cyclic(12);
    CHECK(verify_group_axioms(small, 7).associativity_exhaustive);
}

TEST_CASE("axiom verifier flags a broken table") {
    Group g = build_cyclic(4);
    g.mul[1 * 4 + 2] = 0;   // corrupt one product
    const AxiomReport r = verify_group_axioms(g, 0);
    CHECK_FALSE(r.ok);
}
