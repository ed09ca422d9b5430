// Derivations over a cyclic action: enumeration against a brute-force pair
// table, the induced automorphisms and their identity classes, extension
// decomposition of concrete groups, and the torsion-shift map theta.
#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twc/catalog.hpp"
#include "twc/derivations.hpp"
#include "twc/twisted.hpp"

using namespace twc;

namespace {

// Brute-force derivation oracle: a candidate value table d(t^k) must satisfy
// d(t^(k+l)) = d(t^k) * psi^k(d(t^l)) for all k, l, with indices mod n.
bool derivation_table_ok(const CyclicAction& act, const std::vector<elem>& values) {
    for (long long k = 0; k < act.n; ++k)
        for (long long l = 0; l < act.n; ++l) {
            const elem lhs = values[static_cast<size_t>((k + l) % act.n)];
            const elem rhs = act.a.op(values[static_cast<size_t>(k)],
                                      act.apply(k, values[static_cast<size_t>(l)]));
            if (lhs != rhs) return false;
        }
    return true;
}

// All derivations by testing every candidate generator value directly.
std::vector<elem> brute_force_derivation_values(const CyclicAction& act) {
    std::vector<elem> out;
    for (elem a = 0; a < act.a.order; ++a) {
        std::vector<elem> values(static_cast<size_t>(act.n));
        values[0] = act.a.identity;
        bool ok = true;
        for (long long k = 1; k < act.n && ok; ++k)
            values[static_cast<size_t>(k)] =
                act.a.op(values[static_cast<size_t>(k - 1)], act.apply(k - 1, a));
        ok = derivation_table_ok(act, values);
        // The wrap-around condition d(t^n) = d(e) = e must close as well.
        if (ok && act.partial_sum(act.n, a) != act.a.identity) ok = false;
        if (ok) out.push_back(a);
    }
    return out;
}

CyclicAction mul_action(long long modulus, long long mult, long long n) {
    const Group a = build_cyclic(modulus);
    std::vector<elem> psi(a.order);
    for (elem v = 0; v < a.order; ++v)
        psi[v] = static_cast<elem>(mult * v % modulus);
    return make_cyclic_action(a, n, psi);
}

} // namespace

TEST_CASE("cyclic action construction and validation") {
    const CyclicAction act = mul_action(27, 4, 9);
    CHECK(act.n == 9);
    CHECK(act.psi()[1] == 4);
    CHECK(act.apply(2, 1) == 16);
    CHECK(act.apply(9, 1) == 1);   // psi^9 = id
    // partial_sum(k, a) = a + psi(a) + ... + psi^(k-1)(a).
    CHECK(act.partial_sum(1, 1) == 1);
    CHECK(act.partial_sum(2, 1) == 5);
    CHECK(act.partial_sum(3, 1) == 21);

    // psi^3 != id, so n = 3 is rejected for this table.
    const Group z27 = build_cyclic(27);
    std::vector<elem> psi(27);
    for (elem v = 0; v < 27; ++v) psi[v] = static_cast<elem>(4 * v % 27);
    CHECK_THROWS_AS(make_cyclic_action(z27, 3, psi), SpecError);
    // Nonabelian coefficients are rejected.
    const Group s3 = build_symmetric(3);
    std::vector<elem> id_table(s3.order);
    std::iota(id_table.begin(), id_table.end(), 0);
    CHECK_THROWS_AS(make_cyclic_action(s3, 1, id_table), SpecError);
}

TEST_CASE("derivation enumeration matches the brute-force oracle") {
    // Five actions, including the ones arising from G(3,3), G(3,4), G(5,3).
    const std::vector<CyclicAction> actions = {
        mul_action(27, 4, 9),    // G(3,3)
        mul_action(81, 4, 27),   // G(3,4)
        mul_action(125, 6, 25),  // G(5,3)
        mul_action(9, 4, 3),     // Z9 by Z3
        mul_action(7, 2, 3),     // coprime orders
    };
    for (const CyclicAction& act : actions) {
        const auto derivations = enumerate_derivations(act);
        const auto brute = brute_force_derivation_values(act);
        REQUIRE(derivations.size() == brute.size());
        for (size_t i = 0; i < brute.size(); ++i) {
            CHECK(derivations[i].generator_value == brute[i]);
            CHECK(derivation_table_ok(act, derivations[i].values));
            CHECK(derivations[i].values[0] == act.a.identity);
        }
    }
}

TEST_CASE("frozen derivation counts and principality") {
    // Z27 with psi = 4a, n = 9: extendable values are the multiples of 3
    // (9a = 0 mod 27), and every one of them is principal since the image of
    // id - psi is -3a = all multiples of 3.
    const CyclicAction g33 = mul_action(27, 4, 9);
    const auto d33 = enumerate_derivations(g33);
    REQUIRE(d33.size() == 9);
    for (const Derivation& d : d33) {
        CHECK(d.generator_value % 3 == 0);
        CHECK(d.principal);
    }

    // Z125 with psi = 6a, n = 25: 25 derivations, matching the 5-part bound.
    CHECK(enumerate_derivations(mul_action(125, 6, 25)).size() == 25);

    // Trivial action of Z3 on Z3: every value extends, only 0 is principal,
    // so two classes of genuinely non-principal derivations survive.
    const Group z3 = build_cyclic(3);
    std::vector<elem> id_table = {0, 1, 2};
    const CyclicAction triv = make_cyclic_action(z3, 3, id_table);
    const auto dt = enumerate_derivations(triv);
    REQUIRE(dt.size() == 3);
    int principal = 0;
    for (const Derivation& d : dt) principal += d.principal ? 1 : 0;
    CHECK(principal == 1);
}

TEST_CASE("derivation values follow the partial-sum formula") {
    const CyclicAction act = mul_action(27, 4, 9);
    for (const Derivation& d : enumerate_derivations(act)) {
        for (long long k = 0; k < act.n; ++k)
            CHECK(d.values[static_cast<size_t>(k)] == act.partial_sum(k, d.generator_value));
        // The image is the set of values.
        ElementSet img = d.image(act.a);
        for (elem v : d.values) CHECK(set_contains(img, v));
    }
}

TEST_CASE("decomposing G(3,3) over its cyclic normal subgroup") {
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0], y = g.generators[1];
    const ElementSet xs = subgroup_generated(g, {x});
    const ExtensionDecomposition dec = decompose_abelian_by_cyclic(g, xs, y);
    CHECK(dec.t == y);
    CHECK(dec.action.n == 9);
    // The action is conjugation by t from the right: y^-1 x y = x^7.
    CHECK(dec.action.psi()[dec.a_view.from_parent[x]] == dec.a_view.from_parent[g.pow(x, 7)]);
    CHECK(dec.coset_exponent[x] == 0);
    CHECK(dec.coset_exponent[y] == 1);
    CHECK(dec.coset_exponent[g.op(x, y)] == 1);

    // Wrong wiring: non-normal A, nonabelian A, non-cyclic quotient, and a
    // representative that fails to generate the quotient.
    const Group s4 = build_symmetric(4);
    ElementSet a4;
    for (elem p = 0; p < s4.order; ++p)
        if (conjugacy_class_of(s4, p).size() != 6) a4.push_back(p);
    canonicalize(a4);   // A4: everything outside the two odd classes
    CHECK_THROWS_AS(decompose_abelian_by_cyclic(s4, a4, s4.generators[0]), SpecError);
    CHECK_THROWS_AS(decompose_abelian_by_cyclic(g, xs, g.pow(y, 3)), SpecError);
}

TEST_CASE("derivation-induced automorphisms fix A and realize the image") {
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0], y = g.generators[1];
    const ExtensionDecomposition dec =
        decompose_abelian_by_cyclic(g, subgroup_generated(g, {x}), y);
    for (const Derivation& d : enumerate_derivations(dec.action)) {
        const Automorphism phi = gaschutz_automorphism(g, dec, d);
        // A is fixed pointwise.
        for (elem a : dec.a_view.to_parent) CHECK(phi(a) == a);
        // The identity's twisted class is exactly the derivation's image.
        ElementSet expect;
        for (elem v : d.image(dec.action.a)) expect.push_back(dec.a_view.to_parent[v]);
        canonicalize(expect);
        CHECK(twisted_class_set(g, phi, g.identity) == expect);
        // Principal derivations induce inner automorphisms here.
        if (d.principal) {
            bool matches_some_inner = false;
            for (const Automorphism& inner : distinct_inner_automorphisms(g))
                if (inner == phi) {
                    matches_some_inner = true;
                    break;
                }
            CHECK(matches_some_inner);
        }
    }
}

TEST_CASE("non-principal derivations induce outer maps with subgroup classes") {
    // Z3 x Z3 as the trivial extension of Z3 by Z3.
    const Group g = build_abelian({3, 3});
    // First factor is generated by index 3 = (1,0); quotient rep is (0,1).
    const ElementSet a_set = subgroup_generated(g, {g.generators[0]});
    const ExtensionDecomposition dec = decompose_abelian_by_cyclic(g, a_set, g.generators[1]);
    const auto derivations = enumerate_derivations(dec.action);
    REQUIRE(derivations.size() == 3);
    for (const Derivation& d : derivations) {
        const Automorphism phi = gaschutz_automorphism(g, dec, d);
        const ElementSet cls = twisted_class_set(g, phi, g.identity);
        CHECK(oracle::is_subgroup(g, cls));
        if (!d.principal) {
            CHECK(cls.size() == 3);
            CHECK_FALSE(phi == identity_automorphism(g));
        } else {
            // The only inner automorphism of an abelian group is the identity.
            CHECK(phi == identity_automorphism(g));
            CHECK(cls == ElementSet{g.identity});
        }
    }
}

TEST_CASE("p-group utilities") {
    CHECK(p_group_prime(build_cyclic(27)) == 3);
    CHECK(p_group_prime(build_abelian({2, 4})) == 2);
    CHECK_THROWS_AS(p_group_prime(build_cyclic(6)), SpecError);
    CHECK_THROWS_AS(p_group_prime(build_cyclic(1)), SpecError);

    CHECK(omega(build_cyclic(27), 1) == ElementSet{0, 9, 18});
    CHECK(omega(build_cyclic(27), 2).size() == 9);
    CHECK(omega(build_cyclic(27), 0) == ElementSet{0});
    CHECK(omega(build_abelian({2, 4}), 1).size() == 4);
}

TEST_CASE("theta on the G(3,3) action: multiplication by 3") {
    const ThetaReport th = theta_map(mul_action(27, 4, 9));
    CHECK(th.p == 3);
    CHECK(th.n_exponent == 2);
    CHECK(th.theta[1] == 3);
    CHECK(th.homomorphism_ok);
    CHECK(th.image_in_omega_n);
    CHECK(th.filtration_ok);

    const Group z27 = build_cyclic(27);
    CHECK(theta_iterated_image(th, z27, 1).size() == 9);
    CHECK(theta_iterated_image(th, z27, 2) == ElementSet{0, 9, 18});
    CHECK(theta_iterated_image(th, z27, 3) == ElementSet{0});
}

TEST_CASE("theta hypothesis violations are rejected, not computed") {
    // p = 2 is outside the torsion-shift hypotheses.
    const Group z4 = build_cyclic(4);
    std::vector<elem> neg(4);
    for (elem v = 0; v < 4; ++v) neg[v] = z4.inv[v];
    CHECK_THROWS_AS(theta_map(make_cyclic_action(z4, 2, neg)), SpecError);
    // Acting order must be a power of the coefficient prime.
    CHECK_THROWS_AS(theta_map(mul_action(7, 2, 3)), SpecError);
}

TEST_CASE("theta filtration fails for a unipotent non-diagonal action") {
    // psi(a, b) = (a + b, b) on Z3 x Z3 has order 3, but theta's image is the
    // first factor while omega_0 is trivial, so the filtration breaks.
    const Group g = build_abelian({3, 3});
    std::vector<elem> psi(g.order);
    for (elem v = 0; v < g.order; ++v) {
        const elem a = v / 3, b = v % 3;
        psi[v] = static_cast<elem>(((a + b) % 3) * 3 + b);
    }
    const ThetaReport th = theta_map(make_cyclic_action(g, 3, psi));
    CHECK(th.homomorphism_ok);
    CHECK(th.n_exponent == 1);
    CHECK(th.image_in_omega_n);       // everything is killed by p
    CHECK_FALSE(th.filtration_ok);    // theta(omega_1) is not trivial
    CHECK(th.witness.has_value());
}
