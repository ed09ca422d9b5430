// Subgroup machinery: generation, normality, classes, center, quotients,
// and the subgroup-as-group view, cross-checked against definition-direct
// oracles and hand-frozen values on small named groups.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "twc/catalog.hpp"
#include "twc/subgroup.hpp"

using namespace twc;

namespace {

elem element_of_order(const Group& g, int k) {
    for (elem x = 0; x < g.order; ++x)
        if (g.element_order(x) == k) return x;
    FAIL("no element of order " << k << " in " << g.name);
    return 0;
}

} // namespace

TEST_CASE("subgroup generation agrees with the closure oracle") {
    const Group s4 = build_symmetric(4);
    const elem t = element_of_order(s4, 2);
    const elem c = element_of_order(s4, 3);
    const ElementSet h = subgroup_generated(s4, {t, c});
    CHECK(oracle::is_subgroup(s4, h));
    CHECK(is_subgroup(s4, h));

    // A transposition alone spans an order-2 subgroup.
    CHECK(subgroup_generated(s4, {t}).size() == 2);
    // The empty generating set spans the trivial subgroup.
    CHECK(subgroup_generated(s4, {}) == ElementSet{s4.identity});
    // Both declared generators together span the whole group.
    CHECK(subgroup_generated(s4, s4.generators).size() == 24);
}

TEST_CASE("is_subgroup matches the oracle on closed and non-closed sets") {
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0];
    const ElementSet good = subgroup_generated(g, {g.pow(x, 3)});
    CHECK(is_subgroup(g, good));
    CHECK(oracle::is_subgroup(g, good));

    ElementSet bad = good;
    bad.push_back(x);   // x is not in <x^3>
    canonicalize(bad);
    CHECK_FALSE(is_subgroup(g, bad));
    CHECK_FALSE(oracle::is_subgroup(g, bad));

    // A coset is not a subgroup (misses the identity).
    ElementSet coset;
    for (elem h : good) coset.push_back(g.op(x, h));
    canonicalize(coset);
    CHECK_FALSE(is_subgroup(g, coset));
    CHECK_FALSE(oracle::is_subgroup(g, coset));
    CHECK_FALSE(is_subgroup(g, {}));
}

TEST_CASE("conjugacy classes partition the group") {
    for (const Group& g : {build_symmetric(4), build_dihedral(4), build_gpn({3, 3})}) {
        const auto classes = conjugacy_classes(g);
        CHECK(static_cast<int>(classes.size()) == oracle::conjugacy_class_count(g));
        size_t total = 0;
        for (const auto& cls : classes) total += cls.size();
        CHECK(total == static_cast<size_t>(g.order));
        CHECK(classes.front() == ElementSet{g.identity});
        // Class sizes divide the group order.
        for (const auto& cls : classes) CHECK(g.order % cls.size() == 0);
    }
    // S4 has the classic 5 classes of sizes 1, 6, 3, 8, 6.
    const Group s4 = build_symmetric(4);
    std::vector<int> sizes;
    for (const auto& cls : conjugacy_classes(s4)) sizes.push_back(static_cast<int>(cls.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 3, 6, 6, 8});
    // The per-element table agrees with the class containing each element.
    const auto per_elem = conjugacy_class_sizes(s4);
    for (elem x = 0; x < s4.order; ++x)
        CHECK(per_elem[x] == static_cast<int>(conjugacy_class_of(s4, x).size()));
}

TEST_CASE("center computation") {
    CHECK(center(build_symmetric(3)) == ElementSet{0});
    CHECK(center(build_abelian({4, 3})).size() == 12);
    const Group d4 = build_dihedral(4);
    const ElementSet z = center(d4);
    REQUIRE(z.size() == 2);
    for (elem c : z)
        for (elem x = 0; x < d4.order; ++x) CHECK(d4.op(c, x) == d4.op(x, c));
    // G(3,3) has center of order 3 (powers of x^9).
    const Group g33 = build_gpn({3, 3});
    CHECK(center(g33) == subgroup_generated(g33, {g33.pow(g33.generators[0], 9)}));
}

TEST_CASE("normality and normal closure") {
    const Group s3 = build_symmetric(3);
    const elem t = element_of_order(s3, 2);
    const elem c = element_of_order(s3, 3);
    CHECK_FALSE(is_normal(s3, subgroup_generated(s3, {t})));
    CHECK(is_normal(s3, subgroup_generated(s3, {c})));
    // The normal closure of a transposition is all of S3.
    CHECK(normal_closure(s3, t).size() == 6);

    // In A4 the closure of a double transposition is the Klein subgroup.
    const Group a4 = build_alternating(4);
    const ElementSet v4 = normal_closure(a4, element_of_order(a4, 2));
    CHECK(v4.size() == 4);
    CHECK(is_normal(a4, v4));
    CHECK(set_is_abelian(a4, v4));
}

TEST_CASE("set algebra: products, conjugates, inverses") {
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0], y = g.generators[1];
    const ElementSet a = subgroup_generated(g, {g.pow(x, 9)});
    const ElementSet b = subgroup_generated(g, {g.pow(y, 3)});
    // Product of an order-3 central subgroup with an order-3 cyclic: 9 elements.
    const ElementSet ab = set_product(g, a, b);
    CHECK(ab.size() == 9);
    CHECK(set_product(g, a, {g.identity}) == a);

    for (elem z : {x, y, g.op(x, y)}) {
        const ElementSet conj = conjugate_set(g, ab, z);
        CHECK(conj.size() == ab.size());
        CHECK(conjugate_set(g, conj, g.inv[z]) == ab);
    }
    CHECK(inverse_set(g, inverse_set(g, ab)) == ab);
    // A subgroup is closed under inverses.
    CHECK(inverse_set(g, a) == a);
}

TEST_CASE("derived subgroup against the derived-series oracle") {
    const Group s3 = build_symmetric(3);
    const Group s4 = build_symmetric(4);
    const Group a4 = build_alternating(4);
    CHECK(derived_subgroup(s3).size() == 3);
    CHECK(derived_subgroup(s4).size() == 12);
    CHECK(derived_subgroup(a4).size() == 4);
    CHECK(derived_subgroup(build_abelian({2, 2, 3})) == ElementSet{0});
    for (const Group& g : {s3, s4, a4}) {
        const auto series = oracle::derived_series(g);
        REQUIRE(series.size() >= 2);
        CHECK(derived_subgroup(g) == series[1]);
    }
}

TEST_CASE("metabelian detection") {
    CHECK(is_metabelian(build_symmetric(3)));
    CHECK(is_metabelian(build_dihedral(5)));
    CHECK(is_metabelian(build_gpn({3, 3})));   // derived subgroup inside <x>
    CHECK(is_metabelian(build_abelian({8})));
    CHECK_FALSE(is_metabelian(build_symmetric(4)));   // S4' = A4, A4' = V4 != e
    CHECK_FALSE(is_metabelian(build_alternating(5)));
}

TEST_CASE("quotient by a normal subgroup") {
    const Group s4 = build_symmetric(4);
    // Double transpositions are the order-2 elements with class size 3.
    elem dt = 0;
    for (elem x = 0; x < s4.order; ++x)
        if (s4.element_order(x) == 2 && conjugacy_class_of(s4, x).size() == 3) {
            dt = x;
            break;
        }
    const ElementSet v4 = normal_closure(s4, dt);
    REQUIRE(v4.size() == 4);
    const Quotient q = quotient(s4, v4);
    REQUIRE(q.group.order == 6);
    CHECK_FALSE(q.group.is_abelian());   // S4 / V4 is S3
    // The projection is a surjective homomorphism.
    CHECK(is_homomorphism(s4, q.group, q.projection));
    ElementSet hit;
    for (elem x = 0; x < s4.order; ++x) hit.push_back(q.projection.image[x]);
    canonicalize(hit);
    CHECK(hit.size() == 6);
    // Representatives project to their own classes.
    for (elem r = 0; r < q.group.order; ++r) CHECK(q.projection.image[q.reps[r]] == r);

    // Quotient of G(3,3) by its center has order 81 and is nonabelian.
    const Group g33 = build_gpn({3, 3});
    const Quotient qz = quotient(g33, center(g33));
    CHECK(qz.group.order == 81);
    CHECK_FALSE(qz.group.is_abelian());
    CHECK(is_homomorphism(g33, qz.group, qz.projection));

    // Non-normal kernels are rejected.
    const Group s3 = build_symmetric(3);
    CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, {element_of_order(s3, 2)})),
                    SpecError);
}

TEST_CASE("subgroup view round trip") {
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0];
    const ElementSet xs = subgroup_generated(g, {x});
    const SubgroupView view = subgroup_to_group(g, xs, "<x>");
    REQUIRE(view.group.order == 27);
    CHECK(view.group.is_abelian());
    CHECK(verify_group_axioms(view.group, 0).ok);
    // Index maps invert each other and respect multiplication.
    for (elem a = 0; a < view.group.order; ++a) {
        CHECK(view.from_parent[view.to_parent[a]] == a);
        for (elem b = 0; b < view.group.order; ++b)
            CHECK(view.to_parent[view.group.op(a, b)] ==
                  g.op(view.to_parent[a], view.to_parent[b]));
    }
    // Non-closed sets are rejected.
    ElementSet broken = {g.identity, x};
    CHECK_THROWS_AS(subgroup_to_group(g, broken, "broken"), SpecError);
}
