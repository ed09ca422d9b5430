// Word parsing/evaluation, value sets, verbal width by layer saturation
// against a breadth-first oracle, and the lower central series.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "twc/catalog.hpp"
#include "twc/series.hpp"
#include "twc/words.hpp"

using namespace twc;

TEST_CASE("word parser round trips") {
    for (const std::string text :
         {"x1", "x1^-1", "[x1,x2]", "[[x1,x2],x3]", "[[x1,x2],[x3,x4]]",
          "x1 x2^-1 x1^-1", "[x1,x2] [x3,x4]"}) {
        const WordExpr w = parse_word(text);
        CHECK(word_to_string(w) == text);
        // Reparsing the printed form is stable.
        CHECK(word_to_string(parse_word(word_to_string(w))) == text);
    }
}

TEST_CASE("word parser rejects malformed input") {
    for (const std::string text :
         {"", "x0", "x65", "y1", "[x1,]", "[x1", "x1^2", "x1^", "[x1 x2]", "x1,x2"})
        CHECK_THROWS_AS(parse_word(text), SpecError);
}

TEST_CASE("variable counting and outer commutator shape") {
    CHECK(word_variable_count(parse_word("[x1,x2]")) == 2);
    CHECK(word_variable_count(parse_word("[[x1,x2],x3]")) == 3);
    CHECK(word_variable_count(parse_word("x2")) == 2);   // highest index counts

    CHECK(is_outer_commutator(parse_word("[x1,x2]")));
    CHECK(is_outer_commutator(parse_word("[[x1,x2],[x3,x4]]")));
    CHECK(is_outer_commutator(parse_word("x1")));
    // Repeated variables or products break the outer shape.
    CHECK_FALSE(is_outer_commutator(parse_word("[[x1,x2],x1]")));
    CHECK_FALSE(is_outer_commutator(parse_word("x1 x2")));
    CHECK_FALSE(is_outer_commutator(parse_word("[x1,x2^-1]")));
}

TEST_CASE("evaluation matches direct table arithmetic") {
    const Group g = build_symmetric(4);
    const WordExpr comm = parse_word("[x1,x2]");
    const WordExpr conj = parse_word("x2^-1 x1 x2");
    Rng rng(11, "words");
    for (int i = 0; i < 50; ++i) {
        const elem a = static_cast<elem>(rng.below(g.order));
        const elem b = static_cast<elem>(rng.below(g.order));
        CHECK(eval_word(g, comm, {a, b}) == g.comm(a, b));
        CHECK(eval_word(g, conj, {a, b}) == g.conj(a, b));
    }
    // Too-short assignments are rejected.
    CHECK_THROWS_AS(eval_word(g, comm, {elem{1}}), SpecError);
}

TEST_CASE("commutator expansion identity holds word-for-word") {
    // [x, yz] = [x, z] [x, y]^z for the convention [x,y] = x^-1 y^-1 x y.
    const WordExpr lhs = parse_word("[x1,x2 x3]");
    const WordExpr rhs = parse_word("[x1,x3] x3^-1 [x1,x2] x3");
    for (const Group& g : {build_symmetric(4), build_gpn({3, 3})}) {
        Rng rng(5, "expansion:" + g.name);
        for (int i = 0; i < 60; ++i) {
            std::vector<elem> assign = {static_cast<elem>(rng.below(g.order)),
                                        static_cast<elem>(rng.below(g.order)),
                                        static_cast<elem>(rng.below(g.order))};
            CHECK(eval_word(g, lhs, assign) == eval_word(g, rhs, assign));
        }
    }
}

TEST_CASE("lower central words are left-normed brackets") {
    CHECK(word_to_string(lower_central_word(2)) == "[x1,x2]");
    CHECK(word_to_string(lower_central_word(3)) == "[[x1,x2],x3]");
    CHECK(word_to_string(lower_central_word(4)) == "[[[x1,x2],x3],x4]");
    CHECK(word_variable_count(lower_central_word(4)) == 4);
    CHECK(is_outer_commutator(lower_central_word(4)));

    // Frozen evaluation: [[x, y^-1], y^-1] = x^9 in G(3,3).
    const Group g = build_gpn({3, 3});
    const elem x = g.generators[0], y = g.generators[1];
    CHECK(eval_word(g, lower_central_word(2), {x, g.inv[y]}) == g.pow(x, 3));
    CHECK(eval_word(g, lower_central_word(3), {x, g.inv[y], g.inv[y]}) == g.pow(x, 9));
}

TEST_CASE("value sets match brute-force sweeps") {
    const WordExpr comm = parse_word("[x1,x2]");

    const Group s3 = build_symmetric(3);
    EvalBudget b1(100000000);
    const ElementSet vals3 = word_value_set(s3, comm, b1);
    // Commutator values in S3 are exactly the alternating subgroup.
    CHECK(vals3.size() == 3);
    CHECK(oracle::is_subgroup(s3, vals3));

    const Group g33 = build_gpn({3, 3});
    ElementSet brute;
    for (elem a = 0; a < g33.order; ++a)
        for (elem b = 0; b < g33.order; ++b) brute.push_back(g33.comm(a, b));
    canonicalize(brute);
    EvalBudget b2(100000000);
    CHECK(word_value_set(g33, comm, b2) == brute);

    // S4: every element of A4 is a commutator, so values = verbal subgroup.
    const Group s4 = build_symmetric(4);
    EvalBudget b3(100000000);
    const ElementSet vals4 = word_value_set(s4, comm, b3);
    CHECK(vals4.size() == 12);
    EvalBudget b4(100000000);
    CHECK(verbal_subgroup(s4, comm, b4) == vals4);
}

TEST_CASE("verbal width against the breadth-first oracle") {
    const WordExpr comm = parse_word("[x1,x2]");
    for (const Group& g :
         {build_symmetric(3), build_symmetric(4), build_dihedral(4), build_gpn({3, 3})}) {
        EvalBudget budget(100000000);
        const WidthResult wr = verbal_width(g, comm, budget);
        CHECK(wr.subgroup == subgroup_generated(g, wr.values));
        const auto dist = oracle::product_length(g, wr.values);
        int max_dist = 0;
        for (elem m : wr.subgroup) {
            REQUIRE(dist.count(m) == 1);
            max_dist = std::max(max_dist, dist.at(m));
        }
        CHECK(wr.width == max_dist);
    }
}

TEST_CASE("frozen widths: single-commutator groups") {
    // In G(3,3) and G(3,4) both gamma_2 and gamma_3 have width 1.
    for (const GpnSpec s : {GpnSpec{3, 3}, GpnSpec{3, 4}}) {
        const Group g = build_gpn(s);
        for (int k : {2, 3}) {
            EvalBudget budget(100000000);
            CHECK(verbal_width(g, lower_central_word(k), budget).width == 1);
        }
    }
    // In S4 the commutator word has width 1 (all of A4 is hit directly).
    EvalBudget budget(100000000);
    CHECK(verbal_width(build_symmetric(4), parse_word("[x1,x2]"), budget).width == 1);
}

TEST_CASE("word evaluation honors the budget") {
    const Group g = build_gpn({3, 3});
    EvalBudget tiny(100);
    CHECK_THROWS_AS(word_value_set(g, parse_word("[x1,x2]"), tiny), BudgetError);
}

TEST_CASE("lower central series on named groups") {
    // Abelian: class 1, two terms.
    const SeriesReport ab = lower_central_series(build_abelian({2, 2, 3}));
    REQUIRE(ab.nilpotency_class.has_value());
    CHECK(*ab.nilpotency_class == 1);
    CHECK(ab.terms.size() == 2);

    // D4: class 2.
    const SeriesReport d4 = lower_central_series(build_dihedral(4));
    REQUIRE(d4.nilpotency_class.has_value());
    CHECK(*d4.nilpotency_class == 2);

    // G(3,3): class 3 with gamma_2 = <x^3>, gamma_3 = <x^9>.
    const Group g33 = build_gpn({3, 3});
    const elem x = g33.generators[0];
    const SeriesReport s33 = lower_central_series(g33);
    REQUIRE(s33.nilpotency_class.has_value());
    CHECK(*s33.nilpotency_class == 3);
    REQUIRE(s33.terms.size() == 4);
    CHECK(s33.terms[1] == subgroup_generated(g33, {g33.pow(x, 3)}));
    CHECK(s33.terms[2] == subgroup_generated(g33, {g33.pow(x, 9)}));
    CHECK(s33.terms[3] == ElementSet{g33.identity});

    // G(3,4): class 4; G(5,3): class 3.
    CHECK(lower_central_series(build_gpn({3, 4})).nilpotency_class.value() == 4);
    CHECK(lower_central_series(build_gpn({5, 3})).nilpotency_class.value() == 3);

    // Non-nilpotent groups stabilize above the identity.
    const SeriesReport s3 = lower_central_series(build_symmetric(3));
    CHECK_FALSE(s3.nilpotency_class.has_value());
    CHECK(s3.terms.back().size() == 3);   // stabilizes at A3
    const SeriesReport a4 = lower_central_series(build_alternating(4));
    CHECK_FALSE(a4.nilpotency_class.has_value());
    CHECK(a4.terms.back().size() == 4);   // stabilizes at the Klein subgroup
}

TEST_CASE("series terms are normal and descending") {
    for (const Group& g : {build_gpn({3, 3}), build_symmetric(4), build_dihedral(6)}) {
        const SeriesReport r = lower_central_series(g);
        for (size_t i = 0; i < r.terms.size(); ++i) {
            CHECK(is_normal(g, r.terms[i]));
            if (i > 0) {
                CHECK(r.terms[i].size() < r.terms[i - 1].size());
                for (elem m : r.terms[i]) CHECK(set_contains(r.terms[i - 1], m));
            }
        }
        // Recomputing the successor of each term reproduces the next one.
        for (size_t i = 0; i + 1 < r.terms.size(); ++i)
            CHECK(next_lower_central_term(g, r.terms[i]) == r.terms[i + 1]);
    }
}
