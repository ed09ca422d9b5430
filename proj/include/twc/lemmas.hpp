// Structural laws of identity twisted classes under inner automorphisms,
// verified on a group where every such class is a subgroup:
//
//   fixed-point-freeness    g != e implies g not in [e]_g
//   normal-trapping         normal H containing g traps [e]_g
//   normality               every class [e]_g is a normal subgroup
//   composition-containment [e]_{phi psi} inside [e]_phi * [e]_psi
//   quotient-stability      classes stay subgroups in every quotient G/N
//   outer-word-membership   w(g_1..g_k) lies in every [e]_{g_i}
//   descending-chains       iterated brackets give strictly shrinking classes
//
// Pair/assignment sampling is exhaustive when the distinct inner family has
// at most 64 maps, otherwise 200 seeded samples per suite.
#pragma once

#include <string>
#include <vector>

#include "twc/common.hpp"
#include "twc/report.hpp"
#include "twc/subgroup.hpp"
#include "twc/twisted.hpp"
#include "twc/words.hpp"

namespace twc {

inline constexpr int kLemmaExhaustivePairLimit = 64;
inline constexpr int kLemmaSampleCount = 200;

namespace detail {

// Small deduplicated family of normal subgroups: normal closures of the
// generators and seeded elements, the lower central terms, derived subgroup,
// center, and G itself.
inline std::vector<ElementSet> normal_family(const Group& g, Rng& rng) {
    std::vector<ElementSet> fam;
    auto add = [&](ElementSet s) {
        for (const ElementSet& t : fam)
            if (t == s) return;
        fam.push_back(std::move(s));
    };
    add(g.all_elements());
    add(ElementSet{g.identity});
    add(center(g));
    add(derived_subgroup(g));
    for (elem s : g.generators) add(normal_closure(g, s));
    for (int i = 0; i < 8; ++i)
        add(normal_closure(g, static_cast<elem>(rng.below(g.order))));
    ElementSet term = g.all_elements();
    for (int k = 0; k < 16 && term.size() > 1; ++k) {
        ElementSet comms;
        std::vector<char> seen(g.order, 0);
        for (elem a : term)
            for (elem x = 0; x < g.order; ++x) {
                const elem c = g.comm(a, x);
                if (!seen[c]) {
                    seen[c] = 1;
                    comms.push_back(c);
                }
            }
        canonicalize(comms);
        ElementSet next = subgroup_generated(g, comms);
        if (next == term) break;
        add(next);
        term = next;
    }
    return fam;
}

inline bool subset_of(const ElementSet& a, const Mask& b) {
    for (elem x : a)
        if (!b(x)) return false;
    return true;
}

} // namespace detail

// Verify the lemma suites. The hypothesis is the inner condition; when it
// fails the suites do not apply and the report says so.
inline CheckReport verify_lemmas(const Group& g, const InnerClasses& classes,
                                 const ConditionVerdict& inner, uint64_t seed) {
    CheckReport rep;
    rep.check = "lemmas";
    if (!inner.holds) {
        rep.verdict = Verdict::not_applicable;
        rep.note("inner condition fails; lemma hypotheses not met");
        if (inner.witness_phi && inner.witness_phi->inner_witness)
            rep.witness(*inner.witness_phi->inner_witness,
                        g.label(*inner.witness_phi->inner_witness));
        return rep;
    }
    Rng rng(seed, "lemmas:" + g.name);
    const int maps = classes.map_count();
    bool all_ok = true;
    auto suite = [&](const std::string& name, bool ok, const std::string& extra) {
        rep.note(name + ": " + (ok ? "pass" : "fail") + (extra.empty() ? "" : " (" + extra + ")"));
        all_ok = all_ok && ok;
    };

    // fixed-point-freeness: g != e never lies in its own class.
    {
        bool ok = true;
        elem bad = -1;
        for (elem x = 0; x < g.order && ok; ++x) {
            if (x == g.identity) continue;
            if (set_contains(classes.of(x), x)) {
                ok = false;
                bad = x;
            }
        }
        if (!ok) rep.witness(bad, g.label(bad));
        suite("fixed-point-freeness", ok, "all " + std::to_string(g.order) + " elements");
    }

    Rng fam_rng(seed, "lemma-normal-family:" + g.name);
    const std::vector<ElementSet> family = detail::normal_family(g, fam_rng);

    // normal-trapping: for normal H and g in H, [e]_g stays inside H.
    {
        bool ok = true;
        for (const ElementSet& h : family) {
            const Mask in(g.order, h);
            for (elem x : h)
                if (!detail::subset_of(classes.of(x), in)) {
                    ok = false;
                    rep.witness(x, g.label(x));
                    break;
                }
            if (!ok) break;
        }
        suite("normal-trapping", ok, std::to_string(family.size()) + " normal subgroups");
    }

    // normality: each class is normal in G.
    {
        bool ok = true;
        for (int id = 0; id < maps && ok; ++id)
            if (!is_normal(g, classes.e_class[id])) {
                ok = false;
                rep.witness(classes.witness[id], g.label(classes.witness[id]));
            }
        suite("normality", ok, std::to_string(maps) + " classes");
    }

    // composition-containment: [e]_{phi psi} subset of [e]_phi [e]_psi, where
    // phi = conj by a, psi = conj by b compose to conj by b*a.
    {
        bool ok = true;
        long long pairs = 0;
        auto check_pair = [&](int i, int j) {
            const elem a = classes.witness[i];
            const elem b = classes.witness[j];
            const ElementSet& comp = classes.of(g.op(b, a));
            const ElementSet prod = set_product(g, classes.e_class[i], classes.e_class[j]);
            const Mask in(g.order, prod);
            ++pairs;
            if (!detail::subset_of(comp, in)) {
                ok = false;
                rep.witness(g.op(b, a), g.label(g.op(b, a)));
            }
        };
        if (maps <= kLemmaExhaustivePairLimit) {
            for (int i = 0; i < maps && ok; ++i)
                for (int j = 0; j < maps && ok; ++j) check_pair(i, j);
            suite("composition-containment", ok,
                  "exhaustive over " + std::to_string(pairs) + " pairs");
        } else {
            for (int t = 0; t < kLemmaSampleCount && ok; ++t)
                check_pair(static_cast<int>(rng.below(maps)),
                           static_cast<int>(rng.below(maps)));
            suite("composition-containment", ok,
                  std::to_string(kLemmaSampleCount) + " seeded pairs");
        }
    }

    // quotient-stability: classes remain subgroups in each quotient.
    {
        bool ok = true;
        int quotients = 0;
        for (const ElementSet& h : family) {
            if (h.size() == 1) continue;   // G/{e} repeats the base check
            const Quotient q = quotient(g, h);
            ++quotients;
            const InnerClasses qc = compute_inner_classes(q.group);
            for (int id = 0; id < qc.map_count(); ++id)
                if (!is_subgroup(q.group, qc.e_class[id])) {
                    ok = false;
                    rep.witness(q.reps[qc.witness[id]], g.label(q.reps[qc.witness[id]]));
                    break;
                }
            if (!ok) break;
        }
        suite("quotient-stability", ok, std::to_string(quotients) + " quotients");
    }

    // outer-word-membership: w(g_1..g_k) lies in [e]_{g_i} for each variable.
    {
        const std::vector<WordExpr> words = {
            parse_word("[x1,x2]"), parse_word("[[x1,x2],x3]"),
            parse_word("[x1,[x2,x3]]"), parse_word("[[x1,x2],[x3,x4]]")};
        bool ok = true;
        int checked = 0;
        for (const WordExpr& w : words) {
            const int vars = word_variable_count(w);
            for (int t = 0; t < kLemmaSampleCount / 4 && ok; ++t) {
                std::vector<elem> assign(vars);
                for (int i = 0; i < vars; ++i)
                    assign[i] = static_cast<elem>(rng.below(g.order));
                const elem val = eval_word(g, w, assign);
                ++checked;
                for (int i = 0; i < vars; ++i)
                    if (!set_contains(classes.of(assign[i]), val)) {
                        ok = false;
                        rep.witness(val, g.label(val));
                        break;
                    }
            }
        }
        suite("outer-word-membership", ok, std::to_string(checked) + " seeded assignments");
    }

    // descending-chains: h_{i+1} = [h_i, g] shrinks the class strictly while
    // the bracket is nontrivial.
    {
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            elem h = static_cast<elem>(rng.below(g.order));
            for (int step = 0; step < 4 && ok; ++step) {
                const elem z = static_cast<elem>(rng.below(g.order));
                const elem h2 = g.comm(h, z);
                const ElementSet& before = classes.of(h);
                const ElementSet& after = classes.of(h2);
                const Mask in(g.order, before);
                if (!detail::subset_of(after, in)) ok = false;
                if (h2 != g.identity && after == before) ok = false;
                if (!ok) rep.witness(h2, g.label(h2));
                h = h2;
            }
        }
        suite("descending-chains", ok, "50 seeded chains");
    }

    rep.verdict = all_ok ? Verdict::pass : Verdict::fail;
    return rep;
}

} // namespace twc
