// Nilpotency bound for odd-order extensions of an abelian group by a cyclic
// group of order n = p_1^{n_1} ... p_m^{n_m} whose identity twisted classes
// are all subgroups: the class is at most max n_i + 1. The check works
// componentwise over Sylow subgroups, where the action reduces to a single
// prime and the theta filtration applies; the intermediate containment
// gamma_r(G_i) <= theta_i^{r-1}(A_i) is verified along the way.
//
// The subgroup condition is taken over the full automorphism group when that
// enumeration fits the cap, else over inner plus derivation automorphisms;
// the report names the family used.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "twc/derivations.hpp"
#include "twc/group.hpp"
#include "twc/report.hpp"
#include "twc/series.hpp"
#include "twc/subgroup.hpp"
#include "twc/twisted.hpp"

namespace twc {
namespace detail {

// Elements of p-power order; this is the Sylow p-subgroup once the group is
// known nilpotent.
inline ElementSet p_torsion(const Group& g, long long p) {
    ElementSet out;
    for (elem x = 0; x < g.order; ++x) {
        long long o = g.element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) out.push_back(x);
    }
    return out;
}

} // namespace detail

// precomputed: nullptr means "enumerate here"; a pointer to an empty optional
// means the caller already found full enumeration over budget (go straight to
// the fallback family); a pointer to a value reuses that verdict.
inline CheckReport verify_corex(const Group& g, const ElementSet& a_set, elem t,
                                int aut_order_cap = 512,
                                const std::optional<ConditionVerdict>* precomputed = nullptr) {
    CheckReport rep;
    rep.check = "corex";
    if (g.order % 2 == 0) {
        rep.verdict = Verdict::not_applicable;
        rep.note("group order " + std::to_string(g.order) +
                 " is even; the bound applies to odd-order groups only");
        return rep;
    }

    ExtensionDecomposition dec;
    try {
        dec = decompose_abelian_by_cyclic(g, a_set, t);
    } catch (const SpecError& e) {
        rep.verdict = Verdict::not_applicable;
        rep.note(std::string("no abelian-by-cyclic wiring: ") + e.what());
        return rep;
    }

    // Subgroup condition over the strongest family within budget.
    bool condition_holds = true;
    std::optional<ElementSet> bad_class;
    std::optional<ConditionVerdict> all;
    bool over_cap = false;
    if (precomputed) {
        all = *precomputed;
        over_cap = !all.has_value();
    } else {
        try {
            all = check_condition(g, AutFamily::all, aut_order_cap);
        } catch (const BudgetError&) {
            over_cap = true;
        }
    }
    if (!over_cap) {
        rep.note("condition family: all automorphisms (" +
                 std::to_string(all->automorphisms_checked) + " maps)");
        condition_holds = all->holds;
        if (!all->holds) bad_class = all->witness_class;
    } else {
        const ConditionVerdict inner = check_condition(g, AutFamily::inner);
        const std::vector<Derivation> ders = enumerate_derivations(dec.action);
        rep.note("condition family: inner + derivation automorphisms (" +
                 std::to_string(inner.automorphisms_checked) + " inner, " +
                 std::to_string(ders.size()) + " derivations)");
        condition_holds = inner.holds;
        if (!inner.holds) bad_class = inner.witness_class;
        for (const Derivation& d : ders) {
            if (!condition_holds) break;
            const Automorphism phi = gaschutz_automorphism(g, dec, d);
            const ElementSet cls = twisted_class_set(g, phi, g.identity);
            if (!is_subgroup(g, cls)) {
                condition_holds = false;
                bad_class = cls;
                rep.witness(d.generator_value, "derivation value with non-subgroup class");
            }
        }
    }
    if (!condition_holds) {
        rep.verdict = Verdict::not_applicable;
        rep.note("identity class fails to be a subgroup for some map in the family; "
                 "hypotheses not met");
        if (bad_class && !bad_class->empty())
            rep.witness((*bad_class)[0], "member of the offending class");
        return rep;
    }

    const SeriesReport series = lower_central_series(g);
    if (!series.nilpotency_class) {
        rep.verdict = Verdict::fail;
        rep.note("condition holds but the lower central series does not reach the "
                 "identity; contradicts nilpotency");
        return rep;
    }
    const auto n_factors = detail::factor_order(dec.action.n);
    int bound = 1;
    std::string n_desc;
    for (const auto& [p, e] : n_factors) {
        bound = std::max(bound, e + 1);
        if (!n_desc.empty()) n_desc += " * ";
        n_desc += std::to_string(p) + "^" + std::to_string(e);
    }
    if (n_desc.empty()) n_desc = "1";
    rep.note("acting order n = " + std::to_string(dec.action.n) + " = " + n_desc +
             "; bound max(n_i)+1 = " + std::to_string(bound));
    if (*series.nilpotency_class > bound) {
        rep.verdict = Verdict::fail;
        rep.note("nilpotency class " + std::to_string(*series.nilpotency_class) +
                 " exceeds the bound");
        return rep;
    }
    rep.note("nilpotency class " + std::to_string(*series.nilpotency_class) +
             " <= " + std::to_string(bound));

    // Componentwise: each Sylow subgroup is an extension of A_i by the p-part
    // of the cyclic quotient, and theta_i controls its lower central series.
    for (const auto& [p, gexp] : detail::factor_order(g.order)) {
        (void)gexp;
        const ElementSet comp = detail::p_torsion(g, p);
        if (!is_subgroup(g, comp)) {
            rep.verdict = Verdict::fail;
            rep.note("p = " + std::to_string(p) +
                     ": torsion elements do not form a subgroup");
            return rep;
        }
        const SubgroupView gi =
            subgroup_to_group(g, comp, g.name + ".p" + std::to_string(p));
        ElementSet ai;
        for (elem x : a_set)
            if (gi.from_parent[x] >= 0) ai.push_back(gi.from_parent[x]);
        canonicalize(ai);
        const Quotient qi = quotient(gi.group, ai);
        elem ti = gi.group.identity;
        bool cyclic = qi.group.order == 1;
        for (elem c = 0; c < qi.group.order && !cyclic; ++c)
            if (qi.group.element_order(c) == qi.group.order) {
                ti = qi.reps[c];
                cyclic = true;
            }
        if (!cyclic) {
            rep.verdict = Verdict::fail;
            rep.note("p = " + std::to_string(p) + ": component quotient is not cyclic");
            return rep;
        }
        int ni = 0;
        for (long long q = qi.group.order; q > 1; q /= p) ++ni;
        const SeriesReport si = lower_central_series(gi.group);
        if (!si.nilpotency_class || *si.nilpotency_class > ni + 1) {
            rep.verdict = Verdict::fail;
            rep.note("p = " + std::to_string(p) + ": component class exceeds n_i+1 = " +
                     std::to_string(ni + 1));
            return rep;
        }
        if (ai.size() <= 1) {
            rep.note("p = " + std::to_string(p) + ": component is cyclic (trivial A_i), class " +
                     std::to_string(*si.nilpotency_class));
            continue;
        }
        const ExtensionDecomposition di = decompose_abelian_by_cyclic(gi.group, ai, ti);
        const ThetaReport th = theta_map(di.action);
        if (!th.homomorphism_ok || !th.image_in_omega_n || !th.filtration_ok) {
            rep.verdict = Verdict::fail;
            rep.note("p = " + std::to_string(p) +
                     ": theta verdicts fail despite the subgroup condition");
            if (th.witness) rep.witness(*th.witness, "theta witness (A_i local index)");
            return rep;
        }
        // gamma_r(G_i) <= theta_i^{r-1}(A_i) for r >= 2.
        const int cls = *si.nilpotency_class;
        for (int r = 2; r <= cls + 1; ++r) {
            const ElementSet img_local_a =
                theta_iterated_image(th, di.action.a, r - 1);
            ElementSet img;
            img.reserve(img_local_a.size());
            for (elem x : img_local_a) img.push_back(di.a_view.to_parent[x]);
            canonicalize(img);
            const Mask allowed(gi.group.order, img);
            const ElementSet& gamma_r = si.terms[static_cast<size_t>(r) - 1];
            for (elem x : gamma_r)
                if (!allowed(x)) {
                    rep.verdict = Verdict::fail;
                    rep.note("p = " + std::to_string(p) + ": gamma_" + std::to_string(r) +
                             " not inside theta^" + std::to_string(r - 1) + "(A_i)");
                    rep.witness(gi.to_parent[x], "escaping element");
                    return rep;
                }
        }
        rep.note("p = " + std::to_string(p) + ": class " + std::to_string(cls) +
                 " <= " + std::to_string(ni + 1) + ", theta filtration and gamma_r " +
                 "containments hold");
    }

    // Squarefree exponent of A means every Sylow piece of A is elementary
    // abelian; the theta filtration then collapses and forces G abelian.
    long long a_exponent = 1;
    for (elem local = 0; local < dec.a_view.group.order; ++local) {
        const long long o = dec.a_view.group.element_order(local);
        a_exponent = std::lcm(a_exponent, o);
    }
    bool squarefree = true;
    for (const auto& [p, e] : detail::factor_order(a_exponent))
        if (e > 1) squarefree = false;
    if (squarefree) {
        if (*series.nilpotency_class > 1) {
            rep.verdict = Verdict::fail;
            rep.note("A has squarefree exponent " + std::to_string(a_exponent) +
                     " yet the group is nonabelian");
            return rep;
        }
        rep.note("A has squarefree exponent " + std::to_string(a_exponent) +
                 "; group is abelian as required");
    }
    return rep;
}

} // namespace twc
