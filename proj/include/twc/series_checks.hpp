// Checks tying the lower central series to identity twisted classes on groups
// satisfying the inner condition:
//
//   factorization  gamma_2 = [e]_{x_1} ... [e]_{x_{n-1}} for declared
//                  generators x_1..x_n, and each next term is the product of
//                  the classes of p_ij = [x_i, h_j] over the previous level's
//                  factors h_j
//   width-bounds   exact verbal widths of the gamma_k words against the
//                  general bounds (n-1 for gamma_2, n^{k-2}(n-1)/2 beyond),
//                  the sharper metabelian bounds, and the stable-term bound
//
// Both checks are not-applicable when the inner condition fails.
#pragma once

#include <string>
#include <vector>

#include "twc/report.hpp"
#include "twc/series.hpp"
#include "twc/twisted.hpp"

namespace twc {

namespace detail {

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::string set_brief(const Group& g, const ElementSet& s, size_t max_items = 8) {
    std::string out = "{";
    for (size_t i = 0; i < s.size() && i < max_items; ++i)
        out += (i ? "," : "") + g.label(s[i]);
    if (s.size() > max_items) out += ",...";
    return out + "} (" + std::to_string(s.size()) + " elements)";
}

} // namespace detail

// Product factorization of the lower central series by inner classes.
inline CheckReport verify_lower_central_factorization(const Group& g,
                                                      const InnerClasses& classes,
                                                      const ConditionVerdict& inner,
                                                      const SeriesReport& series,
                                                      uint64_t seed) {
    CheckReport rep;
    rep.check = "wfin";
    if (!inner.holds) {
        rep.verdict = Verdict::not_applicable;
        rep.note("inner condition fails; factorization does not apply");
        return rep;
    }
    Rng rng(seed, "wfin:" + g.name);
    const int n = static_cast<int>(g.generators.size());
    auto gamma = [&](int k) -> ElementSet {   // 1-based index into the series
        if (k <= static_cast<int>(series.terms.size())) return series.terms[k - 1];
        return series.terms.back();           // stable tail
    };
    auto product_of = [&](const std::vector<elem>& factors) {
        ElementSet acc = {g.identity};
        for (elem h : factors) acc = set_product(g, acc, classes.of(h));
        return acc;
    };
    auto shuffled_product_matches = [&](const std::vector<elem>& factors,
                                        const ElementSet& expect) {
        std::vector<elem> perm = factors;
        for (size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        return product_of(perm) == expect;
    };

    // Item 1: gamma_2 from the first n-1 generator classes.
    std::vector<elem> factors(g.generators.begin(),
                              g.generators.begin() + std::max(0, n - 1));
    {
        const ElementSet got = product_of(factors);
        const ElementSet want = gamma(2);
        if (got != want) {
            rep.verdict = Verdict::fail;
            rep.note("gamma_2 != product of first " + std::to_string(factors.size()) +
                     " generator classes: got " + detail::set_brief(g, got) +
                     ", expected " + detail::set_brief(g, want));
            return rep;
        }
        std::string names;
        for (elem h : factors) names += (names.empty() ? "" : ",") + g.label(h);
        rep.note("gamma_2 = product of classes of [" + names + "], " +
                 detail::set_brief(g, want));
        if (!shuffled_product_matches(factors, want)) {
            rep.verdict = Verdict::fail;
            rep.note("factor order changed the gamma_2 product");
            return rep;
        }
    }

    // Item 2: recurse with p_ij = [x_i, h_j]; drop identity brackets, merge
    // factors with equal classes, check normality of every retained factor.
    for (int k = 3; k <= 64; ++k) {
        std::vector<elem> next;
        std::vector<ElementSet> next_sets;
        for (elem xi : g.generators)
            for (elem hj : factors) {
                const elem p = g.comm(xi, hj);
                if (p == g.identity) continue;
                const ElementSet& cls = classes.of(p);
                bool dup = false;
                for (const ElementSet& s : next_sets)
                    if (s == cls) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    next.push_back(p);
                    next_sets.push_back(cls);
                }
            }
        for (size_t i = 0; i < next.size(); ++i)
            if (!is_normal(g, next_sets[i])) {
                rep.verdict = Verdict::fail;
                rep.note("factor class of " + g.label(next[i]) + " is not normal");
                rep.witness(next[i], g.label(next[i]));
                return rep;
            }
        const ElementSet got = product_of(next);
        const ElementSet want = gamma(k);
        if (got != want) {
            rep.verdict = Verdict::fail;
            rep.note("gamma_" + std::to_string(k) + " != bracket-factor product: got " +
                     detail::set_brief(g, got) + ", expected " + detail::set_brief(g, want));
            return rep;
        }
        if (!shuffled_product_matches(next, want)) {
            rep.verdict = Verdict::fail;
            rep.note("factor order changed the gamma_" + std::to_string(k) + " product");
            return rep;
        }
        std::string names;
        for (elem h : next) names += (names.empty() ? "" : ",") + g.label(h);
        rep.note("gamma_" + std::to_string(k) + " = product of classes of [" + names +
                 "], " + detail::set_brief(g, want));
        factors = std::move(next);
        if (factors.empty()) {
            if (want.size() != 1) {
                rep.verdict = Verdict::fail;
                rep.note("factors exhausted before the series reached the identity");
            }
            break;
        }
    }
    if (!factors.empty()) {
        rep.verdict = Verdict::fail;
        rep.note("factor recursion did not terminate within 64 levels");
    }
    return rep;
}

// Exact gamma_k widths against the proven bounds.
inline CheckReport verify_width_bounds(const Group& g, const ConditionVerdict& inner,
                                       const SeriesReport& series, EvalBudget& budget) {
    CheckReport rep;
    rep.check = "width-bounds";
    if (!inner.holds) {
        rep.verdict = Verdict::not_applicable;
        rep.note("inner condition fails; width bounds do not apply");
        return rep;
    }
    if (!series.nilpotency_class) {
        rep.verdict = Verdict::fail;
        rep.note("inner condition holds but the lower central series does not reach {e}");
        return rep;
    }
    const long long n = static_cast<long long>(g.generators.size());
    const int cls = *series.nilpotency_class;
    const bool metab = is_metabelian(g);
    bool all_ok = true;
    for (int k = 2; k <= cls + 1; ++k) {
        const WidthResult wr = verbal_width(g, lower_central_word(k), budget);
        // Cross-check the value-set route against the series computation.
        const ElementSet expect =
            k <= static_cast<int>(series.terms.size()) ? series.terms[k - 1]
                                                       : series.terms.back();
        if (wr.subgroup != expect) {
            rep.verdict = Verdict::fail;
            rep.note("verbal subgroup of the gamma_" + std::to_string(k) +
                     " word differs from the series term");
            return rep;
        }
        const long long general_bound =
            k == 2 ? std::max<long long>(n - 1, 0)
                   : [&] {
                         long long p = n - 1;
                         for (int i = 0; i < k - 2; ++i) p *= n;
                         return p / 2;
                     }();
        std::string line = "wid(gamma_" + std::to_string(k) + ") = " +
                           std::to_string(wr.width) + ", bound " +
                           std::to_string(general_bound);
        if (wr.width > general_bound) {
            all_ok = false;
            line += " VIOLATED";
        }
        if (metab && k >= 3) {
            const long long mb =
                n * (n - 1) / 2 * detail::binomial(n + k - 4, k - 3);
            line += ", metabelian bound " + std::to_string(mb);
            if (wr.width > mb) {
                all_ok = false;
                line += " VIOLATED";
            }
        }
        rep.note(line);
    }
    // Stable-term bound: gamma_k = gamma_{k+1} first happens at k = class+1,
    // where the stable term is trivial, so every later width is 0 and the
    // bound n^{k-1}(n-1) holds vacuously.
    {
        const int kstab = cls + 1;
        long long bound = n - 1;
        for (int i = 0; i < kstab - 1; ++i) bound *= n;
        rep.note("stable term at k = " + std::to_string(kstab) +
                 " is trivial; width bound " + std::to_string(bound) +
                 " for all later terms holds vacuously (all widths 0)");
    }
    rep.verdict = all_ok ? Verdict::pass : Verdict::fail;
    return rep;
}

} // namespace twc
