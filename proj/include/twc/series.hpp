// Lower central series, verbal subgroups, and exact verbal width.
//
// Value sets of outer commutator words are computed bottom-up: the children
// of a bracket have disjoint variables, so the bracket's values are exactly
// the pairwise commutators of the children's value sets. This keeps e.g.
// gamma_3 values on a group of order 3125 at |gamma_2-values| * |G| products
// instead of |G|^3 assignments. Non-outer words fall back to enumerating all
// assignments, guarded by the evaluation budget.
//
// Width is computed by layer saturation: S_1 = values and their inverses,
// S_{m+1} = S_m * S_1, and the width is the least m with S_m equal to the
// verbal subgroup. A hard cap of 64 layers guards against broken set
// arithmetic; hitting it is an engine failure, not a report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twc/group.hpp"
#include "twc/subgroup.hpp"
#include "twc/words.hpp"

namespace twc {

struct SeriesReport {
    // terms[0] = gamma_1 = G, then strictly descending until the first stable
    // term (recorded once).
    std::vector<ElementSet> terms;
    // Set iff the stable term is trivial; gamma_{class+1} = {e}.
    std::optional<int> nilpotency_class;
};

// gamma_{k+1} = <[a, g] : a in gamma_k, g in G>.
inline ElementSet next_lower_central_term(const Group& g, const ElementSet& term) {
    std::vector<char> seen(g.order, 0);
    ElementSet comms;
    for (elem a : term)
        for (elem x = 0; x < g.order; ++x) {
            const elem c = g.comm(a, x);
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    canonicalize(comms);
    return subgroup_generated(g, comms);
}

inline SeriesReport lower_central_series(const Group& g) {
    SeriesReport r;
    r.terms.push_back(g.all_elements());
    while (true) {
        const ElementSet next = next_lower_central_term(g, r.terms.back());
        if (next == r.terms.back()) break;
        r.terms.push_back(next);
    }
    if (r.terms.back().size() == 1)
        r.nilpotency_class = static_cast<int>(r.terms.size()) - 1;
    return r;
}

class EvalBudget {
    long long remaining_;

public:
    explicit EvalBudget(long long total) : remaining_(total) {}
    void charge(long long n, const std::string& what) {
        remaining_ -= n;
        if (remaining_ < 0) throw BudgetError("evaluation budget exceeded during " + what);
    }
    long long remaining() const { return remaining_; }
};

// All values w(g_1, ..., g_k) as the assignment ranges over the group.
inline ElementSet word_value_set(const Group& g, const WordExpr& w, EvalBudget& budget) {
    if (is_outer_commutator(w)) {
        auto rec = [&](auto&& self, const WordExpr& node) -> ElementSet {
            if (node.kind == WordExpr::Kind::var) return g.all_elements();
            const ElementSet lhs = self(self, node.children[0]);
            const ElementSet rhs = self(self, node.children[1]);
            budget.charge(static_cast<long long>(lhs.size()) * rhs.size(),
                          "outer word value set");
            std::vector<char> seen(g.order, 0);
            ElementSet out;
            for (elem a : lhs)
                for (elem b : rhs) {
                    const elem c = g.comm(a, b);
                    if (!seen[c]) {
                        seen[c] = 1;
                        out.push_back(c);
                    }
                }
            canonicalize(out);
            return out;
        };
        return rec(rec, w);
    }
    // General word: enumerate all assignments.
    const int vars = word_variable_count(w);
    long long total = 1;
    for (int i = 0; i < vars; ++i) {
        total *= g.order;
        if (total > budget.remaining())
            throw BudgetError("evaluation budget exceeded during word enumeration");
    }
    budget.charge(total, "word enumeration");
    std::vector<elem> assign(vars, g.identity);
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == vars) {
            const elem v = eval_word(g, w, assign);
            if (!seen[v]) {
                seen[v] = 1;
                out.push_back(v);
            }
            return;
        }
        for (elem x = 0; x < g.order; ++x) {
            assign[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    canonicalize(out);
    return out;
}

// w(G) = subgroup generated by the word's values.
inline ElementSet verbal_subgroup(const Group& g, const WordExpr& w, EvalBudget& budget) {
    return subgroup_generated(g, word_value_set(g, w, budget));
}

struct WidthResult {
    int width = 0;
    ElementSet values;     // the word's value set
    ElementSet subgroup;   // closure of the values
};

inline constexpr int kWidthLayerCap = 64;

// Exact width: least m such that every element of w(G) is a product of at
// most m values or inverse values.
inline WidthResult verbal_width(const Group& g, const WordExpr& w, EvalBudget& budget) {
    WidthResult r;
    r.values = word_value_set(g, w, budget);
    r.subgroup = subgroup_generated(g, r.values);
    ElementSet step = r.values;
    for (elem v : r.values) step.push_back(g.inv[v]);
    step.push_back(g.identity);   // "at most m" absorbs shorter products
    canonicalize(step);
    ElementSet layer = {g.identity};
    int m = 0;
    while (layer != r.subgroup) {
        budget.charge(static_cast<long long>(layer.size()) * step.size(),
                      "width saturation");
        layer = set_product(g, layer, step);
        ++m;
        if (m > kWidthLayerCap)
            throw EngineError("width saturation failed to stabilize within " +
                              std::to_string(kWidthLayerCap) + " layers");
    }
    r.width = m;
    return r;
}

} // namespace twc
