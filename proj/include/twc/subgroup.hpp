// Subgroup machinery on Cayley-table groups: closure, normality, centers,
// conjugacy classes, quotients, derived series, and restriction of a subgroup
// to a standalone Group value.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "twc/group.hpp"

namespace twc {

// Closure of a generating set under multiplication (BFS from the identity).
// Inverses come for free in a finite group.
inline ElementSet subgroup_generated(const Group& g, const ElementSet& gens) {
    std::vector<char> seen(g.order, 0);
    seen[g.identity] = 1;
    ElementSet out = {g.identity};
    std::vector<elem> frontier = {g.identity};
    while (!frontier.empty()) {
        std::vector<elem> next;
        for (elem x : frontier)
            for (elem s : gens) {
                const elem y = g.op(x, s);
                if (!seen[y]) {
                    seen[y] = 1;
                    out.push_back(y);
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    canonicalize(out);
    return out;
}

inline bool is_subgroup(const Group& g, const ElementSet& s) {
    if (!set_contains(s, g.identity)) return false;
    const Mask in(g.order, s);
    for (elem a : s) {
        if (!in(g.inv[a])) return false;
        for (elem b : s)
            if (!in(g.op(a, b))) return false;
    }
    return true;
}

inline bool is_normal(const Group& g, const ElementSet& s) {
    const Mask in(g.order, s);
    for (elem x = 0; x < g.order; ++x)
        for (elem a : s)
            if (!in(g.conj(a, x))) return false;
    return true;
}

inline ElementSet conjugacy_class_of(const Group& g, elem x) {
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem z = 0; z < g.order; ++z) {
        const elem y = g.conj(x, z);
        if (!seen[y]) {
            seen[y] = 1;
            out.push_back(y);
        }
    }
    canonicalize(out);
    return out;
}

inline std::vector<ElementSet> conjugacy_classes(const Group& g) {
    std::vector<char> done(g.order, 0);
    std::vector<ElementSet> classes;
    for (elem x = 0; x < g.order; ++x) {
        if (done[x]) continue;
        ElementSet cls = conjugacy_class_of(g, x);
        for (elem y : cls) done[y] = 1;
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Size of the conjugacy class of each element; the automorphism search uses
// this as an invariant filter on candidate generator images.
inline std::vector<int> conjugacy_class_sizes(const Group& g) {
    std::vector<int> size(g.order, 0);
    for (elem x = 0; x < g.order; ++x) {
        if (size[x]) continue;
        const ElementSet cls = conjugacy_class_of(g, x);
        for (elem y : cls) size[y] = static_cast<int>(cls.size());
    }
    return size;
}

// Smallest normal subgroup containing x: closure of the conjugacy class.
inline ElementSet normal_closure(const Group& g, elem x) {
    return subgroup_generated(g, conjugacy_class_of(g, x));
}

inline ElementSet center(const Group& g) {
    ElementSet out;
    for (elem z = 0; z < g.order; ++z) {
        bool central = true;
        for (elem x = 0; x < g.order; ++x)
            if (g.op(z, x) != g.op(x, z)) {
                central = false;
                break;
            }
        if (central) out.push_back(z);
    }
    return out;
}

// {a*b : a in A, b in B}; subgroup-valued whenever both factors are normal.
inline ElementSet set_product(const Group& g, const ElementSet& a, const ElementSet& b) {
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem x : a)
        for (elem y : b) {
            const elem z = g.op(x, y);
            if (!seen[z]) {
                seen[z] = 1;
                out.push_back(z);
            }
        }
    canonicalize(out);
    return out;
}

inline ElementSet conjugate_set(const Group& g, const ElementSet& s, elem z) {
    ElementSet out;
    out.reserve(s.size());
    for (elem x : s) out.push_back(g.conj(x, z));
    canonicalize(out);
    return out;
}

inline ElementSet inverse_set(const Group& g, const ElementSet& s) {
    ElementSet out;
    out.reserve(s.size());
    for (elem x : s) out.push_back(g.inv[x]);
    canonicalize(out);
    return out;
}

// Derived subgroup <[x,y]> over all pairs.
inline ElementSet derived_subgroup(const Group& g) {
    std::vector<char> seen(g.order, 0);
    ElementSet comms;
    for (elem a = 0; a < g.order; ++a)
        for (elem b = 0; b < g.order; ++b) {
            const elem c = g.comm(a, b);
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    canonicalize(comms);
    return subgroup_generated(g, comms);
}

inline bool set_is_abelian(const Group& g, const ElementSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.op(s[i], s[j]) != g.op(s[j], s[i])) return false;
    return true;
}

// True iff the derived subgroup is abelian.
inline bool is_metabelian(const Group& g) {
    return set_is_abelian(g, derived_subgroup(g));
}

struct Homomorphism {
    std::vector<elem> image;   // indexed by source element
};

inline bool is_homomorphism(const Group& src, const Group& dst, const Homomorphism& h) {
    if (h.image.size() != static_cast<size_t>(src.order)) return false;
    for (elem a = 0; a < src.order; ++a)
        for (elem b = 0; b < src.order; ++b)
            if (h.image[src.op(a, b)] != dst.op(h.image[a], h.image[b])) return false;
    return true;
}

struct Quotient {
    Group group;               // G/N with coset representatives as labels
    Homomorphism projection;   // G -> G/N
    std::vector<elem> reps;    // quotient index -> smallest coset member in G
};

// G/N for a normal subgroup N; rejects non-normal N. Cosets are indexed in
// order of their smallest member, which keeps the identity coset at index 0.
inline Quotient quotient(const Group& g, const ElementSet& n) {
    if (!is_subgroup(g, n)) throw SpecError("quotient: N is not a subgroup");
    if (!is_normal(g, n)) throw SpecError("quotient: N is not normal");
    std::vector<elem> coset_of(g.order, -1);
    std::vector<elem> reps;
    for (elem x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        const elem c = static_cast<elem>(reps.size());
        for (elem h : n) coset_of[g.op(x, h)] = c;
        reps.push_back(x);
    }
    const int32_t q = static_cast<int32_t>(reps.size());
    Quotient out;
    out.reps = reps;
    out.group.order = q;
    out.group.name = g.name + "/N" + std::to_string(n.size());
    out.group.mul.resize(static_cast<size_t>(q) * q);
    for (elem a = 0; a < q; ++a)
        for (elem b = 0; b < q; ++b)
            out.group.mul[static_cast<size_t>(a) * q + b] = coset_of[g.op(reps[a], reps[b])];
    detail::fill_inverses(out.group);
    out.group.labels.resize(q);
    for (elem a = 0; a < q; ++a) out.group.labels[a] = g.label(reps[a]) + "N";
    out.projection.image.assign(coset_of.begin(), coset_of.end());
    for (elem s : g.generators) {
        const elem img = coset_of[s];
        if (img != out.group.identity &&
            std::find(out.group.generators.begin(), out.group.generators.end(), img) ==
                out.group.generators.end())
            out.group.generators.push_back(img);
    }
    return out;
}

struct SubgroupView {
    Group group;                    // the subgroup as a standalone group
    std::vector<elem> to_parent;    // local index -> parent index
    std::vector<elem> from_parent;  // parent index -> local index or -1
};

// Restrict a subgroup to its own Group value (labels inherited from the
// parent, generators found greedily).
inline SubgroupView subgroup_to_group(const Group& g, const ElementSet& s,
                                      const std::string& name) {
    if (!is_subgroup(g, s)) throw SpecError("subgroup_to_group: set is not a subgroup");
    SubgroupView v;
    v.to_parent.assign(s.begin(), s.end());
    v.from_parent.assign(g.order, -1);
    for (size_t i = 0; i < s.size(); ++i) v.from_parent[s[i]] = static_cast<elem>(i);
    const int32_t n = static_cast<int32_t>(s.size());
    v.group.order = n;
    v.group.name = name;
    v.group.mul.resize(static_cast<size_t>(n) * n);
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            v.group.mul[static_cast<size_t>(a) * n + b] =
                v.from_parent[g.op(v.to_parent[a], v.to_parent[b])];
    v.group.identity = v.from_parent[g.identity];
    v.group.inv.resize(n);
    for (elem a = 0; a < n; ++a) v.group.inv[a] = v.from_parent[g.inv[v.to_parent[a]]];
    v.group.labels.resize(n);
    for (elem a = 0; a < n; ++a) v.group.labels[a] = g.label(v.to_parent[a]);
    // Greedy generating sequence: extend while the closure is proper.
    ElementSet closure = {v.group.identity};
    for (elem x = 0; x < n && static_cast<int32_t>(closure.size()) < n; ++x) {
        if (set_contains(closure, x)) continue;
        v.group.generators.push_back(x);
        closure = subgroup_generated(v.group, v.group.generators);
    }
    return v;
}

} // namespace twc
