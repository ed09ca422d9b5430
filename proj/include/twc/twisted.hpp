// Twisted conjugacy: x ~ y under an automorphism phi iff x = z^-1 y phi(z)
// for some z. Classes of the identity element are the central object: for an
// inner automorphism by g the identity's class is exactly the commutator
// sweep {[x, g] : x in G}, and the engine checks when such classes form
// subgroups.
//
// The alternative orbit form x = z y phi(z)^-1 induces the same classes
// (substitute z -> z^-1); a property test asserts that concretely.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twc/automorphism.hpp"
#include "twc/group.hpp"
#include "twc/subgroup.hpp"

namespace twc {

struct TwistedClass {
    elem base = 0;
    ElementSet members;
};

// Orbit of y under z -> z^-1 y phi(z), one O(|G|) sweep.
inline ElementSet twisted_class_set(const Group& g, const Automorphism& phi, elem y) {
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem z = 0; z < g.order; ++z) {
        const elem w = g.op(g.op(g.inv[z], y), phi(z));
        if (!seen[w]) {
            seen[w] = 1;
            out.push_back(w);
        }
    }
    canonicalize(out);
    return out;
}

// Same orbit in the other convention, z y phi(z)^-1; used only to verify the
// two conventions agree.
inline ElementSet twisted_class_set_alt(const Group& g, const Automorphism& phi, elem y) {
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem z = 0; z < g.order; ++z) {
        const elem w = g.op(g.op(z, y), g.inv[phi(z)]);
        if (!seen[w]) {
            seen[w] = 1;
            out.push_back(w);
        }
    }
    canonicalize(out);
    return out;
}

inline TwistedClass twisted_class(const Group& g, const Automorphism& phi, elem y) {
    return TwistedClass{y, twisted_class_set(g, phi, y)};
}

// Identity's class under the inner automorphism by g: {[x, g] : x in G}.
inline ElementSet e_class_inner(const Group& g, elem z) {
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem x = 0; x < g.order; ++x) {
        const elem c = g.comm(x, z);
        if (!seen[c]) {
            seen[c] = 1;
            out.push_back(c);
        }
    }
    canonicalize(out);
    return out;
}

// Identity's class twisted by g relative to a normal subgroup N:
// {[h, g] : h in N}.
inline ElementSet e_class_relative(const Group& g, elem z, const ElementSet& n) {
    if (!is_subgroup(g, n) || !is_normal(g, n))
        throw SpecError("relative class requires a normal subgroup");
    std::vector<char> seen(g.order, 0);
    ElementSet out;
    for (elem h : n) {
        const elem c = g.comm(h, z);
        if (!seen[c]) {
            seen[c] = 1;
            out.push_back(c);
        }
    }
    canonicalize(out);
    return out;
}

// All twisted conjugacy classes of phi; bases ascend, classes partition G.
inline std::vector<TwistedClass> reidemeister_partition(const Group& g,
                                                        const Automorphism& phi) {
    std::vector<char> done(g.order, 0);
    std::vector<TwistedClass> classes;
    for (elem y = 0; y < g.order; ++y) {
        if (done[y]) continue;
        TwistedClass c = twisted_class(g, phi, y);
        for (elem w : c.members) done[w] = 1;
        classes.push_back(std::move(c));
    }
    return classes;
}

inline int reidemeister_number(const Group& g, const Automorphism& phi) {
    return static_cast<int>(reidemeister_partition(g, phi).size());
}

// The identity's class under every distinct inner automorphism, shared across
// the cosets of the center (conjugation by g depends only on Zg).
struct InnerClasses {
    ElementSet center;
    std::vector<int> coset_of;          // element -> distinct-map id
    std::vector<elem> witness;          // map id -> smallest conjugating element
    std::vector<ElementSet> e_class;    // map id -> identity's class

    const ElementSet& of(elem g) const { return e_class[coset_of[g]]; }
    int map_count() const { return static_cast<int>(witness.size()); }
};

inline InnerClasses compute_inner_classes(const Group& g) {
    InnerClasses t;
    t.center = center(g);
    t.coset_of.assign(g.order, -1);
    for (elem x = 0; x < g.order; ++x) {
        if (t.coset_of[x] >= 0) continue;
        const int id = static_cast<int>(t.witness.size());
        for (elem z : t.center) t.coset_of[g.op(z, x)] = id;
        t.witness.push_back(x);
    }
    t.e_class.reserve(t.witness.size());
    for (elem w : t.witness) t.e_class.push_back(e_class_inner(g, w));
    return t;
}

enum class AutFamily { inner, all };

struct ConditionVerdict {
    bool holds = true;
    AutFamily family = AutFamily::inner;
    int automorphisms_checked = 0;
    std::optional<Automorphism> witness_phi;   // first failing automorphism
    ElementSet witness_class;                  // its non-subgroup identity class
};

// Does the identity's twisted class form a subgroup for every automorphism in
// the family? Inner mode sweeps the distinct inner maps; all mode enumerates
// the full automorphism group (BudgetError if the group is over the cap).
inline ConditionVerdict check_condition(const Group& g, AutFamily family,
                                        int aut_order_cap = 512) {
    ConditionVerdict v;
    v.family = family;
    if (family == AutFamily::inner) {
        const InnerClasses t = compute_inner_classes(g);
        v.automorphisms_checked = t.map_count();
        for (int id = 0; id < t.map_count(); ++id) {
            if (!is_subgroup(g, t.e_class[id])) {
                v.holds = false;
                v.witness_phi = inner_automorphism(g, t.witness[id]);
                v.witness_class = t.e_class[id];
                return v;
            }
        }
        return v;
    }
    const std::vector<Automorphism> auts = enumerate_automorphisms(g, aut_order_cap);
    v.automorphisms_checked = static_cast<int>(auts.size());
    for (const Automorphism& phi : auts) {
        const ElementSet cls = twisted_class_set(g, phi, g.identity);
        if (!is_subgroup(g, cls)) {
            v.holds = false;
            v.witness_phi = phi;
            v.witness_class = cls;
            return v;
        }
    }
    return v;
}

} // namespace twc
