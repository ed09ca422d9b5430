// Derivations of a cyclic group into an abelian group it acts on, written
// multiplicatively: d(h1 h2) = d(h1) * d(h2)^{h1}. A derivation of Z_n = <t>
// is determined by a = d(t) via d(t^k) = a * psi(a) * ... * psi^{k-1}(a),
// and such a map wraps consistently iff the full sum over k = n vanishes.
//
// For an extension G of abelian A by Z_n = <t bar>, each derivation d yields
// the automorphism phi_d(g) = g * d(g bar) fixing A pointwise; the identity's
// twisted class of phi_d is exactly the derivation's image set.
//
// The omega/theta layer works p-locally (p odd): omega(A, k) is the p^k-torsion
// subgroup, theta(a) = a^-1 * psi(a), and theta must respect the torsion
// filtration for the extension to satisfy the subgroup condition.
#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "twc/automorphism.hpp"
#include "twc/group.hpp"
#include "twc/report.hpp"
#include "twc/series.hpp"
#include "twc/subgroup.hpp"
#include "twc/twisted.hpp"

namespace twc {

struct CyclicAction {
    Group a;                                // abelian coefficient group
    long long n = 1;                        // order of the acting cyclic group
    std::vector<std::vector<elem>> psi_pow; // psi_pow[k] = psi^k as a table, k in [0, n]

    const std::vector<elem>& psi() const { return psi_pow[1]; }
    elem apply(long long k, elem x) const { return psi_pow[static_cast<size_t>(k)][x]; }
    // (id + psi + ... + psi^{k-1}) a, multiplicatively.
    elem partial_sum(long long k, elem x) const {
        elem acc = a.identity;
        for (long long i = 0; i < k; ++i) acc = a.op(acc, apply(i, x));
        return acc;
    }
};

inline CyclicAction make_cyclic_action(Group a, long long n, const std::vector<elem>& psi) {
    if (n < 1) throw SpecError("cyclic action order must be >= 1");
    if (!a.is_abelian()) throw SpecError("cyclic action requires an abelian coefficient group");
    if (!is_automorphism_table(a, psi))
        throw SpecError("ill-defined action: psi is not an automorphism");
    CyclicAction act;
    act.n = n;
    act.psi_pow.resize(static_cast<size_t>(n) + 1);
    act.psi_pow[0].resize(a.order);
    std::iota(act.psi_pow[0].begin(), act.psi_pow[0].end(), 0);
    for (long long k = 1; k <= n; ++k) {
        act.psi_pow[k].resize(a.order);
        for (elem x = 0; x < a.order; ++x) act.psi_pow[k][x] = psi[act.psi_pow[k - 1][x]];
    }
    if (act.psi_pow[n] != act.psi_pow[0])
        throw SpecError("ill-defined action: psi^n is not the identity");
    act.a = std::move(a);
    return act;
}

// Does a = d(t) extend to a derivation of the whole cyclic group? The wrap
// condition is (id + psi + ... + psi^{n-1}) a = e.
inline bool is_extendable(const CyclicAction& act, elem a) {
    return act.partial_sum(act.n, a) == act.a.identity;
}

struct Derivation {
    elem generator_value = 0;     // a = d(t)
    std::vector<elem> values;     // values[k] = d(t^k), k in [0, n)
    bool principal = false;       // a lies in the image of (id - psi)

    ElementSet image(const Group& a_group) const {
        ElementSet s(values.begin(), values.end());
        canonicalize(s);
        (void)a_group;
        return s;
    }
};

inline Derivation derivation_from_value(const CyclicAction& act, elem a) {
    if (!is_extendable(act, a))
        throw SpecError("value does not satisfy the extendability criterion");
    Derivation d;
    d.generator_value = a;
    d.values.resize(static_cast<size_t>(act.n));
    for (long long k = 0; k < act.n; ++k) d.values[k] = act.partial_sum(k, a);
    return d;
}

// All derivations, with principal ones flagged. Principal values are
// (id - psi) b = b * psi(b)^-1 over b in A.
inline std::vector<Derivation> enumerate_derivations(const CyclicAction& act) {
    ElementSet principal_values;
    for (elem b = 0; b < act.a.order; ++b)
        principal_values.push_back(act.a.op(b, act.a.inv[act.psi()[b]]));
    canonicalize(principal_values);
    std::vector<Derivation> out;
    for (elem a = 0; a < act.a.order; ++a) {
        if (!is_extendable(act, a)) continue;
        Derivation d = derivation_from_value(act, a);
        d.principal = set_contains(principal_values, a);
        out.push_back(std::move(d));
    }
    return out;
}

// Wiring of a concrete group as an extension of a normal abelian subgroup by
// a cyclic quotient generated by the chosen coset representative t.
struct ExtensionDecomposition {
    SubgroupView a_view;               // A as a standalone group, with index maps
    CyclicAction action;               // psi = conjugation by t, restricted to A
    elem t = 0;
    std::vector<int> coset_exponent;   // g -> k with g bar = (t bar)^k
};

inline ExtensionDecomposition decompose_abelian_by_cyclic(const Group& g,
                                                          const ElementSet& a_set,
                                                          elem t) {
    if (!is_subgroup(g, a_set)) throw SpecError("decomposition: A is not a subgroup");
    if (!is_normal(g, a_set)) throw SpecError("decomposition: A is not normal");
    if (!set_is_abelian(g, a_set)) throw SpecError("decomposition: A is not abelian");
    ExtensionDecomposition d;
    d.a_view = subgroup_to_group(g, a_set, g.name + ".A");
    d.t = t;
    const Quotient q = quotient(g, a_set);
    const long long n = q.group.order;
    const elem tbar = q.projection.image[t];
    if (q.group.element_order(tbar) != n)
        throw SpecError("decomposition: t does not generate a cyclic quotient");
    // Discrete log table over powers of t bar.
    std::vector<int> dlog(n, -1);
    elem cur = q.group.identity;
    for (long long k = 0; k < n; ++k) {
        dlog[cur] = static_cast<int>(k);
        cur = q.group.op(cur, tbar);
    }
    d.coset_exponent.resize(g.order);
    for (elem x = 0; x < g.order; ++x) d.coset_exponent[x] = dlog[q.projection.image[x]];
    // psi(a) = a^t = t^-1 a t, expressed in A's local indices.
    std::vector<elem> psi(d.a_view.group.order);
    for (elem local = 0; local < d.a_view.group.order; ++local) {
        const elem img = g.conj(d.a_view.to_parent[local], t);
        const elem li = d.a_view.from_parent[img];
        if (li < 0) throw SpecError("decomposition: conjugation by t leaves A");
        psi[local] = li;
    }
    d.action = make_cyclic_action(d.a_view.group, n, psi);
    return d;
}

// phi_d(g) = g * d(g bar); multiplicative because conjugation by g restricted
// to A depends only on g bar, and it is validated pairwise before returning.
inline Automorphism gaschutz_automorphism(const Group& g, const ExtensionDecomposition& dec,
                                          const Derivation& d) {
    Automorphism phi;
    phi.image.resize(g.order);
    for (elem x = 0; x < g.order; ++x) {
        const elem val_local = d.values[static_cast<size_t>(dec.coset_exponent[x])];
        phi.image[x] = g.op(x, dec.a_view.to_parent[val_local]);
    }
    std::vector<char> seen(g.order, 0);
    for (elem x : phi.image) {
        if (seen[x]) throw EngineError("derivation map is not a bijection");
        seen[x] = 1;
    }
    for (elem a = 0; a < g.order; ++a)
        for (elem s : g.generators)
            if (phi.image[g.op(a, s)] != g.op(phi.image[a], phi.image[s]))
                throw EngineError("derivation map is not multiplicative");
    return phi;
}

// Smallest prime factor; |A| must be a power of it for the p-local layer.
inline long long p_group_prime(const Group& a) {
    long long n = a.order;
    if (n < 2) throw SpecError("torsion layers need a nontrivial p-group");
    long long p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n;
    while (n % p == 0) n /= p;
    if (n != 1) throw SpecError("torsion layers need a p-group, got order " +
                                std::to_string(a.order));
    return p;
}

// omega(A, k) = elements killed by p^k; a subgroup since A is abelian.
inline ElementSet omega(const Group& a, int k) {
    if (!a.is_abelian()) throw SpecError("omega is defined for abelian p-groups");
    const long long p = p_group_prime(a);
    long long q = 1;
    for (int i = 0; i < k && q < a.order; ++i) q *= p;
    ElementSet out;
    for (elem x = 0; x < a.order; ++x)
        if (a.pow(x, q) == a.identity) out.push_back(x);
    return out;
}

struct ThetaReport {
    std::vector<elem> theta;          // theta(a) = a^-1 * psi(a)
    long long p = 0;
    int n_exponent = 0;               // n = p^{n_exponent}
    bool homomorphism_ok = false;
    bool image_in_omega_n = false;
    bool filtration_ok = false;       // theta(omega_k) inside omega_{k-1}
    std::optional<elem> witness;      // element violating a verdict
};

// theta for an action of Z_{p^n} on an abelian p-group, p odd. Even p is a
// hypothesis violation and is rejected, not computed.
inline ThetaReport theta_map(const CyclicAction& act) {
    ThetaReport r;
    r.p = p_group_prime(act.a);
    if (r.p == 2)
        throw SpecError("torsion-shift analysis requires odd p; p = 2 violates its hypotheses");
    long long n = act.n;
    while (n > 1) {
        if (n % r.p != 0)
            throw SpecError("acting order must be a power of the coefficient prime");
        n /= r.p;
        ++r.n_exponent;
    }
    r.theta.resize(act.a.order);
    for (elem x = 0; x < act.a.order; ++x) r.theta[x] = act.a.op(act.a.inv[x], act.psi()[x]);
    r.homomorphism_ok = true;
    for (elem x = 0; x < act.a.order && r.homomorphism_ok; ++x)
        for (elem y = 0; y < act.a.order; ++y)
            if (r.theta[act.a.op(x, y)] != act.a.op(r.theta[x], r.theta[y])) {
                r.homomorphism_ok = false;
                r.witness = x;
                break;
            }
    const Mask in_omega_n(act.a.order, omega(act.a, r.n_exponent));
    r.image_in_omega_n = true;
    for (elem x = 0; x < act.a.order; ++x)
        if (!in_omega_n(r.theta[x])) {
            r.image_in_omega_n = false;
            r.witness = x;
            break;
        }
    r.filtration_ok = true;
    for (int k = 1; k <= r.n_exponent && r.filtration_ok; ++k) {
        const ElementSet om_k = omega(act.a, k);
        const Mask lower(act.a.order, omega(act.a, k - 1));
        for (elem x : om_k)
            if (!lower(r.theta[x])) {
                r.filtration_ok = false;
                r.witness = x;
                break;
            }
    }
    return r;
}

// Image of theta^r applied to all of A.
inline ElementSet theta_iterated_image(const ThetaReport& th, const Group& a, int r) {
    ElementSet cur = a.all_elements();
    for (int i = 0; i < r; ++i) {
        ElementSet next;
        next.reserve(cur.size());
        for (elem x : cur) next.push_back(th.theta[x]);
        canonicalize(next);
        cur = std::move(next);
    }
    return cur;
}

} // namespace twc
