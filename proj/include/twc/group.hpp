// Finite groups as dense Cayley tables.
//
// Elements are indices 0..order-1; the identity is always index 0 for groups
// produced by the builders here. All structural algorithms elsewhere in the
// library work purely through this representation, so exactness reduces to
// integer table lookups. Builders: cyclic, abelian (product of cyclics),
// direct product, semidirect product A x| Z_n by an automorphism of A.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "twc/common.hpp"

namespace twc {

using elem = int32_t;

// Sorted, duplicate-free vector of element indices.
using ElementSet = std::vector<elem>;

inline void canonicalize(ElementSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool set_contains(const ElementSet& s, elem x) {
    return std::binary_search(s.begin(), s.end(), x);
}

// Membership mask for O(1) lookups in inner loops.
struct Mask {
    std::vector<char> bits;
    Mask(int order, const ElementSet& s) : bits(order, 0) {
        for (elem x : s) bits[static_cast<size_t>(x)] = 1;
    }
    bool operator()(elem x) const { return bits[static_cast<size_t>(x)] != 0; }
};

struct Group {
    int32_t order = 0;
    elem identity = 0;
    std::vector<elem> mul;              // order*order, row-major: mul[a*order+b] = a*b
    std::vector<elem> inv;
    std::vector<elem> generators;       // declared generating sequence
    std::vector<std::string> labels;    // one printable label per element
    std::string name;

    elem op(elem a, elem b) const {
        return mul[static_cast<size_t>(a) * order + b];
    }
    // Conjugation x^y = y^-1 x y.
    elem conj(elem x, elem y) const { return op(op(inv[y], x), y); }
    // Commutator [x,y] = x^-1 y^-1 x y.
    elem comm(elem x, elem y) const {
        return op(op(inv[x], inv[y]), op(x, y));
    }
    elem pow(elem x, long long e) const {
        long long n = e >= 0 ? e : -e;
        elem base = e >= 0 ? x : inv[x];
        elem acc = identity;
        while (n > 0) {
            if (n & 1) acc = op(acc, base);
            base = op(base, base);
            n >>= 1;
        }
        return acc;
    }
    int element_order(elem x) const {
        elem a = x;
        int k = 1;
        while (a != identity) {
            a = op(a, x);
            ++k;
        }
        return k;
    }
    std::string label(elem x) const {
        if (x >= 0 && static_cast<size_t>(x) < labels.size()) return labels[x];
        return std::to_string(x);
    }
    ElementSet all_elements() const {
        ElementSet s(order);
        std::iota(s.begin(), s.end(), 0);
        return s;
    }
    bool is_abelian() const {
        for (elem a = 0; a < order; ++a)
            for (elem b = a + 1; b < order; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }
};

namespace detail {

// Fill inv[] from the table; throws if some element has no inverse.
inline void fill_inverses(Group& g) {
    g.inv.assign(g.order, -1);
    for (elem a = 0; a < g.order; ++a) {
        for (elem b = 0; b < g.order; ++b) {
            if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0) throw SpecError("element without inverse: " + g.label(a));
    }
}

} // namespace detail

// Z_m with generator 1 (empty generating sequence for m = 1).
inline Group build_cyclic(long long m) {
    if (m < 1) throw SpecError("cyclic order must be >= 1");
    if (m > (1 << 20)) throw SpecError("cyclic order too large");
    Group g;
    g.order = static_cast<int32_t>(m);
    g.name = "cyclic:" + std::to_string(m);
    g.mul.resize(static_cast<size_t>(m) * m);
    for (elem a = 0; a < m; ++a)
        for (elem b = 0; b < m; ++b)
            g.mul[static_cast<size_t>(a) * m + b] = static_cast<elem>((a + b) % m);
    g.inv.resize(m);
    for (elem a = 0; a < m; ++a) g.inv[a] = static_cast<elem>((m - a) % m);
    g.labels.resize(m);
    for (elem a = 0; a < m; ++a) g.labels[a] = std::to_string(a);
    if (m > 1) g.generators = {1};
    return g;
}

// Z_m1 x Z_m2 x ... with one declared generator per nontrivial component.
// Element index enumerates tuples with the last component fastest.
inline Group build_abelian(const std::vector<long long>& orders) {
    if (orders.empty()) throw SpecError("abelian spec needs at least one component");
    long long n = 1;
    for (long long m : orders) {
        if (m < 1) throw SpecError("component order must be >= 1");
        n *= m;
        if (n > (1 << 20)) throw SpecError("abelian group too large");
    }
    const int r = static_cast<int>(orders.size());
    std::vector<long long> stride(r, 1);
    for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * orders[i + 1];

    auto digits = [&](elem x) {
        std::vector<long long> d(r);
        long long v = x;
        for (int i = 0; i < r; ++i) {
            d[i] = v / stride[i];
            v %= stride[i];
        }
        return d;
    };

    Group g;
    g.order = static_cast<int32_t>(n);
    g.name = "abelian:";
    for (int i = 0; i < r; ++i)
        g.name += (i ? "," : "") + std::to_string(orders[i]);
    g.mul.resize(static_cast<size_t>(n) * n);
    for (elem a = 0; a < n; ++a) {
        const auto da = digits(a);
        for (elem b = 0; b < n; ++b) {
            const auto db = digits(b);
            long long idx = 0;
            for (int i = 0; i < r; ++i) idx += ((da[i] + db[i]) % orders[i]) * stride[i];
            g.mul[static_cast<size_t>(a) * n + b] = static_cast<elem>(idx);
        }
    }
    g.inv.resize(n);
    for (elem a = 0; a < n; ++a) {
        const auto da = digits(a);
        long long idx = 0;
        for (int i = 0; i < r; ++i) idx += ((orders[i] - da[i]) % orders[i]) * stride[i];
        g.inv[a] = static_cast<elem>(idx);
    }
    g.labels.resize(n);
    for (elem a = 0; a < n; ++a) {
        const auto da = digits(a);
        if (r == 1) {
            g.labels[a] = std::to_string(da[0]);
        } else {
            std::string s = "(";
            for (int i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(da[i]);
            g.labels[a] = s + ")";
        }
    }
    for (int i = 0; i < r; ++i)
        if (orders[i] > 1) g.generators.push_back(static_cast<elem>(stride[i]));
    return g;
}

// G1 x G2 with index (a,b) -> a*|G2| + b, so G x trivial reproduces G's table.
inline Group direct_product(const Group& g1, const Group& g2) {
    const long long n = static_cast<long long>(g1.order) * g2.order;
    if (n > (1 << 20)) throw SpecError("direct product too large");
    Group g;
    g.order = static_cast<int32_t>(n);
    g.name = "direct(" + g1.name + "," + g2.name + ")";
    g.mul.resize(static_cast<size_t>(n) * n);
    auto idx = [&](elem a, elem b) { return static_cast<elem>(a * g2.order + b); };
    for (elem a1 = 0; a1 < g1.order; ++a1)
        for (elem a2 = 0; a2 < g2.order; ++a2)
            for (elem b1 = 0; b1 < g1.order; ++b1)
                for (elem b2 = 0; b2 < g2.order; ++b2)
                    g.mul[static_cast<size_t>(idx(a1, a2)) * n + idx(b1, b2)] =
                        idx(g1.op(a1, b1), g2.op(a2, b2));
    g.inv.resize(n);
    for (elem a1 = 0; a1 < g1.order; ++a1)
        for (elem a2 = 0; a2 < g2.order; ++a2)
            g.inv[idx(a1, a2)] = idx(g1.inv[a1], g2.inv[a2]);
    g.labels.resize(n);
    for (elem a1 = 0; a1 < g1.order; ++a1)
        for (elem a2 = 0; a2 < g2.order; ++a2)
            g.labels[idx(a1, a2)] = "(" + g1.label(a1) + "," + g2.label(a2) + ")";
    for (elem x : g1.generators) g.generators.push_back(idx(x, g2.identity));
    for (elem x : g2.generators) g.generators.push_back(idx(g1.identity, x));
    g.identity = idx(g1.identity, g2.identity);
    return g;
}

// True iff image defines an automorphism of g. Full multiplicativity is
// checked pairwise, so this accepts arbitrary candidate maps.
inline bool is_automorphism_table(const Group& g, const std::vector<elem>& image) {
    if (static_cast<int32_t>(image.size()) != g.order) return false;
    std::vector<char> seen(g.order, 0);
    for (elem x : image) {
        if (x < 0 || x >= g.order || seen[x]) return false;
        seen[x] = 1;
    }
    for (elem a = 0; a < g.order; ++a)
        for (elem b = 0; b < g.order; ++b)
            if (image[g.op(a, b)] != g.op(image[a], image[b])) return false;
    return true;
}

// A x| Z_n for an automorphism psi of A with psi^n = id. Elements are pairs
// (a, k) indexed k*|A| + a, so A itself occupies indices 0..|A|-1. Product:
// (a, k)(b, l) = (a * psi^k(b), k + l mod n); in particular for y = (e,1),
// x = (a0,0): y x y^-1 = (psi(a0), 0). Declared generators: one (a_i, 0)
// per declared generator of A, then y = (e, 1).
inline Group semidirect_product(const Group& a, long long n, const std::vector<elem>& psi) {
    if (n < 1) throw SpecError("semidirect cyclic order must be >= 1");
    if (!is_automorphism_table(a, psi))
        throw SpecError("ill-defined action: psi is not an automorphism of the base");
    // psi powers 0..n-1, and the wrap psi^n must be the identity map.
    std::vector<std::vector<elem>> pw(static_cast<size_t>(n) + 1);
    pw[0].resize(a.order);
    std::iota(pw[0].begin(), pw[0].end(), 0);
    for (long long k = 1; k <= n; ++k) {
        pw[k].resize(a.order);
        for (elem x = 0; x < a.order; ++x) pw[k][x] = psi[pw[k - 1][x]];
    }
    if (pw[n] != pw[0])
        throw SpecError("ill-defined action: psi^n is not the identity");

    const long long order = static_cast<long long>(a.order) * n;
    if (order > (1 << 20)) throw SpecError("semidirect product too large");
    Group g;
    g.order = static_cast<int32_t>(order);
    g.name = "semidirect(" + a.name + "," + std::to_string(n) + ")";
    auto idx = [&](elem av, long long k) { return static_cast<elem>(k * a.order + av); };
    g.mul.resize(static_cast<size_t>(order) * order);
    for (long long k = 0; k < n; ++k)
        for (elem av = 0; av < a.order; ++av) {
            const elem lhs = idx(av, k);
            for (long long l = 0; l < n; ++l)
                for (elem bv = 0; bv < a.order; ++bv)
                    g.mul[static_cast<size_t>(lhs) * order + idx(bv, l)] =
                        idx(a.op(av, pw[k][bv]), (k + l) % n);
        }
    g.inv.resize(order);
    for (long long k = 0; k < n; ++k)
        for (elem av = 0; av < a.order; ++av)
            g.inv[idx(av, k)] = idx(pw[(n - k) % n][a.inv[av]], (n - k) % n);
    g.labels.resize(order);
    for (long long k = 0; k < n; ++k)
        for (elem av = 0; av < a.order; ++av)
            g.labels[idx(av, k)] = "(" + a.label(av) + "," + std::to_string(k) + ")";
    for (elem x : a.generators) g.generators.push_back(idx(x, 0));
    if (n > 1) g.generators.push_back(idx(a.identity, 1));
    return g;
}

struct AxiomReport {
    bool ok = true;
    bool associativity_exhaustive = false;
    std::vector<std::string> notes;
};

// Identity/inverse laws and generator closure are always exhaustive.
// Associativity is exhaustive up to the given threshold; beyond it the
// builders' by-construction guarantee is backed by seeded random triples.
inline AxiomReport verify_group_axioms(const Group& g, uint64_t seed,
                                       int exhaustive_threshold = 512,
                                       int sample_triples = 10000) {
    AxiomReport r;
    auto fail = [&](std::string why) {
        r.ok = false;
        r.notes.push_back(std::move(why));
    };
    if (g.order <= 0 || g.mul.size() != static_cast<size_t>(g.order) * g.order ||
        g.inv.size() != static_cast<size_t>(g.order)) {
        fail("malformed table");
        return r;
    }
    for (elem a = 0; a < g.order; ++a) {
        if (g.op(g.identity, a) != a || g.op(a, g.identity) != a)
            fail("identity law fails at " + g.label(a));
        if (g.op(a, g.inv[a]) != g.identity || g.op(g.inv[a], a) != g.identity)
            fail("inverse law fails at " + g.label(a));
        if (!r.ok) return r;
    }
    if (g.order <= exhaustive_threshold) {
        r.associativity_exhaustive = true;
        for (elem a = 0; a < g.order && r.ok; ++a)
            for (elem b = 0; b < g.order && r.ok; ++b)
                for (elem c = 0; c < g.order; ++c)
                    if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
                        fail("associativity fails at (" + g.label(a) + "," +
                             g.label(b) + "," + g.label(c) + ")");
                        break;
                    }
        r.notes.push_back("associativity: exhaustive over " +
                          std::to_string(g.order) + "^3 triples");
    } else {
        Rng rng(seed, "axioms:" + g.name);
        for (int i = 0; i < sample_triples; ++i) {
            const elem a = static_cast<elem>(rng.below(g.order));
            const elem b = static_cast<elem>(rng.below(g.order));
            const elem c = static_cast<elem>(rng.below(g.order));
            if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
                fail("associativity fails at sampled (" + g.label(a) + "," +
                     g.label(b) + "," + g.label(c) + ")");
                break;
            }
        }
        r.notes.push_back("associativity: by construction, spot-checked on " +
                          std::to_string(sample_triples) + " seeded triples");
    }
    // Generator closure: the declared sequence must generate everything.
    {
        std::vector<char> seen(g.order, 0);
        std::vector<elem> frontier = {g.identity};
        seen[g.identity] = 1;
        size_t count = 1;
        while (!frontier.empty()) {
            std::vector<elem> next;
            for (elem x : frontier)
                for (elem s : g.generators) {
                    const elem y = g.op(x, s);
                    if (!seen[y]) {
                        seen[y] = 1;
                        ++count;
                        next.push_back(y);
                    }
                }
            frontier.swap(next);
        }
        if (count != static_cast<size_t>(g.order))
            fail("declared generators generate only " + std::to_string(count) +
                 " of " + std::to_string(g.order) + " elements");
    }
    return r;
}

} // namespace twc
