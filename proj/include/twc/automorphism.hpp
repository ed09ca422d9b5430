// Automorphisms as explicit permutations of element indices.
//
// The enumerator assigns images to the declared generators, filtered by
// element order and conjugacy class size, extends each candidate assignment
// along a BFS spanning tree of the Cayley graph, and then validates
// multiplicativity against every (element, generator) pair. That validation
// is a complete proof: phi(a*s) = phi(a)*phi(s) for all a and all generators
// s forces phi(ab) = phi(a)phi(b) for all pairs, by induction on the length
// of b as a positive generator word.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twc/group.hpp"
#include "twc/subgroup.hpp"

namespace twc {

struct Automorphism {
    std::vector<elem> image;
    // Some z with phi = conjugation by z, when the map is known to be inner.
    std::optional<elem> inner_witness;

    elem operator()(elem x) const { return image[static_cast<size_t>(x)]; }
    bool operator==(const Automorphism& o) const { return image == o.image; }
};

inline Automorphism identity_automorphism(const Group& g) {
    Automorphism a;
    a.image.resize(g.order);
    std::iota(a.image.begin(), a.image.end(), 0);
    a.inner_witness = g.identity;
    return a;
}

// phi_z : x -> x^z = z^-1 x z.
inline Automorphism inner_automorphism(const Group& g, elem z) {
    Automorphism a;
    a.image.resize(g.order);
    for (elem x = 0; x < g.order; ++x) a.image[x] = g.conj(x, z);
    a.inner_witness = z;
    return a;
}

// (f * h)(x) = f(h(x)).
inline Automorphism compose(const Automorphism& f, const Automorphism& h) {
    Automorphism a;
    a.image.resize(h.image.size());
    for (size_t x = 0; x < h.image.size(); ++x) a.image[x] = f.image[h.image[x]];
    return a;
}

inline Automorphism inverse_of(const Automorphism& f) {
    Automorphism a;
    a.image.resize(f.image.size());
    for (size_t x = 0; x < f.image.size(); ++x) a.image[f.image[x]] = static_cast<elem>(x);
    return a;
}

inline ElementSet apply_to_set(const Automorphism& f, const ElementSet& s) {
    ElementSet out;
    out.reserve(s.size());
    for (elem x : s) out.push_back(f.image[x]);
    canonicalize(out);
    return out;
}

inline std::vector<int> element_orders(const Group& g) {
    std::vector<int> ord(g.order);
    for (elem x = 0; x < g.order; ++x) ord[x] = g.element_order(x);
    return ord;
}

// Extend generator images to a full map and validate it; nullopt if the
// candidate does not define an automorphism.
inline std::optional<Automorphism> automorphism_from_generator_images(
    const Group& g, const std::vector<elem>& gen_images) {
    if (gen_images.size() != g.generators.size()) return std::nullopt;
    std::vector<elem> image(g.order, -1);
    image[g.identity] = g.identity;
    std::vector<elem> frontier = {g.identity};
    size_t assigned = 1;
    while (!frontier.empty()) {
        std::vector<elem> next;
        for (elem x : frontier)
            for (size_t i = 0; i < g.generators.size(); ++i) {
                const elem y = g.op(x, g.generators[i]);
                if (image[y] < 0) {
                    image[y] = g.op(image[x], gen_images[i]);
                    ++assigned;
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    if (assigned != static_cast<size_t>(g.order)) return std::nullopt;
    std::vector<char> seen(g.order, 0);
    for (elem x = 0; x < g.order; ++x) {
        if (seen[image[x]]) return std::nullopt;
        seen[image[x]] = 1;
    }
    // Full multiplicativity via the (element, generator) schema.
    for (elem a = 0; a < g.order; ++a)
        for (size_t i = 0; i < g.generators.size(); ++i)
            if (image[g.op(a, g.generators[i])] != g.op(image[a], gen_images[i]))
                return std::nullopt;
    Automorphism out;
    out.image = std::move(image);
    return out;
}

// All distinct inner automorphisms (one per coset of the center), each with
// its smallest conjugating witness, ordered by that witness.
inline std::vector<Automorphism> distinct_inner_automorphisms(const Group& g) {
    std::map<std::vector<elem>, elem> seen;
    for (elem z = 0; z < g.order; ++z) {
        Automorphism a = inner_automorphism(g, z);
        seen.emplace(std::move(a.image), z);   // keeps the smallest z
    }
    std::vector<Automorphism> out;
    out.reserve(seen.size());
    for (const auto& [image, z] : seen) {
        Automorphism a;
        a.image = image;
        a.inner_witness = z;
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end(), [](const Automorphism& x, const Automorphism& y) {
        return *x.inner_witness < *y.inner_witness;
    });
    return out;
}

// Full automorphism group by pruned generator-image search. order_cap bounds
// the group size (default 512 per the engine's configuration); search_cap
// bounds the number of candidate image tuples, to keep degenerate generator
// sequences (many generators, many same-invariant elements) from blowing up.
inline std::vector<Automorphism> enumerate_automorphisms(const Group& g,
                                                         int order_cap = 512,
                                                         long long search_cap = 5000000) {
    if (g.order > order_cap)
        throw BudgetError("automorphism enumeration cap exceeded: order " +
                          std::to_string(g.order) + " > " + std::to_string(order_cap));
    const std::vector<int> ord = element_orders(g);
    const std::vector<int> cls = conjugacy_class_sizes(g);
    std::vector<std::vector<elem>> cand(g.generators.size());
    long long tuples = 1;
    for (size_t i = 0; i < g.generators.size(); ++i) {
        const elem s = g.generators[i];
        for (elem x = 0; x < g.order; ++x)
            if (ord[x] == ord[s] && cls[x] == cls[s]) cand[i].push_back(x);
        tuples *= static_cast<long long>(cand[i].size());
        if (tuples > search_cap)
            throw BudgetError("automorphism search budget exceeded");
    }
    std::vector<Automorphism> found;
    std::vector<elem> pick(g.generators.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == pick.size()) {
            if (auto a = automorphism_from_generator_images(g, pick))
                found.push_back(std::move(*a));
            return;
        }
        for (elem x : cand[i]) {
            pick[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    // Tag the inner ones and fix a deterministic order.
    std::map<std::vector<elem>, elem> inner;
    for (elem z = 0; z < g.order; ++z)
        inner.emplace(inner_automorphism(g, z).image, z);
    for (Automorphism& a : found) {
        auto it = inner.find(a.image);
        if (it != inner.end()) a.inner_witness = it->second;
    }
    std::sort(found.begin(), found.end(), [](const Automorphism& x, const Automorphism& y) {
        return x.image < y.image;
    });
    return found;
}

} // namespace twc
