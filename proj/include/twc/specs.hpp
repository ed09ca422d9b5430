// Group specifications: one small record that says how to build a group,
// shared by the CLI selector grammar, spec files, and the default catalog.
//
// Selector grammar:
//   cyclic:M              abelian:A,B,...       gpn:P:N
//   affine:M:units        affine:M:h1,h2,...    dihedral:N
//   symmetric:D           alternating:D         direct:SEL+SEL[+SEL...]
// Spec files carry the same kinds plus "semidirect" (which needs a full
// action table and is impractical to inline in a selector).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twc/catalog.hpp"
#include "twc/group.hpp"
#include "twc/subgroup.hpp"

namespace twc {

struct GroupSpec {
    std::string kind;       // cyclic|abelian|direct|semidirect|gpn|affine|symmetric|alternating|dihedral
    std::string selector;   // canonical display name
    long long m = 0;        // cyclic order, permutation degree, dihedral index
    std::vector<long long> orders;  // abelian components; semidirect base components
    long long n = 0;                // semidirect acting order
    std::vector<elem> psi;          // semidirect action table on the base group
    GpnSpec gpn;
    AffineSpec affine;
    std::vector<GroupSpec> factors;     // direct product
    std::vector<elem> generators;       // optional override; empty = default
};

inline long long spec_order(const GroupSpec& s) {
    if (s.kind == "cyclic") return s.m;
    if (s.kind == "abelian") {
        long long o = 1;
        for (long long c : s.orders) o *= c;
        return o;
    }
    if (s.kind == "direct") {
        long long o = 1;
        for (const GroupSpec& f : s.factors) o *= spec_order(f);
        return o;
    }
    if (s.kind == "semidirect") {
        long long o = s.n;
        for (long long c : s.orders) o *= c;
        return o;
    }
    if (s.kind == "gpn") return s.gpn.group_order();
    if (s.kind == "affine") return s.affine.group_order();
    if (s.kind == "symmetric" || s.kind == "alternating") {
        long long f = 1;
        for (long long k = 2; k <= s.m; ++k) f *= k;
        return s.kind == "alternating" && s.m >= 2 ? f / 2 : f;
    }
    if (s.kind == "dihedral") return 2 * s.m;
    throw SpecError("unknown group kind '" + s.kind + "'");
}

inline Group build_group(const GroupSpec& s) {
    Group g;
    if (s.kind == "cyclic") {
        g = build_cyclic(s.m);
    } else if (s.kind == "abelian") {
        g = build_abelian(s.orders);
    } else if (s.kind == "direct") {
        if (s.factors.size() < 2) throw SpecError("direct product needs at least 2 factors");
        g = build_group(s.factors[0]);
        for (size_t i = 1; i < s.factors.size(); ++i)
            g = direct_product(g, build_group(s.factors[i]));
    } else if (s.kind == "semidirect") {
        g = semidirect_product(build_abelian(s.orders), s.n, s.psi);
    } else if (s.kind == "gpn") {
        g = build_gpn(s.gpn);
    } else if (s.kind == "affine") {
        g = build_affine(s.affine);
    } else if (s.kind == "symmetric") {
        g = build_symmetric(static_cast<int>(s.m));
    } else if (s.kind == "alternating") {
        g = build_alternating(static_cast<int>(s.m));
    } else if (s.kind == "dihedral") {
        g = build_dihedral(s.m);
    } else {
        throw SpecError("unknown group kind '" + s.kind + "'");
    }
    g.name = s.selector;
    if (!s.generators.empty()) {
        for (elem x : s.generators)
            if (x < 0 || x >= g.order)
                throw SpecError("declared generator index out of range");
        if (static_cast<int32_t>(subgroup_generated(g, s.generators).size()) != g.order)
            throw SpecError("declared generators do not generate the group");
        g.generators = s.generators;
    }
    return g;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

inline long long parse_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw SpecError("bad " + what + " '" + tok + "'");
    }
}

} // namespace detail

inline GroupSpec parse_selector(const std::string& sel) {
    GroupSpec s;
    s.selector = sel;
    const auto parts = detail::split(sel, ':');
    const std::string& kind = parts[0];
    auto need = [&](size_t n_parts) {
        if (parts.size() != n_parts)
            throw SpecError("unknown selector '" + sel + "'");
    };
    if (kind == "cyclic") {
        need(2);
        s.kind = kind;
        s.m = detail::parse_int(parts[1], "cyclic order");
        if (s.m < 1) throw SpecError("cyclic order must be >= 1");
    } else if (kind == "abelian") {
        need(2);
        s.kind = kind;
        for (const std::string& t : detail::split(parts[1], ',')) {
            const long long c = detail::parse_int(t, "abelian component");
            if (c < 1) throw SpecError("abelian component must be >= 1");
            s.orders.push_back(c);
        }
        if (s.orders.empty()) throw SpecError("abelian needs at least one component");
    } else if (kind == "gpn") {
        need(3);
        s.kind = kind;
        s.gpn.p = detail::parse_int(parts[1], "gpn prime");
        s.gpn.n = detail::parse_int(parts[2], "gpn exponent");
    } else if (kind == "affine") {
        need(3);
        s.kind = kind;
        s.affine.m = detail::parse_int(parts[1], "affine modulus");
        if (parts[2] != "units")
            for (const std::string& t : detail::split(parts[2], ','))
                s.affine.h.push_back(detail::parse_int(t, "affine unit"));
    } else if (kind == "symmetric" || kind == "alternating") {
        need(2);
        s.kind = kind;
        s.m = detail::parse_int(parts[1], "permutation degree");
        if (s.m < 0 || s.m > 7) throw SpecError("permutation degree out of range (0..7)");
    } else if (kind == "dihedral") {
        need(2);
        s.kind = kind;
        s.m = detail::parse_int(parts[1], "dihedral index");
        if (s.m < 1) throw SpecError("dihedral index must be >= 1");
    } else if (kind == "direct") {
        if (parts.size() < 2) throw SpecError("unknown selector '" + sel + "'");
        s.kind = kind;
        std::string rest = sel.substr(kind.size() + 1);
        for (const std::string& f : detail::split(rest, '+'))
            s.factors.push_back(parse_selector(f));
        if (s.factors.size() < 2)
            throw SpecError("direct product needs at least 2 factors");
    } else {
        throw SpecError("unknown selector '" + sel + "'");
    }
    return s;
}

namespace detail {

// Partitions of e in weakly decreasing order, used for abelian p-group types.
inline void partitions_of(int e, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(e - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// Every isomorphism type of abelian group of order 2..max_order, one spec
// each, named by its ascending component list.
inline std::vector<GroupSpec> abelian_types_up_to(long long max_order) {
    std::vector<GroupSpec> out;
    for (long long n = 2; n <= max_order; ++n) {
        std::vector<std::vector<long long>> combos = {{}};
        for (const auto& [p, e] : detail::factor_order(n)) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            detail::partitions_of(e, e, cur, parts);
            std::vector<std::vector<long long>> next;
            for (const auto& combo : combos)
                for (const auto& lambda : parts) {
                    std::vector<long long> c = combo;
                    for (int ex : lambda) c.push_back(detail::ipow(p, ex));
                    next.push_back(std::move(c));
                }
            combos = std::move(next);
        }
        for (auto& combo : combos) {
            std::sort(combo.begin(), combo.end());
            std::string name = "abelian:";
            for (size_t i = 0; i < combo.size(); ++i)
                name += (i ? "," : "") + std::to_string(combo[i]);
            out.push_back(parse_selector(name));
        }
    }
    return out;
}

// The batch-suite catalog: the gpn family, all small abelian types,
// symmetric/alternating/dihedral controls, and the affine analogues.
inline std::vector<GroupSpec> default_catalog() {
    std::vector<GroupSpec> out;
    for (const char* sel : {"gpn:3:3", "gpn:3:4", "gpn:5:3", "gpn:7:3"})
        out.push_back(parse_selector(sel));
    for (GroupSpec& s : abelian_types_up_to(64)) out.push_back(std::move(s));
    for (const char* sel : {"dihedral:4", "dihedral:5", "symmetric:3", "symmetric:4",
                            "alternating:4", "alternating:5"})
        out.push_back(parse_selector(sel));
    for (const char* sel : {"affine:7:units", "affine:9:units", "affine:25:units",
                            "affine:9:1,4,7"})
        out.push_back(parse_selector(sel));
    return out;
}

} // namespace twc
