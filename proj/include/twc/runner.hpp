// Batch runner behind the CLI: resolve group selectors or spec files, run the
// requested checks in dependency order (axioms first), and render the reports
// as text or a structured JSON document.
//
// Structured output is deterministic for a fixed config: timing lives only in
// the text rendering, never in JSON, and all sampling derives from the seed
// plus fixed stream names.
#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "twc/automorphism.hpp"
#include "twc/catalog.hpp"
#include "twc/derivations.hpp"
#include "twc/extension_checks.hpp"
#include "twc/group.hpp"
#include "twc/lemmas.hpp"
#include "twc/report.hpp"
#include "twc/series.hpp"
#include "twc/series_checks.hpp"
#include "twc/specs.hpp"
#include "twc/subgroup.hpp"
#include "twc/twisted.hpp"
#include "twc/words.hpp"

namespace twc {

inline constexpr const char* kToolVersion = "twc 1.0.0";
inline constexpr int kAutOrderCap = 512;

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "axioms",       "condition-inner", "condition-all", "reidemeister",
        "lemmas",       "wfin",            "width-bounds",  "corex",
        "gpn-goldens",  "lincom"};
    return names;
}

struct RunConfig {
    std::vector<std::string> groups;      // selectors or spec file paths; empty = catalog
    std::vector<std::string> checks;      // empty = all known checks
    std::optional<std::string> word;      // extra word-value report per group
    uint64_t seed = 0;
    long long budget = 100000000;         // word-evaluation budget; Cayley cap = sqrt
    bool json = false;
};

struct RunOutcome {
    nlohmann::ordered_json document;
    std::string text;
    int exit_code = 0;
};

// --- spec file ingestion -----------------------------------------------

namespace detail {

inline std::vector<long long> json_int_list(const nlohmann::json& v, const std::string& what) {
    if (!v.is_array()) throw SpecError(what + " must be an array of integers");
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw SpecError(what + " must be an array of integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

inline void reject_unknown_fields(const nlohmann::json& obj,
                                  const std::vector<std::string>& allowed,
                                  const std::string& where) {
    for (const auto& [key, val] : obj.items()) {
        (void)val;
        bool ok = false;
        for (const std::string& a : allowed) ok = ok || key == a;
        if (!ok) throw SpecError("unknown field '" + key + "' in " + where);
    }
}

} // namespace detail

inline GroupSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SpecError("malformed spec file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw SpecError("spec file '" + path + "' must hold one object");
    detail::reject_unknown_fields(doc, {"kind", "params", "generators"}, "spec file");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw SpecError("spec file needs a string 'kind'");
    if (!doc.contains("params") || !doc["params"].is_object())
        throw SpecError("spec file needs an object 'params'");
    const std::string kind = doc["kind"].get<std::string>();
    const nlohmann::json& p = doc["params"];

    GroupSpec s;
    s.kind = kind;
    s.selector = path;  // spec files are identified (and deduplicated) by path
    if (kind == "cyclic") {
        detail::reject_unknown_fields(p, {"m"}, "cyclic params");
        s.m = p.at("m").get<long long>();
    } else if (kind == "abelian") {
        detail::reject_unknown_fields(p, {"orders"}, "abelian params");
        s.orders = detail::json_int_list(p.at("orders"), "orders");
    } else if (kind == "direct") {
        detail::reject_unknown_fields(p, {"factors"}, "direct params");
        if (!p.at("factors").is_array()) throw SpecError("factors must be an array");
        for (const auto& f : p.at("factors")) {
            if (!f.is_string()) throw SpecError("factors must be selector strings");
            s.factors.push_back(parse_selector(f.get<std::string>()));
        }
        if (s.factors.size() < 2) throw SpecError("direct product needs at least 2 factors");
    } else if (kind == "semidirect") {
        detail::reject_unknown_fields(p, {"orders", "n", "psi"}, "semidirect params");
        s.orders = detail::json_int_list(p.at("orders"), "orders");
        s.n = p.at("n").get<long long>();
        for (long long v : detail::json_int_list(p.at("psi"), "psi"))
            s.psi.push_back(static_cast<elem>(v));
    } else if (kind == "gpn") {
        detail::reject_unknown_fields(p, {"p", "n"}, "gpn params");
        s.gpn.p = p.at("p").get<long long>();
        s.gpn.n = p.at("n").get<long long>();
    } else if (kind == "affine") {
        detail::reject_unknown_fields(p, {"m", "h"}, "affine params");
        s.affine.m = p.at("m").get<long long>();
        if (p.contains("h") && !(p.at("h").is_string() && p.at("h") == "units"))
            s.affine.h = detail::json_int_list(p.at("h"), "h");
    } else if (kind == "symmetric" || kind == "alternating" || kind == "dihedral") {
        detail::reject_unknown_fields(p, {"degree"}, kind + " params");
        s.m = p.at("degree").get<long long>();
    } else {
        throw SpecError("unknown group kind '" + kind + "' in spec file");
    }
    if (doc.contains("generators"))
        for (long long v : detail::json_int_list(doc["generators"], "generators"))
            s.generators.push_back(static_cast<elem>(v));
    return s;
}

inline GroupSpec resolve_group(const std::string& token) {
    if (std::ifstream probe(token); probe.good()) return parse_spec_file(token);
    if (token.size() > 5 && token.substr(token.size() - 5) == ".json")
        throw SpecError("cannot open spec file '" + token + "'");
    return parse_selector(token);
}

// --- per-group cached state --------------------------------------------

struct GroupRecord {
    GroupSpec spec;
    Group g;
    std::optional<InnerClasses> inner_classes_;
    std::optional<ConditionVerdict> inner_verdict_;
    std::optional<SeriesReport> series_;
    bool all_attempted_ = false;
    std::optional<ConditionVerdict> all_verdict_;  // empty after attempt = over cap
    std::string all_skip_note_;

    const InnerClasses& classes() {
        if (!inner_classes_) inner_classes_ = compute_inner_classes(g);
        return *inner_classes_;
    }
    const ConditionVerdict& inner() {
        if (!inner_verdict_) inner_verdict_ = check_condition(g, AutFamily::inner);
        return *inner_verdict_;
    }
    const SeriesReport& lcs() {
        if (!series_) series_ = lower_central_series(g);
        return *series_;
    }
    const std::optional<ConditionVerdict>& condition_all() {
        if (!all_attempted_) {
            all_attempted_ = true;
            try {
                all_verdict_ = check_condition(g, AutFamily::all, kAutOrderCap);
            } catch (const BudgetError& e) {
                all_skip_note_ = e.what();
            }
        }
        return all_verdict_;
    }
};

namespace detail {

inline void add_class_witnesses(const Group& g, CheckReport& rep, const ElementSet& cls,
                                const std::string& tag, size_t cap = 8) {
    size_t shown = 0;
    for (elem x : cls) {
        if (shown++ >= cap) break;
        rep.witness(x, tag + " " + g.label(x));
    }
}

inline std::string describe_map(const Group& g, const Automorphism& phi) {
    std::string out;
    for (elem s : g.generators) {
        if (!out.empty()) out += ", ";
        out += g.label(s) + " -> " + g.label(phi(s));
    }
    if (out.empty()) out = "identity map";
    return out;
}

} // namespace detail

// --- individual checks -------------------------------------------------

inline CheckReport run_axioms(GroupRecord& rec, uint64_t seed) {
    const AxiomReport ar = verify_group_axioms(rec.g, seed);
    CheckReport rep;
    rep.check = "axioms";
    rep.verdict = ar.ok ? Verdict::pass : Verdict::fail;
    for (const std::string& n : ar.notes) rep.note(n);
    return rep;
}

inline CheckReport run_condition_inner(GroupRecord& rec) {
    const ConditionVerdict& v = rec.inner();
    CheckReport rep;
    rep.check = "condition-inner";
    rep.note(std::to_string(v.automorphisms_checked) + " distinct inner maps");
    if (v.holds) {
        rep.note("identity class is a subgroup for every inner map");
        return rep;
    }
    rep.verdict = Verdict::fail;
    if (v.witness_phi && v.witness_phi->inner_witness) {
        const elem w = *v.witness_phi->inner_witness;
        rep.note("class of the identity under conjugation by " + rec.g.label(w) +
                 " has " + std::to_string(v.witness_class.size()) +
                 " elements and is not a subgroup");
        rep.witness(w, "conjugating element " + rec.g.label(w));
    }
    detail::add_class_witnesses(rec.g, rep, v.witness_class, "class member");
    return rep;
}

inline CheckReport run_condition_all(GroupRecord& rec) {
    const std::optional<ConditionVerdict>& v = rec.condition_all();
    CheckReport rep;
    rep.check = "condition-all";
    if (!v) {
        rep.verdict = Verdict::skipped;
        rep.note("budget: " + rec.all_skip_note_);
        return rep;
    }
    rep.note(std::to_string(v->automorphisms_checked) + " automorphisms enumerated");
    if (v->holds) {
        rep.note("identity class is a subgroup for every automorphism");
        return rep;
    }
    rep.verdict = Verdict::fail;
    if (v->witness_phi)
        rep.note("failing automorphism: " + detail::describe_map(rec.g, *v->witness_phi));
    detail::add_class_witnesses(rec.g, rep, v->witness_class, "class member");
    return rep;
}

// Partition sanity for twisted classes: the identity map reproduces ordinary
// conjugacy, classes always partition the group, and inner twists preserve
// the class count.
inline CheckReport run_reidemeister(GroupRecord& rec, uint64_t seed) {
    const Group& g = rec.g;
    CheckReport rep;
    rep.check = "reidemeister";
    const auto id_partition = reidemeister_partition(g, identity_automorphism(g));
    const size_t conj_count = conjugacy_classes(g).size();
    auto partition_sums = [&](const std::vector<TwistedClass>& cs) {
        size_t total = 0;
        for (const TwistedClass& c : cs) total += c.members.size();
        return total == static_cast<size_t>(g.order);
    };
    if (!partition_sums(id_partition)) {
        rep.verdict = Verdict::fail;
        rep.note("identity-twist classes do not partition the group");
        return rep;
    }
    if (id_partition.size() != conj_count) {
        rep.verdict = Verdict::fail;
        rep.note("identity twist gives " + std::to_string(id_partition.size()) +
                 " classes, ordinary conjugacy gives " + std::to_string(conj_count));
        return rep;
    }
    rep.note("R(id) = " + std::to_string(id_partition.size()) +
             " = ordinary conjugacy class count");
    Rng rng(seed, "reidemeister:" + g.name);
    const InnerClasses& classes = rec.classes();
    const int samples = std::min(8, classes.map_count());
    for (int i = 0; i < samples; ++i) {
        const elem w = classes.witness[rng.below(classes.map_count())];
        const auto part = reidemeister_partition(g, inner_automorphism(g, w));
        if (!partition_sums(part)) {
            rep.verdict = Verdict::fail;
            rep.note("classes under conjugation by " + g.label(w) +
                     " do not partition the group");
            rep.witness(w, g.label(w));
            return rep;
        }
        if (part.size() != id_partition.size()) {
            rep.verdict = Verdict::fail;
            rep.note("inner twist by " + g.label(w) + " changed the class count to " +
                     std::to_string(part.size()));
            rep.witness(w, g.label(w));
            return rep;
        }
    }
    rep.note("partition and count stable across " + std::to_string(samples) +
             " sampled inner twists");
    return rep;
}

inline std::pair<ElementSet, elem> corex_hint(const GroupSpec& spec, const Group& g) {
    if (spec.kind == "gpn" || spec.kind == "semidirect" || spec.kind == "dihedral") {
        long long asize = 1;
        if (spec.kind == "gpn") asize = spec.gpn.a_order();
        else if (spec.kind == "dihedral") asize = spec.m;
        else
            for (long long c : spec.orders) asize *= c;
        ElementSet a(static_cast<size_t>(asize));
        std::iota(a.begin(), a.end(), 0);
        return {a, static_cast<elem>(asize % g.order)};
    }
    if (spec.kind == "affine") {
        const std::vector<long long> hs = spec.affine.units();
        const int nh = static_cast<int>(hs.size());
        ElementSet a;
        for (long long f = 0; f < spec.affine.m; ++f)
            a.push_back(static_cast<elem>(f * nh));
        elem t = g.identity;
        for (int hi = 0; hi < nh; ++hi)
            if (detail::multiplicative_order(hs[hi], spec.affine.m) ==
                static_cast<long long>(nh)) {
                t = static_cast<elem>(hi);
                break;
            }
        return {a, t};
    }
    return {g.all_elements(), g.identity};
}

inline CheckReport run_corex(GroupRecord& rec) {
    const auto [a_set, t] = corex_hint(rec.spec, rec.g);
    const std::optional<ConditionVerdict>* pre = nullptr;
    if (rec.g.order % 2 == 1 && rec.g.order <= kAutOrderCap) {
        rec.condition_all();
        pre = &rec.all_verdict_;
    } else if (rec.g.order % 2 == 1) {
        static const std::optional<ConditionVerdict> none;
        pre = &none;
    }
    return verify_corex(rec.g, a_set, t, kAutOrderCap, pre);
}

inline std::vector<CheckReport> run_gpn_goldens(GroupRecord& rec) {
    if (rec.spec.kind != "gpn") {
        CheckReport rep;
        rep.check = "gpn-goldens";
        rep.verdict = Verdict::not_applicable;
        rep.note("group is not from the gpn family");
        return {rep};
    }
    return {verify_gpn_unit_order(rec.spec.gpn), verify_nux(rec.g, rec.spec.gpn),
            verify_7pr(rec.g, rec.spec.gpn), verify_gpn_powers(rec.g, rec.spec.gpn),
            verify_gpn_33_specials(rec.g, rec.spec.gpn)};
}

inline CheckReport run_lincom(GroupRecord& rec) {
    if (rec.spec.kind != "affine") {
        CheckReport rep;
        rep.check = "lincom";
        rep.verdict = Verdict::not_applicable;
        rep.note("group is not from the affine family");
        return rep;
    }
    return verify_lincom(rec.g, rec.spec.affine);
}

inline CheckReport run_word_report(GroupRecord& rec, const std::string& text,
                                   long long budget) {
    CheckReport rep;
    rep.check = "word";
    const WordExpr w = parse_word(text);
    rep.note("word " + word_to_string(w) + " in " +
             std::to_string(word_variable_count(w)) + " variables");
    EvalBudget eb(budget);
    const WidthResult wr = verbal_width(rec.g, w, eb);
    rep.note("value set size " + std::to_string(wr.values.size()));
    rep.note("verbal subgroup order " + std::to_string(wr.subgroup.size()));
    rep.note("width " + std::to_string(wr.width));
    return rep;
}

// --- orchestration -----------------------------------------------------

struct GroupRunResult {
    std::string selector;
    std::vector<CheckReport> reports;
    std::optional<long long> order;
    std::optional<std::string> condition_summary;   // holds | fails | skipped
    std::optional<int> nilpotency_class;            // present if computed
};

inline std::vector<CheckReport> execute_check(const std::string& name, GroupRecord& rec,
                                              const RunConfig& cfg) {
    auto guard = [&](auto&& fn) -> std::vector<CheckReport> {
        try {
            return fn();
        } catch (const BudgetError& e) {
            CheckReport r;
            r.check = name;
            r.verdict = Verdict::skipped;
            r.note(std::string("budget: ") + e.what());
            return {r};
        } catch (const SpecError& e) {
            CheckReport r;
            r.check = name;
            r.verdict = Verdict::fail;
            r.note(std::string("spec error: ") + e.what());
            return {r};
        }
    };
    return guard([&]() -> std::vector<CheckReport> {
        if (name == "axioms") return {run_axioms(rec, cfg.seed)};
        if (name == "condition-inner") return {run_condition_inner(rec)};
        if (name == "condition-all") return {run_condition_all(rec)};
        if (name == "reidemeister") return {run_reidemeister(rec, cfg.seed)};
        if (name == "lemmas") return {verify_lemmas(rec.g, rec.classes(), rec.inner(), cfg.seed)};
        if (name == "wfin")
            return {verify_lower_central_factorization(rec.g, rec.classes(), rec.inner(),
                                                       rec.lcs(), cfg.seed)};
        if (name == "width-bounds") {
            EvalBudget eb(cfg.budget);
            return {verify_width_bounds(rec.g, rec.inner(), rec.lcs(), eb)};
        }
        if (name == "corex") return {run_corex(rec)};
        if (name == "gpn-goldens") return run_gpn_goldens(rec);
        if (name == "lincom") return {run_lincom(rec)};
        if (name == "word") return {run_word_report(rec, *cfg.word, cfg.budget)};
        throw SpecError("unknown check '" + name + "'");
    });
}

inline GroupRunResult run_group(const GroupSpec& spec, const RunConfig& cfg,
                                const std::vector<std::string>& checks,
                                long long cayley_cap) {
    GroupRunResult result;
    result.selector = spec.selector;
    std::vector<std::string> sequence = checks;
    if (cfg.word) sequence.push_back("word");

    const long long order = spec_order(spec);
    result.order = order;
    if (order > cayley_cap) {
        for (const std::string& name : sequence) {
            CheckReport r;
            r.check = name;
            r.verdict = Verdict::skipped;
            r.note("group order " + std::to_string(order) + " exceeds the Cayley cap " +
                   std::to_string(cayley_cap) + " derived from budget " +
                   std::to_string(cfg.budget));
            result.reports.push_back(std::move(r));
        }
        result.condition_summary = "skipped";
        return result;
    }

    GroupRecord rec{spec, build_group(spec), {}, {}, {}, false, {}, {}};
    // Execute with axioms first regardless of position, report in list order.
    std::map<std::string, std::vector<CheckReport>> done;
    auto ensure = [&](const std::string& name) {
        if (done.count(name)) return;
        const auto start = std::chrono::steady_clock::now();
        std::vector<CheckReport> reps = execute_check(name, rec, cfg);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        for (CheckReport& r : reps) r.elapsed_ms = static_cast<long long>(ms);
        done[name] = std::move(reps);
    };
    for (const std::string& name : sequence)
        if (name == "axioms") ensure(name);
    for (const std::string& name : sequence) ensure(name);
    for (const std::string& name : sequence)
        for (CheckReport& r : done[name]) result.reports.push_back(r);

    if (rec.inner_verdict_) {
        result.condition_summary = rec.inner_verdict_->holds ? "holds" : "fails";
        if (rec.inner_verdict_->holds) rec.lcs();
    }
    if (rec.series_ && rec.series_->nilpotency_class)
        result.nilpotency_class = *rec.series_->nilpotency_class;
    return result;
}

inline std::vector<std::string> effective_checks(const RunConfig& cfg) {
    std::vector<std::string> requested = cfg.checks.empty() ? known_checks() : cfg.checks;
    std::vector<std::string> out;
    for (const std::string& name : requested) {
        bool known = false;
        for (const std::string& k : known_checks()) known = known || k == name;
        if (!known) throw SpecError("unknown check '" + name + "'");
        bool dup = false;
        for (const std::string& o : out) dup = dup || o == name;
        if (!dup) out.push_back(name);
    }
    return out;
}

inline RunOutcome run(const RunConfig& cfg) {
    RunOutcome out;
    const std::vector<std::string> checks = effective_checks(cfg);
    if (cfg.word) parse_word(*cfg.word);   // malformed words are config errors
    const long long cayley_cap =
        static_cast<long long>(std::floor(std::sqrt(static_cast<double>(
            std::max<long long>(cfg.budget, 0)))));

    // Resolve groups; entry errors are isolated but force exit code 2.
    std::vector<GroupSpec> specs;
    std::vector<std::pair<std::string, std::string>> resolve_errors;
    if (cfg.groups.empty()) {
        specs = default_catalog();
    } else {
        for (const std::string& token : cfg.groups) {
            try {
                GroupSpec s = resolve_group(token);
                bool dup = false;
                for (const GroupSpec& seen : specs) dup = dup || seen.selector == s.selector;
                if (!dup) specs.push_back(std::move(s));
            } catch (const SpecError& e) {
                resolve_errors.emplace_back(token, e.what());
            }
        }
    }

    std::vector<GroupRunResult> results;
    for (const GroupSpec& s : specs) {
        try {
            results.push_back(run_group(s, cfg, checks, cayley_cap));
        } catch (const SpecError& e) {
            // Build-time rejection (bad action table, bad generators, ...).
            resolve_errors.emplace_back(s.selector, e.what());
        }
    }

    bool any_fail = false;
    int n_pass = 0, n_fail = 0, n_na = 0, n_skip = 0;
    for (const GroupRunResult& r : results)
        for (const CheckReport& c : r.reports) {
            switch (c.verdict) {
                case Verdict::pass: ++n_pass; break;
                case Verdict::fail: ++n_fail; any_fail = true; break;
                case Verdict::not_applicable: ++n_na; break;
                case Verdict::skipped: ++n_skip; break;
            }
        }

    // Structured document: stable three-key schema, no timing.
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    nlohmann::ordered_json echo;
    {
        nlohmann::ordered_json gs = nlohmann::ordered_json::array();
        for (const GroupSpec& s : specs) gs.push_back(s.selector);
        echo["groups"] = std::move(gs);
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const std::string& c : checks) cs.push_back(c);
        echo["checks"] = std::move(cs);
        if (cfg.word) echo["word"] = *cfg.word;
        echo["seed"] = cfg.seed;
        echo["budget"] = cfg.budget;
        echo["output"] = cfg.json ? "json" : "text";
    }
    doc["config_echo"] = std::move(echo);
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& [token, msg] : resolve_errors) {
        nlohmann::ordered_json jr;
        jr["group"] = token;
        jr["check"] = "resolve";
        jr["verdict"] = "fail";
        jr["details"] = nlohmann::ordered_json::array({msg});
        jr["witnesses"] = nlohmann::ordered_json::array();
        reports.push_back(std::move(jr));
    }
    for (const GroupRunResult& r : results)
        for (const CheckReport& c : r.reports) {
            nlohmann::ordered_json jr;
            jr["group"] = r.selector;
            jr["check"] = c.check;
            jr["verdict"] = to_string(c.verdict);
            nlohmann::ordered_json details = nlohmann::ordered_json::array();
            for (const std::string& d : c.details) details.push_back(d);
            jr["details"] = std::move(details);
            nlohmann::ordered_json ws = nlohmann::ordered_json::array();
            for (const Witness& w : c.witnesses) {
                nlohmann::ordered_json jw;
                jw["index"] = w.index;
                jw["label"] = w.label;
                ws.push_back(std::move(jw));
            }
            jr["witnesses"] = std::move(ws);
            reports.push_back(std::move(jr));
        }
    doc["reports"] = std::move(reports);
    out.document = std::move(doc);

    // Text rendering with timing and the condition-vs-class summary.
    std::ostringstream text;
    for (const GroupRunResult& r : results) {
        text << "== " << r.selector;
        if (r.order) text << " (order " << *r.order << ")";
        text << "\n";
        for (const CheckReport& c : r.reports) {
            text << "  [" << to_string(c.verdict) << "] " << c.check << " ("
                 << c.elapsed_ms << " ms)\n";
            for (const std::string& d : c.details) text << "      - " << d << "\n";
            for (const Witness& w : c.witnesses)
                text << "      * witness #" << w.index << " " << w.label << "\n";
        }
    }
    for (const auto& [token, msg] : resolve_errors)
        text << "error: " << token << ": " << msg << "\n";
    if (results.size() > 1) {
        text << "summary (inner condition vs nilpotency class)\n";
        for (const GroupRunResult& r : results) {
            text << "  " << r.selector << ": condition "
                 << (r.condition_summary ? *r.condition_summary : "-") << ", class ";
            if (r.nilpotency_class) text << *r.nilpotency_class;
            else text << "-";
            text << "\n";
        }
    }
    text << n_pass << " pass, " << n_fail << " fail, " << n_na << " not-applicable, "
         << n_skip << " skipped\n";
    out.text = text.str();

    out.exit_code = !resolve_errors.empty() ? 2 : (any_fail ? 1 : 0);
    return out;
}

inline std::string list_catalog_text() {
    std::ostringstream os;
    for (const GroupSpec& s : default_catalog())
        os << s.selector << "  (order " << spec_order(s) << ")\n";
    return os.str();
}

} // namespace twc
