// Shared result types for the verification checks: a four-valued verdict,
// element witnesses (index plus printable label), and the per-check report
// that every verify_* entry point returns.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twc {

enum class Verdict { pass, fail, not_applicable, skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not-applicable";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

// An element reference that survives serialization: dense index plus label.
struct Witness {
    int index = -1;
    std::string label;
};

struct CheckReport {
    std::string check;                  // check name, e.g. "condition-inner"
    Verdict verdict = Verdict::pass;
    std::vector<std::string> details;   // deterministic human-readable lines
    std::vector<Witness> witnesses;     // offending or illustrative elements
    double elapsed_ms = 0.0;            // wall clock; never serialized to JSON

    void note(std::string line) { details.push_back(std::move(line)); }
    void witness(int index, std::string label) {
        witnesses.push_back(Witness{index, std::move(label)});
    }
    bool passed() const { return verdict == Verdict::pass; }
};

} // namespace twc
