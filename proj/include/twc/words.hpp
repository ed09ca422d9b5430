// Word expressions over variables x1..xN: commutator brackets, concatenation,
// and inverses. Surface syntax (used by the CLI --word flag):
//
//   expr   := unit+                       concatenation
//   unit   := atom | atom '^' ('-'? '1')  only exponents 1 and -1
//   atom   := 'x' digits | '[' expr ',' expr ']' | '(' expr ')'
//
// An outer commutator word is built from pairwise distinct variables using
// commutator brackets only (a single variable counts).
#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "twc/group.hpp"

namespace twc {

struct WordExpr {
    enum class Kind { var, comm, prod, inv };
    Kind kind = Kind::var;
    int var = 0;                      // 0-based variable index (surface x1 -> 0)
    std::vector<WordExpr> children;   // comm: 2, prod: >= 2, inv: 1

    static WordExpr make_var(int v) {
        WordExpr w;
        w.kind = Kind::var;
        w.var = v;
        return w;
    }
    static WordExpr make_comm(WordExpr a, WordExpr b) {
        WordExpr w;
        w.kind = Kind::comm;
        w.children.push_back(std::move(a));
        w.children.push_back(std::move(b));
        return w;
    }
    static WordExpr make_inv(WordExpr a) {
        WordExpr w;
        w.kind = Kind::inv;
        w.children.push_back(std::move(a));
        return w;
    }
    static WordExpr make_prod(std::vector<WordExpr> parts) {
        if (parts.size() == 1) return std::move(parts.front());
        WordExpr w;
        w.kind = Kind::prod;
        w.children = std::move(parts);
        return w;
    }
};

namespace detail {

struct WordParser {
    const std::string& s;
    size_t pos = 0;

    explicit WordParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw SpecError("word parse error at position " + std::to_string(pos) + ": " + why);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    WordExpr parse_expr() {
        std::vector<WordExpr> parts;
        while (true) {
            skip_ws();
            if (pos >= s.size() || s[pos] == ',' || s[pos] == ']' || s[pos] == ')') break;
            parts.push_back(parse_unit());
        }
        if (parts.empty()) fail("empty word");
        return WordExpr::make_prod(std::move(parts));
    }

    WordExpr parse_unit() {
        WordExpr a = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            bool neg = false;
            if (pos < s.size() && s[pos] == '-') {
                neg = true;
                ++pos;
            }
            if (pos >= s.size() || s[pos] != '1') fail("only exponents 1 and -1 are allowed");
            ++pos;
            if (neg) return WordExpr::make_inv(std::move(a));
        }
        return a;
    }

    WordExpr parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        const char c = s[pos];
        if (c == '[') {
            ++pos;
            WordExpr lhs = parse_expr();
            if (!eat(',')) fail("expected ',' in commutator");
            WordExpr rhs = parse_expr();
            if (!eat(']')) fail("expected ']'");
            return WordExpr::make_comm(std::move(lhs), std::move(rhs));
        }
        if (c == '(') {
            ++pos;
            WordExpr inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected variable index after 'x'");
            const long v = std::stol(s.substr(start, pos - start));
            if (v < 1 || v > 64) fail("variable index out of range (x1..x64)");
            return WordExpr::make_var(static_cast<int>(v - 1));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace detail

inline WordExpr parse_word(const std::string& text) {
    detail::WordParser p(text);
    WordExpr w = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

inline std::string word_to_string(const WordExpr& w) {
    switch (w.kind) {
        case WordExpr::Kind::var: return "x" + std::to_string(w.var + 1);
        case WordExpr::Kind::comm:
            return "[" + word_to_string(w.children[0]) + "," +
                   word_to_string(w.children[1]) + "]";
        case WordExpr::Kind::inv: {
            const WordExpr& c = w.children[0];
            const bool atom = c.kind == WordExpr::Kind::var || c.kind == WordExpr::Kind::comm;
            return atom ? word_to_string(c) + "^-1" : "(" + word_to_string(c) + ")^-1";
        }
        case WordExpr::Kind::prod: {
            std::string out;
            for (const WordExpr& c : w.children) {
                if (c.kind == WordExpr::Kind::prod) out += "(" + word_to_string(c) + ")";
                else out += word_to_string(c);
                out += " ";
            }
            out.pop_back();
            return out;
        }
    }
    return "?";
}

inline void collect_variables(const WordExpr& w, std::set<int>& out) {
    if (w.kind == WordExpr::Kind::var) out.insert(w.var);
    for (const WordExpr& c : w.children) collect_variables(c, out);
}

// Number of distinct variables; assignment vectors index variables densely by
// surface index, so this is max index + 1.
inline int word_variable_count(const WordExpr& w) {
    std::set<int> vars;
    collect_variables(w, vars);
    return vars.empty() ? 0 : *vars.rbegin() + 1;
}

inline bool is_outer_commutator(const WordExpr& w) {
    std::vector<int> leaves;
    bool shape_ok = true;
    auto walk = [&](auto&& self, const WordExpr& node) -> void {
        if (!shape_ok) return;
        if (node.kind == WordExpr::Kind::var) {
            leaves.push_back(node.var);
            return;
        }
        if (node.kind != WordExpr::Kind::comm) {
            shape_ok = false;
            return;
        }
        self(self, node.children[0]);
        self(self, node.children[1]);
    };
    walk(walk, w);
    if (!shape_ok) return false;
    std::set<int> distinct(leaves.begin(), leaves.end());
    return distinct.size() == leaves.size();
}

inline elem eval_word(const Group& g, const WordExpr& w, const std::vector<elem>& assign) {
    switch (w.kind) {
        case WordExpr::Kind::var:
            if (w.var >= static_cast<int>(assign.size()))
                throw SpecError("assignment does not cover variable x" +
                                std::to_string(w.var + 1));
            return assign[w.var];
        case WordExpr::Kind::comm:
            return g.comm(eval_word(g, w.children[0], assign),
                          eval_word(g, w.children[1], assign));
        case WordExpr::Kind::inv:
            return g.inv[eval_word(g, w.children[0], assign)];
        case WordExpr::Kind::prod: {
            elem acc = g.identity;
            for (const WordExpr& c : w.children) acc = g.op(acc, eval_word(g, c, assign));
            return acc;
        }
    }
    return g.identity;
}

// Left-normed lower central word: k = 1 gives x1, k >= 2 gives
// [[..[x1,x2],x3]..,xk].
inline WordExpr lower_central_word(int k) {
    if (k < 1) throw SpecError("lower central word index must be >= 1");
    WordExpr w = WordExpr::make_var(0);
    for (int i = 2; i <= k; ++i)
        w = WordExpr::make_comm(std::move(w), WordExpr::make_var(i - 1));
    return w;
}

} // namespace twc
