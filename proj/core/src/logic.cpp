// Copyright 2026 The dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc/logic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <unordered_map>

#include "dqc/error.hpp"

namespace dqc::logic {

// ---------------------------------------------------------------------------
// Terms

Term Term::atom(std::string name) { return Term{Kind::Atom, std::move(name), 0, {}}; }
Term Term::integer(std::int64_t n) { return Term{Kind::Int, {}, n, {}}; }
Term Term::var(std::string name) { return Term{Kind::Var, std::move(name), 0, {}}; }
Term Term::pair(Term a, Term b) { return Term{Kind::Pair, {}, 0, {std::move(a), std::move(b)}}; }

std::string Term::str() const {
    switch (kind) {
        case Kind::Atom:
        case Kind::Var:
            return text;
        case Kind::Int:
            return std::to_string(number);
        case Kind::Pair:
            return "(" + kids[0].str() + "," + kids[1].str() + ")";
    }
    return {};
}

std::string Goal::str() const {
    if (args.empty()) {
        return pred;
    }
    std::string out = pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        out += (i > 0 ? "," : "") + args[i].str();
    }
    return out + ")";
}

std::string Clause::str() const {
    auto out = head.str();
    for (std::size_t i = 0; i < body.size(); ++i) {
        out += (i == 0 ? " :- " : ", ") + body[i].str();
    }
    return out + ".";
}

std::string Answer::str() const {
    if (bindings.empty()) {
        return "true";
    }
    std::string out;
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        out += (i > 0 ? ", " : "") + bindings[i].first + " = " + bindings[i].second.str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Kind { Name, Var, Int, LParen, RParen, Comma, Dot, Neck, Query, End };
    Kind kind;
    std::string text;
    SourceLocation loc;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            SourceLocation loc{line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back({Token::Kind::End, "", loc});
                return out;
            }
            char c = src_[pos_];
            if (std::islower(static_cast<unsigned char>(c))) {
                out.push_back({Token::Kind::Name, ident(), loc});
            } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back({Token::Kind::Var, ident(), loc});
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                std::string text(1, c);
                advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    text += src_[pos_];
                    advance();
                }
                out.push_back({Token::Kind::Int, text, loc});
            } else if (c == ':' && peek(1) == '-') {
                advance(2);
                out.push_back({Token::Kind::Neck, ":-", loc});
            } else if (c == '?' && peek(1) == '-') {
                advance(2);
                out.push_back({Token::Kind::Query, "?-", loc});
            } else if (c == '(' || c == ')' || c == ',' || c == '.') {
                advance();
                auto kind = c == '(' ? Token::Kind::LParen
                            : c == ')' ? Token::Kind::RParen
                            : c == ',' ? Token::Kind::Comma
                                       : Token::Kind::Dot;
                out.push_back({kind, std::string(1, c), loc});
            } else {
                throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'").located(loc);
            }
        }
    }

   private:
    char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_++] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else if (c == '/' && peek(1) == '*') {
                advance(2);
                while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) {
                    advance();
                }
                advance(2);
            } else {
                return;
            }
        }
    }

    std::string ident() {
        std::string out;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            out += src_[pos_];
            advance();
        }
        return out;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
   public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

    Program program() {
        Program p;
        while (peek().kind != Token::Kind::End) {
            p.clauses.push_back(clause());
        }
        return p;
    }

    std::vector<Goal> query() {
        accept(Token::Kind::Query);
        std::vector<Goal> goals{goal()};
        while (accept(Token::Kind::Comma)) {
            goals.push_back(goal());
        }
        accept(Token::Kind::Dot);
        expect(Token::Kind::End, "end of query");
        return goals;
    }

   private:
    const Token &peek() const { return toks_[pos_]; }

    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token &expect(Token::Kind k, const std::string &what) {
        if (peek().kind != k) {
            auto got = peek().kind == Token::Kind::End ? std::string("end of input") : "'" + peek().text + "'";
            throw Error(ErrorKind::SyntaxError, "expected " + what + ", found " + got).located(peek().loc);
        }
        return toks_[pos_++];
    }

    Clause clause() {
        Clause c;
        c.line = peek().loc.line;
        c.head = goal();
        if (accept(Token::Kind::Neck)) {
            c.body.push_back(goal());
            while (accept(Token::Kind::Comma)) {
                c.body.push_back(goal());
            }
        }
        expect(Token::Kind::Dot, "'.' at end of clause");
        return c;
    }

    Goal goal() {
        Goal g;
        g.pred = expect(Token::Kind::Name, "a predicate name").text;
        if (accept(Token::Kind::LParen)) {
            g.args.push_back(term());
            while (accept(Token::Kind::Comma)) {
                g.args.push_back(term());
            }
            expect(Token::Kind::RParen, "')'");
        }
        return g;
    }

    // (t1, t2, ..., tn) nests to the right, as Prolog's comma operator does.
    Term term() {
        const auto &t = peek();
        switch (t.kind) {
            case Token::Kind::Name: {
                ++pos_;
                if (peek().kind == Token::Kind::LParen) {
                    throw Error(ErrorKind::SyntaxError, "compound term " + t.text + "(...) is not supported")
                        .located(t.loc);
                }
                return Term::atom(t.text);
            }
            case Token::Kind::Var:
                ++pos_;
                if (t.text == "_") {
                    return Term::var("_#" + std::to_string(anon_++));
                }
                return Term::var(t.text);
            case Token::Kind::Int: {
                ++pos_;
                std::int64_t n = 0;
                auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
                if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                    throw Error(ErrorKind::SyntaxError, "integer " + t.text + " is out of range").located(t.loc);
                }
                return Term::integer(n);
            }
            case Token::Kind::LParen: {
                ++pos_;
                std::vector<Term> parts{term()};
                while (accept(Token::Kind::Comma)) {
                    parts.push_back(term());
                }
                expect(Token::Kind::RParen, "')'");
                Term out = parts.back();
                for (auto i = parts.size() - 1; i-- > 0;) {
                    out = Term::pair(parts[i], out);
                }
                return out;
            }
            default:
                expect(Token::Kind::Name, "a term");
        }
        return Term::atom("");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int anon_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

std::vector<Goal> parse_query(std::string_view text) { return Parser(text).query(); }

// ---------------------------------------------------------------------------
// Resolution

namespace {

// Terms live in a growing arena of cells; variables are cells whose `ref`
// points at their binding (or -1). Bindings are undone through the trail.
class Machine {
   public:
    struct Cell {
        Term::Kind kind;
        std::int64_t value;  // atom id or integer
        int a;               // Var: binding; Pair: first
        int b;               // Pair: second
    };

    using VarMap = std::unordered_map<std::string, int>;

    int build(const Term &t, VarMap &vars) {
        switch (t.kind) {
            case Term::Kind::Atom:
                return push({Term::Kind::Atom, intern(t.text), -1, -1});
            case Term::Kind::Int:
                return push({Term::Kind::Int, t.number, -1, -1});
            case Term::Kind::Var: {
                auto it = vars.find(t.text);
                if (it != vars.end()) {
                    return it->second;
                }
                auto id = push({Term::Kind::Var, 0, -1, -1});
                vars.emplace(t.text, id);
                return id;
            }
            case Term::Kind::Pair: {
                auto a = build(t.kids[0], vars);
                auto b = build(t.kids[1], vars);
                return push({Term::Kind::Pair, 0, a, b});
            }
        }
        return -1;
    }

    int deref(int t) const {
        while (cells_[t].kind == Term::Kind::Var && cells_[t].a >= 0) {
            t = cells_[t].a;
        }
        return t;
    }

    bool unify(int x, int y) {
        x = deref(x);
        y = deref(y);
        if (x == y) {
            return true;
        }
        const auto &cx = cells_[x];
        const auto &cy = cells_[y];
        if (cx.kind == Term::Kind::Var) {
            bind(x, y);
            return true;
        }
        if (cy.kind == Term::Kind::Var) {
            bind(y, x);
            return true;
        }
        if (cx.kind != cy.kind) {
            return false;
        }
        if (cx.kind == Term::Kind::Pair) {
            int xa = cx.a, xb = cx.b, ya = cy.a, yb = cy.b;
            return unify(xa, ya) && unify(xb, yb);
        }
        return cx.value == cy.value;
    }

    std::size_t trail_mark() const { return trail_.size(); }
    std::size_t arena_mark() const { return cells_.size(); }

    void undo(std::size_t trail, std::size_t arena) {
        while (trail_.size() > trail) {
            cells_[trail_.back()].a = -1;
            trail_.pop_back();
        }
        cells_.resize(arena);
    }

    Term extract(int t, std::unordered_map<int, std::string> &fresh) const {
        t = deref(t);
        const auto &c = cells_[t];
        switch (c.kind) {
            case Term::Kind::Atom:
                return Term::atom(atoms_[static_cast<std::size_t>(c.value)]);
            case Term::Kind::Int:
                return Term::integer(c.value);
            case Term::Kind::Var: {
                auto it = fresh.find(t);
                if (it == fresh.end()) {
                    it = fresh.emplace(t, "_" + std::string(1, static_cast<char>('A' + fresh.size() % 26)) +
                                              (fresh.size() >= 26 ? std::to_string(fresh.size() / 26) : ""))
                             .first;
                }
                return Term::var(it->second);
            }
            case Term::Kind::Pair:
                return Term::pair(extract(c.a, fresh), extract(c.b, fresh));
        }
        return Term::atom("");
    }

   private:
    int push(Cell c) {
        cells_.push_back(c);
        return static_cast<int>(cells_.size() - 1);
    }

    void bind(int var, int target) {
        cells_[var].a = target;
        trail_.push_back(var);
    }

    std::int64_t intern(const std::string &name) {
        auto it = atom_ids_.find(name);
        if (it != atom_ids_.end()) {
            return it->second;
        }
        atoms_.push_back(name);
        auto id = static_cast<std::int64_t>(atoms_.size() - 1);
        atom_ids_.emplace(name, id);
        return id;
    }

    std::vector<Cell> cells_;
    std::vector<int> trail_;
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, std::int64_t> atom_ids_;
};

struct GoalNode {
    const Goal *goal;
    std::vector<int> args;
    std::shared_ptr<const GoalNode> next;
};
using GoalList = std::shared_ptr<const GoalNode>;

struct ChoicePoint {
    GoalList goals;
    std::size_t next_clause;
    std::size_t trail;
    std::size_t arena;
};

}  // namespace

AnswerStream solve(const Program &program, const std::vector<Goal> &query, const SolveOptions &options) {
    std::unordered_map<std::string, std::vector<std::size_t>> index;
    for (std::size_t i = 0; i < program.clauses.size(); ++i) {
        index[program.clauses[i].head.key()].push_back(i);
    }

    Machine m;
    Machine::VarMap query_vars;
    std::vector<std::string> names;
    // Record named variables in order of first appearance.
    auto note = [&](const auto &self, const Term &t) -> void {
        if (t.kind == Term::Kind::Var && t.text[0] != '_' &&
            std::find(names.begin(), names.end(), t.text) == names.end()) {
            names.push_back(t.text);
        }
        for (const auto &k : t.kids) {
            self(self, k);
        }
    };
    GoalList goals;
    for (const auto &g : query) {
        for (const auto &a : g.args) {
            note(note, a);
        }
    }
    for (auto it = query.rbegin(); it != query.rend(); ++it) {
        std::vector<int> args;
        for (const auto &a : it->args) {
            args.push_back(m.build(a, query_vars));
        }
        goals = std::make_shared<const GoalNode>(GoalNode{&*it, std::move(args), goals});
    }

    AnswerStream answers;
    std::uint64_t steps = 0;
    std::vector<ChoicePoint> stack{{goals, 0, m.trail_mark(), m.arena_mark()}};
    while (!stack.empty()) {
        auto &cp = stack.back();
        m.undo(cp.trail, cp.arena);
        if (!cp.goals) {
            Answer a;
            std::unordered_map<int, std::string> fresh;
            for (const auto &n : names) {
                a.bindings.emplace_back(n, m.extract(query_vars.at(n), fresh));
            }
            answers.push_back(std::move(a));
            stack.pop_back();
            continue;
        }
        const auto &goal = *cp.goals;
        auto found = index.find(goal.goal->key());
        if (found == index.end()) {
            fail(ErrorKind::UnknownPredicate, "unknown procedure " + goal.goal->key());
        }
        const auto &candidates = found->second;
        if (cp.next_clause >= candidates.size()) {
            stack.pop_back();
            continue;
        }
        const auto &clause = program.clauses[candidates[cp.next_clause++]];
        auto goals_rest = goal.next;
        Machine::VarMap vars;
        bool ok = true;
        for (std::size_t i = 0; i < clause.head.args.size() && ok; ++i) {
            ok = m.unify(m.build(clause.head.args[i], vars), goal.args[i]);
        }
        if (!ok) {
            continue;
        }
        if (++steps > options.max_steps) {
            fail(ErrorKind::DepthExceeded,
                 "gave up after " + std::to_string(options.max_steps) + " resolution steps");
        }
        GoalList next = goals_rest;
        for (auto it = clause.body.rbegin(); it != clause.body.rend(); ++it) {
            std::vector<int> args;
            for (const auto &a : it->args) {
                args.push_back(m.build(a, vars));
            }
            next = std::make_shared<const GoalNode>(GoalNode{&*it, std::move(args), next});
        }
        // `cp` may dangle once the stack grows.
        stack.push_back({next, 0, m.trail_mark(), m.arena_mark()});
    }
    return answers;
}

// ---------------------------------------------------------------------------
// Union modes

std::string_view union_mode_name(UnionMode mode) {
    switch (mode) {
        case UnionMode::Prolog:
            return "prolog";
        case UnionMode::Set:
            return "set";
        case UnionMode::Xor:
            return "xor";
    }
    return "";
}

std::optional<UnionMode> union_mode_from_name(std::string_view name) {
    for (auto m : {UnionMode::Prolog, UnionMode::Set, UnionMode::Xor}) {
        if (union_mode_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

AnswerStream apply_union_mode(const AnswerStream &answers, UnionMode mode) {
    if (mode == UnionMode::Prolog) {
        return answers;
    }
    std::vector<std::pair<Answer, std::size_t>> seen;
    for (const auto &a : answers) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto &p) { return p.first == a; });
        if (it == seen.end()) {
            seen.emplace_back(a, 1);
        } else {
            ++it->second;
        }
    }
    AnswerStream out;
    for (auto &[a, count] : seen) {
        if (mode == UnionMode::Set || count % 2 == 1) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::string format_answers(const AnswerStream &answers) {
    if (answers.empty()) {
        return "false.";
    }
    std::string out;
    for (std::size_t i = 0; i < answers.size(); ++i) {
        out += (i > 0 ? " ; " : "") + answers[i].str();
    }
    return out + ".";
}

}  // namespace dqc::logic
