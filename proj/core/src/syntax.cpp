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

#include "dqc/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "dqc/derived.hpp"
#include "dqc/measurement.hpp"
#include "unify.hpp"

namespace dqc {

const Definition *SourceProgram::find(std::string_view name) const {
    for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
        if (it->name == name) {
            return &*it;
        }
    }
    return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Lexing

struct Tok {
    enum class Kind { Ident, Punct, End };
    Kind kind;
    std::string text;
    SourceLocation loc;

    bool is(std::string_view s) const { return kind != Kind::End && text == s; }
};

constexpr std::string_view kPuncts[] = {"<->", ">>>", "<+>", "(+)", "(x)", "{", "}", "(", ")", "[",
                                        "]",   ",",   ";",   "=",   "@",   "+", "*"};

std::vector<Tok> lex(std::string_view src) {
    std::vector<Tok> out;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (src[pos++] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (true) {
        while (pos < src.size()) {
            if (std::isspace(static_cast<unsigned char>(src[pos]))) {
                advance(1);
            } else if (src.substr(pos, 2) == "--") {
                while (pos < src.size() && src[pos] != '\n') {
                    advance(1);
                }
            } else {
                break;
            }
        }
        SourceLocation loc{line, col};
        if (pos >= src.size()) {
            out.push_back({Tok::Kind::End, "", loc});
            return out;
        }
        char c = src[pos];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                advance(1);
            }
            out.push_back({Tok::Kind::Ident, std::string(src.substr(start, pos - start)), loc});
            continue;
        }
        bool matched = false;
        for (auto p : kPuncts) {
            if (src.substr(pos, p.size()) == p) {
                advance(p.size());
                out.push_back({Tok::Kind::Punct, std::string(p), loc});
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", loc);
        }
    }
}

const std::vector<std::string_view> kItemKeywords = {"type", "iso", "set", "basis", "def", "main"};

const std::vector<std::string_view> kReserved = {
    "type",  "iso",   "set",   "basis",   "def",     "main",  "on",      "measure", "arr",  "second",
    "first", "curry", "uncurry", "trace", "adjointR", "strength", "state", "s2r", "costate", "dot",
    "outer", "eta",   "eps",   "inv",     "bool",    "S",     "L",       "R",       "T",    "F",
    "x",     "_",     "0",     "1"};

bool is_reserved(std::string_view name) {
    return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end() || iso_from_name(name).has_value();
}

// ---------------------------------------------------------------------------
// Untyped set and value syntax, typed once the whole expression is known.

struct SetAst;

struct ValAst {
    enum class Kind { Unit, Left, Right, Pair, True, False, Set };
    Kind kind;
    std::vector<ValAst> kids;
    std::shared_ptr<SetAst> set;
};

struct SetAst {
    enum class Kind { Literal, Ref, Xor };
    Kind kind;
    SourceLocation loc;
    std::vector<ValAst> elems;          // Literal
    std::optional<BaseType> annotation; // Literal
    std::optional<XorSet> ref;          // Ref
    std::vector<SetAst> parts;          // Xor
};

detail::Ty type_value(detail::Unifier &u, const ValAst &v);

detail::Ty type_set(detail::Unifier &u, const SetAst &s) {
    switch (s.kind) {
        case SetAst::Kind::Literal: {
            auto t = s.annotation ? u.from(*s.annotation) : u.fresh();
            for (const auto &e : s.elems) {
                u.unify(t, type_value(u, e), "set literal");
            }
            return t;
        }
        case SetAst::Kind::Ref:
            return u.from(s.ref->elem_type());
        case SetAst::Kind::Xor: {
            auto t = type_set(u, s.parts[0]);
            for (std::size_t i = 1; i < s.parts.size(); ++i) {
                u.unify(t, type_set(u, s.parts[i]), "<+>");
            }
            return t;
        }
    }
    return u.fresh();
}

detail::Ty type_value(detail::Unifier &u, const ValAst &v) {
    switch (v.kind) {
        case ValAst::Kind::Unit:
            return u.one();
        case ValAst::Kind::Left:
            return u.sum(type_value(u, v.kids[0]), u.fresh());
        case ValAst::Kind::Right:
            return u.sum(u.fresh(), type_value(u, v.kids[0]));
        case ValAst::Kind::Pair:
            return u.prod(type_value(u, v.kids[0]), type_value(u, v.kids[1]));
        case ValAst::Kind::True:
        case ValAst::Kind::False:
            return u.boolean();
        case ValAst::Kind::Set:
            return u.set(type_set(u, *v.set));
    }
    return u.fresh();
}

XorSet build_set(const SetAst &s, const BaseType &elem);

PiValue build_value(const ValAst &v, const BaseType &t) {
    switch (v.kind) {
        case ValAst::Kind::Unit:
            return PiValue::unit();
        case ValAst::Kind::Left:
            return PiValue::left(build_value(v.kids[0], t.left()));
        case ValAst::Kind::Right:
            return PiValue::right(build_value(v.kids[0], t.right()));
        case ValAst::Kind::Pair:
            return PiValue::pair(build_value(v.kids[0], t.left()), build_value(v.kids[1], t.right()));
        case ValAst::Kind::True:
            return kBT;
        case ValAst::Kind::False:
            return kBF;
        case ValAst::Kind::Set:
            return PiValue::set(build_set(*v.set, t.element()));
    }
    fail(ErrorKind::Internal, "unknown value form");
}

XorSet build_set(const SetAst &s, const BaseType &elem) {
    switch (s.kind) {
        case SetAst::Kind::Literal: {
            std::vector<PiValue> out;
            for (const auto &e : s.elems) {
                out.push_back(build_value(e, elem));
            }
            return XorSet::of(elem, std::move(out));
        }
        case SetAst::Kind::Ref:
            return *s.ref;
        case SetAst::Kind::Xor: {
            auto acc = build_set(s.parts[0], elem);
            for (std::size_t i = 1; i < s.parts.size(); ++i) {
                acc = xor_union(acc, build_set(s.parts[i], elem));
            }
            return acc;
        }
    }
    fail(ErrorKind::Internal, "unknown set form");
}

// Types a group of set expressions that must share an element type, using
// `hint` only when the sets alone leave it open.
std::vector<XorSet> resolve_sets(const std::vector<const SetAst *> &sets,
                                 const std::function<std::optional<BaseType>()> &hint) {
    detail::Unifier u;
    auto t = u.fresh();
    for (const auto *s : sets) {
        try {
            u.unify(t, type_set(u, *s), "set expression");
        } catch (const Error &e) {
            throw e.located(s->loc);
        }
    }
    if (!u.ground(t) && hint) {
        if (auto h = hint()) {
            try {
                u.unify(t, u.from(*h), "set expression");
            } catch (const Error &e) {
                throw e.located(sets.front()->loc);
            }
        }
    }
    if (!u.ground(t)) {
        throw Error(ErrorKind::AmbiguousType,
                    "cannot determine the element type of this set (only " + u.show(t) + "); add '@ type'",
                    sets.front()->loc);
    }
    auto elem = u.to_base(t);
    std::vector<XorSet> out;
    for (const auto *s : sets) {
        out.push_back(build_set(*s, elem));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

class RpiParser {
   public:
    RpiParser(std::string_view text, SourceProgram base, const ParseOptions &options)
        : toks_(lex(text)), prog_(std::move(base)), options_(options) {}

    SourceProgram program() {
        while (peek().kind != Tok::Kind::End) {
            item();
        }
        return std::move(prog_);
    }

    RelExpr lone_rel() {
        auto r = rexpr();
        expect_end();
        return r;
    }

    XorSet lone_set() {
        auto s = setexpr();
        expect_end();
        return resolve_sets({&s}, nullptr).front();
    }

    BaseType lone_type() {
        auto t = type();
        expect_end();
        return t;
    }

   private:
    // -- token helpers

    const Tok &peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

    bool accept(std::string_view s) {
        if (peek().is(s)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void syntax(const std::string &what) const {
        auto got = peek().kind == Tok::Kind::End ? std::string("end of input") : "'" + peek().text + "'";
        throw Error(ErrorKind::SyntaxError, "expected " + what + ", found " + got, peek().loc);
    }

    void expect(std::string_view s) {
        if (!accept(s)) {
            syntax("'" + std::string(s) + "'");
        }
    }

    void expect_end() {
        if (peek().kind != Tok::Kind::End) {
            syntax("end of input");
        }
    }

    std::string name_token(const char *what) {
        if (peek().kind != Tok::Kind::Ident || std::isdigit(static_cast<unsigned char>(peek().text[0]))) {
            syntax(what);
        }
        return toks_[pos_++].text;
    }

    bool item_start(std::size_t k) const {
        const auto &t = peek(k);
        if (t.kind == Tok::Kind::End) {
            return true;
        }
        return t.kind == Tok::Kind::Ident &&
               std::find(kItemKeywords.begin(), kItemKeywords.end(), t.text) != kItemKeywords.end();
    }

    void end_item() {
        if (!peek().is(";") || !item_start(1)) {
            syntax("';' ending the item");
        }
        ++pos_;
    }

    const Definition *lookup(const std::string &raw, SourceLocation loc) const {
        auto it = options_.rebind.find(raw);
        const auto &name = it == options_.rebind.end() ? raw : it->second;
        const auto *d = prog_.find(name);
        if (!d) {
            throw Error(ErrorKind::NameError, "unknown name '" + name + "'", loc);
        }
        return d;
    }

    template <typename F>
    auto at(SourceLocation loc, F &&f) -> decltype(f()) {
        try {
            return f();
        } catch (const Error &e) {
            throw e.located(loc);
        }
    }

    // -- items

    void item() {
        auto loc = peek().loc;
        auto kw = name_token("'type', 'iso', 'set', 'basis', 'def' or 'main'");
        if (kw == "main") {
            main_item(loc);
            return;
        }
        if (std::find(kItemKeywords.begin(), kItemKeywords.end(), kw) == kItemKeywords.end()) {
            pos_--;
            syntax("'type', 'iso', 'set', 'basis', 'def' or 'main'");
        }
        auto name_loc = peek().loc;
        auto name = name_token("a name");
        if (is_reserved(name)) {
            throw Error(ErrorKind::NameError, "'" + name + "' is reserved", name_loc);
        }
        if (prog_.find(name) != nullptr) {
            throw Error(ErrorKind::NameError, "'" + name + "' is already defined", name_loc);
        }
        expect("=");
        Definition d{Definition::Kind::Type, name, loc, {}, {}, {}, {}, {}, {}};
        if (kw == "type") {
            d.type = type();
        } else if (kw == "iso") {
            d.kind = Definition::Kind::Iso;
            auto c = cexpr();
            if (accept("@")) {
                d.iso_type = iso_annotation();
            }
            at(loc, [&] {
                if (d.iso_type) {
                    infer_comb_type(c, d.iso_type);
                } else {
                    detail::Unifier u;
                    auto t = detail::infer_comb(u, c);
                    if (!detail::is_plain_pi(u, t.lhs) || !detail::is_plain_pi(u, t.rhs)) {
                        fail(ErrorKind::TypeMismatch, "iso " + c.str() + " mentions a set or relation type");
                    }
                }
                return 0;
            });
            d.comb = c;
        } else if (kw == "set") {
            d.kind = Definition::Kind::Set;
            auto s = setexpr();
            d.set = resolve_sets({&s}, nullptr).front();
        } else if (kw == "basis") {
            d.kind = Definition::Kind::Basis;
            d.basis = basis_list(nullptr);
        } else if (looks_like_set()) {
            d.kind = Definition::Kind::Set;
            auto s = setexpr();
            d.set = resolve_sets({&s}, nullptr).front();
        } else {
            d.kind = Definition::Kind::Rel;
            auto r = rexpr();
            at(loc, [&] {
                check_rel_consistent(r);
                return 0;
            });
            d.rel = r;
        }
        end_item();
        prog_.defs.push_back(std::move(d));
    }

    void main_item(SourceLocation loc) {
        if (prog_.main) {
            throw Error(ErrorKind::NameError, "a program has at most one 'main'", loc);
        }
        auto r = rexpr();
        expect("on");
        auto input_ast = setexpr();
        auto input = resolve_sets({&input_ast}, [&]() -> std::optional<BaseType> {
            try {
                return type_check_rel(r).dom;
            } catch (const Error &) {
                return std::nullopt;
            }
        }).front();
        at(loc, [&] { return type_check_rel(r, input.elem_type()); });
        std::optional<std::vector<XorSet>> measured;
        if (accept("measure")) {
            measured = basis_ref([&]() -> std::optional<BaseType> { return type_check_rel(r, input.elem_type()).cod; });
        }
        end_item();
        prog_.main = MainDirective{r, input, measured, loc};
    }

    bool looks_like_set() const {
        std::size_t k = 0;
        while (peek(k).is("(")) {
            ++k;
        }
        const auto &t = peek(k);
        if (t.is("{")) {
            return true;
        }
        if (t.kind == Tok::Kind::Ident && !is_reserved(t.text)) {
            auto it = options_.rebind.find(t.text);
            const auto *d = prog_.find(it == options_.rebind.end() ? t.text : it->second);
            return d && d->kind == Definition::Kind::Set;
        }
        return false;
    }

    std::vector<XorSet> basis_list(const std::function<std::optional<BaseType>()> &hint) {
        expect("[");
        std::vector<SetAst> asts{setexpr()};
        while (accept(",")) {
            asts.push_back(setexpr());
        }
        expect("]");
        std::vector<const SetAst *> ptrs;
        for (const auto &a : asts) {
            ptrs.push_back(&a);
        }
        return resolve_sets(ptrs, hint);
    }

    std::vector<XorSet> basis_ref(const std::function<std::optional<BaseType>()> &hint) {
        if (peek().is("[")) {
            return basis_list(hint);
        }
        auto loc = peek().loc;
        auto name = name_token("a basis");
        auto it = options_.rebind.find(name);
        const auto &target = it == options_.rebind.end() ? name : it->second;
        if (const auto *d = prog_.find(target)) {
            if (d->kind != Definition::Kind::Basis) {
                throw Error(ErrorKind::NameError, "'" + target + "' is not a basis", loc);
            }
            return d->basis;
        }
        if (auto b = named_basis(target)) {
            return *b;
        }
        throw Error(ErrorKind::NameError, "unknown basis '" + target + "'", loc);
    }

    // -- types

    BaseType type() {
        auto t = type_term();
        while (accept("+")) {
            t = BaseType::sum(t, type_term());
        }
        return t;
    }

    BaseType type_term() {
        auto t = type_factor();
        while (accept("*")) {
            t = BaseType::prod(t, type_factor());
        }
        return t;
    }

    BaseType type_factor() {
        auto loc = peek().loc;
        if (accept("0")) {
            return BaseType::zero();
        }
        if (accept("1")) {
            return BaseType::one();
        }
        if (accept("bool")) {
            return BaseType::boolean();
        }
        if (accept("S")) {
            return BaseType::set(type_factor());
        }
        if (accept("(")) {
            auto t = type();
            expect(")");
            return t;
        }
        if (peek().kind == Tok::Kind::Ident && !is_reserved(peek().text)) {
            auto name = name_token("a type");
            const auto *d = lookup(name, loc);
            if (d->kind != Definition::Kind::Type) {
                throw Error(ErrorKind::NameError, "'" + name + "' is not a type", loc);
            }
            return *d->type;
        }
        syntax("a type");
    }

    std::optional<BaseType> slot() {
        if (accept("_")) {
            return std::nullopt;
        }
        return type();
    }

    IsoType iso_annotation() {
        auto lhs = type();
        expect("<->");
        auto rhs = type();
        return IsoType{lhs, rhs};
    }

    // -- combinators

    PiComb cexpr() {
        auto c = cterm();
        // A ';' before an item keyword (or the end) terminates the item.
        while (peek().is(";") && !item_start(1)) {
            ++pos_;
            c = PiComb::seq(c, cterm());
        }
        return c;
    }

    PiComb cterm() {
        auto c = catom();
        while (true) {
            if (accept("(+)")) {
                c = PiComb::sum(c, catom());
            } else if (accept("(x)")) {
                c = PiComb::prod(c, catom());
            } else {
                return c;
            }
        }
    }

    PiComb catom() {
        auto loc = peek().loc;
        if (accept("(")) {
            auto c = cexpr();
            expect(")");
            return c;
        }
        if (accept("inv")) {
            return adjoint_comb(catom());
        }
        if (peek().kind != Tok::Kind::Ident) {
            syntax("a combinator");
        }
        if (auto iso = iso_from_name(peek().text)) {
            ++pos_;
            return PiComb::prim(*iso);
        }
        if (is_reserved(peek().text)) {
            syntax("a combinator");
        }
        auto name = name_token("a combinator");
        const auto *d = lookup(name, loc);
        if (d->kind != Definition::Kind::Iso) {
            throw Error(ErrorKind::NameError, "'" + name + "' is not an iso", loc);
        }
        return *d->comb;
    }

    // -- relations

    RelExpr rexpr() {
        auto r = unary();
        while (peek().is(">>>")) {
            auto loc = peek().loc;
            ++pos_;
            auto rhs = unary();
            r = RelExpr::seq(r, rhs);
            at(loc, [&] {
                check_rel_consistent(r);
                return 0;
            });
        }
        return r;
    }

    XorSet set_operand() {
        auto s = setatom();
        return resolve_sets({&s}, nullptr).front();
    }

    RelExpr unary() {
        auto loc = peek().loc;
        const auto &t = peek();
        if (t.kind != Tok::Kind::Ident && !t.is("(")) {
            syntax("a relation");
        }
        if (accept("(")) {
            auto r = rexpr();
            expect(")");
            return r;
        }
        auto kw = t.text;
        ++pos_;
        if (kw == "arr") {
            auto c = cexpr();
            std::optional<IsoType> annotation;
            if (accept("@")) {
                annotation = iso_annotation();
            }
            return at(loc, [&] { return checked(RelExpr::arr(c, annotation)); });
        }
        if (kw == "second") {
            std::optional<BaseType> fixed;
            if (accept("@")) {
                fixed = slot();
            }
            auto r = unary();
            return at(loc, [&] { return checked(RelExpr::second(r, fixed)); });
        }
        if (kw == "first" || kw == "curry" || kw == "uncurry" || kw == "trace" || kw == "adjointR") {
            auto r = unary();
            return at(loc, [&] {
                if (kw == "first") {
                    return first(r);
                }
                if (kw == "curry") {
                    return curry(r);
                }
                if (kw == "uncurry") {
                    return uncurry(r);
                }
                if (kw == "trace") {
                    return trace(r);
                }
                return adjoint_rel(r);
            });
        }
        if (kw == "strength") {
            std::optional<BaseType> outer_t;
            std::optional<BaseType> inner_t;
            if (accept("@")) {
                outer_t = slot();
                expect(",");
                inner_t = slot();
            }
            return RelExpr::strength(outer_t, inner_t);
        }
        if (kw == "eta" || kw == "eps") {
            std::optional<BaseType> b;
            if (accept("@")) {
                b = slot();
            }
            return kw == "eta" ? RelExpr::eta(b) : RelExpr::eps(b);
        }
        if (kw == "state" || kw == "s2r" || kw == "costate") {
            auto s = set_operand();
            return at(loc, [&] {
                return kw == "state" ? RelExpr::state(s) : kw == "s2r" ? s2r(s) : costate(s);
            });
        }
        if (kw == "dot" || kw == "outer") {
            auto a = setatom();
            auto b = setatom();
            auto sets = resolve_sets({&a, &b}, nullptr);
            return at(loc, [&] { return kw == "dot" ? dot(sets[0], sets[1]) : outer(sets[0], sets[1]); });
        }
        if (is_reserved(kw)) {
            pos_--;
            syntax("a relation");
        }
        const auto *d = lookup(kw, loc);
        switch (d->kind) {
            case Definition::Kind::Rel:
                return *d->rel;
            case Definition::Kind::Iso:
                throw Error(ErrorKind::NameError, "'" + d->name + "' is an iso; lift it with 'arr " + kw + "'", loc);
            default:
                throw Error(ErrorKind::NameError, "'" + d->name + "' is not a relation", loc);
        }
    }

    static RelExpr checked(RelExpr r) {
        check_rel_consistent(r);
        return r;
    }

    // -- sets and values

    SetAst setexpr() {
        auto loc = peek().loc;
        auto s = setatom();
        if (!peek().is("<+>")) {
            return s;
        }
        SetAst x{SetAst::Kind::Xor, loc, {}, {}, {}, {}};
        x.parts.push_back(std::move(s));
        while (accept("<+>")) {
            x.parts.push_back(setatom());
        }
        return x;
    }

    SetAst setatom() {
        auto loc = peek().loc;
        if (accept("{")) {
            SetAst s{SetAst::Kind::Literal, loc, {}, {}, {}, {}};
            if (!accept("}")) {
                s.elems.push_back(value());
                while (accept(",")) {
                    s.elems.push_back(value());
                }
                expect("}");
            }
            if (accept("@")) {
                s.annotation = type();
            }
            return s;
        }
        if (accept("(")) {
            auto s = setexpr();
            expect(")");
            return s;
        }
        if (peek().kind == Tok::Kind::Ident && !is_reserved(peek().text)) {
            auto name = name_token("a set");
            const auto *d = lookup(name, loc);
            if (d->kind != Definition::Kind::Set) {
                throw Error(ErrorKind::NameError, "'" + name + "' is not a set", loc);
            }
            return SetAst{SetAst::Kind::Ref, loc, {}, {}, d->set, {}};
        }
        syntax("a set");
    }

    ValAst value() {
        if (accept("T")) {
            return ValAst{ValAst::Kind::True, {}, nullptr};
        }
        if (accept("F")) {
            return ValAst{ValAst::Kind::False, {}, nullptr};
        }
        if (accept("L")) {
            return ValAst{ValAst::Kind::Left, {value()}, nullptr};
        }
        if (accept("R")) {
            return ValAst{ValAst::Kind::Right, {value()}, nullptr};
        }
        if (peek().is("{")) {
            return ValAst{ValAst::Kind::Set, {}, std::make_shared<SetAst>(setatom())};
        }
        if (accept("(")) {
            if (accept(")")) {
                return ValAst{ValAst::Kind::Unit, {}, nullptr};
            }
            std::vector<ValAst> parts{value()};
            while (accept(",")) {
                parts.push_back(value());
            }
            expect(")");
            auto out = parts.back();
            for (auto i = parts.size() - 1; i-- > 0;) {
                out = ValAst{ValAst::Kind::Pair, {parts[i], out}, nullptr};
            }
            return out;
        }
        syntax("a value");
    }

    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
    SourceProgram prog_;
    const ParseOptions &options_;
};

std::string basis_literal(const std::vector<XorSet> &sets) {
    std::string out = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += (i > 0 ? ", " : "") + set_literal(sets[i]);
    }
    return out + "]";
}

}  // namespace

SourceProgram parse_rpi(std::string_view text, const ParseOptions &options) {
    return RpiParser(text, {}, options).program();
}

RelExpr parse_rel(std::string_view text, const SourceProgram &context, const ParseOptions &options) {
    return RpiParser(text, context, options).lone_rel();
}

XorSet parse_set(std::string_view text, const SourceProgram &context) {
    ParseOptions none;
    return RpiParser(text, context, none).lone_set();
}

BaseType parse_type(std::string_view text) {
    ParseOptions none;
    return RpiParser(text, {}, none).lone_type();
}

std::string print_program(const SourceProgram &p) {
    std::string out;
    for (const auto &d : p.defs) {
        switch (d.kind) {
            case Definition::Kind::Type:
                out += "type " + d.name + " = " + d.type->str() + ";\n";
                break;
            case Definition::Kind::Iso:
                out += "iso " + d.name + " = " + d.comb->str();
                if (d.iso_type) {
                    out += " @ " + d.iso_type->str();
                }
                out += ";\n";
                break;
            case Definition::Kind::Set:
                out += "set " + d.name + " = " + set_literal(*d.set) + ";\n";
                break;
            case Definition::Kind::Basis:
                out += "basis " + d.name + " = " + basis_literal(d.basis) + ";\n";
                break;
            case Definition::Kind::Rel:
                out += "def " + d.name + " = " + d.rel->str() + ";\n";
                break;
        }
    }
    if (p.main) {
        out += "main " + p.main->rel.str() + " on " + set_literal(p.main->input);
        if (p.main->measure) {
            out += " measure " + basis_literal(*p.main->measure);
        }
        out += ";\n";
    }
    return out;
}

}  // namespace dqc
