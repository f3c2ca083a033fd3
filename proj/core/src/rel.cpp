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

#include "dqc/rel.hpp"

#include <vector>

#include "dqc/error.hpp"
#include "unify.hpp"

namespace dqc {

struct RelExpr::Node {
    Kind kind;
    std::optional<PiComb> comb;
    std::optional<IsoType> at;
    std::vector<RelExpr> kids;
    std::optional<BaseType> slot;
    std::optional<BaseType> slot2;
    std::optional<XorSet> set;
};

RelExpr RelExpr::arr(PiComb c, std::optional<IsoType> at) {
    return RelExpr(std::make_shared<const Node>(Node{Kind::Arr, std::move(c), std::move(at), {}, {}, {}, {}}));
}

RelExpr RelExpr::seq(RelExpr first, RelExpr second) {
    return RelExpr(
        std::make_shared<const Node>(Node{Kind::Seq, {}, {}, {std::move(first), std::move(second)}, {}, {}, {}}));
}

RelExpr RelExpr::second(RelExpr r, std::optional<BaseType> fixed) {
    return RelExpr(std::make_shared<const Node>(Node{Kind::Second, {}, {}, {std::move(r)}, std::move(fixed), {}, {}}));
}

RelExpr RelExpr::strength(std::optional<BaseType> outer, std::optional<BaseType> inner) {
    return RelExpr(
        std::make_shared<const Node>(Node{Kind::Strength, {}, {}, {}, std::move(outer), std::move(inner), {}}));
}

RelExpr RelExpr::state(XorSet s) {
    return RelExpr(std::make_shared<const Node>(Node{Kind::State, {}, {}, {}, {}, {}, std::move(s)}));
}

RelExpr RelExpr::eta(std::optional<BaseType> b) {
    return RelExpr(std::make_shared<const Node>(Node{Kind::Eta, {}, {}, {}, std::move(b), {}, {}}));
}

RelExpr RelExpr::eps(std::optional<BaseType> b) {
    return RelExpr(std::make_shared<const Node>(Node{Kind::Eps, {}, {}, {}, std::move(b), {}, {}}));
}

RelExpr::Kind RelExpr::kind() const { return node_->kind; }

const PiComb &RelExpr::comb() const {
    if (!node_->comb) {
        fail(ErrorKind::Internal, "relation is not an arr");
    }
    return *node_->comb;
}

const std::optional<IsoType> &RelExpr::iso_type() const { return node_->at; }

const RelExpr &RelExpr::lhs() const {
    if (node_->kids.empty()) {
        fail(ErrorKind::Internal, "relation has no operands");
    }
    return node_->kids[0];
}

const RelExpr &RelExpr::rhs() const {
    if (node_->kids.size() < 2) {
        fail(ErrorKind::Internal, "relation has no second operand");
    }
    return node_->kids[1];
}

const std::optional<BaseType> &RelExpr::slot() const { return node_->slot; }
const std::optional<BaseType> &RelExpr::slot2() const { return node_->slot2; }

const XorSet &RelExpr::state_set() const {
    if (!node_->set) {
        fail(ErrorKind::Internal, "relation is not a state");
    }
    return *node_->set;
}

bool RelExpr::elaborated() const {
    switch (kind()) {
        case Kind::Arr:
            return node_->at.has_value();
        case Kind::Seq:
            return lhs().elaborated() && rhs().elaborated();
        case Kind::Second:
            return node_->slot.has_value() && lhs().elaborated();
        case Kind::Strength:
            return node_->slot.has_value() && node_->slot2.has_value();
        case Kind::State:
            return true;
        case Kind::Eta:
        case Kind::Eps:
            return node_->slot.has_value();
    }
    return false;
}

namespace {

// Like PiValue::str, but nested sets are printed as literals that carry
// their own element type where needed.
void render_value(const PiValue &v, bool atomic, std::string &out) {
    using K = PiValue::Kind;
    switch (v.kind()) {
        case K::Pair:
            out += '(';
            render_value(v.first(), false, out);
            out += ", ";
            render_value(v.second(), false, out);
            out += ')';
            return;
        case K::Set:
            out += set_literal(v.set_value());
            return;
        case K::Left:
        case K::Right:
            if (atomic) {
                out += '(';
            }
            out += v.is(K::Left) ? "L " : "R ";
            render_value(v.inner(), true, out);
            if (atomic) {
                out += ')';
            }
            return;
        default:
            out += v.str();
            return;
    }
}

}  // namespace

std::string set_literal(const XorSet &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        render_value(s.elements()[i], false, out);
    }
    out += '}';
    // Omit the element type when the elements pin it down exactly.
    detail::Unifier u;
    auto t = u.fresh();
    for (const auto &e : s.elements()) {
        u.unify(t, detail::infer_value(u, e), "set literal");
    }
    if (s.empty() || !u.ground(t) || !(u.to_base(t) == s.elem_type())) {
        out += " @ " + s.elem_type().str();
    }
    return out;
}

namespace {

void render(const RelExpr &r, bool atomic, std::string &out) {
    using K = RelExpr::Kind;
    switch (r.kind()) {
        case K::Seq:
            if (atomic) {
                out += '(';
            }
            render(r.lhs(), false, out);
            out += " >>> ";
            render(r.rhs(), true, out);
            if (atomic) {
                out += ')';
            }
            return;
        case K::Arr: {
            // An annotated arr is only atomic when wrapped.
            bool wrap = atomic && r.iso_type().has_value();
            if (wrap) {
                out += '(';
            }
            out += "arr ";
            if (r.comb().kind() == PiComb::Kind::Prim) {
                out += r.comb().str();
            } else {
                out += "(" + r.comb().str() + ")";
            }
            if (r.iso_type()) {
                out += " @ " + r.iso_type()->str();
            }
            if (wrap) {
                out += ')';
            }
            return;
        }
        case K::Second:
            if (atomic) {
                out += '(';
            }
            out += "second ";
            if (r.slot()) {
                out += "@ " + r.slot()->str() + " ";
            }
            render(r.lhs(), true, out);
            if (atomic) {
                out += ')';
            }
            return;
        case K::Strength: {
            bool annotated = r.slot() || r.slot2();
            if (annotated && atomic) {
                out += '(';
            }
            out += "strength";
            if (annotated) {
                out += " @ " + (r.slot() ? r.slot()->str() : std::string("_")) + ", " +
                       (r.slot2() ? r.slot2()->str() : std::string("_"));
            }
            if (annotated && atomic) {
                out += ')';
            }
            return;
        }
        case K::State:
            if (atomic) {
                out += '(';
            }
            out += "state " + set_literal(r.state_set());
            if (atomic) {
                out += ')';
            }
            return;
        case K::Eta:
        case K::Eps: {
            bool annotated = r.slot().has_value();
            if (annotated && atomic) {
                out += '(';
            }
            out += r.kind() == K::Eta ? "eta" : "eps";
            if (annotated) {
                out += " @ " + r.slot()->str();
            }
            if (annotated && atomic) {
                out += ')';
            }
            return;
        }
    }
}

}  // namespace

std::string RelExpr::str() const {
    std::string out;
    render(*this, false, out);
    return out;
}

bool operator==(const RelExpr &a, const RelExpr &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    const auto &x = *a.node_;
    const auto &y = *b.node_;
    return x.kind == y.kind && x.comb == y.comb && x.at == y.at && x.kids == y.kids && x.slot == y.slot &&
           x.slot2 == y.slot2 && x.set == y.set;
}

// ---------------------------------------------------------------------------
// Inference

namespace {

using detail::Ty;

struct Inference {
    detail::Unifier u;
    // One record per node, in pre-order.
    struct Rec {
        Ty a;
        Ty b;
    };
    std::vector<Rec> recs;

    std::pair<Ty, Ty> go(const RelExpr &r) {
        using K = RelExpr::Kind;
        auto idx = recs.size();
        recs.push_back({});
        switch (r.kind()) {
            case K::Arr: {
                auto t = detail::infer_comb(u, r.comb());
                if (r.iso_type()) {
                    auto what = "annotation " + r.iso_type()->str() + " on arr " + r.comb().str();
                    u.unify(t.lhs, u.from(r.iso_type()->lhs), what);
                    u.unify(t.rhs, u.from(r.iso_type()->rhs), what);
                }
                recs[idx] = {t.lhs, t.rhs};
                return {t.lhs, t.rhs};
            }
            case K::Seq: {
                auto [d1, c1] = go(r.lhs());
                auto [d2, c2] = go(r.rhs());
                u.unify(c1, d2, "in " + r.str());
                return {d1, c2};
            }
            case K::Second: {
                auto fixed = r.slot() ? u.from(*r.slot()) : u.fresh();
                recs[idx] = {fixed, nullptr};
                auto [d, c] = go(r.lhs());
                return {u.prod(fixed, d), u.prod(fixed, c)};
            }
            case K::Strength: {
                auto b1 = r.slot() ? u.from(*r.slot()) : u.fresh();
                auto b2 = r.slot2() ? u.from(*r.slot2()) : u.fresh();
                recs[idx] = {b1, b2};
                return {u.prod(b1, u.set(b2)), u.prod(b1, b2)};
            }
            case K::State:
                return {u.one(), u.from(r.state_set().elem_type())};
            case K::Eta: {
                auto b = r.slot() ? u.from(*r.slot()) : u.fresh();
                recs[idx] = {b, nullptr};
                return {u.one(), u.prod(b, b)};
            }
            case K::Eps: {
                auto b = r.slot() ? u.from(*r.slot()) : u.fresh();
                recs[idx] = {b, nullptr};
                return {u.prod(b, b), u.one()};
            }
        }
        fail(ErrorKind::Internal, "unknown relation form");
    }

    BaseType slot_type(const Ty &t, const RelExpr &r, const char *what) {
        if (!u.ground(t)) {
            fail(ErrorKind::AmbiguousType, std::string("cannot determine the ") + what + " of " + r.str() + " (only " +
                                               u.show(t) + "); add an annotation");
        }
        auto b = u.to_base(t);
        if (!b.enumerable()) {
            fail(ErrorKind::NotEnumerable, std::string("the ") + what + " of " + r.str() + " is " + b.str());
        }
        return b;
    }

    RelExpr rebuild(const RelExpr &r, std::size_t &pos) {
        using K = RelExpr::Kind;
        auto rec = recs[pos++];
        switch (r.kind()) {
            case K::Arr:
                return RelExpr::arr(r.comb(),
                                    IsoType{slot_type(rec.a, r, "input type"), slot_type(rec.b, r, "output type")});
            case K::Seq: {
                auto a = rebuild(r.lhs(), pos);
                auto b = rebuild(r.rhs(), pos);
                return RelExpr::seq(std::move(a), std::move(b));
            }
            case K::Second: {
                auto fixed = slot_type(rec.a, r, "untouched component");
                return RelExpr::second(rebuild(r.lhs(), pos), fixed);
            }
            case K::Strength:
                return RelExpr::strength(slot_type(rec.a, r, "outer type"), slot_type(rec.b, r, "set element type"));
            case K::State:
                return r;
            case K::Eta:
                return RelExpr::eta(slot_type(rec.a, r, "index type"));
            case K::Eps:
                return RelExpr::eps(slot_type(rec.a, r, "compared type"));
        }
        fail(ErrorKind::Internal, "unknown relation form");
    }
};

// Elaborates with an optional constraint on the domain. A clash with the
// hint is reported as `hint_error`.
RelExpr elaborate_impl(const RelExpr &r, const std::optional<BaseType> &dom_hint, const PiValue *value_hint,
                       ErrorKind hint_error) {
    Inference inf;
    auto [dom, cod] = inf.go(r);
    if (dom_hint) {
        try {
            inf.u.unify(dom, inf.u.from(*dom_hint), "input");
        } catch (const Error &e) {
            fail(hint_error, "input over " + dom_hint->str() + " does not fit " + r.str() + " (" +
                                               e.detail() + ")");
        }
    }
    if (value_hint) {
        try {
            inf.u.unify(dom, detail::infer_value(inf.u, *value_hint), "input");
        } catch (const Error &e) {
            fail(hint_error, "value " + value_hint->str() + " does not fit " + r.str() + " (" +
                                               e.detail() + ")");
        }
    }
    if (!inf.u.ground(dom) || !inf.u.ground(cod)) {
        fail(ErrorKind::AmbiguousType, "relation " + r.str() + " only has type " + inf.u.show(dom) + " ~> " +
                                           inf.u.show(cod) + "; add an annotation");
    }
    for (const auto &t : {dom, cod}) {
        if (!inf.u.to_base(t).enumerable()) {
            fail(ErrorKind::NotEnumerable, "relation " + r.str() + " has endpoint " + inf.u.to_base(t).str());
        }
    }
    std::size_t pos = 0;
    return inf.rebuild(r, pos);
}

}  // namespace

RelExpr elaborate(const RelExpr &r, const std::optional<BaseType> &dom_hint) {
    // Annotated trees are re-checked too: filled slots can still disagree.
    return elaborate_impl(r, dom_hint, nullptr, ErrorKind::TypeMismatch);
}

RelType elaborated_type(const RelExpr &r) {
    using K = RelExpr::Kind;
    auto need = [&](const std::optional<BaseType> &slot) -> const BaseType & {
        if (!slot) {
            fail(ErrorKind::Internal, "relation " + r.str() + " is not elaborated");
        }
        return *slot;
    };
    switch (r.kind()) {
        case K::Arr:
            if (!r.iso_type()) {
                fail(ErrorKind::Internal, "relation " + r.str() + " is not elaborated");
            }
            return RelType{r.iso_type()->lhs, r.iso_type()->rhs};
        case K::Seq:
            return RelType{elaborated_type(r.lhs()).dom, elaborated_type(r.rhs()).cod};
        case K::Second: {
            auto inner = elaborated_type(r.lhs());
            const auto &fixed = need(r.slot());
            return RelType{BaseType::prod(fixed, inner.dom), BaseType::prod(fixed, inner.cod)};
        }
        case K::Strength:
            return RelType{BaseType::prod(need(r.slot()), BaseType::set(need(r.slot2()))),
                           BaseType::prod(need(r.slot()), need(r.slot2()))};
        case K::State:
            return RelType{BaseType::one(), r.state_set().elem_type()};
        case K::Eta:
            return RelType{BaseType::one(), BaseType::prod(need(r.slot()), need(r.slot()))};
        case K::Eps:
            return RelType{BaseType::prod(need(r.slot()), need(r.slot())), BaseType::one()};
    }
    fail(ErrorKind::Internal, "unknown relation form");
}

RelType type_check_rel(const RelExpr &r, const std::optional<BaseType> &dom_hint) {
    return elaborated_type(elaborate(r, dom_hint));
}

void check_rel_consistent(const RelExpr &r) {
    Inference inf;
    inf.go(r);
}

std::string describe_rel_type(const RelExpr &r) {
    Inference inf;
    auto [dom, cod] = inf.go(r);
    auto d = inf.u.show(dom);
    return d + " ~> " + inf.u.show(cod);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// strength @ (v, s) = {(v, w) | w in s}; elements of s are distinct, so the
// exclusive-union fold never cancels.
XorSet strength_apply(const PiValue &outer, const XorSet &inner, const BaseType &outer_type) {
    std::vector<PiValue> out;
    out.reserve(inner.size());
    for (const auto &w : inner.elements()) {
        out.push_back(PiValue::pair(outer, w));
    }
    return XorSet::of(BaseType::prod(outer_type, inner.elem_type()), std::move(out));
}

[[noreturn]] void cannot_apply(const RelExpr &r, const PiValue &v) {
    fail(ErrorKind::IllTypedValue, "relation " + r.str() + " cannot consume " + v.str());
}

}  // namespace

XorSet apply_elaborated_value(const RelExpr &r, const PiValue &v) {
    using K = RelExpr::Kind;
    switch (r.kind()) {
        case K::Arr:
            return XorSet::singleton(r.iso_type()->rhs, eval_comb(r.comb(), v));
        case K::Seq:
            return apply_elaborated_set(r.rhs(), apply_elaborated_value(r.lhs(), v));
        case K::Second: {
            if (!v.is(PiValue::Kind::Pair)) {
                cannot_apply(r, v);
            }
            // second r @ (v1, v2) = strength @ (v1, r @ v2)
            return strength_apply(v.first(), apply_elaborated_value(r.lhs(), v.second()), *r.slot());
        }
        case K::Strength:
            if (!v.is(PiValue::Kind::Pair) || !v.second().is(PiValue::Kind::Set)) {
                cannot_apply(r, v);
            }
            return strength_apply(v.first(), v.second().set_value(), *r.slot());
        case K::State:
            if (!v.is(PiValue::Kind::Unit)) {
                cannot_apply(r, v);
            }
            return r.state_set();
        case K::Eta: {
            if (!v.is(PiValue::Kind::Unit)) {
                cannot_apply(r, v);
            }
            std::vector<PiValue> diag;
            for (const auto &x : enumerate_values(*r.slot())) {
                diag.push_back(PiValue::pair(x, x));
            }
            return XorSet::of(BaseType::prod(*r.slot(), *r.slot()), std::move(diag));
        }
        case K::Eps:
            if (!v.is(PiValue::Kind::Pair)) {
                cannot_apply(r, v);
            }
            if (v.first() == v.second()) {
                return XorSet::singleton(BaseType::one(), PiValue::unit());
            }
            return XorSet(BaseType::one());
    }
    cannot_apply(r, v);
}

XorSet apply_elaborated_set(const RelExpr &r, const XorSet &s) {
    auto cod = elaborated_type(r).cod;
    std::vector<PiValue> acc;
    for (const auto &v : s.elements()) {
        auto part = apply_elaborated_value(r, v);
        acc.insert(acc.end(), part.elements().begin(), part.elements().end());
    }
    // XorSet::of cancels repeated elements pairwise, which is exactly the
    // exclusive-union fold.
    return XorSet::of(cod, std::move(acc));
}

XorSet apply_rel_value(const RelExpr &r, const PiValue &v) {
    auto e = elaborate_impl(r, std::nullopt, &v, ErrorKind::IllTypedValue);
    auto dom = elaborated_type(e).dom;
    if (!inhabits(v, dom)) {
        fail(ErrorKind::IllTypedValue, "value " + v.str() + " does not inhabit " + dom.str());
    }
    return apply_elaborated_value(e, v);
}

XorSet apply_rel_set(const RelExpr &r, const XorSet &s) {
    auto e = elaborate_impl(r, s.elem_type(), nullptr, ErrorKind::IllTypedValue);
    return apply_elaborated_set(e, s);
}

Gf2 scalar_of(const RelExpr &r) {
    auto e = elaborate(r);
    auto t = elaborated_type(e);
    if (!(t.dom == BaseType::one()) || !(t.cod == BaseType::one())) {
        fail(ErrorKind::TypeMismatch, "scalar expected a relation of type 1 ~> 1, got " + t.str());
    }
    auto out = apply_elaborated_value(e, PiValue::unit());
    return to_gf2(!out.empty());
}

}  // namespace dqc
