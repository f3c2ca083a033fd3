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

#include "unify.hpp"

#include "dqc/error.hpp"

namespace dqc::detail {

using Tag = TyNode::Tag;

namespace {

Ty make(Tag tag, Ty a = nullptr, Ty b = nullptr) { return std::make_shared<const TyNode>(TyNode{tag, -1, std::move(a), std::move(b)}); }

}  // namespace

Ty Unifier::fresh() {
    int id = static_cast<int>(bindings_.size());
    bindings_.push_back(nullptr);
    return std::make_shared<const TyNode>(TyNode{Tag::Var, id, nullptr, nullptr});
}

Ty Unifier::zero() const {
    static const Ty t = make(Tag::Zero);
    return t;
}
Ty Unifier::one() const {
    static const Ty t = make(Tag::One);
    return t;
}
Ty Unifier::boolean() const {
    static const Ty t = make(Tag::Bool);
    return t;
}
Ty Unifier::sum(Ty a, Ty b) const { return make(Tag::Sum, std::move(a), std::move(b)); }
Ty Unifier::prod(Ty a, Ty b) const { return make(Tag::Prod, std::move(a), std::move(b)); }
Ty Unifier::set(Ty a) const { return make(Tag::Set, std::move(a)); }

Ty Unifier::from(const BaseType &b) const {
    using K = BaseType::Kind;
    switch (b.kind()) {
        case K::Zero:
            return zero();
        case K::One:
            return one();
        case K::Bool:
            return boolean();
        case K::Sum:
            return sum(from(b.left()), from(b.right()));
        case K::Prod:
            return prod(from(b.left()), from(b.right()));
        case K::Set:
            return set(from(b.element()));
        case K::Rel:
            return make(Tag::Rel, from(b.left()), from(b.right()));
    }
    return one();
}

Ty Unifier::walk(Ty t) const {
    while (t->tag == Tag::Var && bindings_[t->var]) {
        t = bindings_[t->var];
    }
    return t;
}

bool Unifier::occurs(int var, const Ty &t) const {
    auto w = walk(t);
    if (w->tag == Tag::Var) {
        return w->var == var;
    }
    return (w->a && occurs(var, w->a)) || (w->b && occurs(var, w->b));
}

void Unifier::unify(const Ty &a, const Ty &b, const std::string &what) {
    auto x = walk(a);
    auto y = walk(b);
    if (x == y) {
        return;
    }
    if (x->tag == Tag::Var && y->tag == Tag::Var && x->var == y->var) {
        return;
    }
    if (x->tag == Tag::Var || y->tag == Tag::Var) {
        auto var = x->tag == Tag::Var ? x : y;
        auto other = x->tag == Tag::Var ? y : x;
        if (occurs(var->var, other)) {
            fail(ErrorKind::TypeMismatch, what + ": cyclic type " + show(var) + " = " + show(other));
        }
        bindings_[var->var] = other;
        return;
    }
    if (x->tag != y->tag) {
        fail(ErrorKind::TypeMismatch, what + ": cannot match " + show(x) + " with " + show(y));
    }
    if (x->a) {
        unify(x->a, y->a, what);
    }
    if (x->b) {
        unify(x->b, y->b, what);
    }
}

bool Unifier::ground(const Ty &t) const {
    auto w = walk(t);
    if (w->tag == Tag::Var) {
        return false;
    }
    return (!w->a || ground(w->a)) && (!w->b || ground(w->b));
}

BaseType Unifier::to_base(const Ty &t) const {
    auto w = walk(t);
    switch (w->tag) {
        case Tag::Var:
            fail(ErrorKind::AmbiguousType, "type variable left unresolved");
        case Tag::Zero:
            return BaseType::zero();
        case Tag::One:
            return BaseType::one();
        case Tag::Bool:
            return BaseType::boolean();
        case Tag::Sum:
            return BaseType::sum(to_base(w->a), to_base(w->b));
        case Tag::Prod:
            return BaseType::prod(to_base(w->a), to_base(w->b));
        case Tag::Set:
            return BaseType::set(to_base(w->a));
        case Tag::Rel:
            return BaseType::rel(to_base(w->a), to_base(w->b));
    }
    return BaseType::one();
}

std::optional<BaseType> Unifier::try_base(const Ty &t) const {
    if (!ground(t)) {
        return std::nullopt;
    }
    return to_base(t);
}

namespace {

int prec(Tag t) {
    switch (t) {
        case Tag::Rel:
            return 0;
        case Tag::Sum:
            return 1;
        case Tag::Prod:
            return 2;
        case Tag::Set:
            return 3;
        default:
            return 4;
    }
}

}  // namespace

std::string Unifier::show(const Ty &t) {
    // Mirrors BaseType::str with variables rendered as letters.
    struct Printer {
        Unifier &u;
        void go(const Ty &t, int ctx, std::string &out) {
            auto w = u.walk(t);
            int p = prec(w->tag);
            bool paren = p < ctx;
            if (paren) {
                out += '(';
            }
            switch (w->tag) {
                case Tag::Var: {
                    int slot = -1;
                    for (std::size_t i = 0; i < u.names_.size(); ++i) {
                        if (u.names_[i] == w->var) {
                            slot = static_cast<int>(i);
                        }
                    }
                    if (slot < 0) {
                        slot = static_cast<int>(u.names_.size());
                        u.names_.push_back(w->var);
                    }
                    out += '\'';
                    out += static_cast<char>('a' + slot % 26);
                    if (slot >= 26) {
                        out += std::to_string(slot / 26);
                    }
                    break;
                }
                case Tag::Zero:
                    out += '0';
                    break;
                case Tag::One:
                    out += '1';
                    break;
                case Tag::Bool:
                    out += "bool";
                    break;
                case Tag::Set:
                    out += "S ";
                    go(w->a, 3, out);
                    break;
                default:
                    go(w->a, p, out);
                    out += w->tag == Tag::Sum ? " + " : w->tag == Tag::Prod ? " * " : " R ";
                    go(w->b, p + 1, out);
                    break;
            }
            if (paren) {
                out += ')';
            }
        }
    };
    std::string out;
    Printer{*this}.go(t, 0, out);
    return out;
}

bool is_plain_pi(const Unifier &u, const Ty &t) {
    auto w = u.walk(t);
    if (w->tag == Tag::Set || w->tag == Tag::Rel) {
        return false;
    }
    return (!w->a || is_plain_pi(u, w->a)) && (!w->b || is_plain_pi(u, w->b));
}

Ty infer_value(Unifier &u, const PiValue &v) {
    using K = PiValue::Kind;
    switch (v.kind()) {
        case K::Unit:
            return u.one();
        case K::False:
        case K::True:
            return u.boolean();
        case K::Left:
            return u.sum(infer_value(u, v.inner()), u.fresh());
        case K::Right:
            return u.sum(u.fresh(), infer_value(u, v.inner()));
        case K::Pair:
            return u.prod(infer_value(u, v.first()), infer_value(u, v.second()));
        case K::Set:
            return u.set(u.from(v.set_value().elem_type()));
    }
    return u.fresh();
}

CombTyping infer_comb(Unifier &u, const PiComb &c) {
    switch (c.kind()) {
        case PiComb::Kind::Prim: {
            auto a = u.fresh();
            auto b = u.fresh();
            auto d = u.fresh();
            switch (c.iso()) {
                case Iso::Id:
                    return {a, a};
                case Iso::ZeroE:
                    return {u.sum(u.zero(), a), a};
                case Iso::ZeroI:
                    return {a, u.sum(u.zero(), a)};
                case Iso::SwapPlus:
                    return {u.sum(a, b), u.sum(b, a)};
                case Iso::AssocLPlus:
                    return {u.sum(a, u.sum(b, d)), u.sum(u.sum(a, b), d)};
                case Iso::AssocRPlus:
                    return {u.sum(u.sum(a, b), d), u.sum(a, u.sum(b, d))};
                case Iso::UnitE:
                    return {u.prod(u.one(), a), a};
                case Iso::UnitI:
                    return {a, u.prod(u.one(), a)};
                case Iso::SwapTimes:
                    return {u.prod(a, b), u.prod(b, a)};
                case Iso::AssocLTimes:
                    return {u.prod(a, u.prod(b, d)), u.prod(u.prod(a, b), d)};
                case Iso::AssocRTimes:
                    return {u.prod(u.prod(a, b), d), u.prod(a, u.prod(b, d))};
                case Iso::Distrib0:
                    return {u.prod(u.zero(), a), u.zero()};
                case Iso::Factor0:
                    return {u.zero(), u.prod(u.zero(), a)};
                case Iso::Distrib:
                    return {u.prod(u.sum(a, b), d), u.sum(u.prod(a, d), u.prod(b, d))};
                case Iso::Factor:
                    return {u.sum(u.prod(a, d), u.prod(b, d)), u.prod(u.sum(a, b), d)};
                case Iso::Bool2Sum:
                    return {u.boolean(), u.sum(u.one(), u.one())};
                case Iso::Sum2Bool:
                    return {u.sum(u.one(), u.one()), u.boolean()};
            }
            break;
        }
        case PiComb::Kind::Seq: {
            auto t1 = infer_comb(u, c.lhs());
            auto t2 = infer_comb(u, c.rhs());
            u.unify(t1.rhs, t2.lhs, "in sequence " + c.str());
            return {t1.lhs, t2.rhs};
        }
        case PiComb::Kind::Sum: {
            auto t1 = infer_comb(u, c.lhs());
            auto t2 = infer_comb(u, c.rhs());
            return {u.sum(t1.lhs, t2.lhs), u.sum(t1.rhs, t2.rhs)};
        }
        case PiComb::Kind::Prod: {
            auto t1 = infer_comb(u, c.lhs());
            auto t2 = infer_comb(u, c.rhs());
            return {u.prod(t1.lhs, t2.lhs), u.prod(t1.rhs, t2.rhs)};
        }
    }
    fail(ErrorKind::Internal, "unknown combinator form");
}

}  // namespace dqc::detail
