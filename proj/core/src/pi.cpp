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

#include "dqc/pi.hpp"

#include <vector>

#include "dqc/error.hpp"
#include "unify.hpp"

namespace dqc {

namespace {

struct IsoInfo {
    Iso iso;
    std::string_view name;
    Iso adjoint;
};

constexpr std::array<IsoInfo, 17> kIsoTable = {{
    {Iso::Id, "id", Iso::Id},
    {Iso::ZeroE, "zeroe", Iso::ZeroI},
    {Iso::ZeroI, "zeroi", Iso::ZeroE},
    {Iso::SwapPlus, "swap_plus", Iso::SwapPlus},
    {Iso::AssocLPlus, "assocl_plus", Iso::AssocRPlus},
    {Iso::AssocRPlus, "assocr_plus", Iso::AssocLPlus},
    {Iso::UnitE, "unite", Iso::UnitI},
    {Iso::UnitI, "uniti", Iso::UnitE},
    {Iso::SwapTimes, "swap_times", Iso::SwapTimes},
    {Iso::AssocLTimes, "assocl_times", Iso::AssocRTimes},
    {Iso::AssocRTimes, "assocr_times", Iso::AssocLTimes},
    {Iso::Distrib0, "distrib0", Iso::Factor0},
    {Iso::Factor0, "factor0", Iso::Distrib0},
    {Iso::Distrib, "distrib", Iso::Factor},
    {Iso::Factor, "factor", Iso::Distrib},
    {Iso::Bool2Sum, "bool2sum", Iso::Sum2Bool},
    {Iso::Sum2Bool, "sum2bool", Iso::Bool2Sum},
}};

const IsoInfo &info(Iso iso) { return kIsoTable[static_cast<std::size_t>(iso)]; }

}  // namespace

std::string_view iso_name(Iso iso) { return info(iso).name; }

std::optional<Iso> iso_from_name(std::string_view name) {
    for (const auto &row : kIsoTable) {
        if (row.name == name) {
            return row.iso;
        }
    }
    return std::nullopt;
}

Iso iso_adjoint(Iso iso) { return info(iso).adjoint; }

// ---------------------------------------------------------------------------

struct PiComb::Node {
    Kind kind;
    Iso iso;
    std::vector<PiComb> kids;
};

PiComb PiComb::prim(Iso iso) { return PiComb(std::make_shared<const Node>(Node{Kind::Prim, iso, {}})); }

PiComb PiComb::seq(PiComb first, PiComb second) {
    return PiComb(std::make_shared<const Node>(Node{Kind::Seq, Iso::Id, {std::move(first), std::move(second)}}));
}

PiComb PiComb::sum(PiComb left, PiComb right) {
    return PiComb(std::make_shared<const Node>(Node{Kind::Sum, Iso::Id, {std::move(left), std::move(right)}}));
}

PiComb PiComb::prod(PiComb left, PiComb right) {
    return PiComb(std::make_shared<const Node>(Node{Kind::Prod, Iso::Id, {std::move(left), std::move(right)}}));
}

PiComb::Kind PiComb::kind() const { return node_->kind; }

Iso PiComb::iso() const {
    if (kind() != Kind::Prim) {
        fail(ErrorKind::Internal, "combinator " + str() + " is not primitive");
    }
    return node_->iso;
}

const PiComb &PiComb::lhs() const {
    if (kind() == Kind::Prim) {
        fail(ErrorKind::Internal, "primitive combinator has no operands");
    }
    return node_->kids[0];
}

const PiComb &PiComb::rhs() const {
    if (kind() == Kind::Prim) {
        fail(ErrorKind::Internal, "primitive combinator has no operands");
    }
    return node_->kids[1];
}

namespace {

// `;` binds loosest; `(+)` and `(x)` bind tighter and never mix unparenthesized.
void render(const PiComb &c, int ctx, PiComb::Kind parent, std::string &out) {
    if (c.kind() == PiComb::Kind::Prim) {
        out += iso_name(c.iso());
        return;
    }
    int p = c.kind() == PiComb::Kind::Seq ? 1 : 2;
    bool paren = p < ctx || (p == 2 && ctx == 2 && parent != c.kind());
    if (paren) {
        out += '(';
    }
    const char *op = c.kind() == PiComb::Kind::Seq ? " ; " : c.kind() == PiComb::Kind::Sum ? " (+) " : " (x) ";
    render(c.lhs(), p, c.kind(), out);
    out += op;
    render(c.rhs(), p + 1, c.kind(), out);
    if (paren) {
        out += ')';
    }
}

}  // namespace

std::string PiComb::str() const {
    std::string out;
    render(*this, 0, Kind::Prim, out);
    return out;
}

bool operator==(const PiComb &a, const PiComb &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    if (a.kind() == PiComb::Kind::Prim) {
        return a.iso() == b.iso();
    }
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

// ---------------------------------------------------------------------------

IsoType infer_comb_type(const PiComb &c, const std::optional<IsoType> &annotation) {
    detail::Unifier u;
    auto t = detail::infer_comb(u, c);
    if (annotation) {
        u.unify(t.lhs, u.from(annotation->lhs), "annotation " + annotation->str() + " on " + c.str());
        u.unify(t.rhs, u.from(annotation->rhs), "annotation " + annotation->str() + " on " + c.str());
    }
    if (!detail::is_plain_pi(u, t.lhs) || !detail::is_plain_pi(u, t.rhs)) {
        fail(ErrorKind::TypeMismatch, "iso " + c.str() + " used at set or relation type " + u.show(t.lhs) + " <-> " +
                                          u.show(t.rhs));
    }
    if (!u.ground(t.lhs) || !u.ground(t.rhs)) {
        fail(ErrorKind::AmbiguousType, "type of " + c.str() + " is only known as " + u.show(t.lhs) + " <-> " +
                                           u.show(t.rhs) + "; add an annotation");
    }
    return IsoType{u.to_base(t.lhs), u.to_base(t.rhs)};
}

namespace {

[[noreturn]] void bad_input(const PiComb &c, const PiValue &v) {
    fail(ErrorKind::IllTypedValue, "combinator " + c.str() + " cannot consume " + v.str());
}

[[noreturn]] void impossible(Iso iso) {
    fail(ErrorKind::Internal, std::string("reached an input of the empty type in ") + std::string(iso_name(iso)));
}

PiValue eval_prim(const PiComb &c, const PiValue &v) {
    using K = PiValue::Kind;
    Iso iso = c.iso();
    switch (iso) {
        case Iso::Id:
            return v;
        case Iso::ZeroE:
            if (v.is(K::Right)) {
                return v.inner();
            }
            if (v.is(K::Left)) {
                impossible(iso);
            }
            break;
        case Iso::ZeroI:
            return PiValue::right(v);
        case Iso::SwapPlus:
            if (v.is(K::Left)) {
                return PiValue::right(v.inner());
            }
            if (v.is(K::Right)) {
                return PiValue::left(v.inner());
            }
            break;
        case Iso::AssocLPlus:
            if (v.is(K::Left)) {
                return PiValue::left(PiValue::left(v.inner()));
            }
            if (v.is(K::Right) && v.inner().is(K::Left)) {
                return PiValue::left(PiValue::right(v.inner().inner()));
            }
            if (v.is(K::Right) && v.inner().is(K::Right)) {
                return PiValue::right(v.inner().inner());
            }
            break;
        case Iso::AssocRPlus:
            if (v.is(K::Left) && v.inner().is(K::Left)) {
                return PiValue::left(v.inner().inner());
            }
            if (v.is(K::Left) && v.inner().is(K::Right)) {
                return PiValue::right(PiValue::left(v.inner().inner()));
            }
            if (v.is(K::Right)) {
                return PiValue::right(PiValue::right(v.inner()));
            }
            break;
        case Iso::UnitE:
            if (v.is(K::Pair) && v.first().is(K::Unit)) {
                return v.second();
            }
            break;
        case Iso::UnitI:
            return PiValue::pair(PiValue::unit(), v);
        case Iso::SwapTimes:
            if (v.is(K::Pair)) {
                return PiValue::pair(v.second(), v.first());
            }
            break;
        case Iso::AssocLTimes:
            if (v.is(K::Pair) && v.second().is(K::Pair)) {
                const auto &rest = v.second();
                return PiValue::pair(PiValue::pair(v.first(), rest.first()), rest.second());
            }
            break;
        case Iso::AssocRTimes:
            if (v.is(K::Pair) && v.first().is(K::Pair)) {
                const auto &front = v.first();
                return PiValue::pair(front.first(), PiValue::pair(front.second(), v.second()));
            }
            break;
        case Iso::Distrib0:
            if (v.is(K::Pair)) {
                impossible(iso);
            }
            break;
        case Iso::Factor0:
            impossible(iso);
        case Iso::Distrib:
            if (v.is(K::Pair) && v.first().is(K::Left)) {
                return PiValue::left(PiValue::pair(v.first().inner(), v.second()));
            }
            if (v.is(K::Pair) && v.first().is(K::Right)) {
                return PiValue::right(PiValue::pair(v.first().inner(), v.second()));
            }
            break;
        case Iso::Factor:
            if ((v.is(K::Left) || v.is(K::Right)) && v.inner().is(K::Pair)) {
                const auto &p = v.inner();
                auto tag = v.is(K::Left) ? PiValue::left(p.first()) : PiValue::right(p.first());
                return PiValue::pair(tag, p.second());
            }
            break;
        case Iso::Bool2Sum:
            if (v.is(K::True)) {
                return PiValue::left(PiValue::unit());
            }
            if (v.is(K::False)) {
                return PiValue::right(PiValue::unit());
            }
            break;
        case Iso::Sum2Bool:
            if (v.is(K::Left) && v.inner().is(K::Unit)) {
                return kBT;
            }
            if (v.is(K::Right) && v.inner().is(K::Unit)) {
                return kBF;
            }
            break;
    }
    bad_input(c, v);
}

}  // namespace

PiValue eval_comb(const PiComb &c, const PiValue &v) {
    switch (c.kind()) {
        case PiComb::Kind::Prim:
            return eval_prim(c, v);
        case PiComb::Kind::Seq:
            return eval_comb(c.rhs(), eval_comb(c.lhs(), v));
        case PiComb::Kind::Sum:
            if (v.is(PiValue::Kind::Left)) {
                return PiValue::left(eval_comb(c.lhs(), v.inner()));
            }
            if (v.is(PiValue::Kind::Right)) {
                return PiValue::right(eval_comb(c.rhs(), v.inner()));
            }
            bad_input(c, v);
        case PiComb::Kind::Prod:
            if (v.is(PiValue::Kind::Pair)) {
                return PiValue::pair(eval_comb(c.lhs(), v.first()), eval_comb(c.rhs(), v.second()));
            }
            bad_input(c, v);
    }
    bad_input(c, v);
}

PiComb adjoint_comb(const PiComb &c) {
    switch (c.kind()) {
        case PiComb::Kind::Prim:
            return PiComb::prim(iso_adjoint(c.iso()));
        case PiComb::Kind::Seq:
            return PiComb::seq(adjoint_comb(c.rhs()), adjoint_comb(c.lhs()));
        case PiComb::Kind::Sum:
            return PiComb::sum(adjoint_comb(c.lhs()), adjoint_comb(c.rhs()));
        case PiComb::Kind::Prod:
            return PiComb::prod(adjoint_comb(c.lhs()), adjoint_comb(c.rhs()));
    }
    return c;
}

}  // namespace dqc
