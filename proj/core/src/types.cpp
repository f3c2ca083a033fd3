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

#include "dqc/types.hpp"

#include "dqc/error.hpp"

namespace dqc {

struct BaseType::Node {
    Kind kind;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    // Cached on construction; UINT64_MAX marks "not enumerable / too big".
    std::uint64_t card;
};

namespace {

constexpr std::uint64_t kTooBig = ~std::uint64_t{0};
constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    if (x == kTooBig || y == kTooBig || x + y >= kLimit) {
        return kTooBig;
    }
    return x + y;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    if (x == kTooBig || y == kTooBig) {
        return kTooBig;
    }
    if (x == 0 || y == 0) {
        return 0;
    }
    if (x >= kLimit / y) {
        return kTooBig;
    }
    return x * y;
}

}  // namespace

BaseType BaseType::zero() {
    static const BaseType t(std::make_shared<const Node>(Node{Kind::Zero, nullptr, nullptr, 0}));
    return t;
}

BaseType BaseType::one() {
    static const BaseType t(std::make_shared<const Node>(Node{Kind::One, nullptr, nullptr, 1}));
    return t;
}

BaseType BaseType::boolean() {
    static const BaseType t(std::make_shared<const Node>(Node{Kind::Bool, nullptr, nullptr, 2}));
    return t;
}

BaseType BaseType::sum(BaseType a, BaseType b) {
    auto card = checked_add(a.node_->card, b.node_->card);
    return BaseType(std::make_shared<const Node>(Node{Kind::Sum, a.node_, b.node_, card}));
}

BaseType BaseType::prod(BaseType a, BaseType b) {
    auto card = checked_mul(a.node_->card, b.node_->card);
    return BaseType(std::make_shared<const Node>(Node{Kind::Prod, a.node_, b.node_, card}));
}

BaseType BaseType::set(BaseType element) {
    auto n = element.node_->card;
    auto card = n >= 62 ? kTooBig : std::uint64_t{1} << n;
    return BaseType(std::make_shared<const Node>(Node{Kind::Set, element.node_, nullptr, card}));
}

BaseType BaseType::rel(BaseType dom, BaseType cod) {
    return BaseType(std::make_shared<const Node>(Node{Kind::Rel, dom.node_, cod.node_, kTooBig}));
}

BaseType::Kind BaseType::kind() const { return node_->kind; }

BaseType BaseType::left() const {
    if (!node_->a) {
        fail(ErrorKind::Internal, "type " + str() + " has no left component");
    }
    return BaseType(node_->a);
}

BaseType BaseType::right() const {
    if (!node_->b) {
        fail(ErrorKind::Internal, "type " + str() + " has no right component");
    }
    return BaseType(node_->b);
}

bool BaseType::enumerable() const {
    switch (kind()) {
        case Kind::Rel:
            return false;
        case Kind::Sum:
        case Kind::Prod:
            return BaseType(node_->a).enumerable() && BaseType(node_->b).enumerable();
        case Kind::Set:
            return BaseType(node_->a).enumerable();
        default:
            return true;
    }
}

std::uint64_t BaseType::cardinality() const {
    if (!enumerable()) {
        fail(ErrorKind::NotEnumerable, "type " + str() + " contains a relation type");
    }
    if (node_->card == kTooBig) {
        fail(ErrorKind::NotEnumerable, "type " + str() + " is too large to enumerate");
    }
    return node_->card;
}

namespace {

// Precedence: R < + < * < S.
int precedence(BaseType::Kind k) {
    switch (k) {
        case BaseType::Kind::Rel:
            return 0;
        case BaseType::Kind::Sum:
            return 1;
        case BaseType::Kind::Prod:
            return 2;
        case BaseType::Kind::Set:
            return 3;
        default:
            return 4;
    }
}

void render(const BaseType &t, int context, std::string &out) {
    int p = precedence(t.kind());
    bool paren = p < context;
    if (paren) {
        out += '(';
    }
    switch (t.kind()) {
        case BaseType::Kind::Zero:
            out += '0';
            break;
        case BaseType::Kind::One:
            out += '1';
            break;
        case BaseType::Kind::Bool:
            out += "bool";
            break;
        case BaseType::Kind::Set: {
            auto elem = t.element();
            out += "S ";
            render(elem, 3, out);
            break;
        }
        default: {
            auto l = t.left();
            auto r = t.right();
            const char *op = t.kind() == BaseType::Kind::Sum ? " + " : t.kind() == BaseType::Kind::Prod ? " * " : " R ";
            // Left associative: the right operand needs parens at equal precedence.
            render(l, p, out);
            out += op;
            render(r, p + 1, out);
            break;
        }
    }
    if (paren) {
        out += ')';
    }
}

}  // namespace

std::string BaseType::str() const {
    std::string out;
    render(*this, 0, out);
    return out;
}

bool operator==(const BaseType &a, const BaseType &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case BaseType::Kind::Zero:
        case BaseType::Kind::One:
        case BaseType::Kind::Bool:
            return true;
        case BaseType::Kind::Set:
            return BaseType(a.node_->a) == BaseType(b.node_->a);
        default:
            return BaseType(a.node_->a) == BaseType(b.node_->a) && BaseType(a.node_->b) == BaseType(b.node_->b);
    }
}

}  // namespace dqc
