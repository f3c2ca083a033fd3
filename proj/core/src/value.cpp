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

#include "dqc/value.hpp"

#include <algorithm>

#include "dqc/error.hpp"

namespace dqc {

struct PiValue::Node {
    Kind kind;
    // Left/Right use `a`; Pair uses `a` and `b`.
    std::vector<PiValue> children;
    std::shared_ptr<const XorSet> set;
};

// ---------------------------------------------------------------------------
// PiValue

PiValue PiValue::unit() {
    static const PiValue v(std::make_shared<const Node>(Node{Kind::Unit, {}, nullptr}));
    return v;
}

PiValue PiValue::left(PiValue v) {
    return PiValue(std::make_shared<const Node>(Node{Kind::Left, {std::move(v)}, nullptr}));
}

PiValue PiValue::right(PiValue v) {
    return PiValue(std::make_shared<const Node>(Node{Kind::Right, {std::move(v)}, nullptr}));
}

PiValue PiValue::pair(PiValue a, PiValue b) {
    return PiValue(std::make_shared<const Node>(Node{Kind::Pair, {std::move(a), std::move(b)}, nullptr}));
}

PiValue PiValue::boolean(bool b) {
    static const PiValue f(std::make_shared<const Node>(Node{Kind::False, {}, nullptr}));
    static const PiValue t(std::make_shared<const Node>(Node{Kind::True, {}, nullptr}));
    return b ? t : f;
}

PiValue PiValue::set(XorSet s) {
    return PiValue(std::make_shared<const Node>(Node{Kind::Set, {}, std::make_shared<const XorSet>(std::move(s))}));
}

PiValue::Kind PiValue::kind() const { return node_->kind; }

const PiValue &PiValue::inner() const {
    if (kind() != Kind::Left && kind() != Kind::Right) {
        fail(ErrorKind::IllTypedValue, "expected an injection, got " + str());
    }
    return node_->children[0];
}

const PiValue &PiValue::first() const {
    if (kind() != Kind::Pair) {
        fail(ErrorKind::IllTypedValue, "expected a pair, got " + str());
    }
    return node_->children[0];
}

const PiValue &PiValue::second() const {
    if (kind() != Kind::Pair) {
        fail(ErrorKind::IllTypedValue, "expected a pair, got " + str());
    }
    return node_->children[1];
}

const XorSet &PiValue::set_value() const {
    if (kind() != Kind::Set) {
        fail(ErrorKind::IllTypedValue, "expected a set, got " + str());
    }
    return *node_->set;
}

namespace {

void render(const PiValue &v, bool atomic, std::string &out) {
    switch (v.kind()) {
        case PiValue::Kind::Unit:
            out += "()";
            return;
        case PiValue::Kind::False:
            out += 'F';
            return;
        case PiValue::Kind::True:
            out += 'T';
            return;
        case PiValue::Kind::Pair:
            out += '(';
            render(v.first(), false, out);
            out += ", ";
            render(v.second(), false, out);
            out += ')';
            return;
        case PiValue::Kind::Set:
            out += v.set_value().str();
            return;
        case PiValue::Kind::Left:
        case PiValue::Kind::Right:
            if (atomic) {
                out += '(';
            }
            out += v.kind() == PiValue::Kind::Left ? "L " : "R ";
            render(v.inner(), true, out);
            if (atomic) {
                out += ')';
            }
            return;
    }
}

// Compare two canonical sets as binary counters: the larger maximal
// element of the symmetric difference decides.
std::strong_ordering compare_sets(const XorSet &a, const XorSet &b) {
    auto ea = a.elements();
    auto eb = b.elements();
    auto ia = ea.size();
    auto ib = eb.size();
    while (ia > 0 && ib > 0) {
        auto c = ea[ia - 1] <=> eb[ib - 1];
        if (c != 0) {
            return c;
        }
        --ia;
        --ib;
    }
    return ia <=> ib;
}

}  // namespace

std::string PiValue::str() const {
    std::string out;
    render(*this, false, out);
    return out;
}

std::strong_ordering operator<=>(const PiValue &a, const PiValue &b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    using K = PiValue::Kind;
    auto ka = a.kind();
    auto kb = b.kind();
    if (ka != kb) {
        // Within one type this only orders F/T and Left/Right, which the
        // enum declares in enumeration order.
        return static_cast<int>(ka) <=> static_cast<int>(kb);
    }
    switch (ka) {
        case K::Unit:
        case K::False:
        case K::True:
            return std::strong_ordering::equal;
        case K::Left:
        case K::Right:
            return a.inner() <=> b.inner();
        case K::Pair: {
            auto c = a.first() <=> b.first();
            return c != 0 ? c : a.second() <=> b.second();
        }
        case K::Set:
            return compare_sets(a.set_value(), b.set_value());
    }
    return std::strong_ordering::equal;
}

bool operator==(const PiValue &a, const PiValue &b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Typing and enumeration

bool inhabits(const PiValue &v, const BaseType &b) {
    using K = BaseType::Kind;
    switch (b.kind()) {
        case K::Zero:
            return false;
        case K::One:
            return v.is(PiValue::Kind::Unit);
        case K::Bool:
            return v.is(PiValue::Kind::False) || v.is(PiValue::Kind::True);
        case K::Sum:
            if (v.is(PiValue::Kind::Left)) {
                return inhabits(v.inner(), b.left());
            }
            if (v.is(PiValue::Kind::Right)) {
                return inhabits(v.inner(), b.right());
            }
            return false;
        case K::Prod:
            return v.is(PiValue::Kind::Pair) && inhabits(v.first(), b.left()) && inhabits(v.second(), b.right());
        case K::Set:
            return v.is(PiValue::Kind::Set) && v.set_value().elem_type() == b.element();
        case K::Rel:
            return false;
    }
    return false;
}

std::uint64_t value_index(const BaseType &b, const PiValue &v) {
    using K = BaseType::Kind;
    switch (b.kind()) {
        case K::One:
            if (v.is(PiValue::Kind::Unit)) {
                return 0;
            }
            break;
        case K::Bool:
            if (v.is(PiValue::Kind::False)) {
                return 0;
            }
            if (v.is(PiValue::Kind::True)) {
                return 1;
            }
            break;
        case K::Sum:
            if (v.is(PiValue::Kind::Left)) {
                return value_index(b.left(), v.inner());
            }
            if (v.is(PiValue::Kind::Right)) {
                return b.left().cardinality() + value_index(b.right(), v.inner());
            }
            break;
        case K::Prod:
            if (v.is(PiValue::Kind::Pair)) {
                return value_index(b.left(), v.first()) * b.right().cardinality() + value_index(b.right(), v.second());
            }
            break;
        case K::Set:
            if (v.is(PiValue::Kind::Set) && v.set_value().elem_type() == b.element()) {
                b.cardinality();  // range check
                std::uint64_t bits = 0;
                for (const auto &e : v.set_value().elements()) {
                    bits |= std::uint64_t{1} << value_index(b.element(), e);
                }
                return bits;
            }
            break;
        case K::Zero:
            break;
        case K::Rel:
            fail(ErrorKind::NotEnumerable, "relation type " + b.str() + " has no enumeration");
    }
    fail(ErrorKind::IllTypedValue, "value " + v.str() + " does not inhabit " + b.str());
}

PiValue value_at(const BaseType &b, std::uint64_t index) {
    using K = BaseType::Kind;
    auto n = b.cardinality();
    if (index >= n) {
        fail(ErrorKind::Internal, "index " + std::to_string(index) + " out of range for " + b.str());
    }
    switch (b.kind()) {
        case K::One:
            return PiValue::unit();
        case K::Bool:
            return PiValue::boolean(index == 1);
        case K::Sum: {
            auto nl = b.left().cardinality();
            return index < nl ? PiValue::left(value_at(b.left(), index)) : PiValue::right(value_at(b.right(), index - nl));
        }
        case K::Prod: {
            auto nr = b.right().cardinality();
            return PiValue::pair(value_at(b.left(), index / nr), value_at(b.right(), index % nr));
        }
        case K::Set: {
            auto elem = b.element();
            std::vector<PiValue> elems;
            for (std::uint64_t i = 0; (index >> i) != 0; ++i) {
                if ((index >> i) & 1U) {
                    elems.push_back(value_at(elem, i));
                }
            }
            return PiValue::set(XorSet::of(elem, std::move(elems)));
        }
        default:
            break;
    }
    fail(ErrorKind::Internal, "unreachable enumeration case for " + b.str());
}

std::vector<PiValue> enumerate_values(const BaseType &b) {
    auto n = b.cardinality();
    std::vector<PiValue> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(value_at(b, i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// XorSet

XorSet::XorSet(BaseType elem_type) : elem_type_(std::move(elem_type)) {}

XorSet XorSet::of(BaseType elem_type, std::vector<PiValue> elems) {
    for (const auto &e : elems) {
        if (!inhabits(e, elem_type)) {
            fail(ErrorKind::IllTypedValue, "set element " + e.str() + " does not inhabit " + elem_type.str());
        }
    }
    std::sort(elems.begin(), elems.end());
    XorSet out(std::move(elem_type));
    out.elems_.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size();) {
        std::size_t j = i;
        while (j < elems.size() && elems[j] == elems[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            out.elems_.push_back(elems[i]);
        }
        i = j;
    }
    return out;
}

XorSet XorSet::singleton(BaseType elem_type, PiValue v) { return of(std::move(elem_type), {std::move(v)}); }

std::span<const PiValue> XorSet::elements() const & { return elems_; }
bool XorSet::empty() const { return elems_.empty(); }
std::size_t XorSet::size() const { return elems_.size(); }

bool XorSet::contains(const PiValue &v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

std::string XorSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += elems_[i].str();
    }
    out += '}';
    return out;
}

bool operator==(const XorSet &a, const XorSet &b) { return a.elem_type_ == b.elem_type_ && a.elems_ == b.elems_; }

XorSet xor_union(const XorSet &a, const XorSet &b) {
    if (!(a.elem_type_ == b.elem_type_)) {
        fail(ErrorKind::TypeMismatch,
             "exclusive union of sets over " + a.elem_type_.str() + " and " + b.elem_type_.str());
    }
    XorSet out(a.elem_type_);
    std::set_symmetric_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                                  std::back_inserter(out.elems_));
    return out;
}

}  // namespace dqc
