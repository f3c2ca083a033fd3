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

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dqc/types.hpp"

namespace dqc {

class PiValue;

/// A finite set under exclusive union, kept canonical: elements are distinct
/// and sorted ascending in enumeration order. Doubles as a vector over the
/// two-element field indexed by the values of `elem_type`.
class XorSet {
   public:
    explicit XorSet(BaseType elem_type);

    /// Folds `elems` with exclusive union, so repeated values cancel in
    /// pairs. Every element must inhabit `elem_type` (IllTypedValue).
    static XorSet of(BaseType elem_type, std::vector<PiValue> elems);
    static XorSet singleton(BaseType elem_type, PiValue v);

    const BaseType &elem_type() const { return elem_type_; }
    std::span<const PiValue> elements() const &;
    /// The span would dangle.
    std::span<const PiValue> elements() const && = delete;
    bool empty() const;
    std::size_t size() const;
    bool contains(const PiValue &v) const;

    /// `{}` or `{a, b, ...}`.
    std::string str() const;

    friend bool operator==(const XorSet &a, const XorSet &b);
    friend XorSet xor_union(const XorSet &a, const XorSet &b);

   private:
    BaseType elem_type_;
    std::vector<PiValue> elems_;
};

/// Symmetric difference. TypeMismatch when element types differ.
XorSet xor_union(const XorSet &a, const XorSet &b);

class PiValue {
   public:
    enum class Kind { Unit, Left, Right, Pair, False, True, Set };

    static PiValue unit();
    static PiValue left(PiValue v);
    static PiValue right(PiValue v);
    static PiValue pair(PiValue a, PiValue b);
    static PiValue boolean(bool b);
    static PiValue set(XorSet s);

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Payload of Left/Right.
    const PiValue &inner() const;
    const PiValue &first() const;
    const PiValue &second() const;
    const XorSet &set_value() const;

    std::string str() const;

    /// Enumeration order for values of a common type: () alone, F < T,
    /// every Left before every Right, pairs first-major, sets as binary
    /// counters with the least element as the low bit.
    friend std::strong_ordering operator<=>(const PiValue &a, const PiValue &b);
    friend bool operator==(const PiValue &a, const PiValue &b);

   private:
    struct Node;
    explicit PiValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline const PiValue kBF = PiValue::boolean(false);
inline const PiValue kBT = PiValue::boolean(true);

bool inhabits(const PiValue &v, const BaseType &b);

/// All values of `b` in enumeration order. NotEnumerable for relation types.
std::vector<PiValue> enumerate_values(const BaseType &b);

/// Position of `v` in enumerate_values(b), computed arithmetically.
std::uint64_t value_index(const BaseType &b, const PiValue &v);

/// Inverse of value_index.
PiValue value_at(const BaseType &b, std::uint64_t index);

}  // namespace dqc
