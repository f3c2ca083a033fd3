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

#include <cstdint>
#include <memory>
#include <string>

namespace dqc {

/// Finite base types: 0, 1, bool, sums, products, sets of b, and the
/// relation type b R b. Immutable and cheap to copy (shared structure).
class BaseType {
   public:
    enum class Kind { Zero, One, Bool, Sum, Prod, Set, Rel };

    static BaseType zero();
    static BaseType one();
    static BaseType boolean();
    static BaseType sum(BaseType a, BaseType b);
    static BaseType prod(BaseType a, BaseType b);
    static BaseType set(BaseType element);
    static BaseType rel(BaseType dom, BaseType cod);

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Left operand of Sum/Prod/Rel, the element type of Set.
    BaseType left() const;
    /// Right operand of Sum/Prod/Rel.
    BaseType right() const;
    BaseType element() const { return left(); }

    /// True when no Rel node occurs anywhere inside.
    bool enumerable() const;

    /// Number of values; throws NotEnumerable for Rel or when the count
    /// does not fit in 62 bits.
    std::uint64_t cardinality() const;

    /// Surface notation: `0`, `1`, `bool`, `a + b`, `a * b`, `S a`, `a R b`.
    std::string str() const;

    friend bool operator==(const BaseType &a, const BaseType &b);

   private:
    struct Node;
    explicit BaseType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline std::uint64_t cardinality(const BaseType &b) { return b.cardinality(); }

}  // namespace dqc
