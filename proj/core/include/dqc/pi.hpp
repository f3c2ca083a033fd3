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

// The reversible combinator language: primitive type isomorphisms closed
// under sequential, sum, and product composition.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc {

/// Primitive isomorphisms. Each left-to-right / right-to-left reading is its
/// own name; `iso_adjoint` maps between the two.
enum class Iso : std::uint8_t {
    Id,
    ZeroE,        // 0 + b <-> b
    ZeroI,        // b <-> 0 + b
    SwapPlus,     // b1 + b2 <-> b2 + b1
    AssocLPlus,   // b1 + (b2 + b3) <-> (b1 + b2) + b3
    AssocRPlus,   // (b1 + b2) + b3 <-> b1 + (b2 + b3)
    UnitE,        // 1 * b <-> b
    UnitI,        // b <-> 1 * b
    SwapTimes,    // b1 * b2 <-> b2 * b1
    AssocLTimes,  // b1 * (b2 * b3) <-> (b1 * b2) * b3
    AssocRTimes,  // (b1 * b2) * b3 <-> b1 * (b2 * b3)
    Distrib0,     // 0 * b <-> 0
    Factor0,      // 0 <-> 0 * b
    Distrib,      // (b1 + b2) * b3 <-> b1 * b3 + b2 * b3
    Factor,       // b1 * b3 + b2 * b3 <-> (b1 + b2) * b3
    Bool2Sum,     // bool <-> 1 + 1
    Sum2Bool,     // 1 + 1 <-> bool
};

inline constexpr std::array<Iso, 17> kAllIsos = {
    Iso::Id,          Iso::ZeroE,       Iso::ZeroI,    Iso::SwapPlus, Iso::AssocLPlus, Iso::AssocRPlus,
    Iso::UnitE,       Iso::UnitI,       Iso::SwapTimes, Iso::AssocLTimes, Iso::AssocRTimes, Iso::Distrib0,
    Iso::Factor0,     Iso::Distrib,     Iso::Factor,   Iso::Bool2Sum, Iso::Sum2Bool,
};

std::string_view iso_name(Iso iso);
std::optional<Iso> iso_from_name(std::string_view name);
Iso iso_adjoint(Iso iso);

class PiComb {
   public:
    enum class Kind { Prim, Seq, Sum, Prod };

    static PiComb prim(Iso iso);
    /// `first` runs before `second`.
    static PiComb seq(PiComb first, PiComb second);
    static PiComb sum(PiComb left, PiComb right);
    static PiComb prod(PiComb left, PiComb right);

    Kind kind() const;
    Iso iso() const;
    const PiComb &lhs() const;
    const PiComb &rhs() const;

    /// Surface syntax: `a ; b`, `a (+) b`, `a (x) b`, fully parenthesized
    /// where needed.
    std::string str() const;

    friend bool operator==(const PiComb &a, const PiComb &b);

   private:
    struct Node;
    explicit PiComb(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct IsoType {
    BaseType lhs;
    BaseType rhs;

    std::string str() const { return lhs.str() + " <-> " + rhs.str(); }
    friend bool operator==(const IsoType &, const IsoType &) = default;
};

/// Most general ground type of `c`, unified against `annotation` when given.
/// TypeMismatch on incompatible composition (or set/relation types inside an
/// iso); AmbiguousType when a variable survives at the top level.
IsoType infer_comb_type(const PiComb &c, const std::optional<IsoType> &annotation = std::nullopt);

/// Forward evaluation. IllTypedValue when `v` does not match the combinator's
/// input shape; the impossible rows for the empty type raise Internal.
PiValue eval_comb(const PiComb &c, const PiValue &v);

/// Structural dual: primitives swapped with their partners, sequences
/// reversed, sums and products mapped componentwise.
PiComb adjoint_comb(const PiComb &c);

}  // namespace dqc
