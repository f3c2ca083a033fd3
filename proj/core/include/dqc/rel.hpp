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

// Relations over exclusive-union sets: the seven core forms, their typing,
// and the value/set application evaluators.

#include <memory>
#include <optional>
#include <string>

#include "dqc/gf2.hpp"
#include "dqc/pi.hpp"
#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc {

/// Core relation syntax. Type slots (the iso type of `arr`, the untouched
/// component of `second`, the parameters of `strength`, `eta` and `eps`) may
/// be left empty and are filled in by `elaborate`.
class RelExpr {
   public:
    enum class Kind { Arr, Seq, Second, Strength, State, Eta, Eps };

    static RelExpr arr(PiComb c, std::optional<IsoType> at = std::nullopt);
    /// `first` runs before `second`.
    static RelExpr seq(RelExpr first, RelExpr second);
    static RelExpr second(RelExpr r, std::optional<BaseType> fixed = std::nullopt);
    static RelExpr strength(std::optional<BaseType> outer = std::nullopt, std::optional<BaseType> inner = std::nullopt);
    static RelExpr state(XorSet s);
    static RelExpr eta(std::optional<BaseType> b = std::nullopt);
    static RelExpr eps(std::optional<BaseType> b = std::nullopt);

    Kind kind() const;

    const PiComb &comb() const;                       // Arr
    const std::optional<IsoType> &iso_type() const;   // Arr
    const RelExpr &lhs() const;                       // Seq first, Second operand
    const RelExpr &rhs() const;                       // Seq second
    const std::optional<BaseType> &slot() const;      // Second fixed, Eta/Eps b, Strength outer
    const std::optional<BaseType> &slot2() const;     // Strength inner
    const XorSet &state_set() const;                  // State

    /// True when every type slot in the tree is filled.
    bool elaborated() const;

    std::string str() const;

    friend bool operator==(const RelExpr &a, const RelExpr &b);

   private:
    struct Node;
    explicit RelExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct RelType {
    BaseType dom;
    BaseType cod;

    std::string str() const { return dom.str() + " ~> " + cod.str(); }
    friend bool operator==(const RelType &, const RelType &) = default;
};

/// Ground type of `r`, optionally pinned by a known domain. TypeMismatch on
/// clashes; AmbiguousType when an endpoint stays polymorphic; NotEnumerable
/// when an endpoint mentions a relation type.
RelType type_check_rel(const RelExpr &r, const std::optional<BaseType> &dom_hint = std::nullopt);

/// Unifies without requiring ground endpoints; throws only TypeMismatch.
void check_rel_consistent(const RelExpr &r);

/// Principal type with unresolved variables rendered as 'a, 'b, ...
std::string describe_rel_type(const RelExpr &r);

/// Copy of `r` with every type slot filled. Throws like type_check_rel, plus
/// AmbiguousType when an interior slot cannot be determined.
RelExpr elaborate(const RelExpr &r, const std::optional<BaseType> &dom_hint = std::nullopt);

/// Domain and codomain of an elaborated tree, read off its slots.
RelType elaborated_type(const RelExpr &r);

/// `r @ v`: the set of values related to `v`.
XorSet apply_rel_value(const RelExpr &r, const PiValue &v);

/// `r @~ s`: exclusive-union fold of apply_rel_value over the elements.
XorSet apply_rel_set(const RelExpr &r, const XorSet &s);

/// Evaluators on trees already elaborated; skip re-inference.
XorSet apply_elaborated_value(const RelExpr &r, const PiValue &v);
XorSet apply_elaborated_set(const RelExpr &r, const XorSet &s);

/// Set literal `{a, b}`, followed by `@ type` unless the elements alone
/// determine the element type.
std::string set_literal(const XorSet &s);

/// A relation of type 1 ~> 1 read as a field element: T iff it relates ()
/// to {()}.
Gf2 scalar_of(const RelExpr &r);

}  // namespace dqc
