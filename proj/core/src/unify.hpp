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

// First-order unification over the finite type grammar with type variables.
// Private to the library: public APIs only ever hand out ground BaseTypes.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dqc/pi.hpp"
#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc::detail {

struct TyNode;
using Ty = std::shared_ptr<const TyNode>;

struct TyNode {
    enum class Tag { Var, Zero, One, Bool, Sum, Prod, Set, Rel };
    Tag tag;
    int var = -1;
    Ty a;
    Ty b;
};

class Unifier {
   public:
    Ty fresh();
    Ty zero() const;
    Ty one() const;
    Ty boolean() const;
    Ty sum(Ty a, Ty b) const;
    Ty prod(Ty a, Ty b) const;
    Ty set(Ty a) const;

    Ty from(const BaseType &b) const;

    /// Follows variable bindings at the root only.
    Ty walk(Ty t) const;

    /// Throws TypeMismatch (with `what` as context) on clash or cyclic type.
    void unify(const Ty &a, const Ty &b, const std::string &what);

    bool ground(const Ty &t) const;
    /// Requires ground(t).
    BaseType to_base(const Ty &t) const;
    std::optional<BaseType> try_base(const Ty &t) const;

    /// Renders with unresolved variables named a, b, c, ... in order of
    /// first appearance across calls.
    std::string show(const Ty &t);

   private:
    bool occurs(int var, const Ty &t) const;
    std::vector<Ty> bindings_;
    std::vector<int> names_;
};

/// Endpoint types of a combinator, with fresh variables per primitive
/// occurrence. Set types are not rejected here; callers decide.
struct CombTyping {
    Ty lhs;
    Ty rhs;
};
CombTyping infer_comb(Unifier &u, const PiComb &c);

/// Type of a value with variables for the unconstrained side of injections.
Ty infer_value(Unifier &u, const PiValue &v);

/// Rejects set and relation constructors (plain Π types).
bool is_plain_pi(const Unifier &u, const Ty &t);

}  // namespace dqc::detail
