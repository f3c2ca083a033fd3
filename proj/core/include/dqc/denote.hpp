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

// Compositional matrix meaning of relations, built without consulting the
// relational evaluator except for Π permutations.

#include <optional>

#include "dqc/gf2.hpp"
#include "dqc/rel.hpp"

namespace dqc {

/// Largest matrix (rows * cols bits) denote_rel will build.
inline constexpr std::uint64_t kMaxDenotationBits = std::uint64_t{1} << 30;

/// Elaborates `r` (optionally pinning its domain) and builds its matrix.
/// NotEnumerable when the matrix would exceed kMaxDenotationBits.
Gf2Mat denote_rel(const RelExpr &r, const std::optional<BaseType> &dom_hint = std::nullopt);

/// Same, for a tree that is already elaborated.
Gf2Mat denote_elaborated(const RelExpr &r);

struct Soundness {
    bool ok;
    Gf2Vec evaluated;  // vec_of_set(r @~ s)
    Gf2Vec denoted;    // M(r) applied to vec_of_set(s)
};

Soundness compare_interpretations(const RelExpr &r, const XorSet &s);

/// True iff the set evaluator and the matrix meaning agree on `s`.
bool soundness_check(const RelExpr &r, const XorSet &s);

}  // namespace dqc
