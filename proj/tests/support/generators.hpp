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

// Random, type-directed generators for property tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dqc/gf2.hpp"
#include "dqc/pi.hpp"
#include "dqc/rel.hpp"
#include "dqc/syntax.hpp"
#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc::testing {

using Rng = std::mt19937_64;

/// Every type built from 0, 1, bool, + and * with at most \`max_leaves\`
/// leaves and at most \`max_card\` values.
std::vector<BaseType> all_small_types(std::uint64_t max_card, std::size_t max_leaves);

/// A random finite type without set or relation constructors, with at most
/// `max_card` values.
BaseType random_plain_type(Rng &rng, std::uint64_t max_card, int depth = 3);

/// A random combinator whose input type is `lhs`; returns it with its
/// output type. Intermediate types stay within `max_card` values where the
/// primitive allows a choice.
std::pair<PiComb, BaseType> random_comb(Rng &rng, const BaseType &lhs, int depth, std::uint64_t max_card = 16);

PiValue random_value(Rng &rng, const BaseType &t);
XorSet random_set(Rng &rng, const BaseType &elem);
/// Nonempty unless the type is empty.
XorSet random_nonempty_set(Rng &rng, const BaseType &elem);

/// A random relation whose domain is `dom`, mixing core forms and derived
/// builders; returns it with its codomain. Every result elaborates against
/// `dom` and has endpoints of at most `max_card` values.
std::pair<RelExpr, BaseType> random_rel(Rng &rng, const BaseType &dom, int depth, std::uint64_t max_card = 16);

/// \`arr id\` at \`dom\` followed by r. Derived expansions such as first leave
/// the passive component free until the context fixes it; this fixes it.
RelExpr pin_domain(const RelExpr &r, const BaseType &dom);

/// A program with a few definitions of every kind and a main directive on a
/// random input. With \`measure\`, main measures against the singleton basis
/// of its codomain.
SourceProgram random_program(Rng &rng, bool measure);

BitMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols);

}  // namespace dqc::testing
