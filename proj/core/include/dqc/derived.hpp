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

// Relations built from the seven core forms. Each builder is a syntactic
// expansion; the evaluator never sees these names.

#include "dqc/rel.hpp"
#include "dqc/value.hpp"

namespace dqc {

/// a R b  ->  (a * c) R (b * c)
RelExpr first(const RelExpr &r);
/// ((c * a) R b)  ->  c R (a * b)
RelExpr curry(const RelExpr &r);
/// (c R (a * b))  ->  (c * a) R b
RelExpr uncurry(const RelExpr &r);
/// A set of pairs over a * b read as a relation a R b.
RelExpr s2r(const XorSet &s);
/// ((a * c) R (b * c))  ->  a R b
RelExpr trace(const RelExpr &r);
/// a R b  ->  b R a, via the compact-closure unit and counit.
RelExpr adjoint_rel(const RelExpr &r);
/// S a  ->  a R 1
RelExpr costate(const XorSet &s);
/// S a -> S a -> 1 R 1
RelExpr dot(const XorSet &s1, const XorSet &s2);
/// S a -> S a -> a R a
RelExpr outer(const XorSet &s1, const XorSet &s2);

/// Left-nested sequence of the given relations; requires at least one.
RelExpr seq_all(std::initializer_list<RelExpr> rs);

}  // namespace dqc
