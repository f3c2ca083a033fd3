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

// Measurement against a dual basis, and the invertibility gate on evolution
// steps.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dqc/rel.hpp"
#include "dqc/value.hpp"

namespace dqc {

/// A sequence of measurement vectors, optionally paired with the basis they
/// are dual to.
class DualBasis {
   public:
    /// Requires a nonempty list over one element type (TypeMismatch) whose
    /// vectors are linearly independent (DimensionMismatch). When `source`
    /// is given it must satisfy check_dual (DimensionMismatch otherwise).
    explicit DualBasis(std::vector<XorSet> duals, std::optional<std::vector<XorSet>> source = std::nullopt);

    const std::vector<XorSet> &duals() const { return duals_; }
    const std::optional<std::vector<XorSet>> &source_basis() const { return source_; }
    const BaseType &elem_type() const { return duals_.front().elem_type(); }
    std::size_t size() const { return duals_.size(); }

   private:
    std::vector<XorSet> duals_;
    std::optional<std::vector<XorSet>> source_;
};

struct MeasurementOutcome {
    std::size_t index;
    XorSet dual;
    bool deterministic;
    /// Every dual index whose overlap with the state is T, ascending.
    std::vector<std::size_t> matches;
};

/// The overlap scalar of two sets, computed by evaluating dot(a, b).
Gf2 overlap(const XorSet &a, const XorSet &b);

/// True iff overlap(duals[i], basis[j]) is T exactly when i == j. False on
/// length mismatch; TypeMismatch when element types differ.
bool check_dual(const std::vector<XorSet> &basis, const std::vector<XorSet> &duals);

/// Every dual of `basis`, found by exhaustive search over the nonzero sets
/// of its element type. Each position is solved independently, so the result
/// is the product of per-position candidates; a unique dual yields one entry.
/// NotEnumerable when the element type has more than 16 values.
std::vector<std::vector<XorSet>> find_duals(const std::vector<XorSet> &basis);

/// Measures `s` against `duals`. A single matching dual is returned as
/// deterministic whatever the seed. Otherwise the choice is
/// matches[mt19937_64(seed)() % matches.size()]. ZeroVector for the empty
/// set, NoOutcome when nothing matches, TypeMismatch on element types.
MeasurementOutcome measure(const XorSet &s, const DualBasis &duals, std::uint64_t seed);

/// True iff the matrix of `r` is invertible. DimensionMismatch when the
/// matrix is not square.
bool require_invertible(const RelExpr &r, const std::optional<BaseType> &dom_hint = std::nullopt);

/// The 1-qubit bases over bool: "x", "x_dual", "y", "z".
std::optional<std::vector<XorSet>> named_basis(std::string_view name);

}  // namespace dqc
