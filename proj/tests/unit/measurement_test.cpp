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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "dqc/derived.hpp"
#include "dqc/error.hpp"
#include "dqc/measurement.hpp"
#include "dqc/syntax.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace dqc;
using dqc::testing::Rng;

namespace {

const BaseType kBool = BaseType::boolean();
const BaseType kBool2 = BaseType::prod(kBool, kBool);

XorSet S(std::string_view text) { return parse_set(text); }

std::vector<XorSet> basis(std::initializer_list<std::string_view> texts) {
    std::vector<XorSet> out;
    for (auto t : texts) {
        out.push_back(parse_set(std::string(t) + " @ bool"));
    }
    return out;
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Internal;
}

const std::vector<XorSet> kX = basis({"{T}", "{F, T}"});
const std::vector<XorSet> kXDual = basis({"{F, T}", "{F}"});
const std::vector<XorSet> kY = basis({"{F, T}", "{F}"});
const std::vector<XorSet> kZ = basis({"{F}", "{T}"});

// The superdense coding pieces, built directly.
const XorSet kShared = S("{(F, F), (T, T)}");
RelExpr alice(int n) {
    auto neg = RelExpr::arr(PiComb::seq(PiComb::prim(Iso::Bool2Sum),
                                        PiComb::seq(PiComb::prim(Iso::SwapPlus), PiComb::prim(Iso::Sum2Bool))));
    auto k = s2r(S("{(F, F), (T, F), (T, T)}"));
    switch (n) {
        case 0:
            return RelExpr::arr(PiComb::prim(Iso::Id));
        case 1:
            return neg;
        case 2:
            return k;
        default:
            return RelExpr::seq(neg, k);
    }
}
const std::vector<XorSet> kDualBasis = {S("{(F, T), (T, F), (T, T)}"), S("{(F, F), (T, F), (T, T)}"),
                                        S("{(F, T), (T, F)}"), S("{(F, F), (T, T)}")};

}  // namespace

TEST(measurement_dual, check_dual_examples) {
    ASSERT_TRUE(check_dual(kX, kXDual));
    ASSERT_TRUE(check_dual(kZ, kZ));
    ASSERT_FALSE(check_dual(kX, kZ));
    ASSERT_FALSE(check_dual(kX, {kXDual[0]}));
    ASSERT_EQ(kind_of([] { check_dual(kX, {S("{(F, F)}"), S("{(T, T)}")}); }), ErrorKind::TypeMismatch);
}

TEST(measurement_dual, named_bases) {
    ASSERT_EQ(*named_basis("x"), kX);
    ASSERT_EQ(*named_basis("x_dual"), kXDual);
    ASSERT_EQ(*named_basis("y"), kY);
    ASSERT_EQ(*named_basis("z"), kZ);
    ASSERT_FALSE(named_basis("w").has_value());
}

TEST(measurement_dual, computed_duals_are_unique) {
    auto x = find_duals(kX);
    ASSERT_EQ(x.size(), 1u);
    ASSERT_EQ(x[0], kXDual);
    auto z = find_duals(kZ);
    ASSERT_EQ(z.size(), 1u);
    ASSERT_EQ(z[0], kZ);
    auto y = find_duals(kY);
    ASSERT_EQ(y.size(), 1u);
    ASSERT_EQ(y[0], basis({"{T}", "{F, T}"}));
    ASSERT_TRUE(check_dual(kY, y[0]));
}

TEST(measurement_dual, superdense_dual_basis) {
    std::vector<XorSet> bell;
    for (int n = 0; n < 4; ++n) {
        bell.push_back(apply_rel_set(first(alice(n)), kShared));
    }
    ASSERT_TRUE(check_dual(bell, kDualBasis));
    auto found = find_duals(bell);
    ASSERT_EQ(found.size(), 1u);
    ASSERT_EQ(found[0], kDualBasis);
}

TEST(measurement_dual, dual_implies_full_rank) {
    Rng rng(41);
    int duals = 0;
    for (int i = 0; i < 200; ++i) {
        auto k = 1 + static_cast<std::size_t>(rng() % 4);
        std::vector<XorSet> b;
        for (std::size_t j = 0; j < k; ++j) {
            b.push_back(dqc::testing::random_nonempty_set(rng, kBool2));
        }
        for (const auto &d : find_duals(b)) {
            ASSERT_TRUE(check_dual(b, d));
            ++duals;
            // Rows are the duals; independent rows mean a trivial kernel of
            // the transpose.
            BitMatrix m(4, k);
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t r = 0; r < 4; ++r) {
                    m.set(r, j, vec_of_set(d[j]).bits.at(r));
                }
            }
            ASSERT_TRUE(dqc::testing::has_trivial_kernel(m));
        }
    }
    ASSERT_GT(duals, 100);
}

TEST(measurement_dual, validation) {
    ASSERT_EQ(kind_of([] { DualBasis({}); }), ErrorKind::TypeMismatch);
    ASSERT_EQ(kind_of([] { DualBasis({S("{T}"), S("{T}")}); }), ErrorKind::DimensionMismatch);
    ASSERT_EQ(kind_of([] { DualBasis(kZ, kX); }), ErrorKind::DimensionMismatch);
    ASSERT_EQ(kind_of([] { DualBasis({S("{T}"), S("{(F, F)}")}); }), ErrorKind::TypeMismatch);
    DualBasis ok(kXDual, kX);
    ASSERT_EQ(ok.size(), 2u);
    ASSERT_EQ(ok.elem_type(), kBool);
}

TEST(measurement_measure, examples) {
    auto x = measure(S("{T}"), DualBasis(kXDual), 0);
    ASSERT_EQ(x.index, 0u);
    ASSERT_TRUE(x.deterministic);
    ASSERT_EQ(x.dual, kXDual[0]);
    auto z = measure(S("{F}"), DualBasis(kZ), 99);
    ASSERT_EQ(z.index, 0u);
    ASSERT_TRUE(z.deterministic);
    auto state = apply_rel_set(first(alice(2)), kShared);
    ASSERT_EQ(state, S("{(F, F), (F, T), (T, T)}"));
    auto sd = measure(state, DualBasis(kDualBasis), 5);
    ASSERT_EQ(sd.index, 2u);
    ASSERT_TRUE(sd.deterministic);
}

TEST(measurement_measure, seeded_choice) {
    // {F, T} overlaps both Z duals.
    std::set<std::size_t> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        auto out = measure(S("{F, T}"), DualBasis(kZ), seed);
        ASSERT_FALSE(out.deterministic);
        ASSERT_EQ(out.matches, (std::vector<std::size_t>{0, 1}));
        ASSERT_EQ(out.index, out.matches[std::mt19937_64(seed)() % 2]);
        ASSERT_EQ(out.index, measure(S("{F, T}"), DualBasis(kZ), seed).index);
        seen.insert(out.index);
    }
    ASSERT_EQ(seen.size(), 2u);
}

TEST(measurement_measure, errors) {
    ASSERT_EQ(kind_of([] { measure(XorSet(kBool), DualBasis(kZ), 0); }), ErrorKind::ZeroVector);
    ASSERT_EQ(kind_of([] { measure(S("{(F, F)}"), DualBasis(kZ), 0); }), ErrorKind::TypeMismatch);
    // {F, T} is orthogonal to the only dual offered.
    ASSERT_EQ(kind_of([] { measure(S("{F, T}"), DualBasis({S("{F, T}")}), 0); }), ErrorKind::NoOutcome);
}

TEST(measurement_measure, superdense_is_deterministic) {
    DualBasis duals(kDualBasis);
    for (int n = 0; n < 4; ++n) {
        auto state = apply_rel_set(first(alice(n)), kShared);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto out = measure(state, duals, seed);
            ASSERT_EQ(out.index, static_cast<std::size_t>(n));
            ASSERT_TRUE(out.deterministic);
        }
    }
}

TEST(measurement_measure, outcome_always_overlaps) {
    Rng rng(42);
    DualBasis duals(kDualBasis);
    for (int i = 0; i < 300; ++i) {
        auto s = dqc::testing::random_nonempty_set(rng, kBool2);
        auto out = measure(s, duals, rng());
        ASSERT_EQ(overlap(out.dual, s), Gf2::T);
        ASSERT_TRUE(dqc::testing::intersection_parity(out.dual, s));
        for (std::size_t k = 0; k < duals.size(); ++k) {
            bool listed = std::find(out.matches.begin(), out.matches.end(), k) != out.matches.end();
            ASSERT_EQ(listed, dqc::testing::intersection_parity(duals.duals()[k], s));
        }
    }
}

TEST(measurement_invertible, examples) {
    ASSERT_TRUE(require_invertible(RelExpr::arr(PiComb::prim(Iso::SwapTimes)), kBool2));
    ASSERT_TRUE(require_invertible(s2r(S("{(F, F), (T, F), (T, T)}"))));
    auto all = s2r(S("{(F, F), (F, T), (T, F), (T, T)}"));
    ASSERT_FALSE(require_invertible(all));
    ASSERT_FALSE(require_invertible(RelExpr::seq(all, all)));
    ASSERT_EQ(kind_of([] { require_invertible(RelExpr::eta(kBool)); }), ErrorKind::DimensionMismatch);
}
