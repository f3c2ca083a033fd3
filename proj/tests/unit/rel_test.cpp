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

#include <functional>

#include "dqc/denote.hpp"
#include "dqc/derived.hpp"
#include "dqc/error.hpp"
#include "dqc/rel.hpp"
#include "dqc/syntax.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace dqc;
using dqc::testing::Rng;

namespace {

const BaseType kOne = BaseType::one();
const BaseType kBool = BaseType::boolean();
const BaseType kBool2 = BaseType::prod(kBool, kBool);
const PiValue kUnit = PiValue::unit();

XorSet bools(std::vector<PiValue> v) { return XorSet::of(kBool, std::move(v)); }
XorSet set(std::string_view text) { return parse_set(text); }
PiValue pr(PiValue a, PiValue b) { return PiValue::pair(std::move(a), std::move(b)); }

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Internal;
}

const XorSet kR1Pairs = set("{(F, F), (T, F), (T, T)}");
const XorSet kR2Pairs = set("{(F, F), (F, T), (T, F)}");

}  // namespace

TEST(rel_sets, exclusive_union) {
    ASSERT_EQ(xor_union(bools({kBT}), bools({kBF, kBT})), bools({kBF}));
    auto s = bools({kBT});
    ASSERT_EQ(xor_union(s, XorSet(kBool)), s);
    ASSERT_EQ(xor_union(bools({kBF}), bools({kBF})), XorSet(kBool));
    ASSERT_EQ(kind_of([] { xor_union(XorSet(kBool), XorSet(kOne)); }), ErrorKind::TypeMismatch);
}

TEST(rel_sets, canonical_form) {
    auto s = XorSet::of(kBool, {kBT, kBF, kBT, kBT});
    ASSERT_EQ(s.size(), 2u);
    ASSERT_EQ(s.elements()[0], kBF);
    ASSERT_EQ(s.str(), "{F, T}");
    ASSERT_EQ(XorSet::of(kBool, {kBF, kBF}), XorSet(kBool));
    ASSERT_EQ(kind_of([] { XorSet::of(kBool, {kUnit}); }), ErrorKind::IllTypedValue);
}

TEST(rel_sets, union_laws) {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto t = dqc::testing::random_plain_type(rng, 8);
        auto a = dqc::testing::random_set(rng, t);
        auto b = dqc::testing::random_set(rng, t);
        auto c = dqc::testing::random_set(rng, t);
        ASSERT_EQ(xor_union(a, a), XorSet(t));
        ASSERT_EQ(xor_union(a, b), xor_union(b, a));
        ASSERT_EQ(xor_union(xor_union(a, b), c), xor_union(a, xor_union(b, c)));
    }
}

TEST(rel_typing, examples) {
    auto st = type_check_rel(RelExpr::strength(kBool, kBool));
    ASSERT_EQ(st.dom, BaseType::prod(kBool, BaseType::set(kBool)));
    ASSERT_EQ(st.cod, kBool2);
    ASSERT_EQ(type_check_rel(RelExpr::eta(kBool)), (RelType{kOne, kBool2}));
    ASSERT_EQ(type_check_rel(RelExpr::state(set("{(F, F), (T, T)}"))), (RelType{kOne, kBool2}));
    ASSERT_EQ(type_check_rel(RelExpr::eps(kBool)), (RelType{kBool2, kOne}));
    // Arr is typed by the iso it lifts, which may be heterogeneous.
    ASSERT_EQ(type_check_rel(RelExpr::arr(PiComb::prim(Iso::Bool2Sum))),
              (RelType{kBool, BaseType::sum(kOne, kOne)}));
}

TEST(rel_typing, inference_fills_slots) {
    auto r = RelExpr::seq(RelExpr::eta(kBool), RelExpr::eps());
    ASSERT_FALSE(r.elaborated());
    auto e = elaborate(r);
    ASSERT_TRUE(e.elaborated());
    ASSERT_EQ(elaborated_type(e), (RelType{kOne, kOne}));
    ASSERT_EQ(type_check_rel(RelExpr::arr(PiComb::prim(Iso::Id)), kBool), (RelType{kBool, kBool}));
    ASSERT_EQ(type_check_rel(first(RelExpr::eps(kBool)), BaseType::prod(kBool2, kOne)),
              (RelType{BaseType::prod(kBool2, kOne), BaseType::prod(kOne, kOne)}));
}

TEST(rel_typing, errors) {
    ASSERT_EQ(kind_of([] { type_check_rel(RelExpr::eps()); }), ErrorKind::AmbiguousType);
    ASSERT_EQ(kind_of([] { type_check_rel(RelExpr::seq(RelExpr::eta(kBool), RelExpr::eps(kOne))); }),
              ErrorKind::TypeMismatch);
    ASSERT_EQ(kind_of([] { type_check_rel(RelExpr::eps(kBool), kBool); }), ErrorKind::TypeMismatch);
    // The traced component of trace (arr id) is never determined.
    ASSERT_EQ(kind_of([] { elaborate(trace(RelExpr::arr(PiComb::prim(Iso::Id))), kBool); }),
              ErrorKind::AmbiguousType);
    ASSERT_EQ(kind_of([] { check_rel_consistent(RelExpr::seq(RelExpr::eta(kBool), RelExpr::eps(kOne))); }),
              ErrorKind::TypeMismatch);
}

TEST(rel_eval, value_examples) {
    ASSERT_EQ(apply_rel_value(RelExpr::eps(), pr(kBT, kBF)), XorSet(kOne));
    ASSERT_EQ(apply_rel_value(RelExpr::eps(), pr(kBT, kBT)), XorSet::singleton(kOne, kUnit));
    ASSERT_EQ(apply_rel_value(RelExpr::eta(kBool), kUnit), set("{(F, F), (T, T)}"));
    ASSERT_EQ(apply_rel_value(s2r(kR2Pairs), kBT), bools({kBF}));
    ASSERT_EQ(apply_rel_value(s2r(kR2Pairs), kBF), bools({kBF, kBT}));
    ASSERT_EQ(apply_rel_value(s2r(kR1Pairs), kBT), bools({kBF, kBT}));
    ASSERT_EQ(apply_rel_value(RelExpr::arr(PiComb::prim(Iso::SwapTimes)), pr(kBF, kBT)),
              XorSet::singleton(kBool2, pr(kBT, kBF)));
    ASSERT_EQ(apply_rel_value(RelExpr::state(bools({kBT})), kUnit), bools({kBT}));
    ASSERT_EQ(apply_rel_value(RelExpr::eta(BaseType::zero()), kUnit), XorSet(BaseType::prod(BaseType::zero(), BaseType::zero())));
}

TEST(rel_eval, strength_and_second) {
    auto sv = PiValue::set(bools({kBF, kBT}));
    ASSERT_EQ(apply_rel_value(RelExpr::strength(), pr(kBT, sv)), set("{(T, F), (T, T)}"));
    ASSERT_EQ(apply_rel_value(RelExpr::strength(), pr(kBT, PiValue::set(XorSet(kBool)))), XorSet(kBool2));
    auto r2 = s2r(kR2Pairs);
    ASSERT_EQ(apply_rel_value(RelExpr::second(r2), pr(kBF, kBF)), set("{(F, F), (F, T)}"));
    ASSERT_EQ(apply_rel_value(first(r2), pr(kBT, kBF)), set("{(F, F)}"));
}

TEST(rel_eval, set_examples) {
    auto r2 = s2r(kR2Pairs);
    ASSERT_EQ(apply_rel_set(r2, bools({kBF, kBT})), bools({kBT}));
    ASSERT_EQ(apply_rel_set(r2, XorSet(kBool)), XorSet(kBool));
    auto composite = RelExpr::seq(s2r(kR1Pairs), r2);
    ASSERT_EQ(apply_rel_set(composite, bools({kBF})), bools({kBF, kBT}));
    ASSERT_EQ(apply_rel_set(composite, bools({kBT})), bools({kBT}));
}

TEST(rel_eval, errors) {
    ASSERT_EQ(kind_of([] { apply_rel_value(RelExpr::eps(kBool), kBT); }), ErrorKind::IllTypedValue);
    ASSERT_EQ(kind_of([] { apply_rel_set(RelExpr::eta(kBool), bools({kBT})); }), ErrorKind::IllTypedValue);
    ASSERT_EQ(kind_of([] { apply_rel_value(s2r(kR1Pairs), kUnit); }), ErrorKind::IllTypedValue);
}

TEST(rel_derived, expansions) {
    auto r = s2r(kR1Pairs);
    auto sw = RelExpr::arr(PiComb::prim(Iso::SwapTimes));
    ASSERT_EQ(first(r), RelExpr::seq(RelExpr::seq(sw, RelExpr::second(r)), sw));
    ASSERT_EQ(costate(kR1Pairs), adjoint_rel(RelExpr::state(kR1Pairs)));
    ASSERT_EQ(dot(kR1Pairs, kR2Pairs), RelExpr::seq(RelExpr::state(kR1Pairs), costate(kR2Pairs)));
    ASSERT_EQ(outer(kR1Pairs, kR2Pairs), RelExpr::seq(costate(kR2Pairs), RelExpr::state(kR1Pairs)));
    ASSERT_EQ(kind_of([] { dot(bools({kBT}), XorSet(kOne)); }), ErrorKind::TypeMismatch);
    ASSERT_EQ(kind_of([] { curry(RelExpr::eta(kBool)); }), ErrorKind::TypeMismatch);
}

TEST(rel_derived, scalars) {
    ASSERT_EQ(scalar_of(RelExpr::arr(PiComb::prim(Iso::Id), IsoType{kOne, kOne})), Gf2::T);
    ASSERT_EQ(scalar_of(dot(bools({kBT}), bools({kBT}))), Gf2::T);
    ASSERT_EQ(scalar_of(dot(bools({kBF}), bools({kBT}))), Gf2::F);
    ASSERT_EQ(scalar_of(dot(bools({kBF, kBT}), bools({kBT}))), Gf2::T);
    auto shared = set("{(F, F), (T, T)}");
    ASSERT_EQ(scalar_of(dot(shared, shared)), Gf2::F);
    ASSERT_EQ(kind_of([] { scalar_of(RelExpr::eta(kBool)); }), ErrorKind::TypeMismatch);
}

TEST(rel_derived, dot_is_intersection_parity) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto t = dqc::testing::random_plain_type(rng, 6);
        auto a = dqc::testing::random_set(rng, t);
        auto b = dqc::testing::random_set(rng, t);
        ASSERT_EQ(scalar_of(dot(a, b)) == Gf2::T, dqc::testing::intersection_parity(a, b)) << a.str() << b.str();
    }
}

TEST(rel_derived, s2r_reads_pairs) {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        auto a = dqc::testing::random_plain_type(rng, 3, 1);
        auto b = dqc::testing::random_plain_type(rng, 3, 1);
        auto pairs = dqc::testing::random_set(rng, BaseType::prod(a, b));
        auto oracle = dqc::testing::PairRelation::from_pairs(pairs);
        auto r = s2r(pairs);
        auto values = enumerate_values(a);
        auto targets = enumerate_values(b);
        for (std::size_t ia = 0; ia < values.size(); ++ia) {
            auto image = apply_rel_value(r, values[ia]);
            for (std::size_t ib = 0; ib < targets.size(); ++ib) {
                ASSERT_EQ(image.contains(targets[ib]), oracle.related[ia][ib]);
            }
        }
    }
}

TEST(rel_derived, curry_round_trip_and_trace_of_first) {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto dom = BaseType::prod(dqc::testing::random_plain_type(rng, 3, 1), dqc::testing::random_plain_type(rng, 3, 1));
        auto [r, cod] = dqc::testing::random_rel(rng, dom, 1, 8);
        auto s = dqc::testing::random_set(rng, dom);
        ASSERT_EQ(apply_rel_set(uncurry(curry(dqc::testing::pin_domain(r, dom))), s), apply_rel_set(r, s)) << r.str();
        // Tracing out c multiplies by the dimension of c, which is 0 or 1.
        auto odd = BaseType::sum(kOne, kBool);
        auto traced = trace(dqc::testing::pin_domain(first(r), BaseType::prod(dom, odd)));
        ASSERT_EQ(apply_rel_set(traced, s), apply_rel_set(r, s)) << r.str();
        auto even = trace(dqc::testing::pin_domain(first(r), BaseType::prod(dom, kBool)));
        ASSERT_EQ(apply_rel_set(even, s), XorSet(cod)) << r.str();
    }
}

TEST(rel_properties, linearity) {
    Rng rng(21);
    int cases = 0;
    while (cases < 1000) {
        auto dom = dqc::testing::random_plain_type(rng, 8);
        auto [r, cod] = dqc::testing::random_rel(rng, dom, 3, 16);
        auto e = elaborate(r, dom);
        auto s1 = dqc::testing::random_set(rng, dom);
        auto s2 = dqc::testing::random_set(rng, dom);
        auto lhs = apply_elaborated_set(e, xor_union(s1, s2));
        auto rhs = xor_union(apply_elaborated_set(e, s1), apply_elaborated_set(e, s2));
        ASSERT_EQ(lhs, rhs) << r.str() << " on " << s1.str() << " and " << s2.str();
        ++cases;
    }
}

TEST(rel_properties, type_preservation) {
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        auto dom = dqc::testing::random_plain_type(rng, 8);
        auto [r, cod] = dqc::testing::random_rel(rng, dom, 3, 16);
        auto type = type_check_rel(r, dom);
        ASSERT_EQ(type.dom, dom);
        ASSERT_EQ(type.cod, cod) << r.str();
        auto out = apply_rel_set(r, dqc::testing::random_set(rng, dom));
        ASSERT_EQ(out.elem_type(), cod);
        for (const auto &v : out.elements()) {
            ASSERT_TRUE(inhabits(v, cod));
        }
    }
}

TEST(rel_properties, kleisli_associativity_against_pair_composition) {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        std::vector<BaseType> ts;
        for (int k = 0; k < 4; ++k) {
            ts.push_back(dqc::testing::random_plain_type(rng, 3, 1));
        }
        std::vector<XorSet> pairs;
        for (int k = 0; k < 3; ++k) {
            pairs.push_back(dqc::testing::random_set(rng, BaseType::prod(ts[k], ts[k + 1])));
        }
        auto a = s2r(pairs[0]);
        auto b = s2r(pairs[1]);
        auto c = s2r(pairs[2]);
        auto left = RelExpr::seq(RelExpr::seq(a, b), c);
        auto right = RelExpr::seq(a, RelExpr::seq(b, c));
        using dqc::testing::PairRelation;
        auto oracle = dqc::testing::compose_by_counting(
            dqc::testing::compose_by_counting(PairRelation::from_pairs(pairs[0]), PairRelation::from_pairs(pairs[1])),
            PairRelation::from_pairs(pairs[2]));
        auto s = dqc::testing::random_set(rng, ts[0]);
        std::vector<bool> input(ts[0].cardinality());
        for (const auto &v : s.elements()) {
            input[value_index(ts[0], v)] = true;
        }
        auto expected = dqc::testing::image_by_counting(oracle, input);
        auto got = apply_rel_set(left, s);
        ASSERT_EQ(got, apply_rel_set(right, s));
        for (std::size_t k = 0; k < expected.size(); ++k) {
            ASSERT_EQ(got.contains(value_at(ts[3], k)), expected[k]);
        }
    }
}

TEST(rel_properties, arr_functoriality) {
    Rng rng(24);
    for (int i = 0; i < 300; ++i) {
        auto dom = dqc::testing::random_plain_type(rng, 8);
        auto [c1, mid] = dqc::testing::random_comb(rng, dom, 4);
        auto [c2, cod] = dqc::testing::random_comb(rng, mid, 4);
        auto whole = RelExpr::arr(PiComb::seq(c1, c2), IsoType{dom, cod});
        for (const auto &v : enumerate_values(dom)) {
            auto step = apply_rel_set(RelExpr::arr(c2, IsoType{mid, cod}),
                                      apply_rel_value(RelExpr::arr(c1, IsoType{dom, mid}), v));
            ASSERT_EQ(apply_rel_value(whole, v), step);
            ASSERT_EQ(apply_rel_value(whole, v), XorSet::singleton(cod, eval_comb(PiComb::seq(c1, c2), v)));
        }
    }
}

TEST(rel_syntax, printing) {
    ASSERT_EQ(RelExpr::eps(kBool).str(), "eps @ bool");
    ASSERT_EQ(RelExpr::seq(RelExpr::eta(kBool), RelExpr::eps()).str(), "eta @ bool >>> eps");
    ASSERT_EQ(RelExpr::state(bools({kBF, kBT})).str(), "state {F, T}");
    ASSERT_EQ(set_literal(XorSet(kBool)), "{} @ bool");
}
