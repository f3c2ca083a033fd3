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

#include "dqc/bundled.hpp"
#include "dqc/derived.hpp"
#include "dqc/error.hpp"
#include "dqc/syntax.hpp"
#include "generators.hpp"
#include "printers.hpp"

using namespace dqc;
using dqc::testing::Rng;

namespace {

const BaseType kOne = BaseType::one();
const BaseType kBool = BaseType::boolean();

PiComb P(Iso iso) { return PiComb::prim(iso); }

Error error_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e;
    }
    ADD_FAILURE() << "no error raised";
    return Error(ErrorKind::Internal, "none");
}

}  // namespace

TEST(syntax_parse, definitions) {
    auto p = parse_rpi(
        "def q_in = state { F, T };\n"
        "def neg = arr (bool2sum ; swap_plus ; sum2bool);\n"
        "def shared = { (F,F), (T,T) };\n");
    ASSERT_EQ(p.defs.size(), 3u);
    ASSERT_EQ(*p.find("q_in")->rel, RelExpr::state(XorSet::of(kBool, {kBF, kBT})));
    auto neg = *p.find("neg")->rel;
    ASSERT_EQ(neg.kind(), RelExpr::Kind::Arr);
    ASSERT_EQ(neg.comb(), PiComb::seq(PiComb::seq(P(Iso::Bool2Sum), P(Iso::SwapPlus)), P(Iso::Sum2Bool)));
    const auto *shared = p.find("shared");
    ASSERT_EQ(shared->kind, Definition::Kind::Set);
    ASSERT_EQ(*shared->set, XorSet::of(BaseType::prod(kBool, kBool), {PiValue::pair(kBF, kBF), PiValue::pair(kBT, kBT)}));
    ASSERT_FALSE(p.main.has_value());
}

TEST(syntax_parse, item_kinds) {
    auto p = parse_rpi(
        "-- a comment\n"
        "type qubit = bool;\n"
        "type pair = qubit * qubit;\n"
        "iso flip = bool2sum ; swap_plus ; sum2bool;\n"
        "iso swap2 = swap_times @ pair <-> pair;\n"
        "set plus = {F} <+> {T} <+> {T, F} <+> {F};\n"
        "basis b = [{F}, {T}];\n"
        "def f = arr flip >>> arr (inv flip);\n"
        "main f on plus measure z;\n");
    ASSERT_EQ(*p.find("pair")->type, BaseType::prod(kBool, kBool));
    ASSERT_EQ(p.find("swap2")->iso_type->lhs, BaseType::prod(kBool, kBool));
    ASSERT_EQ(*p.find("plus")->set, XorSet::of(kBool, {kBF}));
    ASSERT_EQ(p.find("b")->basis.size(), 2u);
    ASSERT_TRUE(p.main.has_value());
    ASSERT_EQ(p.main->input, XorSet::of(kBool, {kBF}));
    ASSERT_EQ(p.main->measure->size(), 2u);
    ASSERT_EQ(apply_rel_set(p.main->rel, p.main->input), XorSet::of(kBool, {kBF}));
}

TEST(syntax_parse, annotations_and_derived_forms) {
    auto r = parse_rel("second @ bool (eps @ 1) >>> arr (swap_times ; unite) @ bool * 1 <-> bool");
    ASSERT_EQ(type_check_rel(r), (RelType{BaseType::prod(kBool, BaseType::prod(kOne, kOne)), kBool}));
    ASSERT_EQ(parse_rel("strength @ bool, _"), RelExpr::strength(kBool, std::nullopt));
    ASSERT_EQ(parse_rel("s2r {(F, T)}"), s2r(XorSet::of(BaseType::prod(kBool, kBool), {PiValue::pair(kBF, kBT)})));
    ASSERT_EQ(parse_rel("dot {F} {T}"), dot(XorSet::of(kBool, {kBF}), XorSet::of(kBool, {kBT})));
    ASSERT_EQ(parse_rel("first (eps @ bool)"), first(RelExpr::eps(kBool)));
    ASSERT_EQ(parse_set("{} @ bool * 1"), XorSet(BaseType::prod(kBool, kOne)));
    ASSERT_EQ(parse_set("{L (), R F}"), XorSet::of(BaseType::sum(kOne, kBool), {PiValue::left(PiValue::unit()), PiValue::right(kBF)}));
    ASSERT_EQ(parse_type("S (bool + 1) * 0"), BaseType::prod(BaseType::set(BaseType::sum(kBool, kOne)), BaseType::zero()));
}

TEST(syntax_parse, rebinding) {
    ParseOptions opts;
    opts.rebind["a"] = "a_1";
    auto p = parse_rpi("def a_0 = arr id @ bool <-> bool; def a_1 = arr (bool2sum ; swap_plus ; sum2bool); def a = a_0; main a on {T};", opts);
    ASSERT_EQ(apply_rel_set(p.main->rel, p.main->input), XorSet::of(kBool, {kBF}));
}

TEST(syntax_parse, errors_carry_locations) {
    auto e = error_of([] { parse_rpi("def a = arr id;\ndef b = arr (id ;;\n"); });
    ASSERT_EQ(e.kind(), ErrorKind::SyntaxError);
    ASSERT_EQ(e.where()->line, 2);
    e = error_of([] { parse_rpi("def a = arr id;\n\ndef b = a >>> nope;"); });
    ASSERT_EQ(e.kind(), ErrorKind::NameError);
    ASSERT_EQ(e.where()->line, 3);
    ASSERT_EQ(e.where()->column, 15);
    e = error_of([] { parse_rpi("def a = eta @ bool >>> eps @ 1;"); });
    ASSERT_EQ(e.kind(), ErrorKind::TypeMismatch);
    ASSERT_EQ(e.where()->line, 1);
    ASSERT_EQ(error_of([] { parse_rpi("def T = arr id;"); }).kind(), ErrorKind::NameError);
    ASSERT_EQ(error_of([] { parse_rpi("set s = {F, ()};"); }).kind(), ErrorKind::TypeMismatch);
    ASSERT_EQ(error_of([] { parse_rpi("def a = arr id; def a = arr id;"); }).kind(), ErrorKind::NameError);
    ASSERT_EQ(error_of([] { parse_rpi("def r = arr id @ bool <-> bool; main r on {()};"); }).kind(),
              ErrorKind::TypeMismatch);
    ASSERT_EQ(error_of([] { parse_rpi("main arr id @ bool <-> bool on {T} measure nothing;"); }).kind(),
              ErrorKind::NameError);
    ASSERT_EQ(error_of([] { parse_type("bool +"); }).kind(), ErrorKind::SyntaxError);
}

TEST(syntax_round_trip, bundled_programs) {
    int checked = 0;
    for (const auto &b : bundled_programs()) {
        if (!b.file.ends_with(".rpi")) {
            continue;
        }
        auto p = parse_rpi(b.text);
        auto printed = print_program(p);
        ASSERT_EQ(parse_rpi(printed), p) << b.file << "\n" << printed;
        ASSERT_EQ(print_program(parse_rpi(printed)), printed);
        ++checked;
    }
    ASSERT_GE(checked, 5);
}

TEST(syntax_round_trip, random_programs) {
    Rng rng(51);
    for (int i = 0; i < 300; ++i) {
        auto p = dqc::testing::random_program(rng, i % 2 == 0);
        auto printed = print_program(p);
        SourceProgram back;
        try {
            back = parse_rpi(printed);
        } catch (const Error &e) {
            FAIL() << e.what() << "\n" << printed;
        }
        ASSERT_EQ(back, p) << printed << "\n---\n" << print_program(back);
    }
}

TEST(syntax_round_trip, random_relations) {
    Rng rng(52);
    for (int i = 0; i < 500; ++i) {
        auto dom = dqc::testing::random_plain_type(rng, 8);
        auto r = dqc::testing::random_rel(rng, dom, 3, 16).first;
        ASSERT_EQ(parse_rel(r.str()), r) << r.str();
        auto e = elaborate(r, dom);
        ASSERT_EQ(parse_rel(e.str()), e) << e.str();
        auto c = dqc::testing::random_comb(rng, dom, 5).first;
        ASSERT_EQ(parse_rel("arr " + c.str()).comb(), c) << c.str();
    }
}
