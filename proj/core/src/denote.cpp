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

#include "dqc/denote.hpp"

#include "dqc/error.hpp"

namespace dqc {

namespace {

std::size_t checked_size(const BaseType &dom, const BaseType &cod) {
    auto rows = cod.cardinality();
    auto cols = dom.cardinality();
    if (rows != 0 && cols > kMaxDenotationBits / rows) {
        fail(ErrorKind::NotEnumerable, "matrix for " + dom.str() + " ~> " + cod.str() + " is too large to build");
    }
    return static_cast<std::size_t>(rows);
}

Gf2Mat blank(const BaseType &dom, const BaseType &cod) {
    checked_size(dom, cod);
    return Gf2Mat{dom, cod, BitMatrix(cod.cardinality(), dom.cardinality())};
}

// Column (v1, s) holds the pairs (v1, w) for each w in s. The columns of
// S b2 are indexed by characteristic bit pattern, so membership is just bit
// k of the pattern.
Gf2Mat strength_matrix(const BaseType &b1, const BaseType &b2) {
    auto m = blank(BaseType::prod(b1, BaseType::set(b2)), BaseType::prod(b1, b2));
    auto n1 = b1.cardinality();
    auto n2 = b2.cardinality();
    auto patterns = std::uint64_t{1} << n2;
    for (std::uint64_t i = 0; i < n1; ++i) {
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            for (std::uint64_t k = 0; k < n2; ++k) {
                if ((pattern >> k) & 1U) {
                    m.bits.set(i * n2 + k, i * patterns + pattern, Gf2::T);
                }
            }
        }
    }
    return m;
}

Gf2Mat diagonal_column(const BaseType &b) {
    auto m = blank(BaseType::one(), BaseType::prod(b, b));
    auto n = b.cardinality();
    for (std::uint64_t i = 0; i < n; ++i) {
        m.bits.set(i * n + i, 0, Gf2::T);
    }
    return m;
}

}  // namespace

Gf2Mat denote_elaborated(const RelExpr &r) {
    using K = RelExpr::Kind;
    switch (r.kind()) {
        case K::Arr: {
            const auto &t = *r.iso_type();
            auto m = blank(t.lhs, t.rhs);
            auto inputs = enumerate_values(t.lhs);
            for (std::size_t j = 0; j < inputs.size(); ++j) {
                m.bits.set(value_index(t.rhs, eval_comb(r.comb(), inputs[j])), j, Gf2::T);
            }
            return m;
        }
        case K::Seq:
            return mat_mul(denote_elaborated(r.rhs()), denote_elaborated(r.lhs()));
        case K::Second:
            return kron(Gf2Mat::identity(*r.slot()), denote_elaborated(r.lhs()));
        case K::Strength:
            return strength_matrix(*r.slot(), *r.slot2());
        case K::State: {
            const auto &s = r.state_set();
            auto m = blank(BaseType::one(), s.elem_type());
            auto v = vec_of_set(s);
            for (std::size_t i = 0; i < v.bits.size(); ++i) {
                m.bits.set(i, 0, v.bits.at(i));
            }
            return m;
        }
        case K::Eta:
            return diagonal_column(*r.slot());
        case K::Eps:
            return transpose(diagonal_column(*r.slot()));
    }
    fail(ErrorKind::Internal, "unknown relation form");
}

Gf2Mat denote_rel(const RelExpr &r, const std::optional<BaseType> &dom_hint) {
    return denote_elaborated(elaborate(r, dom_hint));
}

Soundness compare_interpretations(const RelExpr &r, const XorSet &s) {
    auto e = elaborate(r, s.elem_type());
    auto evaluated = vec_of_set(apply_elaborated_set(e, s));
    auto denoted = mat_apply(denote_elaborated(e), vec_of_set(s));
    bool ok = evaluated == denoted;
    return Soundness{ok, std::move(evaluated), std::move(denoted)};
}

bool soundness_check(const RelExpr &r, const XorSet &s) { return compare_interpretations(r, s).ok; }

}  // namespace dqc
