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

#include "dqc/measurement.hpp"

#include <random>

#include "dqc/denote.hpp"
#include "dqc/derived.hpp"
#include "dqc/error.hpp"
#include "dqc/gf2.hpp"

namespace dqc {

namespace {

std::size_t rank_of(const std::vector<XorSet> &sets) {
    const auto &t = sets.front().elem_type();
    BitMatrix m(sets.size(), t.cardinality());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        m.row(i) = vec_of_set(sets[i]).bits;
    }
    return rank(m);
}

void require_common_type(const std::vector<XorSet> &sets, const BaseType &t, const char *what) {
    for (const auto &s : sets) {
        if (!(s.elem_type() == t)) {
            fail(ErrorKind::TypeMismatch,
                 std::string(what) + " mixes sets over " + t.str() + " and " + s.elem_type().str());
        }
    }
}

}  // namespace

DualBasis::DualBasis(std::vector<XorSet> duals, std::optional<std::vector<XorSet>> source)
    : duals_(std::move(duals)), source_(std::move(source)) {
    if (duals_.empty()) {
        fail(ErrorKind::TypeMismatch, "a dual basis needs at least one vector");
    }
    require_common_type(duals_, elem_type(), "dual basis");
    if (rank_of(duals_) != duals_.size()) {
        fail(ErrorKind::DimensionMismatch, "dual basis vectors are linearly dependent");
    }
    if (source_ && !check_dual(*source_, duals_)) {
        fail(ErrorKind::DimensionMismatch, "vectors are not dual to the given basis");
    }
}

Gf2 overlap(const XorSet &a, const XorSet &b) { return scalar_of(dot(a, b)); }

bool check_dual(const std::vector<XorSet> &basis, const std::vector<XorSet> &duals) {
    if (basis.size() != duals.size() || basis.empty()) {
        return false;
    }
    const auto &t = basis.front().elem_type();
    require_common_type(basis, t, "basis");
    require_common_type(duals, t, "dual basis");
    for (std::size_t i = 0; i < duals.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if ((overlap(duals[i], basis[j]) == Gf2::T) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<XorSet>> find_duals(const std::vector<XorSet> &basis) {
    if (basis.empty()) {
        return {};
    }
    const auto &t = basis.front().elem_type();
    require_common_type(basis, t, "basis");
    auto n = t.cardinality();
    if (n > 16) {
        fail(ErrorKind::NotEnumerable, "dual search over " + t.str() + " is too large");
    }
    auto space = BaseType::set(t);
    std::vector<std::vector<XorSet>> candidates(basis.size());
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << n); ++code) {
        auto d = value_at(space, code).set_value();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < basis.size() && ok; ++j) {
                ok = (overlap(d, basis[j]) == Gf2::T) == (i == j);
            }
            if (ok) {
                candidates[i].push_back(d);
            }
        }
    }
    std::vector<std::vector<XorSet>> out{{}};
    for (const auto &options : candidates) {
        std::vector<std::vector<XorSet>> next;
        for (const auto &prefix : out) {
            for (const auto &d : options) {
                auto extended = prefix;
                extended.push_back(d);
                next.push_back(std::move(extended));
            }
        }
        out = std::move(next);
    }
    return out;
}

MeasurementOutcome measure(const XorSet &s, const DualBasis &duals, std::uint64_t seed) {
    if (!(s.elem_type() == duals.elem_type())) {
        fail(ErrorKind::TypeMismatch,
             "measuring a state over " + s.elem_type().str() + " with duals over " + duals.elem_type().str());
    }
    if (s.empty()) {
        fail(ErrorKind::ZeroVector, "cannot measure the zero vector");
    }
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < duals.size(); ++i) {
        if (overlap(duals.duals()[i], s) == Gf2::T) {
            matches.push_back(i);
        }
    }
    if (matches.empty()) {
        fail(ErrorKind::NoOutcome, "no dual vector matches " + s.str());
    }
    if (matches.size() == 1) {
        return MeasurementOutcome{matches[0], duals.duals()[matches[0]], true, matches};
    }
    std::mt19937_64 gen(seed);
    auto pick = matches[gen() % matches.size()];
    return MeasurementOutcome{pick, duals.duals()[pick], false, matches};
}

bool require_invertible(const RelExpr &r, const std::optional<BaseType> &dom_hint) {
    auto m = denote_rel(r, dom_hint);
    if (m.bits.rows() != m.bits.cols()) {
        fail(ErrorKind::DimensionMismatch, "an evolution step must be square, got " + m.dom.str() + " ~> " +
                                               m.cod.str());
    }
    return is_invertible(m);
}

std::optional<std::vector<XorSet>> named_basis(std::string_view name) {
    auto b = BaseType::boolean();
    auto f = XorSet::singleton(b, kBF);
    auto t = XorSet::singleton(b, kBT);
    auto both = XorSet::of(b, {kBF, kBT});
    if (name == "x") {
        return std::vector<XorSet>{t, both};
    }
    if (name == "x_dual") {
        return std::vector<XorSet>{both, f};
    }
    if (name == "y") {
        return std::vector<XorSet>{both, f};
    }
    if (name == "z") {
        return std::vector<XorSet>{f, t};
    }
    return std::nullopt;
}

}  // namespace dqc
