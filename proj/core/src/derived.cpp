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

#include "dqc/derived.hpp"

#include "dqc/error.hpp"

namespace dqc {

namespace {

RelExpr arr(Iso iso) { return RelExpr::arr(PiComb::prim(iso)); }

RelExpr arr(Iso a, Iso b) { return RelExpr::arr(PiComb::seq(PiComb::prim(a), PiComb::prim(b))); }

// Expansions are pure syntax; only reject outright clashes here and leave
// grounding to elaboration.
RelExpr checked(RelExpr r) {
    check_rel_consistent(r);
    return r;
}

}  // namespace

RelExpr seq_all(std::initializer_list<RelExpr> rs) {
    if (rs.size() == 0) {
        fail(ErrorKind::Internal, "empty relation sequence");
    }
    auto it = rs.begin();
    RelExpr out = *it++;
    for (; it != rs.end(); ++it) {
        out = RelExpr::seq(out, *it);
    }
    return out;
}

RelExpr first(const RelExpr &r) {
    return checked(seq_all({arr(Iso::SwapTimes), RelExpr::second(r), arr(Iso::SwapTimes)}));
}

RelExpr curry(const RelExpr &r) {
    return checked(seq_all({arr(Iso::UnitI, Iso::SwapTimes), RelExpr::second(RelExpr::eta()), arr(Iso::AssocLTimes),
                            first(r), arr(Iso::SwapTimes)}));
}

RelExpr uncurry(const RelExpr &r) {
    return checked(
        seq_all({first(r), arr(Iso::SwapTimes, Iso::AssocLTimes), first(RelExpr::eps()), arr(Iso::UnitE)}));
}

RelExpr s2r(const XorSet &s) { return checked(RelExpr::seq(arr(Iso::UnitI), uncurry(RelExpr::state(s)))); }

RelExpr trace(const RelExpr &r) {
    return checked(seq_all({arr(Iso::UnitI), first(RelExpr::eta()), arr(Iso::SwapTimes, Iso::AssocLTimes), first(r),
                            arr(Iso::AssocRTimes), RelExpr::second(RelExpr::eps()),
                            arr(Iso::SwapTimes, Iso::UnitE)}));
}

RelExpr adjoint_rel(const RelExpr &r) {
    return checked(seq_all({arr(Iso::UnitI), first(RelExpr::eta()), first(RelExpr::second(r)), arr(Iso::AssocRTimes),
                            RelExpr::second(RelExpr::eps()), arr(Iso::SwapTimes, Iso::UnitE)}));
}

RelExpr costate(const XorSet &s) { return adjoint_rel(RelExpr::state(s)); }

RelExpr dot(const XorSet &s1, const XorSet &s2) {
    if (!(s1.elem_type() == s2.elem_type())) {
        fail(ErrorKind::TypeMismatch,
             "dot product of sets over " + s1.elem_type().str() + " and " + s2.elem_type().str());
    }
    return RelExpr::seq(RelExpr::state(s1), costate(s2));
}

RelExpr outer(const XorSet &s1, const XorSet &s2) {
    if (!(s1.elem_type() == s2.elem_type())) {
        fail(ErrorKind::TypeMismatch,
             "outer product of sets over " + s1.elem_type().str() + " and " + s2.elem_type().str());
    }
    return RelExpr::seq(costate(s2), RelExpr::state(s1));
}

}  // namespace dqc
