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

// Readable gtest failure messages for library types.

#include <ostream>

#include "dqc/gf2.hpp"
#include "dqc/pi.hpp"
#include "dqc/rel.hpp"
#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc {

inline void PrintTo(const BaseType &t, std::ostream *os) { *os << t.str(); }
inline void PrintTo(const PiValue &v, std::ostream *os) { *os << v.str(); }
inline void PrintTo(const XorSet &s, std::ostream *os) { *os << s.str() << " : S " << s.elem_type().str(); }
inline void PrintTo(const PiComb &c, std::ostream *os) { *os << c.str(); }
inline void PrintTo(const IsoType &t, std::ostream *os) { *os << t.str(); }
inline void PrintTo(const RelExpr &r, std::ostream *os) { *os << r.str(); }
inline void PrintTo(const RelType &t, std::ostream *os) { *os << t.str(); }
inline void PrintTo(Gf2 x, std::ostream *os) { *os << to_char(x); }
inline void PrintTo(const BitMatrix &m, std::ostream *os) { *os << "\n" << m.str(); }
inline void PrintTo(const Gf2Mat &m, std::ostream *os) { *os << m.dom.str() << " ~> " << m.cod.str() << "\n" << m.str(); }
inline void PrintTo(const Gf2Vec &v, std::ostream *os) { *os << v.bits.str(); }

}  // namespace dqc
