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

#include "oracles.hpp"

#include <bit>
#include <stdexcept>

namespace dqc::testing {

PairRelation::PairRelation(std::size_t dom_size, std::size_t cod_size)
    : dom(dom_size), cod(cod_size), related(dom_size, std::vector<bool>(cod_size, false)) {}

PairRelation PairRelation::from_pairs(const XorSet &pairs) {
    const auto &t = pairs.elem_type();
    auto a_values = enumerate_values(t.left());
    auto b_values = enumerate_values(t.right());
    PairRelation out(a_values.size(), b_values.size());
    for (const auto &p : pairs.elements()) {
        std::size_t ia = 0;
        while (!(a_values[ia] == p.first())) {
            ++ia;
        }
        std::size_t ib = 0;
        while (!(b_values[ib] == p.second())) {
            ++ib;
        }
        out.related[ia][ib] = !out.related[ia][ib];
    }
    return out;
}

PairRelation PairRelation::from_matrix(const BitMatrix &m) {
    PairRelation out(m.cols(), m.rows());
    for (std::size_t a = 0; a < m.cols(); ++a) {
        for (std::size_t b = 0; b < m.rows(); ++b) {
            out.related[a][b] = m.at(b, a) == Gf2::T;
        }
    }
    return out;
}

BitMatrix PairRelation::to_matrix() const {
    BitMatrix m(cod, dom);
    for (std::size_t a = 0; a < dom; ++a) {
        for (std::size_t b = 0; b < cod; ++b) {
            m.set(b, a, related[a][b] ? Gf2::T : Gf2::F);
        }
    }
    return m;
}

PairRelation compose_by_counting(const PairRelation &r, const PairRelation &s) {
    if (r.cod != s.dom) {
        throw std::invalid_argument("compose_by_counting: size mismatch");
    }
    PairRelation out(r.dom, s.cod);
    for (std::size_t a = 0; a < r.dom; ++a) {
        for (std::size_t c = 0; c < s.cod; ++c) {
            int count = 0;
            for (std::size_t b = 0; b < r.cod; ++b) {
                count += r.related[a][b] && s.related[b][c];
            }
            out.related[a][c] = count % 2 == 1;
        }
    }
    return out;
}

std::vector<bool> image_by_counting(const PairRelation &r, const std::vector<bool> &input) {
    std::vector<bool> out(r.cod, false);
    for (std::size_t a = 0; a < r.dom; ++a) {
        if (!input[a]) {
            continue;
        }
        for (std::size_t b = 0; b < r.cod; ++b) {
            if (r.related[a][b]) {
                out[b] = !out[b];
            }
        }
    }
    return out;
}

bool intersection_parity(const XorSet &a, const XorSet &b) {
    int count = 0;
    for (const auto &x : a.elements()) {
        for (const auto &y : b.elements()) {
            count += x == y;
        }
    }
    return count % 2 == 1;
}

Gf2 permanent_mod2(const BitMatrix &m) {
    auto n = m.rows();
    if (n != m.cols() || n > 20) {
        throw std::invalid_argument("permanent_mod2: need a square matrix of size at most 20");
    }
    // ways[mask]: parity of the number of ways to match the first
    // popcount(mask) rows onto exactly the columns in mask.
    std::vector<std::uint8_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (ways[mask] == 0) {
            continue;
        }
        auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if ((mask >> c & 1U) == 0 && m.at(row, c) == Gf2::T) {
                ways[mask | (std::uint32_t{1} << c)] ^= 1;
            }
        }
    }
    return ways[(std::size_t{1} << n) - 1] != 0 ? Gf2::T : Gf2::F;
}

bool has_trivial_kernel(const BitMatrix &m) {
    auto n = m.cols();
    if (n > 20) {
        throw std::invalid_argument("has_trivial_kernel: too many columns");
    }
    // Columns as bit masks over the rows.
    std::vector<std::vector<bool>> cols(n, std::vector<bool>(m.rows()));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            cols[c][r] = m.at(r, c) == Gf2::T;
        }
    }
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << n); ++v) {
        std::vector<bool> sum(m.rows(), false);
        for (std::size_t c = 0; c < n; ++c) {
            if (v >> c & 1U) {
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    sum[r] = sum[r] != cols[c][r];
                }
            }
        }
        bool zero = true;
        for (bool b : sum) {
            zero = zero && !b;
        }
        if (zero) {
            return false;
        }
    }
    return true;
}

bool is_permutation_matrix(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int in_row = 0;
        int in_col = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            in_row += m.at(i, j) == Gf2::T;
            in_col += m.at(j, i) == Gf2::T;
        }
        if (in_row != 1 || in_col != 1) {
            return false;
        }
    }
    return true;
}

BitMatrix matrix_from_bits(std::size_t n, std::uint64_t bits) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
        m.set(i / n, i % n, (bits >> (n * n - 1 - i) & 1U) != 0 ? Gf2::T : Gf2::F);
    }
    return m;
}

}  // namespace dqc::testing
