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

#include "dqc/gf2.hpp"

#include <bit>
#include <cctype>

#include "dqc/error.hpp"

namespace dqc {

namespace {

constexpr std::size_t kWord = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWord - 1) / kWord; }

void require(bool ok, const std::string &what) {
    if (!ok) {
        fail(ErrorKind::DimensionMismatch, what);
    }
}

std::string dims(const BitMatrix &m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

Gf2 BitVector::at(std::size_t i) const { return to_gf2((words_[i / kWord] >> (i % kWord)) & 1U); }

void BitVector::set(std::size_t i, Gf2 x) {
    auto mask = std::uint64_t{1} << (i % kWord);
    if (x == Gf2::T) {
        words_[i / kWord] |= mask;
    } else {
        words_[i / kWord] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) { words_[i / kWord] ^= std::uint64_t{1} << (i % kWord); }

bool BitVector::any() const {
    for (auto w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

BitVector &BitVector::operator+=(const BitVector &other) {
    require(size_ == other.size_, "vector sizes " + std::to_string(size_) + " and " + std::to_string(other.size_));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

Gf2 BitVector::dot(const BitVector &other) const {
    require(size_ == other.size_, "vector sizes " + std::to_string(size_) + " and " + std::to_string(other.size_));
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return to_gf2(std::popcount(acc) % 2 == 1);
}

std::string BitVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += to_char(at(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, Gf2::T);
    }
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<std::vector<Gf2>> rows;
    std::vector<Gf2> current;
    auto flush = [&] {
        if (!current.empty()) {
            rows.push_back(std::move(current));
            current.clear();
        }
    };
    for (char ch : text) {
        if (ch == 'T' || ch == '1') {
            current.push_back(Gf2::T);
        } else if (ch == 'F' || ch == '0') {
            current.push_back(Gf2::F);
        } else if (ch == '\n' || ch == '/') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            fail(ErrorKind::SyntaxError, std::string("unexpected character '") + ch + "' in matrix literal");
        }
    }
    flush();
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "ragged matrix literal");
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v.set(r, at(r, c));
    }
    return v;
}

std::string BitMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) {
            out += '\n';
        }
        out += data_[r].str();
    }
    return out;
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
    require(a.cols() == b.rows(), "cannot multiply " + dims(a) + " by " + dims(b));
    BitMatrix out(a.rows(), b.cols());
    // Row i of the product is the sum of the rows of b selected by row i of a.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == Gf2::T) {
                out.row(i) += b.row(k);
            }
        }
    }
    return out;
}

BitVector apply(const BitMatrix &m, const BitVector &v) {
    require(m.cols() == v.size(), "cannot apply " + dims(m) + " to a vector of size " + std::to_string(v.size()));
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.set(r, m.row(r).dot(v));
    }
    return out;
}

BitMatrix transpose(const BitMatrix &m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.set(c, r, m.at(r, c));
        }
    }
    return out;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) != Gf2::T) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l) == Gf2::T) {
                        out.set(i * b.rows() + k, j * b.cols() + l, Gf2::T);
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Row-reduces a copy; returns the rank.
std::size_t eliminate(BitMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c) != Gf2::T) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        std::swap(m.row(pivot), m.row(rank));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != rank && m.at(r, c) == Gf2::T) {
                m.row(r) += m.row(rank);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Gf2 determinant(const BitMatrix &m) {
    require(m.rows() == m.cols(), "determinant of non-square " + dims(m) + " matrix");
    // Row swaps only flip the sign, and -1 = 1 here.
    return to_gf2(eliminate(m) == m.rows());
}

std::size_t rank(const BitMatrix &m) { return eliminate(m); }

// ---------------------------------------------------------------------------
// Typed wrappers

Gf2Mat Gf2Mat::identity(const BaseType &b) {
    auto n = b.cardinality();
    return Gf2Mat{b, b, BitMatrix::identity(n)};
}

Gf2Mat mat_mul(const Gf2Mat &a, const Gf2Mat &b) {
    require(b.cod == a.dom, "composing " + b.dom.str() + " ~> " + b.cod.str() + " with " + a.dom.str() + " ~> " +
                                a.cod.str());
    return Gf2Mat{b.dom, a.cod, multiply(a.bits, b.bits)};
}

Gf2Vec mat_apply(const Gf2Mat &m, const Gf2Vec &v) {
    require(v.type == m.dom, "applying a map on " + m.dom.str() + " to a vector over " + v.type.str());
    return Gf2Vec{m.cod, apply(m.bits, v.bits)};
}

Gf2Mat kron(const Gf2Mat &a, const Gf2Mat &b) {
    return Gf2Mat{BaseType::prod(a.dom, b.dom), BaseType::prod(a.cod, b.cod), kron(a.bits, b.bits)};
}

Gf2Mat transpose(const Gf2Mat &m) { return Gf2Mat{m.cod, m.dom, transpose(m.bits)}; }

Gf2 determinant(const Gf2Mat &m) { return determinant(m.bits); }

bool is_invertible(const Gf2Mat &m) { return determinant(m) == Gf2::T; }

Gf2Vec vec_of_set(const XorSet &s) {
    const auto &t = s.elem_type();
    Gf2Vec v{t, BitVector(t.cardinality())};
    for (const auto &e : s.elements()) {
        v.bits.set(value_index(t, e), Gf2::T);
    }
    return v;
}

XorSet set_of_vec(const Gf2Vec &v) {
    require(v.bits.size() == v.type.cardinality(),
            "vector of size " + std::to_string(v.bits.size()) + " over " + v.type.str());
    std::vector<PiValue> elems;
    for (std::size_t i = 0; i < v.bits.size(); ++i) {
        if (v.bits.at(i) == Gf2::T) {
            elems.push_back(value_at(v.type, i));
        }
    }
    return XorSet::of(v.type, std::move(elems));
}

}  // namespace dqc
