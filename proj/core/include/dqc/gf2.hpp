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

// Dense linear algebra over the two-element field {F, T} with XOR as
// addition and AND as multiplication.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/types.hpp"
#include "dqc/value.hpp"

namespace dqc {

enum class Gf2 : std::uint8_t { F = 0, T = 1 };

constexpr Gf2 operator+(Gf2 a, Gf2 b) { return static_cast<Gf2>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b)); }
constexpr Gf2 operator*(Gf2 a, Gf2 b) { return static_cast<Gf2>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b)); }
constexpr Gf2 to_gf2(bool b) { return b ? Gf2::T : Gf2::F; }
constexpr char to_char(Gf2 x) { return x == Gf2::T ? 'T' : 'F'; }

class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    Gf2 at(std::size_t i) const;
    void set(std::size_t i, Gf2 x);
    void flip(std::size_t i);
    bool any() const;
    std::size_t popcount() const;

    /// Adds `other` in place (XOR). Sizes must agree.
    BitVector &operator+=(const BitVector &other);
    /// Parity of the elementwise AND.
    Gf2 dot(const BitVector &other) const;

    /// Space-separated T/F entries.
    std::string str() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major bit-packed matrix.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Parses rows separated by newlines or '/', entries T/F (or 1/0)
    /// separated by whitespace. DimensionMismatch on ragged input.
    static BitMatrix parse(std::string_view text);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Gf2 at(std::size_t r, std::size_t c) const { return data_[r].at(c); }
    void set(std::size_t r, std::size_t c, Gf2 x) { data_[r].set(c, x); }
    const BitVector &row(std::size_t r) const { return data_[r]; }
    BitVector &row(std::size_t r) { return data_[r]; }
    BitVector column(std::size_t c) const;

    /// Rows top to bottom, one per line, entries space-separated.
    std::string str() const;

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b);
BitVector apply(const BitMatrix &m, const BitVector &v);
BitMatrix transpose(const BitMatrix &m);
/// Kronecker product, first factor major.
BitMatrix kron(const BitMatrix &a, const BitMatrix &b);
/// Gaussian elimination; DimensionMismatch unless square.
Gf2 determinant(const BitMatrix &m);
std::size_t rank(const BitMatrix &m);

/// A vector indexed by the values of `type` in enumeration order.
struct Gf2Vec {
    BaseType type;
    BitVector bits;

    friend bool operator==(const Gf2Vec &, const Gf2Vec &) = default;
};

/// A linear map from `dom` to `cod`: |cod| rows by |dom| columns. Entry
/// (i, j) is T iff the j-th value of dom is related to the i-th of cod.
struct Gf2Mat {
    BaseType dom;
    BaseType cod;
    BitMatrix bits;

    static Gf2Mat identity(const BaseType &b);
    std::string str() const { return bits.str(); }

    friend bool operator==(const Gf2Mat &, const Gf2Mat &) = default;
};

/// `a * b`: apply b, then a. Requires b.cod == a.dom.
Gf2Mat mat_mul(const Gf2Mat &a, const Gf2Mat &b);
Gf2Vec mat_apply(const Gf2Mat &m, const Gf2Vec &v);
Gf2Mat kron(const Gf2Mat &a, const Gf2Mat &b);
Gf2Mat transpose(const Gf2Mat &m);
Gf2 determinant(const Gf2Mat &m);
bool is_invertible(const Gf2Mat &m);

Gf2Vec vec_of_set(const XorSet &s);
XorSet set_of_vec(const Gf2Vec &v);

}  // namespace dqc
