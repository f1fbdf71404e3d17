/*
   Copyright 2026 The grassid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file gmatrix.hpp
 * @brief Square matrices over the Grassmann algebra E^m.
 *
 * Entries are dense (n is small); sparsity lives inside each GrassmannElem.
 * Entry accessors are 0-based. matrix_unit() takes 1-based (r, s) to match
 * the usual e_rs notation.
 */

#ifndef GRASSID_GMATRIX_HPP
#define GRASSID_GMATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grassid/grassmann.hpp"

namespace grassid {

class GrMatrix {
public:
    GrMatrix() = default;
    /// The n x n zero matrix over E^m.
    GrMatrix(std::size_t n, unsigned m, const RingSpec& ring);

    static GrMatrix identity(std::size_t n, unsigned m, const RingSpec& ring);
    /// diag(d_1, ..., d_n); all entries must share one context.
    static GrMatrix diagonal(const std::vector<GrassmannElem>& diag);

    std::size_t size() const noexcept { return n_; }
    unsigned rank() const noexcept { return m_; }
    const RingSpec& ring() const noexcept { return ring_; }

    const GrassmannElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Errc::ContextMismatch if the new entry is from a different E^m or ring.
    void set(std::size_t i, std::size_t j, GrassmannElem value);

    bool is_zero() const noexcept;
    /// Number of nonzero entries.
    std::size_t support() const noexcept;

    GrMatrix operator-() const;
    GrMatrix& operator+=(const GrMatrix& rhs);
    GrMatrix& operator-=(const GrMatrix& rhs);

    /// Left multiplication of every entry by c.
    GrMatrix scaled(const GrassmannElem& c) const;
    GrMatrix scaled(const RingElem& c) const;

    /// Entrywise homogeneous component of the given degree.
    GrMatrix component(unsigned degree) const;
    /// (diagonal part, off-diagonal part).
    std::pair<GrMatrix, GrMatrix> diag_split() const;
    bool in_filtration(unsigned r) const noexcept;

    /// Nonzero terms as "c*v1v2*e12 + ..." in row-major entry order; "0" for zero.
    std::string to_string() const;

    void check_context(const GrMatrix& other) const;

    friend bool operator==(const GrMatrix& a, const GrMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
    }

private:
    friend GrMatrix operator*(const GrMatrix& a, const GrMatrix& b);
    friend class MatrixAccumulator;

    std::size_t n_ = 0;
    unsigned m_ = 0;
    RingSpec ring_;
    std::vector<GrassmannElem> entries_;
};

inline GrMatrix operator+(GrMatrix a, const GrMatrix& b) { return a += b; }
inline GrMatrix operator-(GrMatrix a, const GrMatrix& b) { return a -= b; }
/// Entry products are taken in left-to-right order; E^m is not commutative.
GrMatrix operator*(const GrMatrix& a, const GrMatrix& b);

/// Accumulates a sum of signed matrix products entry by entry and
/// canonicalizes each entry once, in take().
class MatrixAccumulator {
public:
    MatrixAccumulator(std::size_t n, unsigned m, const RingSpec& ring);

    /// Adds a * b, or -(a * b) when `negate` is set.
    void add_product(const GrMatrix& a, const GrMatrix& b, bool negate = false);
    void add(const GrMatrix& a, bool negate = false);
    GrMatrix take();

private:
    std::size_t n_;
    unsigned m_;
    RingSpec ring_;
    std::vector<ProductAccumulator> entries_;
};

/// e_rs with 1-based r, s; Errc::IndexOutOfRange outside [1, n].
GrMatrix matrix_unit(std::size_t n, unsigned m, const RingSpec& ring, std::size_t r, std::size_t s);

/// A^k by plain iterated multiplication; A^0 = I.
GrMatrix mat_pow(const GrMatrix& a, unsigned k);

/// Label of the unit e_rs (1-based), e.g. "e12"; "e10,3" once n >= 10.
std::string unit_name(std::size_t n, std::size_t r, std::size_t s);

}  // namespace grassid

#endif
