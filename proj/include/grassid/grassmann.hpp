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
 * @file grassmann.hpp
 * @brief The Grassmann algebra E^m = R<v1..vm>/(vk^2, vi vj + vj vi).
 *
 * Elements are stored as a sorted vector of (mask, coefficient) terms with no
 * zero coefficients. Bit i-1 of a mask stands for the generator v_i, so the
 * monomial v1 v3 has mask 0b101. Terms are kept sorted by mask value, which
 * makes equality a plain vector comparison.
 */

#ifndef GRASSID_GRASSMANN_HPP
#define GRASSID_GRASSMANN_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grassid/ring.hpp"

namespace grassid {

using Mask = std::uint64_t;

inline constexpr unsigned kMaxRank = 62;

struct Term {
    Mask mask;
    RingElem coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

inline unsigned mask_degree(Mask mask) noexcept { return static_cast<unsigned>(std::popcount(mask)); }

/// Parity of |{(s, t) : s in S, t in T, s > t}|, i.e. the sign picked up when
/// the monomial of S is moved past the monomial of T. Caller guarantees S and
/// T are disjoint.
inline bool reorder_is_odd(Mask s, Mask t) noexcept {
    unsigned count = 0;
    while (t != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(t));
        t &= t - 1;
        count += static_cast<unsigned>(std::popcount(s >> bit >> 1));
    }
    return (count & 1U) != 0;
}

/// "v1v3v4" for a nonempty mask, "" for the empty one.
std::string monomial_name(Mask mask);

class GrassmannElem {
public:
    /// Zero of E^0 over the integers.
    GrassmannElem() = default;
    /// Zero of E^rank over `ring`. Errc::IndexOutOfRange if rank > kMaxRank.
    GrassmannElem(unsigned rank, const RingSpec& ring);

    static GrassmannElem scalar(unsigned rank, const RingElem& c);
    static GrassmannElem one(unsigned rank, const RingSpec& ring);
    /// The generator v_index, 1 <= index <= rank.
    static GrassmannElem generator(unsigned rank, const RingSpec& ring, unsigned index);
    static GrassmannElem monomial(unsigned rank, Mask mask, const RingElem& c);

    /// Builds an element from (index list, coefficient) pairs. Index lists
    /// must be strictly increasing within [1, rank]; repeated monomials are
    /// summed and zero coefficients dropped.
    static GrassmannElem from_terms(unsigned rank, const RingSpec& ring,
                                    const std::vector<std::pair<std::vector<unsigned>, RingElem>>& terms);

    /// Canonicalizes arbitrary (mask, coeff) terms: sorts, merges, drops zeros.
    static GrassmannElem from_masks(unsigned rank, const RingSpec& ring, std::vector<Term> terms);

    unsigned rank() const noexcept { return rank_; }
    const RingSpec& ring() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    RingElem coefficient(Mask mask) const;
    /// Degree-i homogeneous component; zero when i > rank.
    GrassmannElem component(unsigned degree) const;
    /// True iff every term has degree >= r.
    bool in_filtration(unsigned r) const noexcept;
    /// True iff every term has degree exactly d (zero is homogeneous of any degree).
    bool is_homogeneous(unsigned d) const noexcept;
    /// Smallest degree among the terms; rank + 1 for zero.
    unsigned min_degree() const noexcept;

    GrassmannElem scaled(const RingElem& c) const;

    GrassmannElem operator-() const;
    GrassmannElem& operator+=(const GrassmannElem& rhs);
    GrassmannElem& operator-=(const GrassmannElem& rhs);

    /// Canonical text: terms by (degree, mask), e.g. "5 + v1 - 2*v1v2".
    std::string to_string() const;

    friend bool operator==(const GrassmannElem& a, const GrassmannElem& b) {
        return a.rank_ == b.rank_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Throws Errc::ContextMismatch unless both live in the same E^m over the same ring.
    void check_context(const GrassmannElem& other) const;

private:
    friend GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b);
    friend class ProductAccumulator;

    unsigned rank_ = 0;
    RingSpec ring_;
    std::vector<Term> terms_;
};

inline GrassmannElem operator+(GrassmannElem a, const GrassmannElem& b) { return a += b; }
inline GrassmannElem operator-(GrassmannElem a, const GrassmannElem& b) { return a -= b; }
GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b);

/// a^k by iterated multiplication; a^0 = 1.
GrassmannElem pow(const GrassmannElem& a, unsigned k);

/// Collects sum of products a_i * b_i and canonicalizes once at the end.
/// This is the inner loop of matrix multiplication.
class ProductAccumulator {
public:
    ProductAccumulator(unsigned rank, const RingSpec& ring) : rank_(rank), ring_(ring) {}

    /// Adds a * b, or -(a * b) when `negate` is set.
    void add_product(const GrassmannElem& a, const GrassmannElem& b, bool negate = false);
    void add(const GrassmannElem& a);
    bool empty() const noexcept { return pending_.empty(); }
    /// Canonical sum; leaves the accumulator empty.
    GrassmannElem take();

private:
    unsigned rank_;
    RingSpec ring_;
    std::vector<Term> pending_;
};

}  // namespace grassid

#endif
