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

// Test-only helpers: small random generators and oracles that do not share
// code paths with the library routines they check.

#ifndef GRASSID_TESTS_SUPPORT_HPP
#define GRASSID_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grassid/gmatrix.hpp"
#include "grassid/poly.hpp"

namespace grassid::testing {

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    std::uint64_t bits() { return gen_(); }

    /// Random nonzero-ish scalar: [-9, 9] over Z, small fractions over Q,
    /// uniform residue over Z/p.
    RingElem scalar(const RingSpec& ring, bool allow_zero = true);
    GrassmannElem element(unsigned m, const RingSpec& ring, unsigned terms);
    GrassmannElem homogeneous(unsigned m, const RingSpec& ring, unsigned degree, unsigned terms);
    GrMatrix matrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned terms_per_entry);
    GrMatrix scalar_matrix(std::size_t n, unsigned m, const RingSpec& ring);
    /// A single-entry matrix whose entry is one basis monomial.
    GrMatrix atom(std::size_t n, unsigned m, const RingSpec& ring);

private:
    std::mt19937_64 gen_;
};

/// Product of two elements computed on index lists: concatenate, reject a
/// repeated generator, then bubble sort while counting transpositions.
GrassmannElem oracle_mul(const GrassmannElem& a, const GrassmannElem& b);

/// det(xI - A0) as a sum over all n! permutations with polynomial entries.
Poly leibniz_charpoly(const GrMatrix& a0);

/// Entrywise product of matrices using oracle_mul.
GrMatrix oracle_matmul(const GrMatrix& a, const GrMatrix& b);

}  // namespace grassid::testing

#endif
