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
 * @file identities.hpp
 * @brief Standard and Capelli polynomials, and alternating sums over Young
 *        subgroups, evaluated on matrices over E^m.
 *
 * Each of s_k and d_k has two evaluators:
 *
 *  - a reference one summing all k! signed words, and
 *  - a subset dynamic program. For the standard polynomial, with h(empty) = I,
 *
 *        h(S) = sum_{i in S} (-1)^{#{j in S : j < i}} x_i h(S \ {i}),
 *
 *    so that s_k = h({1..k}). Placing i first among the remaining set S adds
 *    exactly #{j in S : j < i} inversions. The Capelli version inserts the
 *    fixed y after each x and multiplies by y_0 at the end. Only one
 *    cardinality layer is kept alive at a time, so memory is bounded by
 *    C(k, k/2) matrices.
 */

#ifndef GRASSID_IDENTITIES_HPP
#define GRASSID_IDENTITIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "grassid/gmatrix.hpp"

namespace grassid {

/// Size limits for the evaluators. Exceeding one throws Errc::DegreeTooLarge
/// (or Errc::GroupTooLarge for Young sums).
struct Guards {
    unsigned max_naive_k = 8;
    unsigned max_standard_dp_k = 24;
    unsigned max_capelli_dp_k = 20;
    std::uint64_t max_young_order = 1'000'000;
};

/// s_k(x_1, ..., x_k) summed over all k! permutations.
GrMatrix standard_naive(std::span<const GrMatrix> x, const Guards& guards = {});
/// s_k by the subset recurrence; equal to standard_naive.
GrMatrix standard_dp(std::span<const GrMatrix> x, const Guards& guards = {});

/// d_k(x_1..x_k; y_0..y_k) summed over all k! permutations of the x's.
/// Errc::LengthMismatch unless y.size() == x.size() + 1.
GrMatrix capelli_naive(std::span<const GrMatrix> x, std::span<const GrMatrix> y, const Guards& guards = {});
/// d_k by the subset recurrence; equal to capelli_naive.
GrMatrix capelli_dp(std::span<const GrMatrix> x, std::span<const GrMatrix> y, const Guards& guards = {});

/// A set partition of {1..k} together with the set M of positions whose
/// elements are meant to pairwise anticommute. N = {1..k} \ M must meet
/// every class exactly once.
struct YoungSpec {
    unsigned k = 0;
    std::vector<std::vector<unsigned>> classes;  // 1-based positions
    std::vector<unsigned> anticommuting;         // M, 1-based

    /// Errc::BadPartition if the classes do not partition {1..k} or some
    /// class does not contain exactly one element outside M.
    void validate() const;
    /// prod over classes of |class|!, saturating at UINT64_MAX.
    std::uint64_t group_order() const;

    /// Consecutive intervals of the given sizes with N = leftmost elements.
    static YoungSpec intervals(const std::vector<unsigned>& sizes);
};

/// sum over pi in the Young subgroup of sign(pi) a_pi(1) ... a_pi(k). The
/// commutation hypothesis on the a_i is not checked here.
GrassmannElem young_alternating_sum(std::span<const GrassmannElem> a, const YoungSpec& spec,
                                    const Guards& guards = {});
GrMatrix young_alternating_sum(std::span<const GrMatrix> a, const YoungSpec& spec, const Guards& guards = {});

struct StandardProduct {
    GrMatrix product;
    std::vector<GrMatrix> factors;  // s_2n of each consecutive block
};

/// s_2n(A_1..A_2n) s_2n(A_2n+1..A_4n) ... over floor(m/2)+1 blocks of 2n.
/// Errc::LengthMismatch unless x.size() == 2n(floor(m/2)+1).
StandardProduct standard_product_eval(std::span<const GrMatrix> x, const Guards& guards = {});

}  // namespace grassid

#endif
