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
 * @file harness.hpp
 * @brief Seeded verification campaigns, the open-question search, and
 *        replay of emitted reproducers.
 *
 * Randomness contract. The generator is SplitMix64, pinned. A campaign with
 * seed s runs trial t on its own stream
 *
 *     Rng::stream(s, t) = SplitMix64(mix(s ^ mix(t + 1)))
 *
 * where mix is the SplitMix64 finalizer. Auxiliary passes (structured
 * substitutions, controls) use stream indices offset by Rng::kAuxBase. Bounded
 * draws use rejection sampling on the raw 64-bit output, so results do not
 * depend on the standard library's distributions.
 */

#ifndef GRASSID_HARNESS_HPP
#define GRASSID_HARNESS_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "grassid/gmatrix.hpp"
#include "grassid/identities.hpp"
#include "grassid/report.hpp"

namespace grassid {

class Rng {
public:
    static constexpr std::uint64_t kAuxBase = std::uint64_t{1} << 40;

    explicit Rng(std::uint64_t state) noexcept : state_(state) {}
    static Rng stream(std::uint64_t seed, std::uint64_t index) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;
    /// Uniform in [lo, hi].
    long between(long lo, long hi) noexcept;
    bool coin() noexcept { return (next() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

/// Nonzero scalar: [-9, 9] over Z, a/b with a in [-9, 9], b in [1, 5] over Q,
/// uniform nonzero residue over Z/p.
RingElem random_scalar(const RingSpec& ring, Rng& rng);

/// Each entry is a sum of `sparsity` terms with uniformly random masks and
/// random nonzero coefficients (colliding masks merge).
GrMatrix random_grmatrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned sparsity, Rng& rng);

/// Random degree-0 part plus random_grmatrix(sparsity).
GrMatrix random_full_matrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned sparsity, Rng& rng);

/// Entries are sums of `terms` random degree-1 monomials.
GrMatrix random_degree_one(std::size_t n, unsigned m, const RingSpec& ring, unsigned terms, Rng& rng);

/// b * e_rs for a basis monomial b; atoms are numbered mask-major:
/// index = mask * n^2 + (r - 1) * n + (s - 1).
GrMatrix atom(std::size_t n, unsigned m, const RingSpec& ring, std::uint64_t index);

struct Lemma2Check {
    bool b0_zero = false;
    bool b1_formula = false;
    bool b1_square_zero = false;
    bool b2_offdiagonal = false;
    bool b1_commutes_diag = false;
    bool b1_anticommutes_offdiag = false;

    bool all() const noexcept {
        return b0_zero && b1_formula && b1_square_zero && b2_offdiagonal && b1_commutes_diag &&
               b1_anticommutes_offdiag;
    }
};

/// Evaluates the five structural claims for B = f(A), f = prod (x - lambda_i),
/// taking A_0 = diag(lambdas) and A_1 from a. Errc::NonScalarEntries if the
/// degree-0 part of a is not diag(lambdas).
Lemma2Check lemma2_check(const std::vector<RingElem>& lambdas, const GrMatrix& a);

/// Throws Errc::HypothesisViolation unless a_i, a_j anticommute for distinct
/// i, j in M and commute otherwise.
void check_young_hypothesis(const std::vector<GrMatrix>& a, const YoungSpec& spec);

/// All compositions of k into odd parts, in lexicographic order.
std::vector<std::vector<unsigned>> odd_compositions(unsigned k);

/// Degrees implied by the identities for given n, m.
struct Degrees {
    unsigned ch_exponent;        // ceil(m/2) + 1
    unsigned capelli;            // n^2 + 2 floor(m/2) + 1
    unsigned standard_corollary; // 2(floor((n^2+1)/2) + floor(m/2))
    unsigned standard_product;   // 2n(floor(m/2) + 1)
    unsigned standard_sharp;     // 2(n + floor(m/2)) - 1
    unsigned open_question;      // 2(n + floor(m/2))
};
Degrees degrees(std::size_t n, unsigned m) noexcept;

Report verify_theorem1(const Campaign& c);
Report verify_lemma2(const Campaign& c);
Report verify_young_lemma(const Campaign& c);
Report verify_capelli_bound(const Campaign& c);
Report verify_standard_bounds(const Campaign& c);
Report search_open_question(const Campaign& c);
Report verify_amitsur_levitzki(const Campaign& c);
/// Runs the default witness for the campaign's (n, m, ring).
Report verify_sharpness(const Campaign& c);

/// Dispatches on c.target and fills elapsed_ms.
Report run_campaign(const Campaign& c);

/// Re-evaluates a reproducer. PASS when its expectation now holds, FAIL when
/// it is violated, COUNTEREXAMPLE_FOUND for a violated open-question tuple.
Report replay(const nlohmann::json& reproducer);

/// Report JSON with elapsed_ms removed; the basis of determinism checks.
std::string canonical_dump(const Report& r);

}  // namespace grassid

#endif
