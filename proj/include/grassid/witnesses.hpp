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
 * @file witnesses.hpp
 * @brief Explicit inputs showing that the Cayley-Hamilton exponent, the
 *        Capelli x-degree and the standard degree bounds cannot be lowered.
 *
 * Every verifier compares against an exact closed form, not just a nonzero
 * test. Constructors enforce the characteristic preconditions unless asked
 * not to; skipping them is how the bad-characteristic collapse is exhibited.
 */

#ifndef GRASSID_WITNESSES_HPP
#define GRASSID_WITNESSES_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "grassid/gmatrix.hpp"
#include "grassid/identities.hpp"
#include "grassid/report.hpp"

namespace grassid {

enum class WitnessKind { CayleyHamilton, Capelli, Standard };

enum class CharacteristicCheck { Enforce, Skip };

struct WitnessSpec {
    WitnessKind kind = WitnessKind::CayleyHamilton;
    std::size_t n = 1;
    unsigned m = 0;
    RingSpec ring = RingSpec::rationals();
    std::vector<RingElem> lambdas;  // CayleyHamilton only
    std::vector<unsigned> parts;    // Capelli only, n^2 even numbers summing to 2 floor(m/2)

    /// {"kind":"ch|capelli|standard","n":..,"m":..,"ring":..,"lambdas":[..],"parts":[..]}
    nlohmann::ordered_json to_json() const;
    static WitnessSpec from_json(const nlohmann::json& j);
};

/// lambdas = 0, 1, ..., n-1.
WitnessSpec default_ch_spec(std::size_t n, unsigned m, const RingSpec& ring);
/// parts = (2 floor(m/2), 0, ..., 0) when 2 floor(m/2) < p, else greedy
/// largest even parts below p. Errc::BadCharacteristic if none fit.
WitnessSpec default_capelli_spec(std::size_t n, unsigned m, const RingSpec& ring);
WitnessSpec standard_spec(std::size_t n, unsigned m, const RingSpec& ring);

/// v = v1v2 + v3v4 + ... + v_{2q-1}v_{2q} (+ v_m when m is odd), q = floor(m/2).
GrassmannElem ch_nilpotent(unsigned m, const RingSpec& ring);

/// diag(lambda_i + v). Errc::BadCharacteristic unless the ring is a field of
/// characteristic 0 or p > ceil(m/2); Errc::DuplicateLambdas on repeats.
GrMatrix ch_witness(const WitnessSpec& spec, CharacteristicCheck check = CharacteristicCheck::Enforce);

/// Checks f(A)^(c+1) = 0, f(A)^c != 0 and, for every i, that the (i, i)
/// entry of g_i(A) = (A - lambda_i)^c prod_{j != i} (A - lambda_j)^(c+1) is
/// exactly v^c f'(lambda_i)^(c+1) and nonzero; c = ceil(m/2).
Report ch_sharpness_verify(const WitnessSpec& spec, CharacteristicCheck check = CharacteristicCheck::Enforce);

struct CapelliWitness {
    std::vector<GrMatrix> x;  // C_1..C_k
    std::vector<GrMatrix> y;  // B_0..B_k
};

/// C = matrix units e_rs in row-major order, each followed by its m_r
/// multiples v_i e_rs (generators used once, in order). B_i = e_{s,r}
/// bridges the column of C_i to the row of C_{i+1}; B_0 starts at row 1 and
/// B_k returns to column 1.
CapelliWitness capelli_witness(const WitnessSpec& spec, CharacteristicCheck check = CharacteristicCheck::Enforce);

/// d_k(C; B) == B_0 C_1 B_1 ... C_k B_k * prod m_r!, and nonzero.
Report capelli_sharpness_verify(const WitnessSpec& spec, const Guards& guards = {},
                                CharacteristicCheck check = CharacteristicCheck::Enforce);

/// e12, e23, ..., e_{n-1,n}, e_nn, e_{n,n-1}, ..., e21, then v_i e11 for
/// i = 1..2 floor(m/2). Errc::BadCharacteristic unless char 0 or p > 2 floor(m/2).
std::vector<GrMatrix> standard_witness(std::size_t n, unsigned m, const RingSpec& ring,
                                       CharacteristicCheck check = CharacteristicCheck::Enforce);

/// (2q)! v1...v2q (e11 + 2 sum_{r >= 2} e_rr), the exact value of s_k on
/// standard_witness; its (1,1) entry is (2q)! v1...v2q.
GrMatrix standard_witness_value(std::size_t n, unsigned m, const RingSpec& ring);

/// Compares s_k(witness) with standard_witness_value() and its (1,1) entry
/// with (2q)! v1...v2q, and requires a nonzero result.
Report standard_sharpness_verify(std::size_t n, unsigned m, const RingSpec& ring, const Guards& guards = {},
                                 CharacteristicCheck check = CharacteristicCheck::Enforce);

}  // namespace grassid

#endif
