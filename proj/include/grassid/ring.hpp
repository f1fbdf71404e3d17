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
 * @file ring.hpp
 * @brief Exact commutative coefficient rings: Z, Q and Z/p.
 *
 * Every scalar in the library is a RingElem tagged with the RingSpec it
 * belongs to. Arithmetic between elements of different rings throws
 * Errc::MixedRings; there is no implicit coercion.
 *
 * Canonical forms: integers are GMP integers, rationals are reduced with a
 * positive denominator, residues live in [0, p). Equality is structural.
 */

#ifndef GRASSID_RING_HPP
#define GRASSID_RING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "grassid/error.hpp"

namespace grassid {

enum class RingKind : std::uint8_t { Integer, Rational, PrimeField };

class RingSpec {
public:
    /// The integers; this is also the default-constructed ring.
    constexpr RingSpec() = default;

    static RingSpec integers() { return RingSpec(RingKind::Integer, 0); }
    static RingSpec rationals() { return RingSpec(RingKind::Rational, 0); }
    /// Throws Errc::BadCharacteristic unless p is a prime below 2^32.
    static RingSpec prime_field(std::uint64_t p);

    /// Parses "int", "rat" or "zmod:<p>"; anything else is Errc::Parse.
    static RingSpec parse(std::string_view text);

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    bool is_field() const noexcept { return kind_ != RingKind::Integer; }

    /// Inverse of parse().
    std::string to_string() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    constexpr RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_ = RingKind::Integer;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

class RingElem {
public:
    /// Integer zero.
    RingElem() : value_(mpz_class(0)) {}
    RingElem(const RingSpec& ring, long value);
    RingElem(const RingSpec& ring, const mpz_class& value);

    static RingElem zero(const RingSpec& ring) { return RingElem(ring, 0L); }
    static RingElem one(const RingSpec& ring) { return RingElem(ring, 1L); }

    /// Decimal integer, or "num/den" over the rationals. Errc::Parse on
    /// malformed input or a fraction outside Q.
    static RingElem parse(const RingSpec& ring, std::string_view text);

    const RingSpec& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True for a negative integer or rational; residues are never negative.
    bool is_negative() const noexcept;

    /// Errc::NotInvertible for zero or over the integers.
    RingElem inverse() const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& rhs);
    RingElem& operator-=(const RingElem& rhs);
    RingElem& operator*=(const RingElem& rhs);

    /// *this += a * b without temporaries.
    void add_mul(const RingElem& a, const RingElem& b);
    void negate();

    std::string to_string() const;

    /// Exact value over Z or Q; Errc::MixedRings over Z/p.
    mpq_class to_rational() const;
    /// Canonical residue in [0, p) over Z/p; Errc::MixedRings otherwise.
    std::uint64_t residue() const;

    friend bool operator==(const RingElem& a, const RingElem& b);

private:
    void check_same_ring(const RingElem& other) const;

    RingSpec ring_;
    std::variant<mpz_class, mpq_class, std::uint64_t> value_;
};

inline RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
inline RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
inline RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }

std::ostream& operator<<(std::ostream& os, const RingElem& x);

/// Image of an integer under the unique ring homomorphism Z -> ring.
RingElem embed_int(const mpz_class& z, const RingSpec& ring);
inline RingElem embed_int(long z, const RingSpec& ring) { return RingElem(ring, z); }

/// k! embedded in the ring.
RingElem factorial(unsigned k, const RingSpec& ring);

RingElem power(const RingElem& base, unsigned exponent);

}  // namespace grassid

#endif
