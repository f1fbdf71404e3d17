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

#include "grassid/ring.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace grassid {

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_decimal_integer(s))
        throw Error(Errc::Parse, "not a decimal integer: '" + std::string(s) + "'");
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
        throw Error(Errc::BadCharacteristic, "modulus " + std::to_string(p) + " is not a prime below 2^32");
    return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse(std::string_view text) {
    if (text == "int") return integers();
    if (text == "rat") return rationals();
    constexpr std::string_view prefix = "zmod:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw Error(Errc::Parse, "bad modulus in ring '" + std::string(text) + "'");
        if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
            throw Error(Errc::Parse, "modulus in ring '" + std::string(text) + "' is not a prime below 2^32");
        return prime_field(p);
    }
    throw Error(Errc::Parse, "unknown ring '" + std::string(text) + "' (expected int, rat or zmod:<p>)");
}

std::string RingSpec::to_string() const {
    switch (kind_) {
    case RingKind::Integer: return "int";
    case RingKind::Rational: return "rat";
    case RingKind::PrimeField: return "zmod:" + std::to_string(modulus_);
    }
    return "?";
}

RingElem::RingElem(const RingSpec& ring, long value) : RingElem(ring, mpz_class(value)) {}

RingElem::RingElem(const RingSpec& ring, const mpz_class& value) : ring_(ring) {
    switch (ring.kind()) {
    case RingKind::Integer: value_ = value; break;
    case RingKind::Rational: value_ = mpq_class(value); break;
    case RingKind::PrimeField: value_ = reduce(value, ring.modulus()); break;
    }
}

RingElem RingElem::parse(const RingSpec& ring, std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return RingElem(ring, parse_integer(text));
    if (ring.kind() != RingKind::Rational)
        throw Error(Errc::Parse, "fraction '" + std::string(text) + "' outside the rationals");
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
    RingElem out(ring, 0L);
    mpq_class q(num, den);
    q.canonicalize();
    out.value_ = q;
    return out;
}

bool RingElem::is_zero() const noexcept {
    return std::visit([](const auto& v) { return v == 0; }, value_);
}

bool RingElem::is_one() const noexcept {
    return std::visit([](const auto& v) { return v == 1; }, value_);
}

bool RingElem::is_negative() const noexcept {
    if (const auto* z = std::get_if<mpz_class>(&value_)) return sgn(*z) < 0;
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
    return false;
}

mpq_class RingElem::to_rational() const {
    if (const auto* z = std::get_if<mpz_class>(&value_)) return mpq_class(*z);
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(Errc::MixedRings, "no rational value in " + ring_.to_string());
}

std::uint64_t RingElem::residue() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw Error(Errc::MixedRings, "no residue in " + ring_.to_string());
}

void RingElem::check_same_ring(const RingElem& other) const {
    if (!(ring_ == other.ring_))
        throw Error(Errc::MixedRings, ring_.to_string() + " vs " + other.ring_.to_string());
}

RingElem RingElem::inverse() const {
    if (ring_.kind() == RingKind::Integer) throw Error(Errc::NotInvertible, "no inverses over the integers");
    if (is_zero()) throw Error(Errc::NotInvertible, "inverse of zero");
    RingElem out = *this;
    if (auto* q = std::get_if<mpq_class>(&out.value_)) {
        *q = 1 / *q;
        return out;
    }
    mpz_class r;
    mpz_class a(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
    mpz_class p(static_cast<unsigned long>(ring_.modulus()));
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    out.value_ = r.get_ui();
    return out;
}

void RingElem::negate() {
    switch (ring_.kind()) {
    case RingKind::Integer: {
        auto& z = std::get<mpz_class>(value_);
        mpz_neg(z.get_mpz_t(), z.get_mpz_t());
        break;
    }
    case RingKind::Rational: {
        auto& q = std::get<mpq_class>(value_);
        mpq_neg(q.get_mpq_t(), q.get_mpq_t());
        break;
    }
    case RingKind::PrimeField: {
        auto& r = std::get<std::uint64_t>(value_);
        if (r != 0) r = ring_.modulus() - r;
        break;
    }
    }
}

RingElem RingElem::operator-() const {
    RingElem out = *this;
    out.negate();
    return out;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
    check_same_ring(rhs);
    switch (ring_.kind()) {
    case RingKind::Integer: std::get<mpz_class>(value_) += std::get<mpz_class>(rhs.value_); break;
    case RingKind::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_); break;
    case RingKind::PrimeField: {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + std::get<std::uint64_t>(rhs.value_)) % ring_.modulus();
        break;
    }
    }
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
    check_same_ring(rhs);
    switch (ring_.kind()) {
    case RingKind::Integer: std::get<mpz_class>(value_) -= std::get<mpz_class>(rhs.value_); break;
    case RingKind::Rational: std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_); break;
    case RingKind::PrimeField: {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + ring_.modulus() - std::get<std::uint64_t>(rhs.value_)) % ring_.modulus();
        break;
    }
    }
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
    check_same_ring(rhs);
    switch (ring_.kind()) {
    case RingKind::Integer: std::get<mpz_class>(value_) *= std::get<mpz_class>(rhs.value_); break;
    case RingKind::Rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_); break;
    case RingKind::PrimeField: {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r * std::get<std::uint64_t>(rhs.value_)) % ring_.modulus();
        break;
    }
    }
    return *this;
}

void RingElem::add_mul(const RingElem& a, const RingElem& b) {
    check_same_ring(a);
    check_same_ring(b);
    switch (ring_.kind()) {
    case RingKind::Integer: {
        auto& z = std::get<mpz_class>(value_);
        mpz_addmul(z.get_mpz_t(), std::get<mpz_class>(a.value_).get_mpz_t(),
                   std::get<mpz_class>(b.value_).get_mpz_t());
        break;
    }
    case RingKind::Rational:
        std::get<mpq_class>(value_) += std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
        break;
    case RingKind::PrimeField: {
        auto& r = std::get<std::uint64_t>(value_);
        const auto p = ring_.modulus();
        r = (r + std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % p) % p;
        break;
    }
    }
}

std::string RingElem::to_string() const {
    if (const auto* z = std::get_if<mpz_class>(&value_)) return z->get_str();
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.to_string(); }

RingElem embed_int(const mpz_class& z, const RingSpec& ring) { return RingElem(ring, z); }

RingElem factorial(unsigned k, const RingSpec& ring) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return RingElem(ring, f);
}

RingElem power(const RingElem& base, unsigned exponent) {
    RingElem result = RingElem::one(base.ring());
    RingElem b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

}  // namespace grassid
