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

#ifndef GRASSID_POLY_HPP
#define GRASSID_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grassid/gmatrix.hpp"

namespace grassid {

/// Univariate polynomial over a coefficient ring, lowest degree first and
/// without trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(const RingSpec& ring) : ring_(ring) {}
    Poly(const RingSpec& ring, std::vector<RingElem> coeffs);

    static Poly constant(const RingElem& c);
    /// The monomial x.
    static Poly x(const RingSpec& ring);

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<RingElem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
    RingElem coeff(std::size_t i) const;

    RingElem evaluate(const RingElem& at) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    /// "x^3 - 3*x + 2".
    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    RingSpec ring_;
    std::vector<RingElem> coeffs_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(Poly a, const Poly& b) { return a *= b; }

Poly pow(const Poly& f, unsigned k);

/// det(xI - A0) by Berkowitz's division-free recurrence. A0 must have only
/// degree-0 entries (Errc::NonScalarEntries otherwise). Monic of degree n.
Poly charpoly(const GrMatrix& a0);

/// prod (x - root).
Poly poly_from_roots(const std::vector<RingElem>& roots, const RingSpec& ring);

Poly poly_derivative(const Poly& f);

/// f(A) by Horner's rule; coefficients act as central degree-0 scalars.
GrMatrix eval_at_matrix(const Poly& f, const GrMatrix& a);

struct RootPower {
    RingElem root;
    unsigned multiplicity;
};

/// prod (A - root I)^multiplicity by iterated multiplication; I for an empty list.
GrMatrix eval_product_form(const std::vector<RootPower>& factors, const GrMatrix& a);

}  // namespace grassid

#endif
