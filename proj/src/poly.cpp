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

#include "grassid/poly.hpp"

#include <algorithm>

namespace grassid {

namespace {

void check_ring(const RingSpec& a, const RingSpec& b) {
    if (!(a == b)) throw Error(Errc::ContextMismatch, "polynomial over " + a.to_string() + " vs " + b.to_string());
}

// Add c * I to a in place.
void add_scalar_identity(GrMatrix& a, const RingElem& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i) a.set(i, i, a(i, i) + GrassmannElem::scalar(a.rank(), c));
}

}  // namespace

Poly::Poly(const RingSpec& ring, std::vector<RingElem> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) check_ring(ring_, c.ring());
    trim();
}

Poly Poly::constant(const RingElem& c) { return Poly(c.ring(), {c}); }

Poly Poly::x(const RingSpec& ring) { return Poly(ring, {RingElem::zero(ring), RingElem::one(ring)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElem Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RingElem::zero(ring_); }

RingElem Poly::evaluate(const RingElem& at) const {
    check_ring(ring_, at.ring());
    RingElem acc = RingElem::zero(ring_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_ring(ring_, rhs.ring_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), RingElem::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_ring(ring_, rhs.ring_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), RingElem::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    check_ring(ring_, rhs.ring_);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<RingElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, RingElem::zero(ring_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j].add_mul(coeffs_[i], rhs.coeffs_[j]);
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const RingElem& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.is_negative();
        const RingElem mag = negative ? -c : c;
        std::string body;
        if (k == 0) {
            body = mag.to_string();
        } else {
            if (!mag.is_one()) body = mag.to_string() + "*";
            body += k == 1 ? "x" : "x^" + std::to_string(k);
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

Poly pow(const Poly& f, unsigned k) {
    Poly result = Poly::constant(RingElem::one(f.ring()));
    for (unsigned i = 0; i < k; ++i) result *= f;
    return result;
}

Poly charpoly(const GrMatrix& a0) {
    const std::size_t n = a0.size();
    const RingSpec& ring = a0.ring();
    std::vector<std::vector<RingElem>> a(n, std::vector<RingElem>(n, RingElem::zero(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = a0(i, j);
            if (!e.is_homogeneous(0))
                throw Error(Errc::NonScalarEntries, "entry (" + std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + ") has positive-degree terms");
            a[i][j] = e.coefficient(0);
        }
    }

    // Berkowitz: c holds det(xI - A_r) for the leading r x r block, highest
    // degree first, and is extended by a lower-triangular Toeplitz product.
    std::vector<RingElem> c{RingElem::one(ring)};
    for (std::size_t r = 0; r < n; ++r) {
        // t = (1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S) with M the leading
        // r x r block, R = row r left of the diagonal, S = column r above it.
        std::vector<RingElem> t;
        t.reserve(r + 2);
        t.push_back(RingElem::one(ring));
        t.push_back(-a[r][r]);
        std::vector<RingElem> ms(r);
        for (std::size_t i = 0; i < r; ++i) ms[i] = a[i][r];
        for (std::size_t p = 0; p < r; ++p) {
            RingElem dot = RingElem::zero(ring);
            for (std::size_t i = 0; i < r; ++i) dot.add_mul(a[r][i], ms[i]);
            t.push_back(-dot);
            if (p + 1 == r) break;
            std::vector<RingElem> next(r, RingElem::zero(ring));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i].add_mul(a[i][j], ms[j]);
            ms = std::move(next);
        }
        std::vector<RingElem> next(r + 2, RingElem::zero(ring));
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j < c.size() && j <= i; ++j) next[i].add_mul(t[i - j], c[j]);
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());
    return Poly(ring, std::move(c));
}

Poly poly_from_roots(const std::vector<RingElem>& roots, const RingSpec& ring) {
    Poly result = Poly::constant(RingElem::one(ring));
    for (const auto& root : roots) result *= Poly(ring, {-root, RingElem::one(ring)});
    return result;
}

Poly poly_derivative(const Poly& f) {
    std::vector<RingElem> out;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out.push_back(f.coeffs()[i] * RingElem(f.ring(), static_cast<long>(i)));
    return Poly(f.ring(), std::move(out));
}

GrMatrix eval_at_matrix(const Poly& f, const GrMatrix& a) {
    check_ring(f.ring(), a.ring());
    GrMatrix acc(a.size(), a.rank(), a.ring());
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (k + 1 != c.size()) acc = acc * a;
        add_scalar_identity(acc, c[k]);
    }
    return acc;
}

GrMatrix eval_product_form(const std::vector<RootPower>& factors, const GrMatrix& a) {
    GrMatrix result = GrMatrix::identity(a.size(), a.rank(), a.ring());
    for (const auto& [root, multiplicity] : factors) {
        check_ring(root.ring(), a.ring());
        GrMatrix shifted = a;
        add_scalar_identity(shifted, -root);
        for (unsigned i = 0; i < multiplicity; ++i) result = result * shifted;
    }
    return result;
}

}  // namespace grassid
