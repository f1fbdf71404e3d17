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

#include "grassid/gmatrix.hpp"

#include <algorithm>

namespace grassid {

GrMatrix::GrMatrix(std::size_t n, unsigned m, const RingSpec& ring)
    : n_(n), m_(m), ring_(ring), entries_(n * n, GrassmannElem(m, ring)) {}

GrMatrix GrMatrix::identity(std::size_t n, unsigned m, const RingSpec& ring) {
    GrMatrix out(n, m, ring);
    for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = GrassmannElem::one(m, ring);
    return out;
}

GrMatrix GrMatrix::diagonal(const std::vector<GrassmannElem>& diag) {
    if (diag.empty()) return {};
    GrMatrix out(diag.size(), diag.front().rank(), diag.front().ring());
    for (std::size_t i = 0; i < diag.size(); ++i) out.set(i, i, diag[i]);
    return out;
}

void GrMatrix::set(std::size_t i, std::size_t j, GrassmannElem value) {
    if (i >= n_ || j >= n_)
        throw Error(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                               ") of a " + std::to_string(n_) + "x" + std::to_string(n_) +
                                               " matrix");
    value.check_context(GrassmannElem(m_, ring_));
    entries_[i * n_ + j] = std::move(value);
}

bool GrMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const GrassmannElem& e) { return e.is_zero(); });
}

std::size_t GrMatrix::support() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const GrassmannElem& e) { return !e.is_zero(); }));
}

void GrMatrix::check_context(const GrMatrix& other) const {
    if (n_ != other.n_ || m_ != other.m_ || !(ring_ == other.ring_))
        throw Error(Errc::ContextMismatch, "M_" + std::to_string(n_) + "E^" + std::to_string(m_) + " over " +
                                               ring_.to_string() + " vs M_" + std::to_string(other.n_) + "E^" +
                                               std::to_string(other.m_) + " over " + other.ring_.to_string());
}

GrMatrix GrMatrix::operator-() const {
    GrMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

GrMatrix& GrMatrix::operator+=(const GrMatrix& rhs) {
    check_context(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!rhs.entries_[i].is_zero()) entries_[i] += rhs.entries_[i];
    return *this;
}

GrMatrix& GrMatrix::operator-=(const GrMatrix& rhs) {
    check_context(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!rhs.entries_[i].is_zero()) entries_[i] -= rhs.entries_[i];
    return *this;
}

GrMatrix GrMatrix::scaled(const GrassmannElem& c) const {
    c.check_context(GrassmannElem(m_, ring_));
    GrMatrix out = *this;
    for (auto& e : out.entries_)
        if (!e.is_zero()) e = c * e;
    return out;
}

GrMatrix GrMatrix::scaled(const RingElem& c) const {
    GrMatrix out = *this;
    for (auto& e : out.entries_) e = e.scaled(c);
    return out;
}

GrMatrix GrMatrix::component(unsigned degree) const {
    GrMatrix out = *this;
    for (auto& e : out.entries_) e = e.component(degree);
    return out;
}

std::pair<GrMatrix, GrMatrix> GrMatrix::diag_split() const {
    GrMatrix diag(n_, m_, ring_);
    GrMatrix off = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        diag.entries_[i * n_ + i] = entries_[i * n_ + i];
        off.entries_[i * n_ + i] = GrassmannElem(m_, ring_);
    }
    return {std::move(diag), std::move(off)};
}

bool GrMatrix::in_filtration(unsigned r) const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [r](const GrassmannElem& e) { return e.in_filtration(r); });
}

std::string GrMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const auto& e = entries_[i * n_ + j];
            if (e.is_zero()) continue;
            const std::string unit = unit_name(n_, i + 1, j + 1);
            std::vector<const Term*> order;
            for (const Term& t : e.terms()) order.push_back(&t);
            std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
                auto dx = mask_degree(x->mask), dy = mask_degree(y->mask);
                return dx != dy ? dx < dy : x->mask < y->mask;
            });
            for (const Term* t : order) {
                const bool negative = t->coeff.is_negative();
                const RingElem mag = negative ? -t->coeff : t->coeff;
                std::string body;
                if (!mag.is_one()) body = mag.to_string() + "*";
                if (t->mask != 0) body += monomial_name(t->mask) + "*";
                body += unit;
                if (out.empty())
                    out = negative ? "-" + body : body;
                else
                    out += (negative ? " - " : " + ") + body;
            }
        }
    }
    return out.empty() ? "0" : out;
}

GrMatrix operator*(const GrMatrix& a, const GrMatrix& b) {
    MatrixAccumulator acc(a.n_, a.m_, a.ring_);
    acc.add_product(a, b);
    return acc.take();
}

MatrixAccumulator::MatrixAccumulator(std::size_t n, unsigned m, const RingSpec& ring)
    : n_(n), m_(m), ring_(ring), entries_(n * n, ProductAccumulator(m, ring)) {}

void MatrixAccumulator::add_product(const GrMatrix& a, const GrMatrix& b, bool negate) {
    a.check_context(b);
    if (a.n_ != n_ || a.m_ != m_ || !(a.ring_ == ring_)) a.check_context(GrMatrix(n_, m_, ring_));
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto& lhs = a.entries_[i * n + k];
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& rhs = b.entries_[k * n + j];
                if (!rhs.is_zero()) entries_[i * n + j].add_product(lhs, rhs, negate);
            }
        }
    }
}

void MatrixAccumulator::add(const GrMatrix& a, bool negate) {
    if (a.n_ != n_ || a.m_ != m_ || !(a.ring_ == ring_)) a.check_context(GrMatrix(n_, m_, ring_));
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (a.entries_[i].is_zero()) continue;
        entries_[i].add(negate ? -a.entries_[i] : a.entries_[i]);
    }
}

GrMatrix MatrixAccumulator::take() {
    GrMatrix out(n_, m_, ring_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].empty()) out.entries_[i] = entries_[i].take();
    return out;
}

GrMatrix matrix_unit(std::size_t n, unsigned m, const RingSpec& ring, std::size_t r, std::size_t s) {
    if (r < 1 || r > n || s < 1 || s > n)
        throw Error(Errc::IndexOutOfRange, "matrix unit e(" + std::to_string(r) + "," + std::to_string(s) +
                                               ") outside n = " + std::to_string(n));
    GrMatrix out(n, m, ring);
    out.set(r - 1, s - 1, GrassmannElem::one(m, ring));
    return out;
}

GrMatrix mat_pow(const GrMatrix& a, unsigned k) {
    GrMatrix result = GrMatrix::identity(a.size(), a.rank(), a.ring());
    for (unsigned i = 0; i < k; ++i) {
        result = result * a;
        if (result.is_zero()) break;
    }
    return result;
}

std::string unit_name(std::size_t n, std::size_t r, std::size_t s) {
    if (n < 10) return "e" + std::to_string(r) + std::to_string(s);
    return "e" + std::to_string(r) + "," + std::to_string(s);
}

}  // namespace grassid
