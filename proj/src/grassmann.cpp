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

#include "grassid/grassmann.hpp"

#include <algorithm>

namespace grassid {

namespace {

Mask rank_mask(unsigned rank) { return rank >= 64 ? ~Mask{0} : (Mask{1} << rank) - 1; }

// Sort by mask, merge equal masks, drop zeros.
void canonicalize(std::vector<Term>& terms) {
    if (terms.empty()) return;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        if (out != i) terms[out] = std::move(terms[i]);
        for (; j < terms.size() && terms[j].mask == terms[out].mask; ++j) terms[out].coeff += terms[j].coeff;
        if (!terms[out].coeff.is_zero()) ++out;
        i = j;
    }
    terms.resize(out);
}

void append_products(std::vector<Term>& out, std::span<const Term> lhs, std::span<const Term> rhs,
                     bool negate = false) {
    for (const Term& a : lhs) {
        for (const Term& b : rhs) {
            if ((a.mask & b.mask) != 0) continue;
            Term t{a.mask | b.mask, a.coeff * b.coeff};
            if (reorder_is_odd(a.mask, b.mask) != negate) t.coeff.negate();
            out.push_back(std::move(t));
        }
    }
}

std::string signed_term(const RingElem& c, Mask mask, bool first) {
    std::string body;
    bool negative = c.is_negative();
    RingElem mag = negative ? -c : c;
    if (mask == 0) {
        body = mag.to_string();
    } else if (mag.is_one()) {
        body = monomial_name(mask);
    } else {
        body = mag.to_string() + "*" + monomial_name(mask);
    }
    if (first) return negative ? "-" + body : body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace

std::string monomial_name(Mask mask) {
    std::string out;
    for (unsigned i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1U) out += "v" + std::to_string(i + 1);
    return out;
}

GrassmannElem::GrassmannElem(unsigned rank, const RingSpec& ring) : rank_(rank), ring_(ring) {
    if (rank > kMaxRank)
        throw Error(Errc::IndexOutOfRange, "Grassmann rank " + std::to_string(rank) + " exceeds " +
                                               std::to_string(kMaxRank));
}

GrassmannElem GrassmannElem::scalar(unsigned rank, const RingElem& c) { return monomial(rank, 0, c); }

GrassmannElem GrassmannElem::one(unsigned rank, const RingSpec& ring) {
    return monomial(rank, 0, RingElem::one(ring));
}

GrassmannElem GrassmannElem::generator(unsigned rank, const RingSpec& ring, unsigned index) {
    if (index < 1 || index > rank)
        throw Error(Errc::IndexOutOfRange, "generator v" + std::to_string(index) + " outside E^" +
                                               std::to_string(rank));
    return monomial(rank, Mask{1} << (index - 1), RingElem::one(ring));
}

GrassmannElem GrassmannElem::monomial(unsigned rank, Mask mask, const RingElem& c) {
    return from_masks(rank, c.ring(), {Term{mask, c}});
}

GrassmannElem GrassmannElem::from_terms(unsigned rank, const RingSpec& ring,
                                        const std::vector<std::pair<std::vector<unsigned>, RingElem>>& terms) {
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto& [indices, coeff] : terms) {
        Mask mask = 0;
        unsigned prev = 0;
        for (unsigned idx : indices) {
            if (idx < 1 || idx > rank)
                throw Error(Errc::IndexOutOfRange, "index " + std::to_string(idx) + " outside [1, " +
                                                       std::to_string(rank) + "]");
            if (idx <= prev) throw Error(Errc::NonIncreasingIndices, "indices must be strictly increasing");
            prev = idx;
            mask |= Mask{1} << (idx - 1);
        }
        raw.push_back(Term{mask, coeff});
    }
    return from_masks(rank, ring, std::move(raw));
}

GrassmannElem GrassmannElem::from_masks(unsigned rank, const RingSpec& ring, std::vector<Term> terms) {
    GrassmannElem out(rank, ring);
    const Mask allowed = rank_mask(rank);
    for (const Term& t : terms) {
        if ((t.mask & ~allowed) != 0)
            throw Error(Errc::IndexOutOfRange, "mask " + std::to_string(t.mask) + " uses generators beyond v" +
                                                   std::to_string(rank));
        if (!(t.coeff.ring() == ring))
            throw Error(Errc::MixedRings, t.coeff.ring().to_string() + " coefficient in " + ring.to_string());
    }
    canonicalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

RingElem GrassmannElem::coefficient(Mask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Mask m) { return t.mask < m; });
    if (it != terms_.end() && it->mask == mask) return it->coeff;
    return RingElem::zero(ring_);
}

GrassmannElem GrassmannElem::component(unsigned degree) const {
    GrassmannElem out(rank_, ring_);
    for (const Term& t : terms_)
        if (mask_degree(t.mask) == degree) out.terms_.push_back(t);
    return out;
}

bool GrassmannElem::in_filtration(unsigned r) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [r](const Term& t) { return mask_degree(t.mask) >= r; });
}

bool GrassmannElem::is_homogeneous(unsigned d) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return mask_degree(t.mask) == d; });
}

unsigned GrassmannElem::min_degree() const noexcept {
    unsigned best = rank_ + 1;
    for (const Term& t : terms_) best = std::min(best, mask_degree(t.mask));
    return best;
}

void GrassmannElem::check_context(const GrassmannElem& other) const {
    if (rank_ != other.rank_ || !(ring_ == other.ring_))
        throw Error(Errc::ContextMismatch, "E^" + std::to_string(rank_) + " over " + ring_.to_string() +
                                               " vs E^" + std::to_string(other.rank_) + " over " +
                                               other.ring_.to_string());
}

GrassmannElem GrassmannElem::scaled(const RingElem& c) const {
    if (!(c.ring() == ring_)) throw Error(Errc::ContextMismatch, "scalar from " + c.ring().to_string());
    GrassmannElem out(rank_, ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term s{t.mask, t.coeff * c};
        if (!s.coeff.is_zero()) out.terms_.push_back(std::move(s));
    }
    return out;
}

GrassmannElem GrassmannElem::operator-() const {
    GrassmannElem out = *this;
    for (Term& t : out.terms_) t.coeff.negate();
    return out;
}

GrassmannElem& GrassmannElem::operator+=(const GrassmannElem& rhs) {
    check_context(rhs);
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    canonicalize(terms_);
    return *this;
}

GrassmannElem& GrassmannElem::operator-=(const GrassmannElem& rhs) { return *this += -rhs; }

GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b) {
    a.check_context(b);
    GrassmannElem out(a.rank_, a.ring_);
    append_products(out.terms_, a.terms_, b.terms_);
    canonicalize(out.terms_);
    return out;
}

std::string GrassmannElem::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const Term& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
        auto dx = mask_degree(x->mask), dy = mask_degree(y->mask);
        return dx != dy ? dx < dy : x->mask < y->mask;
    });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) out += signed_term(order[i]->coeff, order[i]->mask, i == 0);
    return out;
}

GrassmannElem pow(const GrassmannElem& a, unsigned k) {
    GrassmannElem result = GrassmannElem::one(a.rank(), a.ring());
    for (unsigned i = 0; i < k; ++i) {
        result = result * a;
        if (result.is_zero()) break;
    }
    return result;
}

void ProductAccumulator::add_product(const GrassmannElem& a, const GrassmannElem& b, bool negate) {
    if (a.rank_ != rank_ || !(a.ring_ == ring_)) a.check_context(GrassmannElem(rank_, ring_));
    a.check_context(b);
    append_products(pending_, a.terms_, b.terms_, negate);
}

void ProductAccumulator::add(const GrassmannElem& a) {
    a.check_context(GrassmannElem(rank_, ring_));
    pending_.insert(pending_.end(), a.terms_.begin(), a.terms_.end());
}

GrassmannElem ProductAccumulator::take() {
    GrassmannElem out(rank_, ring_);
    canonicalize(pending_);
    out.terms_ = std::move(pending_);
    pending_.clear();
    return out;
}

}  // namespace grassid
