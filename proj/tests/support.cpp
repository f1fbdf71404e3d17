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

#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace grassid::testing {

RingElem TestRng::scalar(const RingSpec& ring, bool allow_zero) {
    while (true) {
        RingElem c = RingElem::zero(ring);
        switch (ring.kind()) {
        case RingKind::Integer: c = RingElem(ring, uniform(-9, 9)); break;
        case RingKind::Rational:
            c = RingElem::parse(ring, std::to_string(uniform(-9, 9)) + "/" + std::to_string(uniform(1, 5)));
            break;
        case RingKind::PrimeField: c = RingElem(ring, uniform(0, static_cast<long>(ring.modulus()) - 1)); break;
        }
        if (allow_zero || !c.is_zero()) return c;
    }
}

GrassmannElem TestRng::element(unsigned m, const RingSpec& ring, unsigned terms) {
    std::vector<Term> raw;
    const Mask full = m == 0 ? 0 : (Mask{1} << m) - 1;
    for (unsigned t = 0; t < terms; ++t) raw.push_back(Term{bits() & full, scalar(ring, false)});
    return GrassmannElem::from_masks(m, ring, raw);
}

GrassmannElem TestRng::homogeneous(unsigned m, const RingSpec& ring, unsigned degree, unsigned terms) {
    std::vector<Term> raw;
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<unsigned> idx(m);
        std::iota(idx.begin(), idx.end(), 0U);
        std::shuffle(idx.begin(), idx.end(), gen_);
        Mask mask = 0;
        for (unsigned d = 0; d < degree && d < m; ++d) mask |= Mask{1} << idx[d];
        raw.push_back(Term{mask, scalar(ring, false)});
    }
    return GrassmannElem::from_masks(m, ring, raw);
}

GrMatrix TestRng::matrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned terms_per_entry) {
    GrMatrix out(n, m, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, element(m, ring, terms_per_entry));
    return out;
}

GrMatrix TestRng::scalar_matrix(std::size_t n, unsigned m, const RingSpec& ring) {
    GrMatrix out(n, m, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, GrassmannElem::scalar(m, scalar(ring)));
    return out;
}

GrMatrix TestRng::atom(std::size_t n, unsigned m, const RingSpec& ring) {
    GrMatrix out(n, m, ring);
    const Mask full = m == 0 ? 0 : (Mask{1} << m) - 1;
    out.set(static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)),
            static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)),
            GrassmannElem::monomial(m, bits() & full, RingElem::one(ring)));
    return out;
}

namespace {

std::vector<unsigned> indices_of(Mask mask) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 64; ++i)
        if (mask & (Mask{1} << i)) out.push_back(i + 1);
    return out;
}

}  // namespace

GrassmannElem oracle_mul(const GrassmannElem& a, const GrassmannElem& b) {
    std::vector<std::pair<std::vector<unsigned>, RingElem>> terms;
    for (const Term& s : a.terms()) {
        for (const Term& t : b.terms()) {
            std::vector<unsigned> word = indices_of(s.mask);
            const auto right = indices_of(t.mask);
            word.insert(word.end(), right.begin(), right.end());
            bool repeated = false;
            for (std::size_t i = 0; i < word.size(); ++i)
                for (std::size_t j = i + 1; j < word.size(); ++j) repeated = repeated || word[i] == word[j];
            if (repeated) continue;
            unsigned swaps = 0;
            for (std::size_t pass = 0; pass < word.size(); ++pass)
                for (std::size_t i = 0; i + 1 < word.size(); ++i)
                    if (word[i] > word[i + 1]) {
                        std::swap(word[i], word[i + 1]);
                        ++swaps;
                    }
            RingElem c = s.coeff * t.coeff;
            terms.emplace_back(word, swaps % 2 == 1 ? -c : c);
        }
    }
    return GrassmannElem::from_terms(a.rank(), a.ring(), terms);
}

GrMatrix oracle_matmul(const GrMatrix& a, const GrMatrix& b) {
    GrMatrix out(a.size(), a.rank(), a.ring());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            GrassmannElem sum(a.rank(), a.ring());
            for (std::size_t k = 0; k < a.size(); ++k) sum += oracle_mul(a(i, k), b(k, j));
            out.set(i, j, sum);
        }
    return out;
}

Poly leibniz_charpoly(const GrMatrix& a0) {
    const std::size_t n = a0.size();
    const RingSpec& ring = a0.ring();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    Poly total(ring);
    do {
        bool odd = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) odd = odd != (perm[i] > perm[j]);
        Poly term = Poly::constant(RingElem::one(ring));
        for (std::size_t i = 0; i < n; ++i) {
            // (xI - A0)_{i, perm(i)}
            Poly entry = Poly::constant(-a0(i, perm[i]).coefficient(0));
            if (perm[i] == i) entry += Poly::x(ring);
            term *= entry;
        }
        if (odd)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace grassid::testing
