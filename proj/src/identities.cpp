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

#include "grassid/identities.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace grassid {

namespace {

void check_arguments(std::span<const GrMatrix> x, unsigned limit, const char* what) {
    if (x.size() > limit)
        throw Error(Errc::DegreeTooLarge, std::string(what) + " of degree " + std::to_string(x.size()) +
                                              " exceeds the guard " + std::to_string(limit));
    for (const auto& a : x) a.check_context(x.front());
}

bool odd_permutation(const std::vector<unsigned>& perm) {
    bool odd = false;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) odd = !odd;
    return odd;
}

// Colex rank of a subset of {0..k-1}: sum over its j-th smallest element e
// of C(e, j + 1). Subsets of one size enumerated in increasing mask order
// get consecutive ranks.
class SubsetRanker {
public:
    explicit SubsetRanker(unsigned k) : k_(k), binom_(k + 1, std::vector<std::uint64_t>(k + 2, 0)) {
        for (unsigned a = 0; a <= k; ++a) {
            binom_[a][0] = 1;
            for (unsigned b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
        }
    }

    std::uint64_t rank(std::uint32_t mask) const {
        std::uint64_t r = 0;
        unsigned j = 0;
        while (mask != 0) {
            const unsigned e = static_cast<unsigned>(std::countr_zero(mask));
            mask &= mask - 1;
            r += binom_[e][j + 1];
            ++j;
        }
        return r;
    }

    std::uint64_t count(unsigned size) const { return binom_[k_][size]; }

private:
    unsigned k_;
    std::vector<std::vector<std::uint64_t>> binom_;
};

std::uint32_t next_same_popcount(std::uint32_t v) {
    const std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// Shared driver for both recurrences. step(i, s) returns the left factor
// multiplying h(S \ {i}) when |S| = s.
template <typename LeftFactor>
GrMatrix subset_dp(unsigned k, const GrMatrix& like, LeftFactor&& left) {
    const std::size_t n = like.size();
    const unsigned m = like.rank();
    const RingSpec ring = like.ring();
    SubsetRanker ranker(k);
    std::vector<GrMatrix> previous{GrMatrix::identity(n, m, ring)};
    for (unsigned s = 1; s <= k; ++s) {
        std::vector<GrMatrix> layer;
        layer.reserve(ranker.count(s));
        const std::uint32_t last = s == 32 ? ~0U : ((1U << s) - 1) << (k - s);
        for (std::uint32_t set = (1U << s) - 1;; set = next_same_popcount(set)) {
            MatrixAccumulator acc(n, m, ring);
            unsigned smaller = 0;
            for (std::uint32_t rest = set; rest != 0; rest &= rest - 1, ++smaller) {
                const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
                const GrMatrix& tail = previous[ranker.rank(set & ~(1U << i))];
                if (tail.is_zero()) continue;
                acc.add_product(left(i, s), tail, (smaller & 1U) != 0);
            }
            layer.push_back(acc.take());
            if (set == last) break;
        }
        previous = std::move(layer);
    }
    return std::move(previous.front());
}

// Dense evaluation of the same recurrence. Entry (i, j) of a matrix holds all
// 2^m coefficients indexed by mask, so products need no allocation. Rational
// inputs are scaled to integers first; both polynomials are multilinear, so
// the result is divided by the product of the scales at the end.
constexpr unsigned kDenseMaxRank = 12;
constexpr std::uint64_t kDenseMaxCells = std::uint64_t{1} << 24;

struct IntegerOps {
    using Coeff = mpz_class;
    static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
    void add_mul(Coeff& acc, const Coeff& a, const Coeff& b, bool negate) const {
        if (negate)
            mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        else
            mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
};

struct ResidueOps {
    using Coeff = std::uint64_t;
    std::uint64_t p;
    static bool is_zero(Coeff c) { return c == 0; }
    void add_mul(Coeff& acc, Coeff a, Coeff b, bool negate) const {
        const std::uint64_t prod = a * b % p;
        acc = (acc + (negate && prod != 0 ? p - prod : prod)) % p;
    }
};

template <typename Ops>
struct Dense {
    std::vector<typename Ops::Coeff> c;
    std::vector<std::vector<std::uint32_t>> support;  // nonzero masks per entry

    void index(std::size_t basis) {
        const std::size_t cells = c.size() / basis;
        support.assign(cells, {});
        for (std::size_t e = 0; e < cells; ++e)
            for (std::size_t a = 0; a < basis; ++a)
                if (!Ops::is_zero(c[e * basis + a])) support[e].push_back(static_cast<std::uint32_t>(a));
    }
    bool is_zero() const {
        return std::all_of(support.begin(), support.end(), [](const auto& s) { return s.empty(); });
    }
};

template <typename Ops>
class DenseEngine {
public:
    DenseEngine(std::size_t n, unsigned m, Ops ops) : n_(n), basis_(std::size_t{1} << m), ops_(ops) {}

    Dense<Ops> zero() const { return Dense<Ops>{std::vector<typename Ops::Coeff>(n_ * n_ * basis_), {}}; }

    Dense<Ops> identity() const {
        Dense<Ops> out = zero();
        for (std::size_t i = 0; i < n_; ++i) out.c[(i * n_ + i) * basis_] = 1;
        out.index(basis_);
        return out;
    }

    void add_product(Dense<Ops>& acc, const Dense<Ops>& a, const Dense<Ops>& b, bool negate) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& left = a.support[i * n_ + k];
                if (left.empty()) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    const auto& right = b.support[k * n_ + j];
                    if (right.empty()) continue;
                    auto* out = &acc.c[(i * n_ + j) * basis_];
                    const auto* lc = &a.c[(i * n_ + k) * basis_];
                    const auto* rc = &b.c[(k * n_ + j) * basis_];
                    for (std::uint32_t s : left)
                        for (std::uint32_t t : right) {
                            if (s & t) continue;
                            ops_.add_mul(out[s | t], lc[s], rc[t], negate != reorder_is_odd(s, t));
                        }
                }
            }
    }

    Dense<Ops> multiply(const Dense<Ops>& a, const Dense<Ops>& b) const {
        Dense<Ops> out = zero();
        add_product(out, a, b, false);
        out.index(basis_);
        return out;
    }

    template <typename LeftFactor>
    Dense<Ops> subset_dp(unsigned k, LeftFactor&& left) const {
        SubsetRanker ranker(k);
        std::vector<Dense<Ops>> previous;
        previous.push_back(identity());
        for (unsigned s = 1; s <= k; ++s) {
            std::vector<Dense<Ops>> layer;
            layer.reserve(ranker.count(s));
            const std::uint32_t last = ((1U << s) - 1) << (k - s);
            for (std::uint32_t set = (1U << s) - 1;; set = next_same_popcount(set)) {
                Dense<Ops> acc = zero();
                unsigned smaller = 0;
                for (std::uint32_t rest = set; rest != 0; rest &= rest - 1, ++smaller) {
                    const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
                    const Dense<Ops>& tail = previous[ranker.rank(set & ~(1U << i))];
                    if (tail.is_zero()) continue;
                    add_product(acc, left(i, s), tail, (smaller & 1U) != 0);
                }
                acc.index(basis_);
                layer.push_back(std::move(acc));
                if (set == last) break;
            }
            previous = std::move(layer);
        }
        return std::move(previous.front());
    }

private:
    std::size_t n_;
    std::size_t basis_;
    Ops ops_;
};

bool dense_feasible(std::size_t n, unsigned m, unsigned k) {
    if (m > kDenseMaxRank) return false;
    SubsetRanker ranker(k);
    std::uint64_t widest = 0;
    for (unsigned s = 0; s <= k; ++s) widest = std::max(widest, ranker.count(s));
    return widest * n * n * (std::uint64_t{1} << m) <= kDenseMaxCells;
}

// Least common multiple of the denominators of all coefficients.
mpz_class denominator_lcm(const GrMatrix& a) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (const auto& t : a(i, j).terms()) {
                const mpq_class q = t.coeff.to_rational();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
            }
    return l;
}

Dense<IntegerOps> to_dense_integer(const GrMatrix& a, const mpz_class& scale) {
    const std::size_t basis = std::size_t{1} << a.rank(), n = a.size();
    Dense<IntegerOps> out{std::vector<mpz_class>(n * n * basis), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a(i, j).terms()) {
                const mpq_class q = t.coeff.to_rational() * scale;
                out.c[(i * n + j) * basis + t.mask] = q.get_num();
            }
    out.index(basis);
    return out;
}

Dense<ResidueOps> to_dense_residue(const GrMatrix& a) {
    const std::size_t basis = std::size_t{1} << a.rank(), n = a.size();
    Dense<ResidueOps> out{std::vector<std::uint64_t>(n * n * basis), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a(i, j).terms()) out.c[(i * n + j) * basis + t.mask] = t.coeff.residue();
    out.index(basis);
    return out;
}

GrMatrix from_dense(const Dense<IntegerOps>& d, std::size_t n, unsigned m, const RingSpec& ring, const mpz_class& scale) {
    const std::size_t basis = std::size_t{1} << m;
    const bool rational = ring.kind() == RingKind::Rational;
    const RingElem inverse_scale = rational ? RingElem(ring, scale).inverse() : RingElem::one(ring);
    GrMatrix out(n, m, ring);
    for (std::size_t e = 0; e < n * n; ++e) {
        if (d.support[e].empty()) continue;
        std::vector<Term> terms;
        for (std::uint32_t a : d.support[e]) {
            RingElem c(ring, d.c[e * basis + a]);
            if (rational) c *= inverse_scale;
            terms.push_back({a, std::move(c)});
        }
        out.set(e / n, e % n, GrassmannElem::from_masks(m, ring, std::move(terms)));
    }
    return out;
}

GrMatrix from_dense(const Dense<ResidueOps>& d, std::size_t n, unsigned m, const RingSpec& ring) {
    const std::size_t basis = std::size_t{1} << m;
    GrMatrix out(n, m, ring);
    for (std::size_t e = 0; e < n * n; ++e) {
        if (d.support[e].empty()) continue;
        std::vector<Term> terms;
        for (std::uint32_t a : d.support[e])
            terms.push_back({a, RingElem(ring, static_cast<long>(d.c[e * basis + a]))});
        out.set(e / n, e % n, GrassmannElem::from_masks(m, ring, std::move(terms)));
    }
    return out;
}

GrMatrix dense_standard(std::span<const GrMatrix> x) {
    const auto& like = x.front();
    const std::size_t n = like.size();
    const unsigned m = like.rank(), k = static_cast<unsigned>(x.size());
    if (like.ring().kind() == RingKind::PrimeField) {
        DenseEngine<ResidueOps> engine(n, m, ResidueOps{like.ring().modulus()});
        std::vector<Dense<ResidueOps>> dx;
        for (const auto& a : x) dx.push_back(to_dense_residue(a));
        return from_dense(engine.subset_dp(k, [&](unsigned i, unsigned) -> const auto& { return dx[i]; }), n, m,
                          like.ring());
    }
    DenseEngine<IntegerOps> engine(n, m, IntegerOps{});
    std::vector<Dense<IntegerOps>> dx;
    mpz_class total = 1;
    for (const auto& a : x) {
        const mpz_class scale = denominator_lcm(a);
        total *= scale;
        dx.push_back(to_dense_integer(a, scale));
    }
    return from_dense(engine.subset_dp(k, [&](unsigned i, unsigned) -> const auto& { return dx[i]; }), n, m,
                      like.ring(), total);
}

template <typename Ops, typename Convert>
Dense<Ops> dense_capelli_core(const DenseEngine<Ops>& engine, std::span<const GrMatrix> x,
                              std::span<const GrMatrix> y, Convert&& convert) {
    const auto k = static_cast<unsigned>(x.size());
    std::vector<Dense<Ops>> dx, dy;
    for (const auto& a : x) dx.push_back(convert(a));
    for (const auto& b : y) dy.push_back(convert(b));
    std::vector<std::vector<Dense<Ops>>> xy(k, std::vector<Dense<Ops>>(k + 1));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned t = 1; t <= k; ++t) xy[i][t] = engine.multiply(dx[i], dy[t]);
    const Dense<Ops> tail = engine.subset_dp(k, [&](unsigned i, unsigned s) -> const auto& { return xy[i][k - s + 1]; });
    return engine.multiply(dy[0], tail);
}

GrMatrix dense_capelli(std::span<const GrMatrix> x, std::span<const GrMatrix> y) {
    const auto& like = x.front();
    const std::size_t n = like.size();
    const unsigned m = like.rank();
    if (like.ring().kind() == RingKind::PrimeField) {
        DenseEngine<ResidueOps> engine(n, m, ResidueOps{like.ring().modulus()});
        return from_dense(dense_capelli_core(engine, x, y, to_dense_residue), n, m, like.ring());
    }
    DenseEngine<IntegerOps> engine(n, m, IntegerOps{});
    mpz_class total = 1;
    auto convert = [&](const GrMatrix& a) {
        const mpz_class scale = denominator_lcm(a);
        total *= scale;
        return to_dense_integer(a, scale);
    };
    const auto result = dense_capelli_core(engine, x, y, convert);
    return from_dense(result, n, m, like.ring(), total);
}

template <typename T>
T zero_like(const T& a);

template <>
GrassmannElem zero_like(const GrassmannElem& a) {
    return GrassmannElem(a.rank(), a.ring());
}

template <>
GrMatrix zero_like(const GrMatrix& a) {
    return GrMatrix(a.size(), a.rank(), a.ring());
}

template <typename T>
T young_sum(std::span<const T> a, const YoungSpec& spec, const Guards& guards) {
    spec.validate();
    if (a.size() != spec.k)
        throw Error(Errc::LengthMismatch, std::to_string(a.size()) + " elements for a partition of " +
                                              std::to_string(spec.k));
    if (spec.k == 0) throw Error(Errc::LengthMismatch, "empty Young sum");
    const auto order = spec.group_order();
    if (order > guards.max_young_order)
        throw Error(Errc::GroupTooLarge, "Young subgroup of order " + std::to_string(order) + " exceeds " +
                                             std::to_string(guards.max_young_order));
    for (const auto& x : a) x.check_context(a.front());

    // Odometer over per-class permutations; pi is assembled from them.
    std::vector<std::vector<unsigned>> images;
    for (const auto& cls : spec.classes) {
        std::vector<unsigned> sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        images.push_back(sorted);
    }
    T total = zero_like(a.front());
    std::vector<unsigned> pi(spec.k);
    while (true) {
        for (std::size_t c = 0; c < spec.classes.size(); ++c) {
            std::vector<unsigned> positions = spec.classes[c];
            std::sort(positions.begin(), positions.end());
            for (std::size_t t = 0; t < positions.size(); ++t) pi[positions[t] - 1] = images[c][t];
        }
        T word = a[pi[0] - 1];
        for (std::size_t t = 1; t < pi.size() && !word.is_zero(); ++t) word = word * a[pi[t] - 1];
        if (!word.is_zero()) {
            if (odd_permutation(pi))
                total -= word;
            else
                total += word;
        }
        std::size_t c = 0;
        for (; c < images.size(); ++c)
            if (std::next_permutation(images[c].begin(), images[c].end())) break;
        if (c == images.size()) break;
    }
    return total;
}

}  // namespace

GrMatrix standard_naive(std::span<const GrMatrix> x, const Guards& guards) {
    if (x.empty()) throw Error(Errc::LengthMismatch, "standard polynomial needs at least one argument");
    check_arguments(x, guards.max_naive_k, "naive standard polynomial");
    std::vector<unsigned> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0U);
    MatrixAccumulator acc(x.front().size(), x.front().rank(), x.front().ring());
    do {
        GrMatrix word = x[perm[0]];
        for (std::size_t t = 1; t < perm.size() && !word.is_zero(); ++t) word = word * x[perm[t]];
        if (!word.is_zero()) acc.add(word, odd_permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.take();
}

GrMatrix standard_dp(std::span<const GrMatrix> x, const Guards& guards) {
    if (x.empty()) throw Error(Errc::LengthMismatch, "standard polynomial needs at least one argument");
    check_arguments(x, std::min(guards.max_standard_dp_k, 31U), "standard polynomial");
    if (dense_feasible(x.front().size(), x.front().rank(), static_cast<unsigned>(x.size()))) return dense_standard(x);
    return subset_dp(static_cast<unsigned>(x.size()), x.front(),
                     [&](unsigned i, unsigned) -> const GrMatrix& { return x[i]; });
}

GrMatrix capelli_naive(std::span<const GrMatrix> x, std::span<const GrMatrix> y, const Guards& guards) {
    if (x.empty()) throw Error(Errc::LengthMismatch, "Capelli polynomial needs at least one x argument");
    if (y.size() != x.size() + 1)
        throw Error(Errc::LengthMismatch, std::to_string(x.size()) + " x arguments need " +
                                              std::to_string(x.size() + 1) + " y arguments, got " +
                                              std::to_string(y.size()));
    check_arguments(x, guards.max_naive_k, "naive Capelli polynomial");
    for (const auto& b : y) b.check_context(x.front());
    std::vector<unsigned> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0U);
    MatrixAccumulator acc(x.front().size(), x.front().rank(), x.front().ring());
    do {
        GrMatrix word = y[0];
        for (std::size_t t = 0; t < perm.size() && !word.is_zero(); ++t) word = word * x[perm[t]] * y[t + 1];
        if (!word.is_zero()) acc.add(word, odd_permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.take();
}

GrMatrix capelli_dp(std::span<const GrMatrix> x, std::span<const GrMatrix> y, const Guards& guards) {
    if (x.empty()) throw Error(Errc::LengthMismatch, "Capelli polynomial needs at least one x argument");
    if (y.size() != x.size() + 1)
        throw Error(Errc::LengthMismatch, std::to_string(x.size()) + " x arguments need " +
                                              std::to_string(x.size() + 1) + " y arguments, got " +
                                              std::to_string(y.size()));
    check_arguments(x, std::min(guards.max_capelli_dp_k, 31U), "Capelli polynomial");
    for (const auto& b : y) b.check_context(x.front());
    const auto k = static_cast<unsigned>(x.size());
    if (dense_feasible(x.front().size(), x.front().rank(), k)) return dense_capelli(x, y);
    // x_i y_t for every pair; with |S| = s the leftmost free slot is t = k - s + 1.
    std::vector<std::vector<GrMatrix>> xy(k, std::vector<GrMatrix>(k + 1));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned t = 1; t <= k; ++t) xy[i][t] = x[i] * y[t];
    GrMatrix tail = subset_dp(k, x.front(), [&](unsigned i, unsigned s) -> const GrMatrix& { return xy[i][k - s + 1]; });
    return y[0] * tail;
}

void YoungSpec::validate() const {
    std::vector<int> owner(k + 1, -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) throw Error(Errc::BadPartition, "empty class");
        for (unsigned p : classes[c]) {
            if (p < 1 || p > k) throw Error(Errc::BadPartition, "position " + std::to_string(p) + " outside [1, k]");
            if (owner[p] != -1) throw Error(Errc::BadPartition, "position " + std::to_string(p) + " in two classes");
            owner[p] = static_cast<int>(c);
        }
    }
    for (unsigned p = 1; p <= k; ++p)
        if (owner[p] == -1) throw Error(Errc::BadPartition, "position " + std::to_string(p) + " in no class");
    std::vector<bool> in_m(k + 1, false);
    for (unsigned p : anticommuting) {
        if (p < 1 || p > k) throw Error(Errc::BadPartition, "M position " + std::to_string(p) + " outside [1, k]");
        in_m[p] = true;
    }
    for (const auto& cls : classes) {
        const auto outside = std::count_if(cls.begin(), cls.end(), [&](unsigned p) { return !in_m[p]; });
        if (outside != 1) throw Error(Errc::BadPartition, "every class needs exactly one element of N");
    }
}

std::uint64_t YoungSpec::group_order() const {
    std::uint64_t order = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (const auto& cls : classes) {
        for (std::uint64_t f = 2; f <= cls.size(); ++f) {
            if (order > cap / f) return cap;
            order *= f;
        }
    }
    return order;
}

YoungSpec YoungSpec::intervals(const std::vector<unsigned>& sizes) {
    YoungSpec spec;
    unsigned next = 1;
    for (unsigned size : sizes) {
        std::vector<unsigned> cls;
        for (unsigned t = 0; t < size; ++t) {
            cls.push_back(next);
            if (t != 0) spec.anticommuting.push_back(next);
            ++next;
        }
        spec.classes.push_back(std::move(cls));
    }
    spec.k = next - 1;
    return spec;
}

GrassmannElem young_alternating_sum(std::span<const GrassmannElem> a, const YoungSpec& spec, const Guards& guards) {
    return young_sum(a, spec, guards);
}

GrMatrix young_alternating_sum(std::span<const GrMatrix> a, const YoungSpec& spec, const Guards& guards) {
    return young_sum(a, spec, guards);
}

StandardProduct standard_product_eval(std::span<const GrMatrix> x, const Guards& guards) {
    if (x.empty()) throw Error(Errc::LengthMismatch, "no arguments");
    const std::size_t n = x.front().size();
    const unsigned m = x.front().rank();
    const std::size_t blocks = m / 2 + 1;
    if (x.size() != 2 * n * blocks)
        throw Error(Errc::LengthMismatch, "expected 2n(floor(m/2)+1) = " + std::to_string(2 * n * blocks) +
                                              " arguments, got " + std::to_string(x.size()));
    StandardProduct out{GrMatrix::identity(n, m, x.front().ring()), {}};
    for (std::size_t b = 0; b < blocks; ++b) {
        out.factors.push_back(standard_dp(x.subspan(b * 2 * n, 2 * n), guards));
        out.product = out.product * out.factors.back();
    }
    return out;
}

}  // namespace grassid
