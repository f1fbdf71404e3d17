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

#include "grassid/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <string>

#include <gmpxx.h>

#include "grassid/json_io.hpp"
#include "grassid/poly.hpp"
#include "grassid/witnesses.hpp"

namespace grassid {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using json = nlohmann::ordered_json;

Report start(const Campaign& c) {
    Report r;
    r.campaign = c;
    return r;
}

std::string expect_name(bool zero) { return zero ? "zero" : "nonzero"; }

json ch_repro(const GrMatrix& a, unsigned exponent, bool zero) {
    return {{"check", "ch_power"}, {"exponent", exponent}, {"A", matrix_to_json(a)}, {"expect", expect_name(zero)}};
}

json standard_repro(const std::vector<GrMatrix>& x, bool zero, bool open_question = false) {
    json j = {{"check", "standard"}, {"x", matrices_to_json(x)}, {"expect", expect_name(zero)}};
    if (open_question) j["open_question"] = true;
    return j;
}

json capelli_repro(const std::vector<GrMatrix>& x, const std::vector<GrMatrix>& y, bool zero) {
    return {{"check", "capelli"}, {"x", matrices_to_json(x)}, {"y", matrices_to_json(y)}, {"expect", expect_name(zero)}};
}

json product_repro(std::size_t n, const std::vector<GrMatrix>& x) {
    return {{"check", "product"}, {"n", n}, {"x", matrices_to_json(x)}, {"expect", "zero"}};
}

json young_repro(const YoungSpec& spec, const std::vector<GrMatrix>& a, const GrMatrix* value) {
    json j = {{"check", "young"}, {"classes", spec.classes}, {"anticommuting", spec.anticommuting},
              {"a", matrices_to_json(a)}};
    if (value) {
        j["expect"] = "equals";
        j["value"] = matrix_to_json(*value);
    } else {
        j["expect"] = "zero";
    }
    return j;
}

json lemma2_repro(const std::vector<RingElem>& lambdas, const GrMatrix& a) {
    auto ls = json::array();
    for (const auto& l : lambdas) ls.push_back(l.to_string());
    return {{"check", "lemma2"}, {"lambdas", std::move(ls)}, {"A", matrix_to_json(a)}};
}

GrassmannElem random_element(unsigned m, const RingSpec& ring, unsigned terms, Rng& rng) {
    std::vector<Term> out;
    const std::uint64_t masks = std::uint64_t{1} << m;
    for (unsigned t = 0; t < terms; ++t) out.push_back({rng.below(masks), random_scalar(ring, rng)});
    return GrassmannElem::from_masks(m, ring, std::move(out));
}

GrMatrix unit_with_mask(std::size_t n, unsigned m, const RingSpec& ring, std::size_t r, std::size_t s, Mask mask) {
    GrMatrix e(n, m, ring);
    e.set(r, s, GrassmannElem::monomial(m, mask, RingElem::one(ring)));
    return e;
}

// Random matrix units whose masks are disjoint: every generator lands in at
// most one of the slots. This is the shape the multilinear reduction leaves.
std::vector<GrMatrix> structured_atoms(std::size_t n, unsigned m, const RingSpec& ring, std::size_t slots, Rng& rng) {
    std::vector<Mask> masks(slots, 0);
    for (unsigned g = 0; g < m; ++g) {
        const auto slot = rng.below(slots + 1);
        if (slot < slots) masks[slot] |= Mask{1} << g;
    }
    std::vector<GrMatrix> out;
    for (std::size_t i = 0; i < slots; ++i)
        out.push_back(unit_with_mask(n, m, ring, rng.below(n), rng.below(n), masks[i]));
    return out;
}

// The extremal Capelli substitution: every matrix unit once, plus generator
// multiples v_i e_(j_i), shuffled. Repeats a unit when generators run out.
std::vector<GrMatrix> capelli_extremal_x(std::size_t n, unsigned m, const RingSpec& ring, std::size_t k, Rng& rng) {
    std::vector<GrMatrix> x;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) x.push_back(unit_with_mask(n, m, ring, r, s, 0));
    unsigned g = 0;
    while (x.size() < k) {
        const Mask mask = g < m ? Mask{1} << g++ : 0;
        x.push_back(unit_with_mask(n, m, ring, rng.below(n), rng.below(n), mask));
    }
    rng.shuffle(x);
    return x;
}

bool characteristic_above(const RingSpec& ring, unsigned bound) {
    const auto p = ring.characteristic();
    return p == 0 || p > bound;
}

CharacteristicCheck witness_check(const RingSpec& ring) {
    return ring.is_field() ? CharacteristicCheck::Enforce : CharacteristicCheck::Skip;
}

Lemma2Check lemma2_impl(const std::vector<RingElem>& f_roots, const std::vector<RingElem>& lambdas,
                        const GrMatrix& a) {
    const std::size_t n = a.size();
    const RingSpec& ring = a.ring();
    const unsigned m = a.rank();
    if (lambdas.size() != n) throw Error(Errc::LengthMismatch, "need one lambda per row");
    std::vector<GrassmannElem> diag;
    for (const auto& l : lambdas) diag.push_back(GrassmannElem::scalar(m, l));
    if (!(a.component(0) == GrMatrix::diagonal(diag)))
        throw Error(Errc::NonScalarEntries, "degree-0 part is not diag(lambdas)");

    const Poly f = poly_from_roots(f_roots, ring);
    const Poly df = poly_derivative(f);
    const GrMatrix b = eval_at_matrix(f, a);
    const GrMatrix a1 = a.component(1);
    const GrMatrix b1 = b.component(1);
    const GrMatrix b2 = b.component(2);
    std::vector<RingElem> slope;
    for (const auto& l : lambdas) slope.push_back(df.evaluate(l));

    Lemma2Check out;
    out.b0_zero = b.component(0).is_zero();
    std::vector<GrassmannElem> expected_b1;
    for (std::size_t i = 0; i < n; ++i) expected_b1.push_back(a1(i, i).scaled(slope[i]));
    out.b1_formula = b1 == GrMatrix::diagonal(expected_b1);
    out.b1_square_zero = (b1 * b1).is_zero();
    out.b2_offdiagonal = true;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            if (r == s) continue;
            const GrassmannElem lhs = b2(r, s).scaled(lambdas[r] - lambdas[s]);
            const GrassmannElem rhs = (a1(r, r).scaled(slope[r]) + a1(s, s).scaled(slope[s])) * a1(r, s);
            if (!(lhs == rhs)) out.b2_offdiagonal = false;
        }
    const auto [plus, minus] = b2.diag_split();
    out.b1_commutes_diag = b1 * plus == plus * b1;
    out.b1_anticommutes_offdiag = b1 * minus == -(minus * b1);
    return out;
}

std::vector<RingElem> distinct_lambdas(std::size_t n, const RingSpec& ring, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RingElem> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(rng.coin() ? random_scalar(ring, rng) : RingElem::zero(ring));
        bool distinct = true;
        for (std::size_t i = 0; i < n && distinct; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (out[i] == out[j]) distinct = false;
        if (distinct) return out;
    }
    throw Error(Errc::DegenerateLambdas, "could not draw " + std::to_string(n) + " distinct elements of " +
                                             ring.to_string());
}

void count(Report& r, const std::string& name, std::uint64_t value) { r.add(name, value); }

// Random tuple of matrices that are sums of two atoms, checked against the
// expansion into atom tuples.
bool atom_reduction_holds(std::size_t n, unsigned m, const RingSpec& ring, std::size_t k, Rng& rng,
                          const Guards& guards) {
    const std::uint64_t atoms = (std::uint64_t{1} << m) * n * n;
    std::vector<std::array<std::pair<std::uint64_t, RingElem>, 2>> parts;
    std::vector<GrMatrix> x;
    for (std::size_t i = 0; i < k; ++i) {
        std::array<std::pair<std::uint64_t, RingElem>, 2> p{
            std::pair{rng.below(atoms), random_scalar(ring, rng)}, std::pair{rng.below(atoms), random_scalar(ring, rng)}};
        x.push_back(atom(n, m, ring, p[0].first).scaled(p[0].second) + atom(n, m, ring, p[1].first).scaled(p[1].second));
        parts.push_back(p);
    }
    GrMatrix expanded(n, m, ring);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        std::vector<GrMatrix> tuple;
        RingElem weight = RingElem::one(ring);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& [index, coeff] = parts[i][(choice >> i) & 1];
            tuple.push_back(atom(n, m, ring, index));
            weight *= coeff;
        }
        expanded += standard_dp(tuple, guards).scaled(weight);
    }
    return expanded == standard_dp(x, guards);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return Rng(finalize(seed ^ finalize(index + 1)));
}

std::uint64_t Rng::next() noexcept {
    state_ += kGolden;
    return finalize(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

long Rng::between(long lo, long hi) noexcept {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

RingElem random_scalar(const RingSpec& ring, Rng& rng) {
    switch (ring.kind()) {
    case RingKind::Integer: {
        const long v = rng.between(1, 9);
        return RingElem(ring, rng.coin() ? v : -v);
    }
    case RingKind::Rational: {
        long num = rng.between(1, 9);
        if (rng.coin()) num = -num;
        const long den = rng.between(1, 5);
        return RingElem(ring, num) * RingElem(ring, den).inverse();
    }
    case RingKind::PrimeField:
        return RingElem(ring, static_cast<long>(1 + rng.below(ring.modulus() - 1)));
    }
    return RingElem::one(ring);
}

GrMatrix random_grmatrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned sparsity, Rng& rng) {
    GrMatrix a(n, m, ring);
    if (sparsity == 0) return a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, random_element(m, ring, sparsity, rng));
    return a;
}

GrMatrix random_full_matrix(std::size_t n, unsigned m, const RingSpec& ring, unsigned sparsity, Rng& rng) {
    GrMatrix a(n, m, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, GrassmannElem::scalar(m, random_scalar(ring, rng)));
    return a + random_grmatrix(n, m, ring, sparsity, rng);
}

GrMatrix random_degree_one(std::size_t n, unsigned m, const RingSpec& ring, unsigned terms, Rng& rng) {
    GrMatrix a(n, m, ring);
    if (m == 0) return a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Term> out;
            for (unsigned t = 0; t < terms; ++t) out.push_back({Mask{1} << rng.below(m), random_scalar(ring, rng)});
            a.set(i, j, GrassmannElem::from_masks(m, ring, std::move(out)));
        }
    return a;
}

GrMatrix atom(std::size_t n, unsigned m, const RingSpec& ring, std::uint64_t index) {
    const std::uint64_t cells = n * n;
    if (index >= (std::uint64_t{1} << m) * cells) throw Error(Errc::IndexOutOfRange, "atom index out of range");
    const std::uint64_t cell = index % cells;
    return unit_with_mask(n, m, ring, cell / n, cell % n, index / cells);
}

Lemma2Check lemma2_check(const std::vector<RingElem>& lambdas, const GrMatrix& a) {
    return lemma2_impl(lambdas, lambdas, a);
}

void check_young_hypothesis(const std::vector<GrMatrix>& a, const YoungSpec& spec) {
    std::vector<bool> in_m(a.size() + 1, false);
    for (unsigned p : spec.anticommuting)
        if (p >= 1 && p <= a.size()) in_m[p] = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const GrMatrix ij = a[i] * a[j];
            const GrMatrix ji = a[j] * a[i];
            const bool anti = in_m[i + 1] && in_m[j + 1];
            if (anti ? !(ij == -ji) : !(ij == ji))
                throw Error(Errc::HypothesisViolation, "a_" + std::to_string(i + 1) + " and a_" +
                                                           std::to_string(j + 1) +
                                                           (anti ? " do not anticommute" : " do not commute"));
        }
}

std::vector<std::vector<unsigned>> odd_compositions(unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    std::function<void(unsigned)> extend = [&](unsigned left) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (unsigned part = 1; part <= left; part += 2) {
            current.push_back(part);
            extend(left - part);
            current.pop_back();
        }
    };
    if (k > 0) extend(k);
    return out;
}

Degrees degrees(std::size_t n, unsigned m) noexcept {
    const auto nn = static_cast<unsigned>(n);
    const unsigned q = m / 2;
    return {(m + 1) / 2 + 1, nn * nn + 2 * q + 1, 2 * ((nn * nn + 1) / 2 + q), 2 * nn * (q + 1), 2 * (nn + q) - 1,
            2 * (nn + q)};
}

Report verify_theorem1(const Campaign& c) {
    Report r = start(c);
    const unsigned e = degrees(c.n, c.m).ch_exponent;
    r.add("exponent", e);
    unsigned held = 0;
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, t);
        const GrMatrix a = random_full_matrix(c.n, c.m, c.ring, 2, rng);
        const GrMatrix p = mat_pow(eval_at_matrix(charpoly(a.component(0)), a), e);
        if (p.is_zero())
            ++held;
        else
            r.fail("f(A)^" + std::to_string(e) + " is nonzero on trial " + std::to_string(t), ch_repro(a, e, true));
    }
    r.trials = c.trials;
    count(r, "trials_zero", held);

    // Negative control: one less on the sharpness witness must not vanish.
    const unsigned c_half = e - 1;
    if (!characteristic_above(c.ring, c_half)) {
        r.add("mutation_control", "unavailable in characteristic " + std::to_string(c.ring.characteristic()));
        return r;
    }
    try {
        const auto spec = default_ch_spec(c.n, c.m, c.ring);
        const GrMatrix w = ch_witness(spec, CharacteristicCheck::Skip);
        const GrMatrix p = mat_pow(eval_at_matrix(poly_from_roots(spec.lambdas, c.ring), w), c_half);
        r.add("mutation_exponent", c_half);
        r.add("mutation_nonzero", !p.is_zero());
        if (p.is_zero()) r.fail("lowered exponent vanishes on the witness", ch_repro(w, c_half, false));
    } catch (const Error& err) {
        r.add("mutation_control", std::string("unavailable: ") + err.what());
    }
    return r;
}

Report verify_lemma2(const Campaign& c) {
    if (!c.ring.is_field()) throw Error(Errc::BadCharacteristic, "Lemma2 needs a field, got " + c.ring.to_string());
    Report r = start(c);
    std::array<unsigned, 6> held{};
    auto tally = [&](std::array<unsigned, 6>& into, const Lemma2Check& k) {
        into[0] += k.b0_zero;
        into[1] += k.b1_formula;
        into[2] += k.b1_square_zero;
        into[3] += k.b2_offdiagonal;
        into[4] += k.b1_commutes_diag;
        into[5] += k.b1_anticommutes_offdiag;
    };
    std::vector<RingElem> first_lambdas;
    GrMatrix first_a;
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, t);
        const auto lambdas = distinct_lambdas(c.n, c.ring, rng);
        std::vector<GrassmannElem> diag;
        for (const auto& l : lambdas) diag.push_back(GrassmannElem::scalar(c.m, l));
        const GrMatrix a = GrMatrix::diagonal(diag) + random_degree_one(c.n, c.m, c.ring, 2, rng);
        if (t == 0) {
            first_lambdas = lambdas;
            first_a = a;
        }
        const Lemma2Check k = lemma2_check(lambdas, a);
        tally(held, k);
        if (!k.all()) r.fail("structural claim violated on trial " + std::to_string(t), lemma2_repro(lambdas, a));
    }
    r.trials = c.trials;
    const char* names[] = {"part0_B0_zero", "part1_B1_formula", "part2_B1_squared_zero", "part3_B2_offdiagonal",
                           "part4_commutes_diagonal", "part4_anticommutes_offdiagonal"};
    for (std::size_t i = 0; i < held.size(); ++i) count(r, names[i], held[i]);

    // Exploratory: higher components present. Observations only.
    std::array<unsigned, 6> seen{};
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, Rng::kAuxBase + t);
        const auto lambdas = distinct_lambdas(c.n, c.ring, rng);
        std::vector<GrassmannElem> diag;
        for (const auto& l : lambdas) diag.push_back(GrassmannElem::scalar(c.m, l));
        GrMatrix a = GrMatrix::diagonal(diag) + random_degree_one(c.n, c.m, c.ring, 2, rng);
        const GrMatrix noise = random_grmatrix(c.n, c.m, c.ring, 3, rng);
        for (unsigned d = 2; d <= c.m; ++d) a += noise.component(d);
        tally(seen, lemma2_check(lambdas, a));
    }
    for (std::size_t i = 0; i < seen.size(); ++i) count(r, std::string("exploratory_") + names[i], seen[i]);

    // Negative control: a wrong root makes the degree-0 part nonzero.
    if (c.trials > 0) {
        auto roots = first_lambdas;
        roots[0] += RingElem::one(c.ring);
        const bool still_zero = lemma2_impl(roots, first_lambdas, first_a).b0_zero;
        r.add("mutation_shifted_root_detected", !still_zero);
        if (still_zero) r.fail("shifted characteristic root left B0 = 0", lemma2_repro(first_lambdas, first_a));
    }
    return r;
}

Report verify_young_lemma(const Campaign& c) {
    Report r = start(c);
    const unsigned rank = std::max(c.m, 7U);
    const std::size_t n = c.n;
    const GrMatrix e11 = matrix_unit(n, rank, c.ring, 1, 1);
    const GrMatrix id = GrMatrix::identity(n, rank, c.ring);
    r.add("grassmann_rank", rank);

    auto instance = [&](const YoungSpec& spec, Rng& rng) {
        std::vector<unsigned> gens(rank);
        for (unsigned g = 0; g < rank; ++g) gens[g] = g + 1;
        rng.shuffle(gens);
        std::vector<bool> in_m(spec.k + 1, false);
        for (unsigned p : spec.anticommuting) in_m[p] = true;
        std::vector<GrMatrix> a;
        unsigned used = 0;
        for (unsigned p = 1; p <= spec.k; ++p) {
            const RingElem coeff = random_scalar(c.ring, rng);
            if (in_m[p])
                a.push_back(e11.scaled(GrassmannElem::generator(rank, c.ring, gens[used++])).scaled(coeff));
            else
                a.push_back((rng.coin() ? e11 : id).scaled(coeff));
        }
        check_young_hypothesis(a, spec);
        return a;
    };

    unsigned shapes_a = 0;
    std::uint64_t stream = 0;
    for (unsigned k = 3; k <= 7; ++k) {
        for (unsigned s = 0; s < c.trials; ++s, ++stream) {
            Rng rng = Rng::stream(c.seed, stream);
            std::vector<unsigned> positions(k);
            for (unsigned p = 0; p < k; ++p) positions[p] = p + 1;
            rng.shuffle(positions);
            const unsigned odd_choices = k / 2;  // |M| in {1, 3, ..., <= k - 1}
            const unsigned size_m = 2 * static_cast<unsigned>(rng.below(odd_choices)) + 1;
            YoungSpec spec;
            spec.k = k;
            spec.anticommuting.assign(positions.begin(), positions.begin() + size_m);
            std::sort(spec.anticommuting.begin(), spec.anticommuting.end());
            for (unsigned i = size_m; i < k; ++i) spec.classes.push_back({positions[i]});
            for (unsigned i = 0; i < size_m; ++i) spec.classes[rng.below(spec.classes.size())].push_back(positions[i]);
            for (auto& cls : spec.classes) std::sort(cls.begin(), cls.end());
            spec.validate();
            const auto a = instance(spec, rng);
            ++shapes_a;
            if (!young_alternating_sum(a, spec, c.guards).is_zero())
                r.fail("odd |M| sum is nonzero for k = " + std::to_string(k), young_repro(spec, a, nullptr));
        }
    }
    count(r, "part_a_shapes", shapes_a);

    unsigned shapes_b = 0, nonzero_b = 0;
    for (unsigned k = 1; k <= 7; ++k) {
        for (const auto& sizes : odd_compositions(k)) {
            Rng rng = Rng::stream(c.seed, Rng::kAuxBase + stream++);
            const YoungSpec spec = YoungSpec::intervals(sizes);
            const auto a = instance(spec, rng);
            RingElem weight = RingElem::one(c.ring);
            for (unsigned size : sizes) weight *= factorial(size - 1, c.ring);
            GrMatrix product = a[0];
            for (std::size_t i = 1; i < a.size(); ++i) product = product * a[i];
            const GrMatrix expected = product.scaled(weight);
            ++shapes_b;
            nonzero_b += !expected.is_zero();
            if (!(young_alternating_sum(a, spec, c.guards) == expected))
                r.fail("interval sum differs from the factorial formula", young_repro(spec, a, &expected));
        }
    }
    count(r, "part_b_shapes", shapes_b);
    count(r, "part_b_nonzero", nonzero_b);
    if (c.ring.characteristic() == 0 && nonzero_b == 0) r.fail("every interval sum vanished; evaluator is degenerate");
    r.trials = shapes_a + shapes_b;
    return r;
}

Report verify_capelli_bound(const Campaign& c) {
    Report r = start(c);
    const unsigned k = degrees(c.n, c.m).capelli;
    r.add("x_degree", k);
    unsigned naive_checks = 0;
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, t);
        std::vector<GrMatrix> x, y;
        for (unsigned i = 0; i < k; ++i) x.push_back(random_full_matrix(c.n, c.m, c.ring, 2, rng));
        for (unsigned i = 0; i <= k; ++i) y.push_back(random_full_matrix(c.n, c.m, c.ring, 2, rng));
        const GrMatrix d = capelli_dp(x, y, c.guards);
        if (!d.is_zero()) r.fail("d_k is nonzero on random trial " + std::to_string(t), capelli_repro(x, y, true));
        if (t == 0 && k <= c.guards.max_naive_k) {
            ++naive_checks;
            if (!(capelli_naive(x, y, c.guards) == d)) r.fail("capelli_dp disagrees with capelli_naive", capelli_repro(x, y, true));
        }
    }
    const unsigned structured = 4 * c.trials;
    for (unsigned t = 0; t < structured; ++t) {
        Rng rng = Rng::stream(c.seed, Rng::kAuxBase + t);
        std::vector<GrMatrix> x = t % 2 == 0 ? capelli_extremal_x(c.n, c.m, c.ring, k, rng)
                                             : structured_atoms(c.n, c.m, c.ring, k, rng);
        std::vector<GrMatrix> y = structured_atoms(c.n, t % 2 == 0 ? 0 : c.m, c.ring, k + 1, rng);
        if (t % 2 == 0)
            for (auto& b : y) b = unit_with_mask(c.n, c.m, c.ring, rng.below(c.n), rng.below(c.n), 0);
        const GrMatrix d = capelli_dp(x, y, c.guards);
        if (!d.is_zero()) r.fail("d_k is nonzero on structured trial " + std::to_string(t), capelli_repro(x, y, true));
        if (t == 0 && k <= c.guards.max_naive_k) {
            ++naive_checks;
            if (!(capelli_naive(x, y, c.guards) == d)) r.fail("capelli_dp disagrees with capelli_naive", capelli_repro(x, y, true));
        }
    }
    r.trials = c.trials + structured;
    count(r, "random_trials", c.trials);
    count(r, "structured_trials", structured);

    try {
        const auto spec = default_capelli_spec(c.n, c.m, c.ring);
        const auto w = capelli_witness(spec, witness_check(c.ring));
        const GrMatrix d = capelli_dp(w.x, w.y, c.guards);
        r.add("mutation_x_degree", k - 1);
        r.add("mutation_nonzero", !d.is_zero());
        if (d.is_zero()) r.fail("x-degree k-1 vanishes on the witness", capelli_repro(w.x, w.y, false));
        if (k - 1 <= c.guards.max_naive_k) {
            ++naive_checks;
            if (!(capelli_naive(w.x, w.y, c.guards) == d))
                r.fail("capelli_dp disagrees with capelli_naive on the witness", capelli_repro(w.x, w.y, false));
        }
    } catch (const Error& err) {
        r.add("mutation_control", std::string("unavailable: ") + err.what());
    }
    count(r, "naive_cross_checks", naive_checks);
    return r;
}

Report verify_standard_bounds(const Campaign& c) {
    Report r = start(c);
    const Degrees deg = degrees(c.n, c.m);
    unsigned naive_checks = 0, evaluations = 0;
    const unsigned structured = 4 * c.trials;
    const std::pair<const char*, unsigned> targets[] = {{"corollary", deg.standard_corollary},
                                                        {"proposition", deg.standard_product}};
    for (std::uint64_t which = 0; which < 2; ++which) {
        const auto& [label, k] = targets[which];
        r.add(std::string(label) + "_degree", k);
        if (k > c.guards.max_standard_dp_k) {
            r.add(std::string(label) + "_skipped", "degree above max_standard_dp_k");
            continue;
        }
        for (unsigned t = 0; t < c.trials + structured; ++t) {
            const bool random = t < c.trials;
            Rng rng = Rng::stream(c.seed, 2 * which * Rng::kAuxBase + (random ? t : Rng::kAuxBase + t));
            std::vector<GrMatrix> x;
            if (random)
                for (unsigned i = 0; i < k; ++i) x.push_back(random_full_matrix(c.n, c.m, c.ring, 2, rng));
            else
                x = structured_atoms(c.n, c.m, c.ring, k, rng);
            const GrMatrix s = standard_dp(x, c.guards);
            ++evaluations;
            if (!s.is_zero()) r.fail(std::string("s_k is nonzero at the ") + label + " degree", standard_repro(x, true));
            if ((t == 0 || t == c.trials) && k <= c.guards.max_naive_k) {
                ++naive_checks;
                if (!(standard_naive(x, c.guards) == s)) r.fail("standard_dp disagrees with standard_naive", standard_repro(x, true));
            }
        }
    }

    // The product of s_2n blocks, each block in the filtration of degree >= 2.
    const unsigned blocks = c.m / 2 + 1;
    unsigned filtration_ok = 0;
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, 3 * Rng::kAuxBase + t);
        std::vector<GrMatrix> x;
        for (unsigned i = 0; i < 2 * c.n * blocks; ++i) x.push_back(random_full_matrix(c.n, c.m, c.ring, 2, rng));
        const StandardProduct sp = standard_product_eval(x, c.guards);
        const bool in_filtration = std::all_of(sp.factors.begin(), sp.factors.end(),
                                               [](const GrMatrix& f) { return f.in_filtration(2); });
        filtration_ok += in_filtration;
        if (!sp.product.is_zero() || !in_filtration)
            r.fail("block product or filtration claim fails on trial " + std::to_string(t), product_repro(c.n, x));
    }
    count(r, "product_blocks", blocks);
    count(r, "product_trials_in_filtration", filtration_ok);
    count(r, "evaluations", evaluations);
    r.trials = evaluations + c.trials;

    const unsigned sharp = deg.standard_sharp;
    r.add("mutation_degree", sharp);
    if (sharp > c.guards.max_standard_dp_k || !characteristic_above(c.ring, 2 * (c.m / 2))) {
        r.add("mutation_control", "unavailable for this degree or characteristic");
    } else {
        const auto w = standard_witness(c.n, c.m, c.ring, CharacteristicCheck::Skip);
        const GrMatrix s = standard_dp(w, c.guards);
        r.add("mutation_nonzero", !s.is_zero());
        if (s.is_zero()) r.fail("degree one below the bound vanishes on the witness", standard_repro(w, false));
        if (sharp <= c.guards.max_naive_k) {
            ++naive_checks;
            if (!(standard_naive(w, c.guards) == s)) r.fail("standard_dp disagrees with standard_naive on the witness", standard_repro(w, false));
        }
    }
    count(r, "naive_cross_checks", naive_checks);
    return r;
}

Report search_open_question(const Campaign& c) {
    if (c.budget == 0) throw Error(Errc::InvalidArgument, "open-question search needs a positive budget");
    Report r = start(c);
    const unsigned k = c.degree_override.value_or(degrees(c.n, c.m).open_question);
    if (k == 0) throw Error(Errc::InvalidArgument, "degree must be positive");
    if (k > c.guards.max_standard_dp_k)
        throw Error(Errc::DegreeTooLarge, "degree " + std::to_string(k) + " exceeds max_standard_dp_k");
    const std::uint64_t atoms = (std::uint64_t{1} << c.m) * c.n * c.n;
    r.add("degree", k);
    r.add("atoms", atoms);

    // Trust the reduction only after it reproduces random evaluations.
    const unsigned reduction_checks = 5;
    for (unsigned t = 0; t < reduction_checks; ++t) {
        Rng rng = Rng::stream(c.seed, Rng::kAuxBase + t);
        if (!atom_reduction_holds(c.n, c.m, c.ring, std::min(k, 5U), rng, c.guards)) {
            r.fail("atom expansion disagrees with the direct evaluation");
            return r;
        }
    }
    count(r, "atom_reduction_checks", reduction_checks);

    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), atoms, k);
    r.add("total_tuples", total.get_str());

    std::vector<std::uint64_t> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    bool more = atoms >= k;
    std::uint64_t enumerated = 0, evaluated = 0, overlapping = 0;
    const std::uint64_t cells = c.n * c.n;
    while (more && enumerated < c.budget) {
        ++enumerated;
        Mask seen = 0;
        bool disjoint = true;
        for (auto i : idx) {
            const Mask mask = i / cells;
            if (seen & mask) {
                disjoint = false;
                break;
            }
            seen |= mask;
        }
        if (!disjoint) {
            ++overlapping;
        } else {
            std::vector<GrMatrix> tuple;
            for (auto i : idx) tuple.push_back(atom(c.n, c.m, c.ring, i));
            ++evaluated;
            if (!standard_dp(tuple, c.guards).is_zero()) {
                r.verdict = Verdict::CounterexampleFound;
                auto list = json::array();
                for (auto i : idx) list.push_back(i);
                r.add("counterexample_atoms", std::move(list));
                r.reproducer = standard_repro(tuple, true, true);
                break;
            }
        }
        // Next k-subset in lexicographic order.
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == atoms - k + pos) --pos;
        if (pos < 0) {
            more = false;
        } else {
            ++idx[pos];
            for (unsigned j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    const bool exhaustive = r.verdict != Verdict::CounterexampleFound && !more;
    if (r.verdict != Verdict::CounterexampleFound) r.verdict = Verdict::NoCounterexampleInBudget;
    count(r, "enumerated", enumerated);
    count(r, "evaluated", evaluated);
    count(r, "skipped_overlapping_masks", overlapping);
    r.add("exhaustive", exhaustive);
    r.add("coverage", std::to_string(enumerated) + "/" + total.get_str());
    r.trials = static_cast<unsigned>(std::min<std::uint64_t>(enumerated, UINT32_MAX));
    return r;
}

Report verify_amitsur_levitzki(const Campaign& c) {
    if (c.n > 3) throw Error(Errc::DegreeTooLarge, "Amitsur-Levitzki check is limited to n <= 3");
    Report r = start(c);
    const unsigned k = static_cast<unsigned>(2 * c.n);
    r.add("degree", k);
    unsigned naive_checks = 0;
    for (unsigned t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, t);
        std::vector<GrMatrix> x;
        for (unsigned i = 0; i < k; ++i) x.push_back(random_full_matrix(c.n, 0, c.ring, 0, rng));
        const GrMatrix s = standard_dp(x, c.guards);
        if (!s.is_zero()) r.fail("s_2n is nonzero on scalar matrices", standard_repro(x, true));
        if (t == 0 && k <= c.guards.max_naive_k) {
            ++naive_checks;
            if (!(standard_naive(x, c.guards) == s)) r.fail("standard_dp disagrees with standard_naive", standard_repro(x, true));
        }
    }
    r.trials = c.trials;
    const auto w = standard_witness(c.n, 0, c.ring, CharacteristicCheck::Skip);
    const GrMatrix s = standard_dp(w, c.guards);
    r.add("staircase_value", s.to_string());
    if (s.is_zero() || !(s == standard_witness_value(c.n, 0, c.ring)))
        r.fail("s_(2n-1) on the staircase is not the expected nonzero value", standard_repro(w, false));
    count(r, "naive_cross_checks", naive_checks);
    return r;
}

Report verify_sharpness(const Campaign& c) {
    Report r;
    switch (c.target) {
    case Target::CHSharpness: r = ch_sharpness_verify(default_ch_spec(c.n, c.m, c.ring)); break;
    case Target::CapelliSharpness:
        r = capelli_sharpness_verify(default_capelli_spec(c.n, c.m, c.ring), c.guards);
        break;
    case Target::StandardSharpness: r = standard_sharpness_verify(c.n, c.m, c.ring, c.guards); break;
    default: throw Error(Errc::InvalidArgument, "not a sharpness target");
    }
    r.campaign = c;
    return r;
}

Report run_campaign(const Campaign& c) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    switch (c.target) {
    case Target::Theorem1: r = verify_theorem1(c); break;
    case Target::Lemma2: r = verify_lemma2(c); break;
    case Target::YoungLemma: r = verify_young_lemma(c); break;
    case Target::CapelliBound: r = verify_capelli_bound(c); break;
    case Target::StandardCorollary:
    case Target::StandardProduct:
    case Target::Filtration2: r = verify_standard_bounds(c); break;
    case Target::CHSharpness:
    case Target::CapelliSharpness:
    case Target::StandardSharpness: r = verify_sharpness(c); break;
    case Target::OpenQuestion: r = search_open_question(c); break;
    case Target::AmitsurLevitzki: r = verify_amitsur_levitzki(c); break;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

bool expectation_holds(const nlohmann::json& repro, const GrMatrix& value) {
    const auto expect = repro.value("expect", std::string("zero"));
    if (expect == "zero") return value.is_zero();
    if (expect == "nonzero") return !value.is_zero();
    if (expect == "equals") return value == matrix_from_json(repro.at("value"));
    throw Error(Errc::Parse, "unknown expectation '" + expect + "'");
}

Campaign replay_campaign(Target target, const GrMatrix& sample) {
    Campaign c;
    c.target = target;
    c.n = sample.size();
    c.m = sample.rank();
    c.ring = sample.ring();
    c.trials = 1;
    return c;
}

}  // namespace

Report replay(const nlohmann::json& repro) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!repro.is_object() || !repro.contains("check")) throw Error(Errc::Parse, "reproducer needs a \"check\" field");
    const auto check = repro["check"].get<std::string>();
    Report r;
    try {
        if (check == "witness") {
            const auto spec = WitnessSpec::from_json(repro.at("spec"));
            Campaign c;
            c.n = spec.n;
            c.m = spec.m;
            c.ring = spec.ring;
            c.trials = 1;
            c.target = spec.kind == WitnessKind::CayleyHamilton ? Target::CHSharpness
                       : spec.kind == WitnessKind::Capelli      ? Target::CapelliSharpness
                                                                : Target::StandardSharpness;
            if (spec.kind == WitnessKind::CayleyHamilton)
                r = ch_sharpness_verify(spec);
            else if (spec.kind == WitnessKind::Capelli)
                r = capelli_sharpness_verify(spec);
            else
                r = standard_sharpness_verify(spec.n, spec.m, spec.ring);
            r.campaign = c;
        } else if (check == "ch_power") {
            const GrMatrix a = matrix_from_json(repro.at("A"));
            const unsigned e = repro.at("exponent").get<unsigned>();
            r.campaign = replay_campaign(Target::Theorem1, a);
            const GrMatrix p = mat_pow(eval_at_matrix(charpoly(a.component(0)), a), e);
            r.add("value", p.to_string());
            if (!expectation_holds(repro, p)) r.fail("expectation violated", nlohmann::ordered_json(repro));
        } else if (check == "standard") {
            const auto x = matrices_from_json(repro.at("x"));
            if (x.empty()) throw Error(Errc::Parse, "empty tuple");
            const bool open = repro.value("open_question", false);
            r.campaign = replay_campaign(open ? Target::OpenQuestion : Target::StandardCorollary, x.front());
            r.campaign.degree_override = static_cast<unsigned>(x.size());
            const GrMatrix s = standard_dp(x, r.campaign.guards);
            r.add("value", s.to_string());
            if (!expectation_holds(repro, s)) {
                if (open) {
                    r.verdict = Verdict::CounterexampleFound;
                    r.reproducer = nlohmann::ordered_json(repro);
                } else {
                    r.fail("expectation violated", nlohmann::ordered_json(repro));
                }
            } else if (open) {
                r.verdict = Verdict::NoCounterexampleInBudget;
            }
        } else if (check == "capelli") {
            const auto x = matrices_from_json(repro.at("x"));
            const auto y = matrices_from_json(repro.at("y"));
            if (x.empty()) throw Error(Errc::Parse, "empty tuple");
            r.campaign = replay_campaign(Target::CapelliBound, x.front());
            const GrMatrix d = capelli_dp(x, y, r.campaign.guards);
            r.add("value", d.to_string());
            if (!expectation_holds(repro, d)) r.fail("expectation violated", nlohmann::ordered_json(repro));
        } else if (check == "product") {
            const auto x = matrices_from_json(repro.at("x"));
            if (x.empty()) throw Error(Errc::Parse, "empty tuple");
            r.campaign = replay_campaign(Target::StandardProduct, x.front());
            const auto sp = standard_product_eval(x, r.campaign.guards);
            const bool ok = sp.product.is_zero() && std::all_of(sp.factors.begin(), sp.factors.end(),
                                                                [](const GrMatrix& f) { return f.in_filtration(2); });
            r.add("value", sp.product.to_string());
            if (!ok) r.fail("expectation violated", nlohmann::ordered_json(repro));
        } else if (check == "young") {
            const auto a = matrices_from_json(repro.at("a"));
            if (a.empty()) throw Error(Errc::Parse, "empty tuple");
            YoungSpec spec;
            spec.k = static_cast<unsigned>(a.size());
            spec.classes = repro.at("classes").get<std::vector<std::vector<unsigned>>>();
            spec.anticommuting = repro.at("anticommuting").get<std::vector<unsigned>>();
            r.campaign = replay_campaign(Target::YoungLemma, a.front());
            check_young_hypothesis(a, spec);
            const GrMatrix s = young_alternating_sum(a, spec, r.campaign.guards);
            r.add("value", s.to_string());
            if (!expectation_holds(repro, s)) r.fail("expectation violated", nlohmann::ordered_json(repro));
        } else if (check == "lemma2") {
            const GrMatrix a = matrix_from_json(repro.at("A"));
            std::vector<RingElem> lambdas;
            for (const auto& l : repro.at("lambdas")) lambdas.push_back(RingElem::parse(a.ring(), l.get<std::string>()));
            r.campaign = replay_campaign(Target::Lemma2, a);
            if (!lemma2_check(lambdas, a).all()) r.fail("expectation violated", nlohmann::ordered_json(repro));
        } else {
            throw Error(Errc::Parse, "unknown reproducer check '" + check + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("reproducer: ") + e.what());
    }
    r.trials = 1;
    r.add("replayed_check", check);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string canonical_dump(const Report& r) {
    auto j = r.to_json();
    j.erase("elapsed_ms");
    return j.dump();
}

}  // namespace grassid
