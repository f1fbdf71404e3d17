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

#include <doctest.h>

#include "grassid/identities.hpp"
#include "support.hpp"

using namespace grassid;

namespace {

const RingSpec kInt = RingSpec::integers();

std::vector<GrMatrix> random_tuple(testing::TestRng& rng, std::size_t k, std::size_t n, unsigned m,
                                   const RingSpec& ring, unsigned terms) {
    std::vector<GrMatrix> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(rng.matrix(n, m, ring, terms));
    return out;
}

GrMatrix vunit(std::size_t n, unsigned m, unsigned gen, std::size_t r, std::size_t s) {
    auto e = matrix_unit(n, m, kInt, r, s);
    return gen == 0 ? e : e.scaled(GrassmannElem::generator(m, kInt, gen));
}

}  // namespace

TEST_CASE("standard polynomial small cases") {
    testing::TestRng rng(1);
    auto x = rng.matrix(2, 2, kInt, 2), y = rng.matrix(2, 2, kInt, 2);
    std::vector<GrMatrix> xy{x, y};
    CHECK(standard_naive(xy) == x * y - y * x);
    CHECK(standard_dp(xy) == x * y - y * x);
    std::vector<GrMatrix> xx{x, x};
    CHECK(standard_dp(xx).is_zero());

    // s_3(I, x, y) written out as six words collapses to the commutator.
    auto one = GrMatrix::identity(2, 2, kInt);
    auto expanded = one * x * y - one * y * x - x * one * y + x * y * one + y * one * x - y * x * one;
    CHECK(expanded == x * y - y * x);
    std::vector<GrMatrix> ixy{one, x, y};
    CHECK(standard_naive(ixy) == expanded);
    CHECK(standard_dp(ixy) == expanded);
    // With a repeated argument the odd-degree case vanishes.
    std::vector<GrMatrix> ixx{one, x, x};
    CHECK(standard_dp(ixx).is_zero());

    std::vector<GrMatrix> one_arg{x};
    CHECK(standard_dp(one_arg) == x);
}

TEST_CASE("Amitsur-Levitzki on scalar matrices") {
    testing::TestRng rng(2);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<GrMatrix> x;
            for (std::size_t i = 0; i < 2 * n; ++i) x.push_back(rng.scalar_matrix(n, 0, kInt));
            CHECK(standard_dp(x).is_zero());
            if (n <= 2) CHECK(standard_naive(x).is_zero());
        }
    }
}

TEST_CASE("DP evaluators match the permutation sums") {
    testing::TestRng rng(3);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
        const auto m = static_cast<unsigned>(rng.uniform(0, 3));
        const RingSpec ring = trial % 2 == 0 ? kInt : RingSpec::prime_field(7);
        auto x = random_tuple(rng, k, n, m, ring, 2);
        CHECK(standard_dp(x) == standard_naive(x));
        if (k <= 6) {
            auto y = random_tuple(rng, k + 1, n, m, ring, 1);
            CHECK(capelli_dp(x, y) == capelli_naive(x, y));
        }
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("Capelli specializations") {
    testing::TestRng rng(4);
    for (std::size_t k = 1; k <= 5; ++k) {
        auto x = random_tuple(rng, k, 2, 2, kInt, 2);
        std::vector<GrMatrix> ones(k + 1, GrMatrix::identity(2, 2, kInt));
        CHECK(capelli_naive(x, ones) == standard_naive(x));
        CHECK(capelli_dp(x, ones) == standard_dp(x));
    }
    auto x = random_tuple(rng, 1, 2, 2, kInt, 2);
    auto y = random_tuple(rng, 2, 2, 2, kInt, 2);
    CHECK(capelli_dp(x, y) == y[0] * x[0] * y[1]);

    auto x2 = random_tuple(rng, 2, 2, 2, kInt, 2);
    x2[1] = x2[0];
    auto y3 = random_tuple(rng, 3, 2, 2, kInt, 2);
    CHECK(capelli_dp(x2, y3).is_zero());
    CHECK(capelli_naive(x2, y3).is_zero());

    // d_5 vanishes on 2x2 matrices over a commutative ring.
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<GrMatrix> xs, ys;
        for (int i = 0; i < 5; ++i) xs.push_back(rng.scalar_matrix(2, 0, kInt));
        for (int i = 0; i < 6; ++i) ys.push_back(rng.scalar_matrix(2, 0, kInt));
        CHECK(capelli_dp(xs, ys).is_zero());
    }
    try {
        (void)capelli_dp(x, x);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LengthMismatch);
    }
}

TEST_CASE("guards") {
    std::vector<GrMatrix> nine(9, GrMatrix::identity(1, 0, kInt));
    try {
        (void)standard_naive(nine);
        FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeTooLarge);
    }
    Guards tight;
    tight.max_standard_dp_k = 4;
    std::vector<GrMatrix> five(5, GrMatrix::identity(1, 0, kInt));
    CHECK_THROWS_AS(standard_dp(five, tight), Error);
    std::vector<GrMatrix> mixed{GrMatrix::identity(1, 0, kInt), GrMatrix::identity(1, 1, kInt)};
    try {
        (void)standard_dp(mixed);
        FAIL("expected ContextMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ContextMismatch);
    }
}

TEST_CASE("multilinear and alternating") {
    testing::TestRng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto k = static_cast<std::size_t>(rng.uniform(2, 6));
        auto x = random_tuple(rng, k, 2, 3, kInt, 2);
        auto y = random_tuple(rng, k + 1, 2, 3, kInt, 1);
        const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1));
        auto alt = rng.matrix(2, 3, kInt, 2);
        auto c = rng.scalar(kInt);
        auto x1 = x, x2 = x, xs = x;
        x2[slot] = alt;
        xs[slot] = x[slot].scaled(c) + alt;
        CHECK(standard_dp(xs) == standard_dp(x1).scaled(c) + standard_dp(x2));
        CHECK(capelli_dp(xs, y) == capelli_dp(x1, y).scaled(c) + capelli_dp(x2, y));

        auto rep = x;
        const auto other = (slot + 1) % k;
        rep[other] = rep[slot];
        CHECK(standard_dp(rep).is_zero());
        CHECK(capelli_dp(rep, y).is_zero());
    }
}

TEST_CASE("s_k(x) = s_{k+1}(1, x) for even k") {
    testing::TestRng rng(6);
    for (std::size_t k = 2; k <= 6; k += 2) {
        auto x = random_tuple(rng, k, 2, 2, kInt, 2);
        std::vector<GrMatrix> with_one{GrMatrix::identity(2, 2, kInt)};
        with_one.insert(with_one.end(), x.begin(), x.end());
        CHECK(standard_dp(with_one) == standard_dp(x));
    }
}

TEST_CASE("Young alternating sums") {
    // a = (e11, v1 e11, v2 e11), one interval with N = {1}: 2! v1v2 e11.
    std::vector<GrMatrix> a{vunit(1, 2, 0, 1, 1), vunit(1, 2, 1, 1, 1), vunit(1, 2, 2, 1, 1)};
    auto interval = YoungSpec::intervals({3});
    CHECK(young_alternating_sum(a, interval).to_string() == "2*v1v2*e11");

    // |M| = 1: one class of size two, elements commute.
    std::vector<GrMatrix> b{vunit(1, 1, 0, 1, 1), vunit(1, 1, 1, 1, 1)};
    YoungSpec pair{2, {{1, 2}}, {1}};
    CHECK(young_alternating_sum(b, pair).is_zero());

    testing::TestRng rng(7);
    auto c = random_tuple(rng, 4, 2, 2, kInt, 2);
    YoungSpec singletons{4, {{1}, {2}, {3}, {4}}, {}};
    CHECK(young_alternating_sum(c, singletons) == c[0] * c[1] * c[2] * c[3]);

    std::vector<GrassmannElem> g{GrassmannElem::one(2, kInt), GrassmannElem::generator(2, kInt, 1),
                                 GrassmannElem::generator(2, kInt, 2)};
    CHECK(young_alternating_sum(g, interval) == GrassmannElem::monomial(2, 0b11, RingElem(kInt, 2)));

    YoungSpec full{4, {{1, 2, 3, 4}}, {2, 3, 4}};
    CHECK(full.group_order() == 24);
    // Full symmetric group: the Young sum is the standard polynomial.
    CHECK(young_alternating_sum(c, full) == standard_naive(c));
}

TEST_CASE("Young spec validation") {
    auto code_of = [](const YoungSpec& spec) {
        try {
            spec.validate();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Parse;
    };
    CHECK(code_of(YoungSpec{3, {{1, 2}}, {2}}) == Errc::BadPartition);
    CHECK(code_of(YoungSpec{3, {{1, 2}, {2, 3}}, {3}}) == Errc::BadPartition);
    CHECK(code_of(YoungSpec{3, {{1, 2, 3}}, {2}}) == Errc::BadPartition);
    CHECK(code_of(YoungSpec{3, {{1, 2, 3}}, {1, 2, 3}}) == Errc::BadPartition);
    CHECK(code_of(YoungSpec{3, {{1, 2, 3}}, {2, 3}}) == Errc::Parse);

    YoungSpec big{10, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, {2, 3, 4, 5, 6, 7, 8, 9, 10}};
    std::vector<GrMatrix> a(10, GrMatrix::identity(1, 0, kInt));
    try {
        (void)young_alternating_sum(a, big);
        FAIL("expected GroupTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::GroupTooLarge);
    }
}

TEST_CASE("product of standard polynomials") {
    testing::TestRng rng(8);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (unsigned m = 0; m <= 4; ++m) {
            const std::size_t k = 2 * n * (m / 2 + 1);
            auto x = random_tuple(rng, k, n, m, kInt, 3);
            auto result = standard_product_eval(x);
            CHECK(result.product.is_zero());
            CHECK(result.factors.size() == m / 2 + 1);
            for (const auto& f : result.factors) CHECK(f.in_filtration(2));
        }
    }
    std::vector<GrMatrix> wrong(3, GrMatrix::identity(1, 2, kInt));
    try {
        (void)standard_product_eval(wrong);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LengthMismatch);
    }
}

TEST_CASE("dense and sparse evaluation paths agree with the permutation sums") {
    testing::TestRng rng(77);
    for (const auto& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(7)}) {
        // Rank 3 takes the dense path; rank 14 is above its limit and stays sparse.
        for (unsigned m : {3U, 14U}) {
            CAPTURE(m);
            auto x = random_tuple(rng, 5, 2, m, ring, 2);
            auto y = random_tuple(rng, 6, 2, m, ring, 2);
            CHECK(standard_dp(x) == standard_naive(x));
            CHECK(capelli_dp(x, y) == capelli_naive(x, y));
        }
    }
}
