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

#include "grassid/poly.hpp"
#include "support.hpp"

using namespace grassid;

namespace {

const RingSpec kInt = RingSpec::integers();
const RingSpec kRat = RingSpec::rationals();

Poly ints(std::initializer_list<long> c) {
    std::vector<RingElem> out;
    for (long x : c) out.emplace_back(kInt, x);
    return Poly(kInt, out);
}

GrMatrix scalar_diag(unsigned m, const RingSpec& ring, std::initializer_list<long> values) {
    std::vector<GrassmannElem> d;
    for (long x : values) d.push_back(GrassmannElem::scalar(m, RingElem(ring, x)));
    return GrMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("charpoly examples") {
    CHECK(charpoly(scalar_diag(0, kInt, {7})) == ints({-7, 1}));
    CHECK(charpoly(scalar_diag(0, kInt, {1, 2})) == ints({2, -3, 1}));
    CHECK(charpoly(scalar_diag(0, kInt, {1, 2})).to_string() == "x^2 - 3*x + 2");
    CHECK(charpoly(GrMatrix::identity(3, 2, kInt)).is_monic());
    GrMatrix bad = scalar_diag(2, kInt, {1, 2});
    bad.set(0, 1, GrassmannElem::generator(2, kInt, 1));
    try {
        (void)charpoly(bad);
        FAIL("expected NonScalarEntries");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonScalarEntries);
    }
}

TEST_CASE("charpoly agrees with the Leibniz determinant") {
    testing::TestRng rng(101);
    for (const auto& ring : {RingSpec::prime_field(7), kInt, kRat}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                auto a0 = rng.scalar_matrix(n, 0, ring);
                auto f = charpoly(a0);
                CHECK(f == testing::leibniz_charpoly(a0));
                CHECK(f.degree() == static_cast<long>(n));
                CHECK(f.is_monic());
                // Cayley-Hamilton over the base ring.
                CHECK(eval_at_matrix(f, a0).is_zero());
            }
        }
    }
}

TEST_CASE("poly_from_roots and derivative") {
    auto f = poly_from_roots({RingElem(kInt, 1), RingElem(kInt, 2)}, kInt);
    CHECK(f == ints({2, -3, 1}));
    CHECK(poly_from_roots({}, kInt) == ints({1}));
    CHECK(poly_from_roots({RingElem(kInt, 0), RingElem(kInt, 0)}, kInt) == ints({0, 0, 1}));
    CHECK(poly_derivative(f) == ints({-3, 2}));
    CHECK(poly_derivative(ints({5})).is_zero());
    CHECK(ints({}).degree() == -1);

    // f'(lambda_r) = prod_{i != r} (lambda_r - lambda_i).
    testing::TestRng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RingElem> roots;
        for (int i = 0; i < 4; ++i) roots.push_back(rng.scalar(kRat));
        auto g = poly_from_roots(roots, kRat);
        auto dg = poly_derivative(g);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            RingElem expected = RingElem::one(kRat);
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (i != r) expected *= roots[r] - roots[i];
            CHECK(dg.evaluate(roots[r]) == expected);
        }
        std::vector<GrassmannElem> diag;
        for (const auto& r : roots) diag.push_back(GrassmannElem::scalar(0, r));
        CHECK(charpoly(GrMatrix::diagonal(diag)) == g);
    }
}

TEST_CASE("evaluation at Grassmann matrices") {
    testing::TestRng rng(77);
    for (const auto& ring : {kInt, RingSpec::prime_field(5)}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto a = rng.matrix(n, 3, ring, 3);
            CHECK(eval_at_matrix(Poly::x(ring), a) == a);
            auto f = Poly(ring, {rng.scalar(ring), rng.scalar(ring), RingElem::one(ring)});
            auto g = Poly(ring, {rng.scalar(ring), RingElem::one(ring)});
            CHECK(eval_at_matrix(f * g, a) == eval_at_matrix(f, a) * eval_at_matrix(g, a));
            CHECK(eval_at_matrix(f + g, a) == eval_at_matrix(f, a) + eval_at_matrix(g, a));
        }
    }
    CHECK_THROWS_AS(eval_at_matrix(Poly::x(kRat), GrMatrix::identity(2, 1, kInt)), Error);
}

TEST_CASE("product form matches Horner and the explicit product") {
    testing::TestRng rng(78);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<RingElem> roots;
        std::vector<RootPower> factors;
        for (std::size_t i = 0; i < n; ++i) {
            roots.push_back(rng.scalar(kRat));
            factors.push_back({roots.back(), 1});
        }
        auto a = rng.matrix(n, 3, kRat, 3);
        CHECK(eval_product_form(factors, a) == eval_at_matrix(poly_from_roots(roots, kRat), a));

        std::vector<GrassmannElem> diag;
        for (const auto& r : roots) diag.push_back(GrassmannElem::scalar(3, r));
        auto d = GrMatrix::diagonal(diag);
        GrMatrix explicit_product = GrMatrix::identity(n, 3, kRat);
        for (const auto& r : roots) explicit_product = explicit_product * (d - GrMatrix::identity(n, 3, kRat).scaled(r));
        CHECK(eval_at_matrix(poly_from_roots(roots, kRat), d) == explicit_product);
        CHECK(explicit_product.is_zero());

        factors.front().multiplicity = 3;
        CHECK(eval_product_form(factors, a) ==
              eval_at_matrix(poly_from_roots(roots, kRat) *
                                 pow(Poly(kRat, {-roots.front(), RingElem::one(kRat)}), 2),
                             a));
    }
    CHECK(eval_product_form({}, GrMatrix::identity(2, 2, kInt)) == GrMatrix::identity(2, 2, kInt));
}

TEST_CASE("m = 0 recovers Cayley-Hamilton") {
    testing::TestRng rng(79);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto a = rng.matrix(n, 0, kInt, 1);
        CHECK(eval_at_matrix(charpoly(a), a).is_zero());
    }
}

TEST_CASE("poly text") {
    CHECK(ints({2, -3, 0, 1}).to_string() == "x^3 - 3*x + 2");
    CHECK(ints({0, -1}).to_string() == "-x");
    CHECK(ints({}).to_string() == "0");
}
