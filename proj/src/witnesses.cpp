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

#include "grassid/witnesses.hpp"

#include <algorithm>

#include "grassid/json_io.hpp"
#include "grassid/poly.hpp"

namespace grassid {

namespace {

std::string_view kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::CayleyHamilton: return "ch";
    case WitnessKind::Capelli: return "capelli";
    case WitnessKind::Standard: return "standard";
    }
    return "?";
}

void require_field(const RingSpec& ring, const char* what) {
    if (!ring.is_field())
        throw Error(Errc::BadCharacteristic, std::string(what) + " witness needs a field, got " + ring.to_string());
}

// Characteristic 0, or p > bound.
void require_characteristic_above(const RingSpec& ring, unsigned bound, const std::string& what) {
    const auto p = ring.characteristic();
    if (p != 0 && p <= bound)
        throw Error(Errc::BadCharacteristic, what + " needs characteristic 0 or p > " + std::to_string(bound) +
                                                 ", got " + ring.to_string());
}

Campaign echo(Target target, std::size_t n, unsigned m, const RingSpec& ring, const Guards& guards) {
    Campaign c;
    c.target = target;
    c.n = n;
    c.m = m;
    c.ring = ring;
    c.trials = 1;
    c.guards = guards;
    return c;
}

nlohmann::ordered_json witness_reproducer(const WitnessSpec& spec) {
    return {{"check", "witness"}, {"spec", spec.to_json()}};
}

}  // namespace

nlohmann::ordered_json WitnessSpec::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(kind);
    j["n"] = n;
    j["m"] = m;
    j["ring"] = ring.to_string();
    auto ls = nlohmann::ordered_json::array();
    for (const auto& l : lambdas) ls.push_back(l.to_string());
    j["lambdas"] = std::move(ls);
    j["parts"] = parts;
    return j;
}

WitnessSpec WitnessSpec::from_json(const nlohmann::json& j) {
    try {
        WitnessSpec s;
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "ch")
            s.kind = WitnessKind::CayleyHamilton;
        else if (kind == "capelli")
            s.kind = WitnessKind::Capelli;
        else if (kind == "standard")
            s.kind = WitnessKind::Standard;
        else
            throw Error(Errc::Parse, "unknown witness kind '" + kind + "'");
        s.n = j.at("n").get<std::size_t>();
        s.m = j.at("m").get<unsigned>();
        s.ring = RingSpec::parse(j.at("ring").get<std::string>());
        if (j.contains("lambdas"))
            for (const auto& l : j["lambdas"]) s.lambdas.push_back(RingElem::parse(s.ring, l.get<std::string>()));
        if (j.contains("parts")) s.parts = j["parts"].get<std::vector<unsigned>>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("witness spec: ") + e.what());
    }
}

WitnessSpec default_ch_spec(std::size_t n, unsigned m, const RingSpec& ring) {
    WitnessSpec s;
    s.kind = WitnessKind::CayleyHamilton;
    s.n = n;
    s.m = m;
    s.ring = ring;
    for (std::size_t i = 0; i < n; ++i) s.lambdas.emplace_back(ring, static_cast<long>(i));
    return s;
}

WitnessSpec default_capelli_spec(std::size_t n, unsigned m, const RingSpec& ring) {
    WitnessSpec s;
    s.kind = WitnessKind::Capelli;
    s.n = n;
    s.m = m;
    s.ring = ring;
    const unsigned total = 2 * (m / 2);
    const auto p = ring.characteristic();
    s.parts.assign(n * n, 0);
    if (p == 0 || total < p) {
        s.parts[0] = total;
        return s;
    }
    const unsigned largest = static_cast<unsigned>(p % 2 == 0 ? p - 2 : p - 1);
    unsigned remaining = total;
    for (auto& part : s.parts) {
        part = std::min(largest, remaining);
        remaining -= part;
    }
    if (remaining != 0)
        throw Error(Errc::BadCharacteristic, "cannot split " + std::to_string(total) + " into " +
                                                 std::to_string(n * n) + " even parts below " + std::to_string(p));
    return s;
}

WitnessSpec standard_spec(std::size_t n, unsigned m, const RingSpec& ring) {
    WitnessSpec s;
    s.kind = WitnessKind::Standard;
    s.n = n;
    s.m = m;
    s.ring = ring;
    return s;
}

GrassmannElem ch_nilpotent(unsigned m, const RingSpec& ring) {
    GrassmannElem v(m, ring);
    for (unsigned i = 1; i + 1 <= m; i += 2)
        v += GrassmannElem::generator(m, ring, i) * GrassmannElem::generator(m, ring, i + 1);
    if (m % 2 == 1) v += GrassmannElem::generator(m, ring, m);
    return v;
}

GrMatrix ch_witness(const WitnessSpec& spec, CharacteristicCheck check) {
    if (check == CharacteristicCheck::Enforce) {
        require_field(spec.ring, "Cayley-Hamilton");
        require_characteristic_above(spec.ring, (spec.m + 1) / 2, "Cayley-Hamilton witness");
    }
    if (spec.lambdas.size() != spec.n)
        throw Error(Errc::LengthMismatch, "need " + std::to_string(spec.n) + " lambdas, got " +
                                              std::to_string(spec.lambdas.size()));
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = i + 1; j < spec.n; ++j)
            if (spec.lambdas[i] == spec.lambdas[j])
                throw Error(Errc::DuplicateLambdas, "lambda " + spec.lambdas[i].to_string() + " repeats");
    const auto v = ch_nilpotent(spec.m, spec.ring);
    std::vector<GrassmannElem> diag;
    for (const auto& l : spec.lambdas) diag.push_back(GrassmannElem::scalar(spec.m, l) + v);
    if (diag.empty()) return GrMatrix(0, spec.m, spec.ring);
    return GrMatrix::diagonal(diag);
}

Report ch_sharpness_verify(const WitnessSpec& spec, CharacteristicCheck check) {
    Report report;
    report.campaign = echo(Target::CHSharpness, spec.n, spec.m, spec.ring, {});
    report.trials = 1;
    const GrMatrix a = ch_witness(spec, check);
    const unsigned c = (spec.m + 1) / 2;
    const Poly f = poly_from_roots(spec.lambdas, spec.ring);
    const GrassmannElem v = ch_nilpotent(spec.m, spec.ring);
    report.add("witness", spec.to_json());
    report.add("v", v.to_string());
    report.add("A", a.to_string());
    report.add("f", f.to_string());
    report.add("exponent", c + 1);
    report.add("minimal_polynomial_degree", spec.n * (c + 1));

    if (!(charpoly(a.component(0)) == f)) report.fail("charpoly(A0) differs from prod (x - lambda_i)", witness_reproducer(spec));

    const GrMatrix b = eval_at_matrix(f, a);
    GrMatrix top = GrMatrix::identity(a.size(), a.rank(), a.ring());
    GrMatrix below = top;
    for (unsigned e = 1; e <= c + 1; ++e) {
        if (e == c + 1) below = top;
        top = top * b;
    }
    report.add("f(A)^" + std::to_string(c), below.to_string());
    report.add("f(A)^" + std::to_string(c + 1), top.to_string());
    if (!top.is_zero()) report.fail("f(A)^(c+1) is not zero", witness_reproducer(spec));
    if (below.is_zero()) report.fail("f(A)^c vanishes; exponent is not sharp", witness_reproducer(spec));

    const Poly df = poly_derivative(f);
    const GrassmannElem vc = pow(v, c);
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::vector<RootPower> factors;
        for (std::size_t j = 0; j < spec.n; ++j) factors.push_back({spec.lambdas[j], j == i ? c : c + 1});
        const GrMatrix g = eval_product_form(factors, a);
        const GrassmannElem expected = vc.scaled(power(df.evaluate(spec.lambdas[i]), c + 1));
        const std::string tag = "g_" + std::to_string(i + 1) + "(A)[" + std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + "]";
        report.add(tag, g(i, i).to_string());
        report.add(tag + " expected", expected.to_string());
        if (g.is_zero()) report.fail("g_" + std::to_string(i + 1) + "(A) vanishes", witness_reproducer(spec));
        if (!(g(i, i) == expected) || expected.is_zero())
            report.fail(tag + " differs from v^c f'(lambda)^(c+1) or is zero", witness_reproducer(spec));
    }
    return report;
}

CapelliWitness capelli_witness(const WitnessSpec& spec, CharacteristicCheck check) {
    const std::size_t n = spec.n;
    const unsigned q = spec.m / 2;
    if (check == CharacteristicCheck::Enforce) {
        require_field(spec.ring, "Capelli");
        const unsigned n2 = static_cast<unsigned>(n * n);
        require_characteristic_above(spec.ring, 2 * ((q + n2 - 1) / n2), "Capelli witness");
    }
    if (spec.parts.size() != n * n)
        throw Error(Errc::BadPartition, "need n^2 = " + std::to_string(n * n) + " parts, got " +
                                            std::to_string(spec.parts.size()));
    unsigned sum = 0;
    for (unsigned part : spec.parts) {
        if (part % 2 != 0) throw Error(Errc::BadPartition, "part " + std::to_string(part) + " is odd");
        const auto p = spec.ring.characteristic();
        if (check == CharacteristicCheck::Enforce && p != 0 && part >= p)
            throw Error(Errc::BadCharacteristic, "part " + std::to_string(part) + " is not below p = " +
                                                     std::to_string(p));
        sum += part;
    }
    if (sum != 2 * q)
        throw Error(Errc::BadPartition, "parts sum to " + std::to_string(sum) + ", need " + std::to_string(2 * q));

    CapelliWitness w;
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // 1-based (row, col) of each C_i
    unsigned next_gen = 1;
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t s = 1; s <= n; ++s) {
            const GrMatrix unit = matrix_unit(n, spec.m, spec.ring, r, s);
            w.x.push_back(unit);
            cells.emplace_back(r, s);
            for (unsigned t = 0; t < spec.parts[(r - 1) * n + (s - 1)]; ++t) {
                w.x.push_back(unit.scaled(GrassmannElem::generator(spec.m, spec.ring, next_gen++)));
                cells.emplace_back(r, s);
            }
        }
    }
    w.y.push_back(matrix_unit(n, spec.m, spec.ring, 1, cells.front().first));
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
        w.y.push_back(matrix_unit(n, spec.m, spec.ring, cells[i].second, cells[i + 1].first));
    w.y.push_back(matrix_unit(n, spec.m, spec.ring, cells.back().second, 1));
    return w;
}

Report capelli_sharpness_verify(const WitnessSpec& spec, const Guards& guards, CharacteristicCheck check) {
    Report report;
    report.campaign = echo(Target::CapelliSharpness, spec.n, spec.m, spec.ring, guards);
    report.trials = 1;
    const CapelliWitness w = capelli_witness(spec, check);
    const std::size_t k = w.x.size();
    report.add("witness", spec.to_json());
    report.add("x_degree", k);
    report.add("zero_parts", static_cast<unsigned>(std::count(spec.parts.begin(), spec.parts.end(), 0U)));

    GrMatrix chain = w.y[0];
    for (std::size_t i = 0; i < k; ++i) chain = chain * w.x[i] * w.y[i + 1];
    RingElem weight = RingElem::one(spec.ring);
    for (unsigned part : spec.parts) weight *= factorial(part, spec.ring);
    const GrMatrix expected = chain.scaled(weight);
    const GrMatrix value = capelli_dp(w.x, w.y, guards);
    report.add("value", value.to_string());
    report.add("expected", expected.to_string());
    const auto repro = witness_reproducer(spec);
    if (!(value == expected)) report.fail("d_k differs from B0 C1 ... Ck Bk * prod m_r!", repro);
    if (value.is_zero()) report.fail("d_k vanishes on the witness", repro);
    if (k <= guards.max_naive_k) {
        const bool agrees = capelli_naive(w.x, w.y, guards) == value;
        report.add("naive_agrees", agrees);
        if (!agrees) report.fail("capelli_dp disagrees with capelli_naive", repro);
    }
    return report;
}

std::vector<GrMatrix> standard_witness(std::size_t n, unsigned m, const RingSpec& ring, CharacteristicCheck check) {
    const unsigned q = m / 2;
    if (check == CharacteristicCheck::Enforce) {
        require_field(ring, "standard");
        require_characteristic_above(ring, 2 * q, "standard witness");
    }
    std::vector<GrMatrix> w;
    for (std::size_t r = 1; r < n; ++r) w.push_back(matrix_unit(n, m, ring, r, r + 1));
    w.push_back(matrix_unit(n, m, ring, n, n));
    for (std::size_t r = n; r > 1; --r) w.push_back(matrix_unit(n, m, ring, r, r - 1));
    const GrMatrix e11 = matrix_unit(n, m, ring, 1, 1);
    for (unsigned i = 1; i <= 2 * q; ++i) w.push_back(e11.scaled(GrassmannElem::generator(m, ring, i)));
    return w;
}

GrMatrix standard_witness_value(std::size_t n, unsigned m, const RingSpec& ring) {
    const unsigned q = m / 2;
    const Mask top = (Mask{1} << (2 * q)) - 1;
    const GrassmannElem corner = GrassmannElem::monomial(m, top, factorial(2 * q, ring));
    GrMatrix out(n, m, ring);
    out.set(0, 0, corner);
    for (std::size_t r = 1; r < n; ++r) out.set(r, r, corner.scaled(RingElem(ring, 2)));
    return out;
}

Report standard_sharpness_verify(std::size_t n, unsigned m, const RingSpec& ring, const Guards& guards,
                                 CharacteristicCheck check) {
    Report report;
    report.campaign = echo(Target::StandardSharpness, n, m, ring, guards);
    report.trials = 1;
    const auto w = standard_witness(n, m, ring, check);
    const unsigned q = m / 2;
    report.add("degree", w.size());
    const GrMatrix value = standard_dp(w, guards);
    const GrMatrix expected = standard_witness_value(n, m, ring);
    const GrassmannElem corner = GrassmannElem::monomial(m, (Mask{1} << (2 * q)) - 1, factorial(2 * q, ring));
    report.add("value", value.to_string());
    report.add("expected", expected.to_string());
    report.add("e11_entry", value(0, 0).to_string());
    report.add("e11_entry_expected", corner.to_string());
    report.add("equals_e11_term_only", value == matrix_unit(n, m, ring, 1, 1).scaled(corner));
    const auto repro = witness_reproducer(standard_spec(n, m, ring));
    if (!(value == expected)) report.fail("s_k(witness) differs from the closed form", repro);
    if (!(value(0, 0) == corner)) report.fail("(1,1) entry differs from (2q)! v1...v2q", repro);
    if (value.is_zero()) report.fail("s_k vanishes on the witness", repro);
    if (w.size() <= guards.max_naive_k) {
        const bool agrees = standard_naive(w, guards) == value;
        report.add("naive_agrees", agrees);
        if (!agrees) report.fail("standard_dp disagrees with standard_naive", repro);
    }
    return report;
}

}  // namespace grassid
