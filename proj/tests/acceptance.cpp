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

// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
// zero tolerance. Criterion 8 checks a closed form that does not hold for
// n >= 2; it is reported as FAIL and treated as a known, documented failure
// as long as the corrected closed form holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "grassid/harness.hpp"
#include "grassid/identities.hpp"
#include "grassid/poly.hpp"
#include "grassid/witnesses.hpp"

using namespace grassid;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

const RingSpec kInt = RingSpec::integers();
const RingSpec kRat = RingSpec::rationals();
const RingSpec kF7 = RingSpec::prime_field(7);

std::uint64_t smallest_prime_above(std::uint64_t bound) {
    std::uint64_t p = bound + 1;
    while (!is_prime(p)) ++p;
    return p;
}

Guards desk_guards() {
    Guards g;
    g.max_standard_dp_k = 12;
    g.max_capelli_dp_k = 12;
    return g;
}

Campaign make(Target t, std::size_t n, unsigned m, const RingSpec& ring, unsigned trials, std::uint64_t seed = 2024) {
    Campaign c;
    c.target = t;
    c.n = n;
    c.m = m;
    c.ring = ring;
    c.trials = trials;
    c.seed = seed;
    c.guards = desk_guards();
    return c;
}

std::string cell(const Campaign& c) {
    return std::string(target_name(c.target)) + " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " " +
           c.ring.to_string();
}

// Campaigns run by criteria 1-10, kept for the determinism re-run.
std::vector<std::pair<Campaign, std::string>> g_ran;

Report run_logged(const Campaign& c) {
    Report r = run_campaign(c);
    g_ran.emplace_back(c, canonical_dump(r));
    return r;
}

std::vector<std::pair<std::size_t, unsigned>> capelli_grid() {
    std::vector<std::pair<std::size_t, unsigned>> g;
    for (std::size_t n = 1; n <= 2; ++n)
        for (unsigned m = 0; m <= 5; ++m) g.emplace_back(n, m);
    for (unsigned m = 0; m <= 2; ++m) g.emplace_back(3, m);
    return g;
}

Outcome criterion1() {
    Outcome o;
    for (const auto& ring : {kInt, kF7})
        for (std::size_t n = 1; n <= 3; ++n)
            for (unsigned m = 0; m <= 5; ++m) {
                const auto c = make(Target::Theorem1, n, m, ring, 50);
                const Report r = run_logged(c);
                o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
                const auto* mutation = r.find("mutation_nonzero");
                o.require(mutation && mutation->get<bool>(), cell(c) + " mutation control did not flip");
            }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned m = 0; m <= 5; ++m) {
            const std::uint64_t p = smallest_prime_above(std::max<std::uint64_t>((m + 1) / 2, n - 1));
            for (const auto& ring : {kRat, RingSpec::prime_field(p)}) {
                const auto c = make(Target::CHSharpness, n, m, ring, 1);
                const Report r = run_logged(c);
                o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
            }
        }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (std::size_t n = 2; n <= 3; ++n)
        for (unsigned m = 2; m <= 4; ++m) {
            const auto c = make(Target::Lemma2, n, m, kRat, 100);
            const Report r = run_logged(c);
            o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
            for (const char* part : {"part0_B0_zero", "part1_B1_formula", "part2_B1_squared_zero",
                                     "part3_B2_offdiagonal", "part4_commutes_diagonal",
                                     "part4_anticommutes_offdiagonal"})
                o.require(r.find(part) && r.find(part)->get<unsigned>() == 100, cell(c) + " " + part);
        }
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto c = make(Target::YoungLemma, 2, 0, kInt, 20);
    const Report r = run_logged(c);
    o.require(r.verdict == Verdict::Pass, "verdict " + std::string(verdict_name(r.verdict)));
    o.require(r.find("part_a_shapes")->get<unsigned>() == 5 * 20, "part (a) shape count");
    // Compositions of k <= 7 into odd parts: 1, 1, 2, 3, 5, 8, 13.
    o.require(r.find("part_b_shapes")->get<unsigned>() == 33, "part (b) shape count");
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (const auto& [n, m] : capelli_grid()) {
        const auto c = make(Target::CapelliBound, n, m, kInt, 50);
        const Report r = run_logged(c);
        o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
        o.require(r.find("structured_trials")->get<unsigned>() == 200, cell(c) + " structured count");
        o.require(r.find("mutation_nonzero") && r.find("mutation_nonzero")->get<bool>(), cell(c) + " mutation");
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& [n, m] : capelli_grid())
        for (const auto& ring : {kRat, kF7}) {
            const auto c = make(Target::CapelliSharpness, n, m, ring, 1);
            const Report r = run_logged(c);
            o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
        }
    const Report worked = capelli_sharpness_verify(default_capelli_spec(1, 2, kRat));
    o.require(worked.find("value")->get<std::string>() == "2*v1v2*e11", "worked value at (1, 2)");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (const auto& [n, m] : capelli_grid()) {
        const auto c = make(Target::StandardCorollary, n, m, kInt, 50);
        const Report r = run_logged(c);
        o.require(r.verdict == Verdict::Pass, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
        o.require(r.find("product_trials_in_filtration")->get<unsigned>() == 50, cell(c) + " filtration");
    }
    return o;
}

// Returns the stated-form outcome; corrected receives the check of the
// closed form (2q)! v1...v2q (e11 + 2 sum_{r>=2} e_rr) and its (1,1) entry.
Outcome criterion8(Outcome& corrected) {
    Outcome stated;
    auto check = [&](std::size_t n, unsigned m, const RingSpec& ring) {
        const auto w = standard_witness(n, m, ring);
        const GrMatrix value = standard_dp(w, desk_guards());
        const unsigned q = m / 2;
        const GrassmannElem corner = GrassmannElem::monomial(m, (Mask{1} << (2 * q)) - 1, factorial(2 * q, ring));
        const GrMatrix stated_form = matrix_unit(n, m, ring, 1, 1).scaled(corner);
        const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + ring.to_string();
        stated.require(value == stated_form, where + ": got " + value.to_string() + ", stated " + stated_form.to_string());
        const Report r = standard_sharpness_verify(n, m, ring, desk_guards());
        corrected.require(r.verdict == Verdict::Pass && value(0, 0) == corner && !value.is_zero(), where);
    };
    for (const auto& [n, m] : capelli_grid())
        for (const auto& ring : {kRat, kF7}) check(n, m, ring);
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned m = 0; m <= 1; ++m) check(n, m, kRat);
    return stated;
}

Outcome criterion9() {
    Outcome o;
    const Guards g = desk_guards();
    // Exhaustive ordered atom tuples.
    struct Shape {
        std::size_t n;
        unsigned m;
        unsigned max_k;
    };
    std::size_t compared = 0;
    for (const Shape s : {Shape{1, 2, 5}, Shape{2, 0, 5}, Shape{2, 1, 4}}) {
        const std::uint64_t atoms = (std::uint64_t{1} << s.m) * s.n * s.n;
        for (unsigned k = 1; k <= s.max_k; ++k) {
            std::uint64_t total = 1;
            for (unsigned i = 0; i < k; ++i) total *= atoms;
            Rng yrng = Rng::stream(99, k);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<GrMatrix> x, y;
                std::uint64_t rest = code;
                for (unsigned i = 0; i < k; ++i, rest /= atoms) x.push_back(atom(s.n, s.m, kInt, rest % atoms));
                for (unsigned i = 0; i <= k; ++i) y.push_back(atom(s.n, s.m, kInt, yrng.below(atoms)));
                o.require(standard_dp(x, g) == standard_naive(x, g), "standard mismatch on an atom tuple");
                o.require(capelli_dp(x, y, g) == capelli_naive(x, y, g), "Capelli mismatch on an atom tuple");
                compared += 2;
                if (!o.pass) return o;
            }
        }
    }
    // Capelli with x and y both exhaustive at small k.
    for (unsigned k = 1; k <= 2; ++k) {
        const std::uint64_t atoms = 4;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < 2 * k + 1; ++i) total *= atoms;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<GrMatrix> x, y;
            std::uint64_t rest = code;
            for (unsigned i = 0; i < k; ++i, rest /= atoms) x.push_back(atom(1, 2, kInt, rest % atoms));
            for (unsigned i = 0; i <= k; ++i, rest /= atoms) y.push_back(atom(1, 2, kInt, rest % atoms));
            o.require(capelli_dp(x, y, g) == capelli_naive(x, y, g), "Capelli mismatch on an x/y atom tuple");
            ++compared;
        }
    }
    // 200 random tuples of each kind.
    const RingSpec rings[] = {kInt, kRat, kF7};
    for (unsigned t = 0; t < 200; ++t) {
        Rng rng = Rng::stream(7, t);
        const unsigned k = 1 + static_cast<unsigned>(rng.below(7));
        const std::size_t n = 1 + rng.below(3);
        const unsigned m = static_cast<unsigned>(rng.below(5));
        const RingSpec& ring = rings[t % 3];
        std::vector<GrMatrix> x, y;
        for (unsigned i = 0; i < k; ++i) x.push_back(random_full_matrix(n, m, ring, 2, rng));
        for (unsigned i = 0; i <= k; ++i) y.push_back(random_full_matrix(n, m, ring, 2, rng));
        o.require(standard_dp(x, g) == standard_naive(x, g), "standard mismatch on random tuple " + std::to_string(t));
        o.require(capelli_dp(x, y, g) == capelli_naive(x, y, g), "Capelli mismatch on random tuple " + std::to_string(t));
        compared += 2;
    }
    o.notes.push_back(std::to_string(compared) + " evaluations compared");
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::vector<std::pair<std::size_t, unsigned>> exhaustive{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}};
    for (const auto& [n, m] : exhaustive) {
        auto c = make(Target::OpenQuestion, n, m, kInt, 1);
        c.budget = 100000;
        const Report r = run_logged(c);
        o.require(r.verdict == Verdict::NoCounterexampleInBudget, cell(c) + " verdict " + std::string(verdict_name(r.verdict)));
        o.require(r.find("exhaustive")->get<bool>(), cell(c) + " enumeration not exhaustive");
    }
    auto c = make(Target::OpenQuestion, 3, 2, kInt, 1);
    c.budget = 100000;
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = run_logged(c);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(seconds < 600, "(3, 2) search exceeded 10 minutes");
    o.require(r.verdict == Verdict::NoCounterexampleInBudget || r.verdict == Verdict::CounterexampleFound,
              "(3, 2) produced no verdict");
    o.notes.push_back("(3, 2) degree 8: " + std::string(verdict_name(r.verdict)) + " after " +
                      std::to_string(r.find("enumerated")->get<std::uint64_t>()) + " tuples" +
                      (r.reproducer ? ", reproducer attached" : ""));
    if (const auto* atoms = r.find("counterexample_atoms")) o.notes.push_back("atoms " + atoms->dump());
    return o;
}

Outcome criterion11() {
    Outcome o;
    // Re-run the first and last campaign of every target that criteria 1-10 ran.
    std::map<Target, std::vector<std::size_t>> by_target;
    for (std::size_t i = 0; i < g_ran.size(); ++i) by_target[g_ran[i].first.target].push_back(i);
    std::size_t rerun = 0;
    for (const auto& [target, indices] : by_target) {
        for (std::size_t i : {indices.front(), indices.back()}) {
            const auto& [c, dump] = g_ran[i];
            o.require(canonical_dump(run_campaign(c)) == dump, cell(c) + " differs on re-run");
            ++rerun;
        }
    }
    o.notes.push_back(std::to_string(rerun) + " campaigns re-run");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    Outcome corrected8;
    const std::vector<Criterion> criteria{
        {1, "characteristic polynomial power identity", criterion1},
        {2, "Cayley-Hamilton sharpness", criterion2},
        {3, "block structure of f(A)", criterion3},
        {4, "Young subgroup lemma", criterion4},
        {5, "Capelli bound", criterion5},
        {6, "Capelli sharpness", criterion6},
        {7, "standard identity bounds", criterion7},
        {8, "standard sharpness closed form", [&] { return criterion8(corrected8); }},
        {9, "oracle equivalence", criterion9},
        {10, "open-question search", criterion10},
        {11, "determinism", criterion11},
    };
    bool suite_ok = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1f s", seconds);
        std::cout << "Criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL") << " [" << timing
                  << "]\n";
        const std::size_t shown = std::min<std::size_t>(o.notes.size(), 6);
        for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << o.notes[i] << "\n";
        if (o.notes.size() > shown) std::cout << "    ... " << o.notes.size() - shown << " more\n";
        if (c.id == 8) {
            // Known failure: the e11-only form is wrong for n >= 2. It stays
            // acceptable only while the corrected form holds everywhere.
            std::cout << "    corrected form (2q)! v1...v2q (e11 + 2 sum_{r>=2} e_rr) with the stated (1,1) entry: "
                      << (corrected8.pass ? "holds" : "VIOLATED") << "\n";
            for (const auto& note : corrected8.notes) std::cout << "    corrected: " << note << "\n";
            if (o.pass) std::cout << "    stated form unexpectedly held everywhere; update the known-failure record\n";
            suite_ok = suite_ok && corrected8.pass && !o.pass;
        } else {
            suite_ok = suite_ok && o.pass;
        }
        std::cout.flush();
    }
    std::cout << (suite_ok ? "acceptance: all criteria PASS except the documented criterion 8 closed form\n"
                           : "acceptance: unexpected failure\n");
    return suite_ok ? 0 : 1;
}
