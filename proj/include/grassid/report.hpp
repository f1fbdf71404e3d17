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

/**
 * @file report.hpp
 * @brief Campaign parameters and the structured outcome of a verification.
 *
 * JSON layout of a report:
 *
 *     {"campaign": {...}, "verdict": "PASS", "trials": 50,
 *      "details": [{"name": ..., "value": ...}, ...],
 *      "reproducer": {...} | null, "elapsed_ms": 12.5}
 *
 * Everything except elapsed_ms is a deterministic function of the campaign.
 */

#ifndef GRASSID_REPORT_HPP
#define GRASSID_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grassid/identities.hpp"
#include "grassid/ring.hpp"

namespace grassid {

enum class Target {
    Theorem1,
    Lemma2,
    YoungLemma,
    CapelliBound,
    StandardCorollary,
    StandardProduct,
    Filtration2,
    CHSharpness,
    CapelliSharpness,
    StandardSharpness,
    OpenQuestion,
    AmitsurLevitzki,
};

enum class Verdict { Pass, Fail, CounterexampleFound, NoCounterexampleInBudget };

std::string_view target_name(Target t) noexcept;
/// Errc::Parse on an unknown name.
Target parse_target(std::string_view name);
std::string_view verdict_name(Verdict v) noexcept;
Verdict parse_verdict(std::string_view name);

struct Campaign {
    Target target = Target::Theorem1;
    std::size_t n = 1;
    unsigned m = 0;
    RingSpec ring;
    unsigned trials = 50;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    Guards guards;
    /// Evaluate the open-question search at this degree instead of 2(n + m/2).
    std::optional<unsigned> degree_override;

    nlohmann::ordered_json to_json() const;
    static Campaign from_json(const nlohmann::json& j);
};

struct Detail {
    std::string name;
    nlohmann::ordered_json value;
};

struct Report {
    Campaign campaign;
    Verdict verdict = Verdict::Pass;
    unsigned trials = 0;
    std::vector<Detail> details;
    std::optional<nlohmann::ordered_json> reproducer;
    double elapsed_ms = 0.0;

    void add(std::string name, nlohmann::ordered_json value) { details.push_back({std::move(name), std::move(value)}); }
    /// First detail with this name, or nullptr.
    const nlohmann::ordered_json* find(std::string_view name) const;
    /// Marks the report failed; the first failure's reproducer is kept.
    void fail(std::string reason, std::optional<nlohmann::ordered_json> repro = std::nullopt);

    nlohmann::ordered_json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

}  // namespace grassid

#endif
