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

#include "grassid/report.hpp"

#include <array>
#include <utility>

namespace grassid {

namespace {

constexpr std::array<std::pair<Target, std::string_view>, 12> kTargets{{
    {Target::Theorem1, "Theorem1"},
    {Target::Lemma2, "Lemma2"},
    {Target::YoungLemma, "YoungLemma"},
    {Target::CapelliBound, "CapelliBound"},
    {Target::StandardCorollary, "StandardCorollary"},
    {Target::StandardProduct, "StandardProduct"},
    {Target::Filtration2, "Filtration2"},
    {Target::CHSharpness, "CHSharpness"},
    {Target::CapelliSharpness, "CapelliSharpness"},
    {Target::StandardSharpness, "StandardSharpness"},
    {Target::OpenQuestion, "OpenQuestion"},
    {Target::AmitsurLevitzki, "AmitsurLevitzki"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdicts{{
    {Verdict::Pass, "PASS"},
    {Verdict::Fail, "FAIL"},
    {Verdict::CounterexampleFound, "COUNTEREXAMPLE_FOUND"},
    {Verdict::NoCounterexampleInBudget, "NO_COUNTEREXAMPLE_IN_BUDGET"},
}};

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::Parse, std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

std::string_view target_name(Target t) noexcept {
    for (const auto& [value, name] : kTargets)
        if (value == t) return name;
    return "?";
}

Target parse_target(std::string_view name) {
    for (const auto& [value, text] : kTargets)
        if (text == name) return value;
    throw Error(Errc::Parse, "unknown target '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) noexcept {
    for (const auto& [value, name] : kVerdicts)
        if (value == v) return name;
    return "?";
}

Verdict parse_verdict(std::string_view name) {
    for (const auto& [value, text] : kVerdicts)
        if (text == name) return value;
    throw Error(Errc::Parse, "unknown verdict '" + std::string(name) + "'");
}

nlohmann::ordered_json Campaign::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = target_name(target);
    j["n"] = n;
    j["m"] = m;
    j["ring"] = ring.to_string();
    j["trials"] = trials;
    j["seed"] = seed;
    j["budget"] = budget;
    j["guards"] = {{"max_naive_k", guards.max_naive_k},
                   {"max_standard_dp_k", guards.max_standard_dp_k},
                   {"max_capelli_dp_k", guards.max_capelli_dp_k},
                   {"max_young_order", guards.max_young_order}};
    if (degree_override)
        j["degree_override"] = *degree_override;
    else
        j["degree_override"] = nullptr;
    return j;
}

Campaign Campaign::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::Parse, "campaign must be an object");
    Campaign c;
    c.target = parse_target(get_field<std::string>(j, "target"));
    c.n = get_field<std::size_t>(j, "n");
    c.m = get_field<unsigned>(j, "m");
    c.ring = RingSpec::parse(get_field<std::string>(j, "ring"));
    c.trials = get_field<unsigned>(j, "trials");
    c.seed = get_field<std::uint64_t>(j, "seed");
    c.budget = get_field<std::uint64_t>(j, "budget");
    if (j.contains("guards")) {
        const auto& g = j["guards"];
        c.guards.max_naive_k = get_field<unsigned>(g, "max_naive_k");
        c.guards.max_standard_dp_k = get_field<unsigned>(g, "max_standard_dp_k");
        c.guards.max_capelli_dp_k = get_field<unsigned>(g, "max_capelli_dp_k");
        c.guards.max_young_order = get_field<std::uint64_t>(g, "max_young_order");
    }
    if (j.contains("degree_override") && !j["degree_override"].is_null())
        c.degree_override = get_field<unsigned>(j, "degree_override");
    return c;
}

const nlohmann::ordered_json* Report::find(std::string_view name) const {
    for (const auto& d : details)
        if (d.name == name) return &d.value;
    return nullptr;
}

void Report::fail(std::string reason, std::optional<nlohmann::ordered_json> repro) {
    verdict = Verdict::Fail;
    add("failure", std::move(reason));
    if (!reproducer && repro) reproducer = std::move(repro);
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["campaign"] = campaign.to_json();
    j["verdict"] = verdict_name(verdict);
    j["trials"] = trials;
    auto list = nlohmann::ordered_json::array();
    for (const auto& d : details) list.push_back({{"name", d.name}, {"value", d.value}});
    j["details"] = std::move(list);
    if (reproducer)
        j["reproducer"] = *reproducer;
    else
        j["reproducer"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

Report Report::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("campaign")) throw Error(Errc::Parse, "report must be an object with a campaign");
    Report r;
    r.campaign = Campaign::from_json(j["campaign"]);
    r.verdict = parse_verdict(get_field<std::string>(j, "verdict"));
    r.trials = get_field<unsigned>(j, "trials");
    if (j.contains("details"))
        for (const auto& d : j["details"]) r.details.push_back({get_field<std::string>(d, "name"), d.at("value")});
    if (j.contains("reproducer") && !j["reproducer"].is_null()) r.reproducer = j["reproducer"];
    if (j.contains("elapsed_ms")) r.elapsed_ms = get_field<double>(j, "elapsed_ms");
    return r;
}

}  // namespace grassid
