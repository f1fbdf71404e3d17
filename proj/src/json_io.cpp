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

#include "grassid/json_io.hpp"

namespace grassid {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

}  // namespace

nlohmann::ordered_json element_terms_to_json(const GrassmannElem& x) {
    auto out = nlohmann::ordered_json::array();
    for (const Term& t : x.terms()) out.push_back(nlohmann::ordered_json::array({t.mask, t.coeff.to_string()}));
    return out;
}

GrassmannElem element_from_json(const nlohmann::json& terms, unsigned m, const RingSpec& ring) {
    if (!terms.is_array()) bad("entry must be an array of [mask, coeff] pairs");
    std::vector<Term> raw;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_string())
            bad("term must be [mask, \"coeff\"], got " + t.dump());
        if (m < kMaxRank + 1 && t[0].get<Mask>() >> m != 0) bad("mask " + t[0].dump() + " uses generators beyond m");
        raw.push_back(Term{t[0].get<Mask>(), RingElem::parse(ring, t[1].get<std::string>())});
    }
    return GrassmannElem::from_masks(m, ring, std::move(raw));
}

nlohmann::ordered_json matrix_to_json(const GrMatrix& a) {
    nlohmann::ordered_json out;
    out["n"] = a.size();
    out["m"] = a.rank();
    out["ring"] = a.ring().to_string();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.size(); ++j) row.push_back(element_terms_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

GrMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad("matrix must be a JSON object");
    for (const char* key : {"n", "m", "ring", "entries"})
        if (!j.contains(key)) bad(std::string("matrix lacks \"") + key + "\"");
    if (!j["n"].is_number_unsigned() || !j["m"].is_number_unsigned() || !j["ring"].is_string())
        bad("matrix header has wrong types");
    const auto n = j["n"].get<std::size_t>();
    const auto m = j["m"].get<unsigned>();
    const RingSpec ring = RingSpec::parse(j["ring"].get<std::string>());
    const auto& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n) bad("entries must have n rows");
    GrMatrix out(n, m, ring);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) bad("every row must have n entries");
        for (std::size_t c = 0; c < n; ++c) out.set(i, c, element_from_json(rows[i][c], m, ring));
    }
    return out;
}

nlohmann::ordered_json matrices_to_json(const std::vector<GrMatrix>& list) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& a : list) out.push_back(matrix_to_json(a));
    return out;
}

std::vector<GrMatrix> matrices_from_json(const nlohmann::json& j) {
    if (!j.is_array()) bad("expected an array of matrices");
    std::vector<GrMatrix> out;
    for (const auto& a : j) out.push_back(matrix_from_json(a));
    return out;
}

nlohmann::ordered_json poly_to_json(const Poly& f) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.to_string());
    return out;
}

Poly poly_from_json(const nlohmann::json& j, const RingSpec& ring) {
    if (!j.is_array()) bad("polynomial must be an array of coefficient strings");
    std::vector<RingElem> coeffs;
    for (const auto& c : j) {
        if (!c.is_string()) bad("polynomial coefficient must be a string");
        coeffs.push_back(RingElem::parse(ring, c.get<std::string>()));
    }
    return Poly(ring, std::move(coeffs));
}

}  // namespace grassid
