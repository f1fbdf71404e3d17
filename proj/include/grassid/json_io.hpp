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
 * @file json_io.hpp
 * @brief JSON forms of matrices and polynomials.
 *
 * Matrix: {"n": 2, "m": 3, "ring": "zmod:7",
 *          "entries": [[[[mask, "coeff"], ...], ...], ...]}
 * where entries[i][j] lists the terms of entry (i, j) by increasing mask and
 * coefficients are decimal strings ("num/den" over the rationals).
 * Polynomial: array of coefficient strings, lowest degree first.
 */

#ifndef GRASSID_JSON_IO_HPP
#define GRASSID_JSON_IO_HPP

#include <vector>

#include <json.hpp>

#include "grassid/gmatrix.hpp"
#include "grassid/poly.hpp"

namespace grassid {

nlohmann::ordered_json element_terms_to_json(const GrassmannElem& x);
GrassmannElem element_from_json(const nlohmann::json& terms, unsigned m, const RingSpec& ring);

nlohmann::ordered_json matrix_to_json(const GrMatrix& a);
/// Errc::Parse on any schema violation (plus the usual construction errors
/// for out-of-range masks).
GrMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json matrices_to_json(const std::vector<GrMatrix>& list);
std::vector<GrMatrix> matrices_from_json(const nlohmann::json& j);

nlohmann::ordered_json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j, const RingSpec& ring);

}  // namespace grassid

#endif
