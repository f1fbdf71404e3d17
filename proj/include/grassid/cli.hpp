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
 * @file cli.hpp
 * @brief Command-line front end. The executable in tools/ is a thin wrapper
 *        around run().
 *
 * Exit codes: 0 when every verdict is PASS or NO_COUNTEREXAMPLE_IN_BUDGET,
 * 2 on FAIL, 3 on COUNTEREXAMPLE_FOUND, 64 on a usage error, 74 on an I/O
 * error.
 */

#ifndef GRASSID_CLI_HPP
#define GRASSID_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grassid/report.hpp"

namespace grassid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 2;
inline constexpr int kExitCounterexample = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

enum class Format { Json, Table };

struct CliConfig {
    std::string subcommand;
    std::size_t n = 2;
    unsigned m = 2;
    std::string ring = "int";
    std::uint64_t seed = 0;
    unsigned trials = 50;
    std::uint64_t budget = 100000;
    std::optional<unsigned> degree;
    std::string output;
    Format format = Format::Table;
    std::string replay;
    std::optional<unsigned> max_naive_k;
    std::optional<unsigned> max_dp_k;
    // grid only
    std::string target = "Theorem1";
    std::vector<std::size_t> grid_n{1, 2, 3};
    std::vector<unsigned> grid_m{0, 1, 2, 3, 4, 5};
};

/// One summary line, e.g. "Theorem1 n=2 m=4 ring=int exponent=3 trials=50 PASS".
std::string table_row(const Report& r);

/// Full table rendering: the summary row, then witness values and failures.
std::string render_table(const Report& r);

/// Writes the rendering to `out` and, when path is non-empty, the same bytes
/// to that file. Returns false if the file cannot be written.
bool emit_report(const Report& r, Format format, const std::string& path, std::ostream& out);

int exit_code(Verdict v) noexcept;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grassid::cli

#endif
