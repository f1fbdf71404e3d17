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

#include "grassid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "grassid/harness.hpp"

namespace grassid::cli {

namespace {

struct IoError {
    std::string message;
};

// Subcommand name and the campaign target it runs.
const std::vector<std::pair<std::string, Target>> kCommands{
    {"ch-verify", Target::Theorem1},
    {"ch-sharp", Target::CHSharpness},
    {"lemma2", Target::Lemma2},
    {"young", Target::YoungLemma},
    {"capelli-verify", Target::CapelliBound},
    {"capelli-sharp", Target::CapelliSharpness},
    {"standard-verify", Target::StandardCorollary},
    {"standard-sharp", Target::StandardSharpness},
    {"al-check", Target::AmitsurLevitzki},
    {"open-search", Target::OpenQuestion},
};

std::string degree_fields(const Campaign& c) {
    const Degrees d = degrees(c.n, c.m);
    switch (c.target) {
    case Target::Theorem1:
    case Target::CHSharpness: return "exponent=" + std::to_string(d.ch_exponent);
    case Target::CapelliBound: return "x_degree=" + std::to_string(d.capelli);
    case Target::CapelliSharpness: return "x_degree=" + std::to_string(d.capelli - 1);
    case Target::StandardCorollary:
    case Target::StandardProduct:
    case Target::Filtration2:
        return "corollary_degree=" + std::to_string(d.standard_corollary) +
               " product_degree=" + std::to_string(d.standard_product);
    case Target::StandardSharpness: return "degree=" + std::to_string(d.standard_sharp);
    case Target::OpenQuestion:
        return "degree=" + std::to_string(c.degree_override.value_or(d.open_question));
    case Target::AmitsurLevitzki: return "degree=" + std::to_string(2 * c.n);
    case Target::Lemma2:
    case Target::YoungLemma: return "";
    }
    return "";
}

std::string detail_text(const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Guards guards_from(const CliConfig& cfg) {
    Guards g;
    if (cfg.max_naive_k) g.max_naive_k = *cfg.max_naive_k;
    if (cfg.max_dp_k) {
        g.max_standard_dp_k = *cfg.max_dp_k;
        g.max_capelli_dp_k = *cfg.max_dp_k;
    }
    return g;
}

Campaign campaign_from(const CliConfig& cfg, Target target, std::size_t n, unsigned m) {
    Campaign c;
    c.target = target;
    c.n = n;
    c.m = m;
    c.ring = RingSpec::parse(cfg.ring);
    c.trials = cfg.trials;
    c.seed = cfg.seed;
    c.budget = target == Target::OpenQuestion ? cfg.budget : 0;
    c.guards = guards_from(cfg);
    if (target == Target::OpenQuestion) c.degree_override = cfg.degree;
    return c;
}

// Degree that a grid cell would evaluate through a guarded evaluator, if any.
std::optional<std::pair<unsigned, unsigned>> guarded_degree(const Campaign& c) {
    const Degrees d = degrees(c.n, c.m);
    switch (c.target) {
    case Target::CapelliBound: return std::pair{d.capelli, c.guards.max_capelli_dp_k};
    case Target::CapelliSharpness: return std::pair{d.capelli - 1, c.guards.max_capelli_dp_k};
    case Target::StandardCorollary:
    case Target::StandardProduct:
    case Target::Filtration2: return std::pair{d.standard_corollary, c.guards.max_standard_dp_k};
    case Target::StandardSharpness: return std::pair{d.standard_sharp, c.guards.max_standard_dp_k};
    case Target::OpenQuestion: return std::pair{d.open_question, c.guards.max_standard_dp_k};
    default: return std::nullopt;
    }
}

std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

void write_all(const std::string& text, const std::string& path, std::ostream& out) {
    out << text;
    out.flush();
    if (path.empty()) return;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError{"cannot open " + path + " for writing"};
    file << text;
    file.close();
    if (!file) throw IoError{"cannot write " + path};
}

int worst(int a, int b) {
    auto rank = [](int code) { return code == kExitFail ? 3 : code == kExitCounterexample ? 2 : code == kExitOk ? 0 : 1; };
    return rank(a) >= rank(b) ? a : b;
}

int run_grid(const CliConfig& cfg, std::ostream& out) {
    const Target target = parse_target(cfg.target);
    std::vector<Report> reports;
    std::string table;
    int code = kExitOk;
    // Defaults keep the grid inside desk-scale k unless overridden.
    CliConfig local = cfg;
    if (!local.max_dp_k) local.max_dp_k = 12;
    for (std::size_t n : cfg.grid_n) {
        for (unsigned m : cfg.grid_m) {
            Campaign c = campaign_from(local, target, n, m);
            const auto guarded = guarded_degree(c);
            if (guarded && guarded->first > guarded->second) {
                table += std::string(target_name(target)) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " ring=" + c.ring.to_string() + " " + degree_fields(c) + " SKIPPED (degree above guard)\n";
                continue;
            }
            if (target == Target::AmitsurLevitzki && n > 3) continue;
            Report r;
            try {
                r = run_campaign(c);
            } catch (const Error& e) {
                table += std::string(target_name(target)) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " ring=" + c.ring.to_string() + " SKIPPED (" + errc_name(e.code()).data() + ")\n";
                continue;
            }
            code = worst(code, exit_code(r.verdict));
            table += table_row(r) + "\n";
            reports.push_back(std::move(r));
        }
    }
    if (cfg.format == Format::Json) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& r : reports) list.push_back(r.to_json());
        write_all(list.dump(2) + "\n", cfg.output, out);
    } else {
        write_all(table, cfg.output, out);
    }
    return code;
}

}  // namespace

std::string table_row(const Report& r) {
    const Campaign& c = r.campaign;
    std::string row = std::string(target_name(c.target)) + " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) +
                      " ring=" + c.ring.to_string();
    const std::string degrees_text = degree_fields(c);
    if (!degrees_text.empty()) row += " " + degrees_text;
    row += " trials=" + std::to_string(r.trials) + " " + std::string(verdict_name(r.verdict));
    return row;
}

std::string render_table(const Report& r) {
    std::string text = table_row(r) + "\n";
    static const char* const shown[] = {"value", "expected", "e11_entry", "staircase_value", "g_1(A)[1,1]",
                                        "coverage", "exhaustive", "counterexample_atoms", "failure"};
    for (const auto& d : r.details)
        if (std::find(std::begin(shown), std::end(shown), d.name) != std::end(shown))
            text += "  " + d.name + ": " + detail_text(d.value) + "\n";
    return text;
}

bool emit_report(const Report& r, Format format, const std::string& path, std::ostream& out) {
    try {
        write_all(format == Format::Json ? render_json(r) : render_table(r), path, out);
        return true;
    } catch (const IoError&) {
        return false;
    }
}

int exit_code(Verdict v) noexcept {
    switch (v) {
    case Verdict::Pass:
    case Verdict::NoCounterexampleInBudget: return kExitOk;
    case Verdict::Fail: return kExitFail;
    case Verdict::CounterexampleFound: return kExitCounterexample;
    }
    return kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Polynomial identities of matrices over Grassmann algebras"};
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"table", Format::Table}};
    app.add_option("--replay", cfg.replay, "Re-verify a reproducer (or a report containing one) from a JSON file");
    app.add_option("--format", cfg.format, "json or table (for --replay)")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--output", cfg.output, "Also write the replay output to this file");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-n", cfg.n, "Matrix size")->check(CLI::Range(1, 16));
        sub->add_option("-m", cfg.m, "Number of Grassmann generators")->check(CLI::Range(0, 62));
        sub->add_option("--ring", cfg.ring, "int, rat or zmod:<p>");
        sub->add_option("--seed", cfg.seed, "Campaign seed");
        sub->add_option("--trials", cfg.trials, "Random trials");
        sub->add_option("--budget", cfg.budget, "Tuple budget for the open-question search");
        sub->add_option("--format", cfg.format, "json or table")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--output", cfg.output, "Also write the output to this file");
        sub->add_option("--max-naive-k", cfg.max_naive_k, "Largest degree for permutation-sum cross-checks");
        sub->add_option("--max-dp-k", cfg.max_dp_k, "Largest degree for the subset recurrences");
    };
    for (const auto& [name, target] : kCommands) {
        auto* sub = app.add_subcommand(name, std::string("Run the ") + std::string(target_name(target)) + " campaign");
        add_common(sub);
        if (target == Target::OpenQuestion)
            sub->add_option("--degree", cfg.degree, "Search this degree instead of 2(n + floor(m/2))");
    }
    auto* grid = app.add_subcommand("grid", "Run one campaign target over an (n, m) grid");
    add_common(grid);
    grid->add_option("--target", cfg.target, "Campaign target, e.g. Theorem1 or CapelliBound");
    grid->add_option("--ns", cfg.grid_n, "Matrix sizes")->delimiter(',');
    grid->add_option("--ms", cfg.grid_m, "Generator counts")->delimiter(',');
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (!cfg.replay.empty()) {
            std::ifstream in(cfg.replay);
            if (!in) {
                err << "error: cannot read " << cfg.replay << "\n";
                return kExitIo;
            }
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                err << "error: " << cfg.replay << ": " << e.what() << "\n";
                return kExitUsage;
            }
            if (doc.contains("reproducer")) doc = doc["reproducer"];
            if (doc.is_null()) {
                err << "error: the report carries no reproducer\n";
                return kExitUsage;
            }
            const Report r = replay(doc);
            if (!emit_report(r, cfg.format, cfg.output, out)) {
                err << "error: cannot write " << cfg.output << "\n";
                return kExitIo;
            }
            return exit_code(r.verdict);
        }
        if (app.get_subcommands().empty()) {
            err << app.help();
            return kExitUsage;
        }
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (cfg.subcommand == "grid") return run_grid(cfg, out);

        const auto it = std::find_if(kCommands.begin(), kCommands.end(),
                                     [&](const auto& entry) { return entry.first == cfg.subcommand; });
        const Report r = run_campaign(campaign_from(cfg, it->second, cfg.n, cfg.m));
        if (!emit_report(r, cfg.format, cfg.output, out)) {
            err << "error: cannot write " << cfg.output << "\n";
            return kExitIo;
        }
        return exit_code(r.verdict);
    } catch (const IoError& e) {
        err << "error: " << e.message << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace grassid::cli
