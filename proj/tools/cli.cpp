/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "taut/errors.hpp"
#include "taut/export.hpp"
#include "taut/reachability.hpp"
#include "taut/reduction.hpp"

namespace taut::cli {
namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kBadInput = 2;
constexpr int kInconclusive = 3;

struct Config {
    std::string file;
    std::size_t max_letters = 8;
    std::size_t max_vertices = 10000;
    std::string format;
    std::size_t jobs = 1;
    std::string u;
    std::string property;
};

// Thrown for unreadable or malformed input; carries the message for stderr.
struct InputError {
    std::string message;
};

Presentation load(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError{"cannot read " + file};
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_algebra(ss.str());
    } catch (const ParseError& e) {
        throw InputError{file + ": " + e.what()};
    }
}

AlgebraPtr load_algebra(const std::string& file) {
    Presentation p = load(file);
    try {
        return make_algebra(std::move(p));
    } catch (const AlgebraError& e) {
        throw InputError{file + ": " + e.what()};
    }
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::holds: return kHolds;
    case Verdict::fails: return kFails;
    case Verdict::inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_validate(const Config& c, std::ostream& out) {
    const Presentation p = load(c.file);
    const GentleReport report = check_gentle(p);
    std::string dim;
    if (p.is_finite_dimensional()) dim = ", dim A = " + std::to_string(path_basis(p).dimension());
    out << "gentle: " << (report.is_gentle ? "yes" : "no") << dim << "\n";
    for (const auto& v : report.violations) {
        out << v.axiom << ": " << v.message << " (witness:";
        for (const auto& w : v.witnesses) out << ' ' << w;
        out << ")\n";
    }
    return report.is_gentle ? kHolds : kFails;
}

int cmd_graph(const Config& c, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(c.file);
    const CandidateSet cs(alg, c.max_letters, c.jobs);
    const ExchangeGraph g = exchange_graph(cs, c.max_vertices);
    if (c.format == "dot") out << graph_to_dot(g);
    else if (c.format == "jsonl") out << graph_to_jsonl(g);
    else out << graph_to_text(g);
    return kHolds;
}

// The first Hom space obstructing tau-rigidity of u, if any.
std::optional<std::string> rigidity_witness(const AlgebraPtr& alg, const TauRigidPair& u) {
    const Presentation& p = alg->presentation();
    std::vector<Representation> mods, taus;
    for (const auto& w : u.modules()) {
        mods.push_back(string_module(alg, w));
        taus.push_back(ar_translate(mods.back()));
    }
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j)
            if (auto d = hom_dimension(mods[i], taus[j]); d > 0)
                return "Hom(" + format_word(p, u.modules()[i]) + ", tau " + format_word(p, u.modules()[j]) +
                       ") has dimension " + std::to_string(d);
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (auto v : u.supports())
            if (mods[i].dim(v) > 0)
                return "Hom(P_" + p.quiver().vertex_name(v) + ", " + format_word(p, u.modules()[i]) +
                       ") has dimension " + std::to_string(mods[i].dim(v));
    return std::nullopt;
}

int cmd_reduce(const Config& c, std::ostream& out, std::ostream& err) {
    const AlgebraPtr alg = load_algebra(c.file);
    const Presentation& p = alg->presentation();
    TauRigidPair u;
    try {
        u = parse_pair(p, c.u);
    } catch (const AlgebraError& e) {
        throw InputError{std::string("--u: ") + e.what()};
    }
    if (auto w = rigidity_witness(alg, u)) {
        err << "taut: " << format_pair(p, u) << " is not a tau-rigid pair: " << *w << "\n";
        return kFails;
    }
    const CandidateSet cs(alg, c.max_letters, c.jobs);
    ReductionData rd;
    try {
        rd = reduce(cs, u);
    } catch (const BoundExhausted& e) {
        err << "taut: " << e.what() << "\n";
        return kInconclusive;
    } catch (const PreconditionError& e) {
        throw InputError{std::string("--u: ") + e.what()};
    }
    out << "# reduction of " << p.label() << " at " << format_pair(p, u) << "\n";
    out << "# co-rank: " << rd.co_rank() << "\n";
    for (std::size_t i = 0; i < rd.vertex_words.size(); ++i)
        out << "# vertex " << rd.reduced->quiver().vertex_name(i) << ": module " << format_word(p, rd.vertex_words[i])
            << "\n";
    out << format_algebra(rd.reduced->presentation());
    return kHolds;
}

int cmd_check(const Config& c, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(c.file);
    const CandidateSet cs(alg, c.max_letters, c.jobs);
    const ExchangeGraph g = exchange_graph(cs, c.max_vertices);
    std::vector<ReachabilityReport> reports;
    const bool all = c.property == "all";
    if (all || c.property == "connected") reports.push_back(graph_connected(g));
    if (all || c.property == "tau-reachable") reports.push_back(has_tau_reachable_property(cs, &g));
    if (all || c.property == "totally-tau-reachable") reports.push_back(totally_tau_reachable(cs, g, c.jobs));
    if (all || c.property == "reachable-in-face") reports.push_back(reachable_in_face(cs, g));
    Verdict overall = Verdict::holds;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        overall = conjunction(overall, reports[i].verdict);
        if (c.format == "jsonl") {
            out << report_to_json(reports[i]) << "\n";
        } else {
            if (i) out << "\n";
            out << format_report(reports[i]);
        }
    }
    if (all && c.format != "jsonl") out << "\noverall: " << to_string(overall) << "\n";
    return exit_code(overall);
}

void add_bounds(CLI::App* sub, Config& c) {
    sub->add_option("--max-letters", c.max_letters, "Word-length bound for string modules")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-vertices", c.max_vertices, "Vertex budget for the exchange graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"tau-tilting combinatorics of bound quiver algebras", "taut"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "Check the gentle axioms and finite dimension");
    validate->add_option("file", c.file, "Algebra file")->required();

    auto* graph = app.add_subcommand("graph", "Export the support tau-tilting exchange graph");
    graph->add_option("file", c.file, "Algebra file")->required();
    add_bounds(graph, c);
    c.format = "dot";
    graph->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"dot", "jsonl", "text"}))
        ->capture_default_str();

    auto* reduce_cmd = app.add_subcommand("reduce", "Present the tau-tilting reduction at a tau-rigid pair");
    reduce_cmd->add_option("file", c.file, "Algebra file")->required();
    reduce_cmd->add_option("--u", c.u, "Comma-separated 'module <word>' and 'proj <vertex>' items");
    add_bounds(reduce_cmd, c);

    auto* check = app.add_subcommand("check", "Decide a reachability property");
    check->add_option("file", c.file, "Algebra file")->required();
    check->add_option("--property", c.property, "Property to decide")
        ->required()
        ->check(CLI::IsMember({"connected", "tau-reachable", "totally-tau-reachable", "reachable-in-face", "all"}));
    add_bounds(check, c);
    check->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "taut: " << e.what() << "\n";
        return kBadInput;
    }
    if (check->parsed() && c.format == "dot") c.format = "text";

    try {
        if (validate->parsed()) return cmd_validate(c, out);
        if (graph->parsed()) return cmd_graph(c, out);
        if (reduce_cmd->parsed()) return cmd_reduce(c, out, err);
        return cmd_check(c, out);
    } catch (const InputError& e) {
        err << "taut: " << e.message << "\n";
        return kBadInput;
    }
}

} // namespace taut::cli
