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

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "taut/reachability.hpp"
#include "taut/reduction.hpp"

using namespace taut;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::vector<std::string> kFiniteFiles = {"a1",     "loop",     "a2",     "a3_linear", "a3_sink",
                                               "a3_source", "a3_rel", "cycle3", "a1_a1",     "a2_loop"};

int count_lines_with(const std::string& text, const std::string& needle) {
    int n = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
    return n;
}

} // namespace

TEST_CASE("product fixture files match disjoint unions") {
    CHECK(find_isomorphism(fixtures::load("a1_a1"), fixtures::a1_a1()).has_value());
    CHECK(find_isomorphism(fixtures::load("a2_loop"), fixtures::a2_loop()).has_value());
}

TEST_CASE("validate exit codes") {
    auto a2 = run({"validate", fixtures::path("a2")});
    CHECK(a2.code == 0);
    CHECK(a2.out == "gentle: yes, dim A = 3\n");
    auto loops = run({"validate", fixtures::path("three_loops")});
    CHECK(loops.code == 1);
    CHECK(loops.out.find("G1: vertex 1") != std::string::npos);
    CHECK(run({"validate", fixtures::path("malformed")}).code == 2);
    CHECK(run({"validate", fixtures::path("no_such_file")}).code == 2);
    for (const auto& n : kFiniteFiles) CHECK(run({"validate", fixtures::path(n)}).code == 0);
    CHECK(run({"validate", fixtures::path("kronecker")}).code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"graph", fixtures::path("a2"), "--nope"}).code == 2);
    CHECK(run({"graph", fixtures::path("a2"), "--max-letters", "0"}).code == 2);
    CHECK(run({"graph", fixtures::path("a2"), "--format", "svg"}).code == 2);
    CHECK(run({"check", fixtures::path("a2"), "--property", "pretty"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("graph export") {
    auto a1 = run({"graph", fixtures::path("a1")});
    CHECK(a1.code == 0);
    CHECK(a1.out.find("// status: complete") != std::string::npos);
    CHECK(count_lines_with(a1.out, "[label=") == 3);
    CHECK(count_lines_with(a1.out, " -- ") == 1);
    auto a2 = run({"graph", fixtures::path("a2")});
    CHECK(count_lines_with(a2.out, " -- ") == 5);
    CHECK(count_lines_with(a2.out, "[label=") == 10);
    auto kr = run({"graph", fixtures::path("kronecker"), "--max-letters", "4"});
    CHECK(kr.out.find("// status: truncated@4") != std::string::npos);
    CHECK(kr.out.find("complete") == std::string::npos);

    auto jl = run({"graph", fixtures::path("a3_linear"), "--format", "jsonl"});
    std::istringstream in(jl.out);
    std::string first;
    std::getline(in, first);
    auto head = nlohmann::json::parse(first);
    CHECK(head["vertices"] == 14);
    CHECK(head["edges"] == 21);
    CHECK(head["status"] == "complete");
    std::size_t records = 1;
    for (std::string line; std::getline(in, line); ++records) CHECK(nlohmann::json::accept(line));
    CHECK(records == 1 + 14 + 21);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
    for (const auto& n : kFiniteFiles) {
        CAPTURE(n);
        for (const char* fmt : {"dot", "jsonl", "text"}) {
            auto a = run({"graph", fixtures::path(n), "--format", fmt});
            auto b = run({"graph", fixtures::path(n), "--format", fmt, "--jobs", "4"});
            auto c = run({"graph", fixtures::path(n), "--format", fmt});
            CHECK(a.out == b.out);
            CHECK(a.out == c.out);
        }
        auto x = run({"check", fixtures::path(n), "--property", "all", "--format", "jsonl"});
        auto y = run({"check", fixtures::path(n), "--property", "all", "--format", "jsonl", "--jobs", "3"});
        CHECK(x.out == y.out);
        CHECK(x.code == y.code);
    }
}

TEST_CASE("reduce examples and errors") {
    auto zero = run({"reduce", fixtures::path("a2")});
    CHECK(zero.code == 0);
    CHECK(find_isomorphism(parse_algebra(zero.out), fixtures::load("a2")).has_value());
    auto s1 = run({"reduce", fixtures::path("a2"), "--u", "module S1"});
    CHECK(s1.code == 0);
    CHECK(s1.out.find("# co-rank: 1") != std::string::npos);
    CHECK(parse_algebra(s1.out).num_vertices() == 1);
    auto bad = run({"reduce", fixtures::path("a2"), "--u", "module S1, module S2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("Hom(S2, tau S1)") != std::string::npos);
    auto vanish = run({"reduce", fixtures::path("a2"), "--u", "module a, proj 2"});
    CHECK(vanish.code == 1);
    CHECK(vanish.err.find("Hom(P_2, a)") != std::string::npos);
    CHECK(run({"reduce", fixtures::path("a2"), "--u", "module q"}).code == 2);
}

TEST_CASE("reduce output round-trips through validate") {
    for (const auto& n : kFiniteFiles) {
        auto alg = fixtures::algebra(n);
        CandidateSet cs(alg, 8);
        for (const auto& u : all_tau_rigid_pairs(cs)) {
            if (u.rank() == alg->num_vertices()) continue;
            std::string spec;
            for (const auto& s : u.summands()) spec += (spec.empty() ? "" : ", ") + format_summand(alg->presentation(), s);
            auto label = n + " at " + spec;
            CAPTURE(label);
            auto r = run({"reduce", fixtures::path(n), "--u", spec});
            REQUIRE(r.code == 0);
            const Presentation back = parse_algebra(r.out);
            CHECK(check_gentle(back).is_gentle);
            CHECK(back == reduce(cs, u).reduced->presentation());
        }
    }
}

TEST_CASE("check exit codes follow the verdicts") {
    CHECK(run({"check", fixtures::path("a2"), "--property", "all"}).code == 0);
    CHECK(run({"check", fixtures::path("loop"), "--property", "tau-reachable"}).code == 1);
    CHECK(run({"check", fixtures::path("loop"), "--property", "all"}).code == 1);
    CHECK(run({"check", fixtures::path("kronecker"), "--property", "connected", "--max-letters", "4"}).code == 3);
    CHECK(run({"check", fixtures::path("kronecker"), "--property", "all", "--max-letters", "4"}).code == 3);
    CHECK(run({"check", fixtures::path("malformed"), "--property", "all"}).code == 2);
    const std::vector<std::string> props = {"connected", "tau-reachable", "totally-tau-reachable", "reachable-in-face"};
    for (const auto& n : kFiniteFiles) {
        auto alg = fixtures::algebra(n);
        CandidateSet cs(alg, 8);
        auto g = exchange_graph(cs);
        const std::vector<Verdict> verdicts = {graph_connected(g).verdict, has_tau_reachable_property(cs, &g).verdict,
                                               totally_tau_reachable(cs, g).verdict, reachable_in_face(cs, g).verdict};
        for (std::size_t i = 0; i < props.size(); ++i) {
            auto label = n + " " + props[i];
            CAPTURE(label);
            const int expected = verdicts[i] == Verdict::holds ? 0 : verdicts[i] == Verdict::fails ? 1 : 3;
            CHECK(run({"check", fixtures::path(n), "--property", props[i]}).code == expected);
        }
    }
}
