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

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "taut/algebra.hpp"
#include "taut/errors.hpp"

using namespace taut;

namespace {

bool has_violation(const GentleReport& r, const std::string& axiom) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

// Random gentle presentation: arrows are added only while the degree bounds allow,
// relations only while each arrow keeps at most one zero and one nonzero
// continuation on each side.
Presentation random_gentle(std::mt19937& gen) {
    std::uniform_int_distribution<int> nv_dist(1, 5);
    const std::size_t nv = nv_dist(gen);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Arrow> arrows;
    std::vector<int> out_deg(nv, 0), in_deg(nv, 0);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    const int attempts = std::uniform_int_distribution<int>(0, 2 * static_cast<int>(nv))(gen);
    for (int i = 0; i < attempts; ++i) {
        const auto s = pick(gen), t = pick(gen);
        if (out_deg[s] >= 2 || in_deg[t] >= 2) continue;
        ++out_deg[s];
        ++in_deg[t];
        arrows.push_back({"x" + std::to_string(arrows.size()), s, t});
    }
    const std::size_t na = arrows.size();
    // Pairs (a, b) with target(a) == source(b), in random order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b)
            if (arrows[a].target == arrows[b].source) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), gen);
    std::vector<int> zero_after(na, 0), zero_before(na, 0);
    std::vector<Relation> rels;
    std::bernoulli_distribution coin(0.6);
    for (auto [a, b] : pairs) {
        if (!coin(gen) || zero_after[a] || zero_before[b]) continue;
        zero_after[a] = zero_before[b] = 1;
        rels.push_back({a, b});
    }
    // G2/G3 also bound the nonzero continuations; add relations until they hold.
    Presentation p("random", Quiver(vertices, arrows), rels);
    for (auto [a, b] : pairs) {
        if (check_gentle(p).is_gentle) break;
        if (zero_after[a] || zero_before[b]) continue;
        zero_after[a] = zero_before[b] = 1;
        rels.push_back({a, b});
        p = Presentation("random", Quiver(vertices, arrows), rels);
    }
    return p;
}

} // namespace

TEST_CASE("parse_algebra: smallest inputs") {
    auto a2 = parse_algebra("vertices: 1 2\narrows: a: 1 -> 2\nrelations: (none)\n");
    CHECK(a2.num_vertices() == 2);
    CHECK(a2.num_arrows() == 1);
    CHECK(a2.relations().empty());

    auto loop = parse_algebra("vertices: 1\narrows: a: 1 -> 1\nrelations: a a\n");
    CHECK(loop.num_arrows() == 1);
    REQUIRE(loop.relations().size() == 1);
    CHECK(loop.is_relation(0, 0));
}

TEST_CASE("parse_algebra: errors carry line and column") {
    CHECK_THROWS_AS(parse_algebra("vertices: 1\narrows: a: 1 -> 1\nrelations: (none)\n"), ParseError);
    try {
        parse_algebra("vertices: 1 2\narrows: a: 1 -> 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra("vertices: 1 2\narrows: a: 1 -> 2; b: 1 -> 2\nrelations: a b\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("vertices: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("vertices: 1 2\narrows: a: 1 -> 2; a: 2 -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a c\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra(fixtures::text("malformed")), ParseError);
    CHECK_THROWS_AS(parse_algebra("verts: 1\n"), ParseError);
}

TEST_CASE("format_algebra round-trips every fixture") {
    for (const auto& [name, p] : fixtures::finite_suite()) {
        CAPTURE(name);
        const auto again = parse_algebra(format_algebra(p));
        CHECK(again == p);
        CHECK(again.label() == p.label());
    }
}

TEST_CASE("check_gentle on fixtures") {
    for (const auto& [name, p] : fixtures::finite_suite()) {
        CAPTURE(name);
        CHECK(check_gentle(p).is_gentle);
    }
    CHECK(check_gentle(fixtures::load("kronecker")).is_gentle);
    const auto three = check_gentle(fixtures::load("three_loops"));
    CHECK_FALSE(three.is_gentle);
    CHECK(has_violation(three, "G1"));
}

TEST_CASE("check_gentle detects planted single-axiom violations") {
    // G1: three arrows leaving vertex 1.
    auto g1 = check_gentle(parse_algebra("vertices: 1 2 3 4\narrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4\n"));
    CHECK(has_violation(g1, "G1"));
    CHECK_FALSE(has_violation(g1, "G2"));
    CHECK_FALSE(has_violation(g1, "G3"));

    // G2: a followed by b and c, neither composite zero.
    auto g2 = check_gentle(parse_algebra("vertices: 1 2 3 4\narrows: a: 1 -> 2; b: 2 -> 3; c: 2 -> 4\n"));
    CHECK(has_violation(g2, "G2"));
    CHECK_FALSE(has_violation(g2, "G1"));

    // G2: both composites zero.
    auto g2z = check_gentle(parse_algebra("vertices: 1 2 3 4\narrows: a: 1 -> 2; b: 2 -> 3; c: 2 -> 4\nrelations: a b; a c\n"));
    CHECK(has_violation(g2z, "G2"));

    // G3: b and c both precede a without relations.
    auto g3 = check_gentle(parse_algebra("vertices: 1 2 3 4\narrows: b: 1 -> 3; c: 2 -> 3; a: 3 -> 4\n"));
    CHECK(has_violation(g3, "G3"));
    CHECK_FALSE(has_violation(g3, "G2"));
    CHECK_FALSE(has_violation(g3, "G1"));

    for (const auto& r : {g1, g2, g3}) CHECK_FALSE(r.is_gentle);
}

TEST_CASE("path_basis examples") {
    auto a2 = path_basis(fixtures::load("a2"));
    CHECK(a2.dimension() == 3);
    auto loop = path_basis(fixtures::load("loop"));
    CHECK(loop.dimension() == 2);
    auto a3rel = fixtures::load("a3_rel");
    CHECK(path_basis(a3rel).dimension() == 5);
    CHECK(path_basis(fixtures::load("a3_linear")).dimension() == 6);
    // Ordering: by length, trivial paths first.
    auto b = path_basis(fixtures::load("a3_linear"));
    for (std::size_t i = 1; i < b.paths.size(); ++i) CHECK(b.paths[i - 1].length() <= b.paths[i].length());
    CHECK(format_path(fixtures::load("a3_linear"), b.paths.back()) == "a b");
}

TEST_CASE("path_basis agrees with DFS path counts and is complete") {
    for (const auto& [name, p] : fixtures::finite_suite()) {
        CAPTURE(name);
        const auto basis = path_basis(p);
        std::size_t total = 0;
        for (std::size_t v = 0; v < p.num_vertices(); ++v)
            for (std::size_t w = 0; w < p.num_vertices(); ++w) total += oracle::count_paths(p, v, w);
        CHECK(basis.dimension() == total);
        // Every one-arrow extension of a listed path is listed or hits a relation.
        std::set<std::pair<std::size_t, std::vector<std::size_t>>> listed;
        for (const auto& path : basis.paths) listed.insert({path.source, path.arrows});
        for (const auto& path : basis.paths)
            for (std::size_t a = 0; a < p.num_arrows(); ++a) {
                if (p.quiver().arrow(a).source != path.target) continue;
                auto ext = path.arrows;
                ext.push_back(a);
                const bool zero = !path.arrows.empty() && p.is_relation(path.arrows.back(), a);
                CHECK((zero || listed.count({path.source, ext}) == 1));
            }
    }
}

TEST_CASE("factor_by_idempotent examples") {
    auto a2 = fixtures::load("a2");
    auto f = factor_by_idempotent(a2, {"2"});
    CHECK(f.num_vertices() == 1);
    CHECK(f.num_arrows() == 0);

    auto a3rel = fixtures::load("a3_rel");
    auto g = factor_by_idempotent(a3rel, {"2"});
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_arrows() == 0);
    CHECK(factor_by_idempotent(a3rel, {}) == a3rel);
    CHECK(factor_by_idempotent(a3rel, {"1", "2", "3"}).num_vertices() == 0);
    CHECK_THROWS_AS(factor_by_idempotent(a3rel, {"9"}), AlgebraError);
}

TEST_CASE("factor_by_idempotent preserves gentleness on random presentations") {
    std::mt19937 gen(20261015);
    int checked = 0;
    while (checked < 100) {
        Presentation p = random_gentle(gen);
        if (!check_gentle(p).is_gentle || !p.is_finite_dimensional()) continue;
        std::vector<std::string> subset;
        for (const auto& v : p.quiver().vertex_names())
            if (std::bernoulli_distribution(0.4)(gen)) subset.push_back(v);
        const auto f = factor_by_idempotent(p, subset);
        CAPTURE(format_algebra(p));
        CHECK(check_gentle(f).is_gentle);
        CHECK(f.num_vertices() == p.num_vertices() - subset.size());
        ++checked;
    }
}

TEST_CASE("disjoint_union") {
    auto a1a1 = fixtures::a1_a1();
    CHECK(a1a1.num_vertices() == 2);
    CHECK(a1a1.num_arrows() == 0);
    CHECK(a1a1.quiver().num_components() == 2);

    auto p = fixtures::a2_loop();
    CHECK(p.num_vertices() == 3);
    CHECK(p.num_arrows() == 2);
    CHECK(p.relations().size() == 1);
    CHECK(p.quiver().num_components() ==
          fixtures::load("a2").quiver().num_components() + fixtures::load("loop").quiver().num_components());
    CHECK(check_gentle(p).is_gentle);
}
