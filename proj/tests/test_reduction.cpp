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
#include <functional>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "taut/errors.hpp"
#include "taut/reduction.hpp"

using namespace taut;

namespace {

TauRigidPair pair(const AlgebraPtr& alg, const std::string& text) { return parse_pair(alg->presentation(), text); }

Vector unit(std::size_t n, std::size_t k) {
    Vector v(n, Rational(0));
    v[k] = 1;
    return v;
}

// A table from a multiplication rule on basis elements: rule(k, l) lists the basis
// elements summing to b_k b_l.
AssociativeAlgebraTable monomial_table(std::vector<std::string> vertices, std::vector<std::string> basis,
                                       std::vector<std::pair<std::size_t, std::size_t>> blocks,
                                       const std::function<std::vector<std::size_t>(std::size_t, std::size_t)>& rule) {
    AssociativeAlgebraTable t;
    t.vertex_labels = std::move(vertices);
    t.basis_labels = std::move(basis);
    t.blocks = std::move(blocks);
    const std::size_t d = t.basis_labels.size();
    t.products.assign(d, std::vector<Vector>(d, Vector(d, Rational(0))));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
            for (auto m : rule(k, l)) t.products[k][l][m] += 1;
    for (std::size_t i = 0; i < t.vertex_labels.size(); ++i) t.idempotents.push_back(unit(d, i));
    return t;
}

std::vector<Representation> projectives(const AlgebraPtr& alg) {
    std::vector<Representation> out;
    for (VertexId v = 0; v < alg->num_vertices(); ++v) out.push_back(projective(alg, v));
    return out;
}

std::vector<std::string> vertex_labels(const AlgebraPtr& alg) { return alg->quiver().vertex_names(); }

// The summands common to every pair in the list.
TauRigidPair common_part(const std::vector<TauRigidPair>& pairs) {
    std::vector<Summand> out;
    for (const auto& s : pairs.front().summands()) {
        bool everywhere = true;
        for (const auto& p : pairs) everywhere = everywhere && p.contains(s);
        if (everywhere) out.push_back(s);
    }
    return TauRigidPair::from_summands(out);
}

} // namespace

TEST_CASE("endomorphism tables of projective generators recover the algebra") {
    for (auto& [name, pres] : fixtures::finite_suite()) {
        CAPTURE(name);
        auto alg = make_algebra(pres);
        auto t = endomorphism_algebra(projectives(alg), vertex_labels(alg));
        CHECK(t.dimension() == alg->basis().dimension());
        CHECK(t.is_associative());
        CHECK(t.has_valid_idempotents());
        auto bq = present_as_bound_quiver(t);
        auto iso = find_isomorphism(bq.presentation, pres);
        REQUIRE(iso.has_value());
        // Vertex i of the table is P_i, so the isomorphism is the identity on vertices.
        for (VertexId v = 0; v < pres.num_vertices(); ++v) CHECK(iso->vertex_map[v] == v);
    }
}

TEST_CASE("presenting small tables") {
    // k: one vertex, no arrows.
    auto k = monomial_table({"1"}, {"e"}, {{0, 0}}, [](std::size_t, std::size_t) { return std::vector<std::size_t>{0}; });
    auto bq = present_as_bound_quiver(k);
    CHECK(bq.presentation.num_vertices() == 1);
    CHECK(bq.presentation.num_arrows() == 0);

    // k[x]/x^2 is the loop algebra.
    auto dual = monomial_table({"1"}, {"e", "x"}, {{0, 0}, {0, 0}}, [](std::size_t a, std::size_t b) {
        if (a + b >= 2) return std::vector<std::size_t>{};
        return std::vector<std::size_t>{a + b};
    });
    auto loop = present_as_bound_quiver(dual);
    CHECK(find_isomorphism(loop.presentation, fixtures::load("loop")).has_value());

    // k[x]/x^3 needs a relation of length three.
    auto cube = monomial_table({"1"}, {"e", "x", "x2"}, {{0, 0}, {0, 0}, {0, 0}}, [](std::size_t a, std::size_t b) {
        if (a + b >= 3) return std::vector<std::size_t>{};
        return std::vector<std::size_t>{a + b};
    });
    CHECK_THROWS_AS(present_as_bound_quiver(cube), AlgebraError);

    // The commutative square ab = cd: monomial relations cannot present it.
    // Basis: e1 e2 e3 e4 a b c d p, a: 1->2, b: 2->4, c: 1->3, d: 3->4, p = ab = cd.
    std::vector<std::pair<std::size_t, std::size_t>> blocks = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1},
                                                               {1, 3}, {0, 2}, {2, 3}, {0, 3}};
    auto square = monomial_table({"1", "2", "3", "4"}, {"e1", "e2", "e3", "e4", "a", "b", "c", "d", "p"}, blocks,
                                 [&](std::size_t x, std::size_t y) {
                                     if (blocks[x].second != blocks[y].first) return std::vector<std::size_t>{};
                                     if (x < 4) return std::vector<std::size_t>{y};
                                     if (y < 4) return std::vector<std::size_t>{x};
                                     if ((x == 4 && y == 5) || (x == 6 && y == 7)) return std::vector<std::size_t>{8};
                                     return std::vector<std::size_t>{};
                                 });
    REQUIRE(square.is_associative());
    REQUIRE(square.has_valid_idempotents());
    CHECK_THROWS_AS(present_as_bound_quiver(square), AlgebraError);

    // 2x2 matrices over one idempotent: not basic.
    AssociativeAlgebraTable mat;
    mat.vertex_labels = {"1"};
    mat.basis_labels = {"E11", "E12", "E21", "E22"};
    mat.blocks.assign(4, {0, 0});
    mat.products.assign(4, std::vector<Vector>(4, Vector(4, Rational(0))));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l) mat.products[2 * i + j][2 * j + l][2 * i + l] = 1;
    mat.idempotents = {Vector{1, 0, 0, 1}};
    REQUIRE(mat.is_associative());
    CHECK_THROWS_AS(present_as_bound_quiver(mat), AlgebraError);
}

TEST_CASE("quotient by an idempotent") {
    // A2 modulo e_2 is k.
    auto a2 = fixtures::algebra("a2");
    auto t = endomorphism_algebra(projectives(a2), vertex_labels(a2));
    auto q = quotient_by_idempotents(t, {1});
    CHECK(q.table.dimension() == 1);
    CHECK(q.kept_vertices == std::vector<std::size_t>{0});
    CHECK(q.table.has_valid_idempotents());
    // A3 with ab = 0 modulo e_2 is two isolated vertices.
    auto rel = fixtures::algebra("a3_rel");
    auto q2 = quotient_by_idempotents(endomorphism_algebra(projectives(rel), vertex_labels(rel)), {1});
    CHECK(q2.table.dimension() == 2);
    CHECK(present_as_bound_quiver(q2.table).presentation.num_arrows() == 0);
    // A3 linear modulo e_2 loses the path ab, which factors through e_2.
    auto lin = fixtures::algebra("a3_linear");
    auto q3 = quotient_by_idempotents(endomorphism_algebra(projectives(lin), vertex_labels(lin)), {1});
    CHECK(q3.table.dimension() == 2);
    // Modulo e_3 it keeps a.
    auto q4 = quotient_by_idempotents(endomorphism_algebra(projectives(lin), vertex_labels(lin)), {2});
    CHECK(present_as_bound_quiver(q4.table).presentation.num_arrows() == 1);
}

TEST_CASE("reduction examples over A2") {
    auto a2 = fixtures::algebra("a2");
    CandidateSet cs(a2, 8);
    auto at_s1 = reduce(cs, pair(a2, "module S1"));
    CHECK(at_s1.co_rank() == 1);
    CHECK(at_s1.reduced->num_vertices() == 1);
    CHECK(at_s1.reduced->num_arrows() == 0);
    CHECK(format_pair(a2->presentation(), at_s1.bongartz) == "[S1|a] / supp{}");
    REQUIRE(at_s1.vertex_words.size() == 1);
    CHECK(format_word(a2->presentation(), at_s1.vertex_words[0]) == "a");

    auto at_p2 = reduce(cs, pair(a2, "proj 2"));
    CHECK(at_p2.reduced->num_vertices() == 1);
    CHECK(find_isomorphism(at_p2.reduced->presentation(), fixtures::load("a1")).has_value());

    auto at_zero = reduce(cs, TauRigidPair());
    CHECK(find_isomorphism(at_zero.reduced->presentation(), a2->presentation()).has_value());

    CHECK_THROWS_AS(reduce(cs, pair(a2, "module S1, module S2")), PreconditionError);
}

TEST_CASE("wide subcategory and the reduction functor over A2") {
    auto a2 = fixtures::algebra("a2");
    CandidateSet cs(a2, 8);
    auto rd = reduce(cs, pair(a2, "module S1"));
    auto word = [&](const char* w) { return string_module(a2, parse_word(a2->presentation(), w)); };
    // tau S1 = S2, so W = add P_1.
    CHECK(wide_membership(word("a"), rd));
    CHECK_FALSE(wide_membership(word("S1"), rd));
    CHECK_FALSE(wide_membership(word("S2"), rd));
    CHECK(wide_membership(Representation::zero(a2), rd));
    auto image = reduction_functor(word("a"), rd);
    CHECK(image.dims() == std::vector<std::size_t>{1});
    auto doubled = reduction_functor(direct_sum(word("a"), word("a")), rd);
    CHECK(doubled.dims() == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(reduction_functor(word("S2"), rd), PreconditionError);

    auto at_p2 = reduce(cs, pair(a2, "proj 2"));
    CHECK(wide_membership(word("S1"), at_p2));
    CHECK_FALSE(wide_membership(word("a"), at_p2));
    CHECK(reduction_functor(word("S1"), at_p2).dims() == std::vector<std::size_t>{1});
}

TEST_CASE("reduction at the zero pair is Hom(A, -)") {
    for (auto& [name, pres] : fixtures::finite_suite()) {
        CAPTURE(name);
        auto alg = make_algebra(pres);
        CandidateSet cs(alg, 8);
        auto rd = reduce(cs, TauRigidPair());
        REQUIRE(rd.vertex_words.size() == alg->num_vertices());
        // Reduced vertex i is P_v for the vertex v at the top of the word.
        std::vector<VertexId> top;
        for (const auto& m : rd.vertex_modules) {
            auto t = top_dims(m);
            top.push_back(static_cast<VertexId>(std::find(t.begin(), t.end(), 1) - t.begin()));
        }
        for (const auto& w : enumerate_strings(pres, 8)) {
            auto x = string_module(alg, w);
            auto fx = reduction_functor(x, rd);
            for (std::size_t i = 0; i < top.size(); ++i) CHECK(fx.dim(i) == x.dim(top[i]));
        }
    }
}

TEST_CASE("reductions of finite fixtures: co-rank, gentleness, faces") {
    for (auto& [name, pres] : fixtures::finite_suite()) {
        CAPTURE(name);
        auto alg = make_algebra(pres);
        CandidateSet cs(alg, 8);
        auto g = exchange_graph(cs);
        REQUIRE(g.complete);
        for (const auto& u : all_tau_rigid_pairs(cs)) {
            if (u.rank() == alg->num_vertices()) continue;
            auto label = format_pair(pres, u);
            CAPTURE(label);
            auto rd = reduce(cs, u);
            CHECK(rd.reduced->num_vertices() == rd.co_rank());
            CHECK(check_gentle(rd.reduced->presentation()).is_gentle);

            CandidateSet rcs(rd.reduced, 8);
            auto rg = exchange_graph(rcs);
            REQUIRE(rg.complete);
            auto f = face(g, u);
            REQUIRE(f.vertices.size() == rg.vertices.size());
            std::vector<std::size_t> image;
            for (const auto& p : f.vertices) image.push_back(*rg.index_of(transport_pair(cs, rd, rcs, p)));
            CHECK(std::set<std::size_t>(image.begin(), image.end()).size() == image.size());
            std::set<std::pair<std::size_t, std::size_t>> reduced_edges;
            for (const auto& e : rg.edges) reduced_edges.insert({e.from, e.to});
            CHECK(f.edges.size() == rg.edges.size());
            for (const auto& e : f.edges)
                CHECK(reduced_edges.count(std::minmax(image[e.from], image[e.to])) == 1);
            for (std::size_t x = 0; x < f.vertices.size(); ++x)
                for (std::size_t y = 0; y < f.vertices.size(); ++y)
                    CHECK(fac_leq(alg, f.vertices[x], f.vertices[y]) ==
                          fac_leq(rd.reduced, rg.vertices[image[x]], rg.vertices[image[y]]));
            // Bongartz goes to the top (B, 0), co-Bongartz to the bottom (0, B).
            const auto top = *rg.index_of(bongartz_completion(rcs, TauRigidPair()));
            const auto bottom = *rg.index_of(co_bongartz_completion(rcs, TauRigidPair()));
            CHECK(rg.vertices[top].supports().empty());
            CHECK(rg.vertices[bottom].modules().empty());
            CHECK(image[*f.index_of(rd.bongartz)] == top);
            CHECK(image[*f.index_of(co_bongartz_completion(cs, u))] == bottom);
        }
    }
}

TEST_CASE("iterated reduction agrees with a single reduction") {
    for (auto& [name, pres] : fixtures::finite_suite()) {
        CAPTURE(name);
        auto alg = make_algebra(pres);
        CandidateSet cs(alg, 8);
        auto pairs = all_tau_rigid_pairs(cs);
        for (const auto& u : pairs) {
            if (u.rank() + 1 >= alg->num_vertices()) continue;
            auto rd = reduce(cs, u);
            CandidateSet rcs(rd.reduced, 8);
            for (const auto& v : pairs) {
                if (v == u || !v.contains(u) || v.rank() == alg->num_vertices()) continue;
                auto label = format_pair(pres, u) + " then " + format_pair(pres, v);
                CAPTURE(label);
                // v corresponds to the common summands of its transported completions.
                std::vector<TauRigidPair> images;
                for (const auto& p : completions(cs, v).pairs) images.push_back(transport_pair(cs, rd, rcs, p));
                auto v_reduced = common_part(images);
                CHECK(v_reduced.rank() == v.rank() - u.rank());
                auto twice = reduce(rcs, v_reduced);
                auto once = reduce(cs, v);
                CHECK(find_isomorphism(twice.reduced->presentation(), once.reduced->presentation()).has_value());
            }
        }
    }
}
