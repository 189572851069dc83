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

#include "taut/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "taut/errors.hpp"

namespace taut {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw AlgebraError("duplicate identifier '" + v + "'");
    for (const auto& a : arrows_) {
        if (!seen.insert(a.name).second) throw AlgebraError("duplicate identifier '" + a.name + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw AlgebraError("arrow '" + a.name + "' has an undeclared endpoint");
    }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
    for (VertexId v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == name) return v;
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
    for (ArrowId a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

std::vector<ArrowId> Quiver::arrows_from(VertexId v) const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == v) out.push_back(a);
    return out;
}

std::vector<ArrowId> Quiver::arrows_to(VertexId v) const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].target == v) out.push_back(a);
    return out;
}

std::size_t Quiver::num_components() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
    std::size_t count = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (find(v) == v) ++count;
    return count;
}

Presentation::Presentation(std::string label, Quiver quiver, std::vector<Relation> relations)
    : label_(std::move(label)), quiver_(std::move(quiver)) {
    for (const auto& r : relations) {
        if (r.first >= quiver_.num_arrows() || r.second >= quiver_.num_arrows())
            throw AlgebraError("relation refers to an unknown arrow");
        if (quiver_.arrow(r.first).target != quiver_.arrow(r.second).source)
            throw AlgebraError("relation '" + quiver_.arrow(r.first).name + " " + quiver_.arrow(r.second).name +
                               "' is not a composable path");
        relation_set_.emplace(r.first, r.second);
    }
    for (const auto& [a, b] : relation_set_) relations_.push_back({a, b});
}

bool Presentation::is_relation(ArrowId first, ArrowId second) const {
    return relation_set_.count({first, second}) > 0;
}

std::vector<ArrowId> Presentation::composition_cycle() const {
    const std::size_t n = num_arrows();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(n, 0);
    std::vector<ArrowId> stack;
    std::vector<ArrowId> cycle;
    auto next = [&](ArrowId a) {
        std::vector<ArrowId> out;
        for (ArrowId b : quiver_.arrows_from(quiver_.arrow(a).target))
            if (!is_relation(a, b)) out.push_back(b);
        return out;
    };
    auto dfs = [&](auto&& self, ArrowId a) -> bool {
        state[a] = 1;
        stack.push_back(a);
        for (ArrowId b : next(a)) {
            if (state[b] == 1) {
                auto it = std::find(stack.begin(), stack.end(), b);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[b] == 0 && self(self, b)) return true;
        }
        stack.pop_back();
        state[a] = 2;
        return false;
    };
    for (ArrowId a = 0; a < n; ++a)
        if (state[a] == 0 && dfs(dfs, a)) return cycle;
    return {};
}

Presentation Presentation::relabeled(std::string label) const {
    Presentation p = *this;
    p.label_ = std::move(label);
    return p;
}

GentleReport check_gentle(const Presentation& alg) {
    GentleReport report;
    const Quiver& q = alg.quiver();
    auto add = [&](std::string axiom, std::vector<std::string> witnesses, std::string message) {
        report.violations.push_back({std::move(axiom), std::move(witnesses), std::move(message)});
    };
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        const auto out = q.arrows_from(v).size();
        const auto in = q.arrows_to(v).size();
        if (out > 2)
            add("G1", {q.vertex_name(v)},
                "vertex " + q.vertex_name(v) + " is the source of " + std::to_string(out) + " arrows");
        if (in > 2)
            add("G1", {q.vertex_name(v)},
                "vertex " + q.vertex_name(v) + " is the target of " + std::to_string(in) + " arrows");
    }
    auto names = [&](const std::vector<ArrowId>& arrows, ArrowId head) {
        std::vector<std::string> out{q.arrow(head).name};
        for (auto a : arrows) out.push_back(q.arrow(a).name);
        return out;
    };
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(a);
        std::vector<ArrowId> after_zero, after_nonzero;
        for (ArrowId b : q.arrows_from(arrow.target))
            (alg.is_relation(a, b) ? after_zero : after_nonzero).push_back(b);
        if (after_zero.size() > 1)
            add("G2", names(after_zero, a), "more than one arrow b with b" + arrow.name + " in I");
        if (after_nonzero.size() > 1)
            add("G2", names(after_nonzero, a), "more than one arrow c with c" + arrow.name + " not in I");
        std::vector<ArrowId> before_zero, before_nonzero;
        for (ArrowId b : q.arrows_to(arrow.source))
            (alg.is_relation(b, a) ? before_zero : before_nonzero).push_back(b);
        if (before_zero.size() > 1)
            add("G3", names(before_zero, a), "more than one arrow b with " + arrow.name + "b in I");
        if (before_nonzero.size() > 1)
            add("G3", names(before_nonzero, a), "more than one arrow c with " + arrow.name + "c not in I");
    }
    const auto cycle = alg.composition_cycle();
    if (!cycle.empty()) {
        std::vector<std::string> w;
        for (auto a : cycle) w.push_back(q.arrow(a).name);
        add("FINITE-DIM", w, "the composition digraph has a cycle; the algebra is infinite-dimensional");
    }
    report.is_gentle = report.violations.empty();
    return report;
}

PathBasis path_basis(const Presentation& alg) {
    if (!alg.is_finite_dimensional()) throw AlgebraError("presentation is infinite-dimensional");
    const Quiver& q = alg.quiver();
    PathBasis basis;
    std::vector<Path> level;
    for (VertexId v = 0; v < q.num_vertices(); ++v) level.push_back({v, v, {}});
    while (!level.empty()) {
        basis.paths.insert(basis.paths.end(), level.begin(), level.end());
        std::vector<Path> next;
        for (const auto& p : level)
            for (ArrowId a : q.arrows_from(p.target)) {
                if (!p.arrows.empty() && alg.is_relation(p.arrows.back(), a)) continue;
                Path e = p;
                e.arrows.push_back(a);
                e.target = q.arrow(a).target;
                next.push_back(std::move(e));
            }
        std::sort(next.begin(), next.end(),
                  [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
        level = std::move(next);
    }
    return basis;
}

Presentation factor_by_idempotent(const Presentation& alg, const std::vector<std::string>& vertices) {
    const Quiver& q = alg.quiver();
    std::vector<bool> dropped(q.num_vertices(), false);
    for (const auto& name : vertices) {
        auto v = q.find_vertex(name);
        if (!v) throw AlgebraError("unknown vertex '" + name + "'");
        dropped[*v] = true;
    }
    std::vector<std::string> keep_vertices;
    std::vector<VertexId> new_index(q.num_vertices(), 0);
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        if (!dropped[v]) {
            new_index[v] = keep_vertices.size();
            keep_vertices.push_back(q.vertex_name(v));
        }
    std::vector<Arrow> keep_arrows;
    std::vector<std::optional<ArrowId>> arrow_index(q.num_arrows());
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(a);
        if (dropped[arrow.source] || dropped[arrow.target]) continue;
        arrow_index[a] = keep_arrows.size();
        keep_arrows.push_back({arrow.name, new_index[arrow.source], new_index[arrow.target]});
    }
    std::vector<Relation> rels;
    for (const auto& r : alg.relations())
        if (arrow_index[r.first] && arrow_index[r.second]) rels.push_back({*arrow_index[r.first], *arrow_index[r.second]});
    std::string label = alg.label();
    if (!vertices.empty()) {
        label += "/<e";
        for (const auto& v : vertices) label += " " + v;
        label += ">";
    }
    return Presentation(label, Quiver(std::move(keep_vertices), std::move(keep_arrows)), std::move(rels));
}

Presentation disjoint_union(const Presentation& a, const Presentation& b) {
    std::unordered_set<std::string> taken;
    for (const auto& v : a.quiver().vertex_names()) taken.insert(v);
    for (const auto& ar : a.quiver().arrows()) taken.insert(ar.name);
    auto fresh = [&](std::string name) {
        while (taken.count(name)) name += "'";
        taken.insert(name);
        return name;
    };
    std::vector<std::string> vertices = a.quiver().vertex_names();
    const std::size_t off = vertices.size();
    for (const auto& v : b.quiver().vertex_names()) vertices.push_back(fresh(v));
    std::vector<Arrow> arrows = a.quiver().arrows();
    const std::size_t arrow_off = arrows.size();
    for (const auto& ar : b.quiver().arrows()) arrows.push_back({fresh(ar.name), ar.source + off, ar.target + off});
    std::vector<Relation> rels = a.relations();
    for (const auto& r : b.relations()) rels.push_back({r.first + arrow_off, r.second + arrow_off});
    return Presentation(a.label() + " x " + b.label(), Quiver(std::move(vertices), std::move(arrows)),
                        std::move(rels));
}

std::string format_path(const Presentation& alg, const Path& p) {
    if (p.arrows.empty()) return "e" + alg.quiver().vertex_name(p.source);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += ' ';
        out += alg.quiver().arrow(p.arrows[i]).name;
    }
    return out;
}

Algebra::Algebra(Presentation presentation) : pres_(std::move(presentation)), basis_(path_basis(pres_)) {
    const std::size_t n = pres_.num_vertices();
    trivial_.resize(n);
    between_.assign(n, std::vector<std::vector<std::size_t>>(n));
    position_.resize(basis_.paths.size());
    for (std::size_t i = 0; i < basis_.paths.size(); ++i) {
        const Path& p = basis_.paths[i];
        if (p.arrows.empty()) trivial_[p.source] = i;
        position_[i] = between_[p.source][p.target].size();
        between_[p.source][p.target].push_back(i);
        index_.emplace(std::make_pair(p.source, p.arrows), i);
    }
}

std::optional<std::size_t> Algebra::concat(std::size_t p, std::size_t q) const {
    const Path& a = basis_.paths[p];
    const Path& b = basis_.paths[q];
    if (a.target != b.source) return std::nullopt;
    if (a.arrows.empty()) return q;
    if (b.arrows.empty()) return p;
    if (pres_.is_relation(a.arrows.back(), b.arrows.front())) return std::nullopt;
    std::vector<ArrowId> arrows = a.arrows;
    arrows.insert(arrows.end(), b.arrows.begin(), b.arrows.end());
    auto it = index_.find({a.source, arrows});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Algebra::extend(std::size_t p, ArrowId a) const {
    const Path& path = basis_.paths[p];
    const Arrow& arrow = pres_.quiver().arrow(a);
    if (path.target != arrow.source) return std::nullopt;
    if (!path.arrows.empty() && pres_.is_relation(path.arrows.back(), a)) return std::nullopt;
    std::vector<ArrowId> arrows = path.arrows;
    arrows.push_back(a);
    auto it = index_.find({path.source, arrows});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

AlgebraPtr make_algebra(Presentation presentation) {
    return std::make_shared<const Algebra>(std::move(presentation));
}

} // namespace taut
