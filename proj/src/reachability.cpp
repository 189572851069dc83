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
#include <deque>
#include <functional>
#include <sstream>

#include "parallel.hpp"
#include "taut/errors.hpp"
#include "taut/reachability.hpp"
#include "taut/reduction.hpp"

namespace taut {
namespace {

// Components of an undirected graph given by adjacency lists.
std::vector<std::vector<std::size_t>> components_of(const std::vector<std::vector<std::size_t>>& adjacent) {
    const std::size_t n = adjacent.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (auto w : adjacent[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Shortest path from s to any node accepted by `goal`, as a node list.
template <typename Goal>
std::vector<std::size_t> shortest_path(const std::vector<std::vector<std::size_t>>& adjacent, std::size_t s, Goal goal) {
    std::vector<std::optional<std::size_t>> parent(adjacent.size());
    std::deque<std::size_t> queue{s};
    parent[s] = s;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (goal(v)) {
            std::vector<std::size_t> path{v};
            while (path.back() != s) path.push_back(*parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto w : adjacent[v])
            if (!parent[w]) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    return {};
}

std::string label_of(const ExchangeGraph& g) {
    const std::string& l = g.algebra->presentation().label();
    return l.empty() ? "A" : l;
}

std::string count(std::size_t n) { return std::to_string(n); }

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict conjunction(Verdict a, Verdict b) {
    if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
    return Verdict::holds;
}

std::string CompatibilityGraph::status() const {
    return complete ? "complete" : "truncated@" + std::to_string(max_letters);
}

std::size_t CompatibilityGraph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& a : adjacent) twice += a.size();
    return twice / 2;
}

std::optional<std::size_t> CompatibilityGraph::index_of(const TauRigidPair& p) const {
    auto it = std::find(nodes.begin(), nodes.end(), p);
    if (it == nodes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::vector<std::size_t>> CompatibilityGraph::components() const { return components_of(adjacent); }

CompatibilityGraph compatibility_graph(const CandidateSet& cs, const ExchangeGraph* g) {
    CompatibilityGraph out;
    out.algebra = cs.algebra_ptr();
    out.max_letters = cs.max_letters();
    out.nodes = cs.indecomposables();
    out.adjacent.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (i != j && cs.compatible(i, j)) out.adjacent[i].push_back(j);
    out.complete = cs.saturated() || (g && g->complete);
    return out;
}

ReachabilityChain tau_reachable(const CompatibilityGraph& g, const TauRigidPair& p, const TauRigidPair& q) {
    const auto s = g.index_of(p), t = g.index_of(q);
    if (!s || !t) throw PreconditionError("tau_reachable needs two nodes of the compatibility graph");
    ReachabilityChain out;
    const auto path = shortest_path(g.adjacent, *s, [&](std::size_t v) { return v == *t; });
    if (path.empty()) {
        out.verdict = g.complete ? Verdict::fails : Verdict::inconclusive;
        return out;
    }
    out.verdict = Verdict::holds;
    // p = q needs no intermediate pair.
    for (auto v : path) out.chain.push_back(g.nodes[v]);
    return out;
}

std::string format_report(const ReachabilityReport& r) {
    std::ostringstream os;
    std::function<void(const ReachabilityReport&, const std::string&)> emit = [&](const ReachabilityReport& x,
                                                                                  const std::string& pad) {
        os << pad << "property: " << x.property << "\n";
        os << pad << "subject: " << x.subject << "\n";
        os << pad << "verdict: " << to_string(x.verdict) << "\n";
        for (const auto& [k, v] : x.evidence) os << pad << k << ": " << v << "\n";
        if (!x.witness.empty()) os << pad << "witness: " << x.witness << "\n";
        if (x.sub_reports.empty()) return;
        os << pad << "sub-reports: " << x.sub_reports.size() << "\n";
        for (const auto& s : x.sub_reports) {
            os << pad << "  -\n";
            emit(s, pad + "    ");
        }
    };
    emit(r, "");
    return os.str();
}

ReachabilityReport has_tau_reachable_property(const CandidateSet& cs, const ExchangeGraph* g) {
    const CompatibilityGraph cg = compatibility_graph(cs, g);
    const auto comps = cg.components();
    ReachabilityReport r;
    r.property = "tau-reachable";
    r.subject = cs.presentation().label().empty() ? "A" : cs.presentation().label();
    r.evidence = {{"status", cg.status()},
                  {"indecomposable pairs", count(cg.nodes.size())},
                  {"compatible pairs", count(cg.num_edges())},
                  {"components", count(comps.size())}};
    if (comps.size() <= 1) {
        r.verdict = cg.complete ? Verdict::holds : Verdict::inconclusive;
    } else if (!cg.complete) {
        r.verdict = Verdict::inconclusive;
    } else {
        r.verdict = Verdict::fails;
        r.witness = "no chain of compatible pairs joins " + format_pair(cs.presentation(), cg.nodes[comps[0][0]]) +
                    " and " + format_pair(cs.presentation(), cg.nodes[comps[1][0]]);
    }
    return r;
}

ReachabilityReport graph_connected(const ExchangeGraph& g) {
    const auto comps = g.components();
    ReachabilityReport r;
    r.property = "graph-connected";
    r.subject = label_of(g);
    r.evidence = {{"status", g.status()},
                  {"vertices", count(g.vertices.size())},
                  {"edges", count(g.edges.size())},
                  {"components", count(comps.size())}};
    if (!g.complete) {
        r.verdict = Verdict::inconclusive;
    } else if (comps.size() <= 1) {
        r.verdict = Verdict::holds;
    } else {
        r.verdict = Verdict::fails;
        const Presentation& p = g.algebra->presentation();
        r.witness = format_pair(p, g.vertices[comps[0][0]]) + " and " + format_pair(p, g.vertices[comps[1][0]]) +
                    " lie in different components";
    }
    return r;
}

ReachabilityReport reachable_in_face(const CandidateSet& cs, const ExchangeGraph& g) {
    ReachabilityReport r;
    r.property = "reachable-in-face";
    r.subject = label_of(g);
    const Presentation& pres = cs.presentation();
    const auto pairs = all_tau_rigid_pairs(cs);
    r.evidence = {{"status", g.status()}, {"tau-rigid pairs", count(pairs.size())}};
    if (g.complete) {
        for (const auto& u : pairs) {
            const auto comps = face(g, u).components();
            if (comps.size() > 1) {
                r.verdict = Verdict::fails;
                r.witness = "the face of " + format_pair(pres, u) + " has " + count(comps.size()) + " components";
                return r;
            }
        }
        r.verdict = Verdict::holds;
        r.evidence.emplace_back("connected faces", count(pairs.size()));
        return r;
    }
    // Truncated: only certified faces can be examined, and none of them settles the
    // property.
    std::size_t closed = 0, connected = 0;
    for (const auto& u : pairs) {
        const auto vertices = certified_face(cs, u);
        if (!vertices) continue;
        ++closed;
        // Two vertices, or one: connected iff they are mutations of each other.
        connected += vertices->size() == 1 ||
                     (vertices->size() == 2 && (*vertices)[0].merged((*vertices)[1]).rank() == cs.num_vertices() + 1);
    }
    r.verdict = Verdict::inconclusive;
    r.evidence.emplace_back("certified faces", count(closed));
    r.evidence.emplace_back("of which connected", count(connected));
    return r;
}

std::optional<std::vector<TauRigidPair>> certified_face(const CandidateSet& cs, const TauRigidPair& u) {
    const std::size_t n = cs.num_vertices();
    if (u.rank() == n) return std::vector<TauRigidPair>{u};
    if (u.rank() + 1 != n) return std::nullopt;
    Completions c = completions(cs, u);
    if (c.pairs.size() != 2) return std::nullopt;
    return std::move(c.pairs);
}

ReachabilityReport totally_tau_reachable(const CandidateSet& cs, const ExchangeGraph& g, std::size_t jobs) {
    ReachabilityReport r;
    r.property = "totally-tau-reachable";
    r.subject = label_of(g);
    const Presentation& pres = cs.presentation();
    std::vector<TauRigidPair> pairs;
    for (const auto& u : all_tau_rigid_pairs(cs))
        if (u.rank() + 1 < cs.num_vertices()) pairs.push_back(u);
    r.sub_reports.resize(pairs.size());
    detail::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        ReachabilityReport& sub = r.sub_reports[i];
        try {
            const ReductionData rd = reduce(cs, pairs[i]);
            CandidateSet reduced(rd.reduced, cs.max_letters());
            std::optional<ExchangeGraph> rg;
            if (!reduced.saturated()) rg = exchange_graph(reduced);
            sub = has_tau_reachable_property(reduced, rg ? &*rg : nullptr);
            sub.evidence.insert(sub.evidence.begin(), {{"reduced vertices", count(rd.reduced->num_vertices())},
                                                       {"reduced arrows", count(rd.reduced->num_arrows())}});
        } catch (const BoundExhausted& e) {
            sub.property = "tau-reachable";
            sub.verdict = Verdict::inconclusive;
            sub.evidence = {{"reduction", e.what()}};
        }
        sub.subject = format_pair(pres, pairs[i]);
    });
    const bool enumerated = cs.saturated() || g.complete;
    r.verdict = enumerated ? Verdict::holds : Verdict::inconclusive;
    for (const auto& sub : r.sub_reports) {
        r.verdict = conjunction(r.verdict, sub.verdict);
        if (sub.verdict == Verdict::fails && r.witness.empty())
            r.witness = "the reduction at " + sub.subject + " is not tau-reachable: " + sub.witness;
    }
    r.evidence = {{"status", enumerated ? "complete" : "truncated@" + count(cs.max_letters())},
                  {"pairs of co-rank > 1", count(pairs.size())}};
    // The verdict should equal reachable-in-face and connectivity; record the comparison.
    const Verdict other = conjunction(reachable_in_face(cs, g).verdict, graph_connected(g).verdict);
    r.evidence.emplace_back("reachable-in-face and graph-connected", to_string(other));
    std::string agreement = "undetermined";
    if (r.verdict != Verdict::inconclusive && other != Verdict::inconclusive)
        agreement = r.verdict == other ? "yes" : "no";
    r.evidence.emplace_back("agreement", agreement);
    return r;
}

DescentWitness sincere_descent_witness(const CompatibilityGraph& g, const CandidateSet& cs, const StringWord& m) {
    if (cs.num_vertices() <= 1) throw PreconditionError("descent witnesses need at least two vertices");
    const auto idx = cs.index_of(Summand::module(m));
    if (!idx) throw PreconditionError("not a tau-rigid string module within the bound: " + format_word(cs.presentation(), m));
    const Representation& big = cs.module(*idx);
    if (!is_sincere(big)) throw PreconditionError("module is not sincere: " + format_word(cs.presentation(), m));
    const std::size_t dim = big.dimension();
    auto smaller = [&](std::size_t v) {
        return !cs.summand(v).is_projective && cs.module(v).dimension() < dim;
    };
    std::vector<std::size_t> path;
    for (auto v : g.adjacent[*idx])
        if (smaller(v)) {
            path = {*idx, v};
            break;
        }
    for (std::size_t v = 0; v < cs.size() && path.empty(); ++v) {
        if (!smaller(v)) continue;
        for (auto z : g.adjacent[*idx])
            if (cs.compatible(z, v)) {
                path = {*idx, z, v};
                break;
            }
    }
    if (path.empty()) path = shortest_path(g.adjacent, *idx, smaller);
    DescentWitness out;
    if (path.empty()) return out;
    out.verdict = Verdict::holds;
    out.smaller = cs.summand(path.back()).word;
    for (auto v : path) out.chain.push_back(g.nodes[v]);
    return out;
}

} // namespace taut
