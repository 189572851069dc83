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
#include <map>
#include <sstream>

#include "parallel.hpp"
#include "taut/errors.hpp"
#include "taut/tilting.hpp"

namespace taut {

std::strong_ordering operator<=>(const Summand& a, const Summand& b) {
    if (auto c = a.is_projective <=> b.is_projective; c != 0) return c;
    if (a.is_projective) return a.vertex <=> b.vertex;
    return a.word <=> b.word;
}

std::string format_summand(const Presentation& alg, const Summand& s) {
    if (s.is_projective) return "proj " + alg.quiver().vertex_name(s.vertex);
    return "module " + format_word(alg, s.word);
}

TauRigidPair::TauRigidPair(std::vector<StringWord> modules, std::vector<VertexId> supports)
    : modules_(std::move(modules)), supports_(std::move(supports)) {
    for (auto& w : modules_) w = w.canonical();
    std::sort(modules_.begin(), modules_.end());
    modules_.erase(std::unique(modules_.begin(), modules_.end()), modules_.end());
    std::sort(supports_.begin(), supports_.end());
    supports_.erase(std::unique(supports_.begin(), supports_.end()), supports_.end());
}

TauRigidPair TauRigidPair::from_summands(const std::vector<Summand>& summands) {
    std::vector<StringWord> m;
    std::vector<VertexId> p;
    for (const auto& s : summands) {
        if (s.is_projective) p.push_back(s.vertex);
        else m.push_back(s.word);
    }
    return TauRigidPair(std::move(m), std::move(p));
}

std::vector<Summand> TauRigidPair::summands() const {
    std::vector<Summand> out;
    for (const auto& w : modules_) out.push_back(Summand::module(w));
    for (auto v : supports_) out.push_back(Summand::projective(v));
    return out;
}

bool TauRigidPair::contains(const Summand& s) const {
    if (s.is_projective) return std::binary_search(supports_.begin(), supports_.end(), s.vertex);
    return std::binary_search(modules_.begin(), modules_.end(), s.word);
}

bool TauRigidPair::contains(const TauRigidPair& other) const {
    return std::includes(modules_.begin(), modules_.end(), other.modules_.begin(), other.modules_.end()) &&
           std::includes(supports_.begin(), supports_.end(), other.supports_.begin(), other.supports_.end());
}

TauRigidPair TauRigidPair::with(const Summand& s) const {
    auto all = summands();
    all.push_back(s);
    return from_summands(all);
}

TauRigidPair TauRigidPair::without(const Summand& s) const {
    auto all = summands();
    all.erase(std::remove(all.begin(), all.end(), s), all.end());
    return from_summands(all);
}

TauRigidPair TauRigidPair::merged(const TauRigidPair& other) const {
    auto all = summands();
    for (const auto& s : other.summands()) all.push_back(s);
    return from_summands(all);
}

std::strong_ordering operator<=>(const TauRigidPair& a, const TauRigidPair& b) {
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    if (auto c = a.modules_ <=> b.modules_; c != 0) return c;
    return a.supports_ <=> b.supports_;
}

std::string format_pair(const Presentation& alg, const TauRigidPair& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.modules().size(); ++i) {
        if (i) out += '|';
        out += format_word(alg, p.modules()[i]);
    }
    out += "] / supp{";
    for (std::size_t i = 0; i < p.supports().size(); ++i) {
        if (i) out += ',';
        out += alg.quiver().vertex_name(p.supports()[i]);
    }
    return out + "}";
}

TauRigidPair parse_pair(const Presentation& alg, std::string_view text) {
    std::vector<Summand> summands;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::istringstream words(item);
        std::string kind;
        if (!(words >> kind)) continue;
        std::string rest;
        std::getline(words, rest);
        if (kind == "module") {
            summands.push_back(Summand::module(parse_word(alg, rest)));
        } else if (kind == "proj") {
            std::istringstream r(rest);
            std::string v, extra;
            if (!(r >> v) || (r >> extra)) throw AlgebraError("expected one vertex after 'proj' in '" + item + "'");
            auto id = alg.quiver().find_vertex(v);
            if (!id) throw AlgebraError("unknown vertex '" + v + "'");
            summands.push_back(Summand::projective(*id));
        } else {
            throw AlgebraError("expected 'module <word>' or 'proj <vertex>', got '" + item + "'");
        }
    }
    return TauRigidPair::from_summands(summands);
}

Representation module_part(const AlgebraPtr& alg, const TauRigidPair& p) {
    std::vector<Representation> parts;
    for (const auto& w : p.modules()) parts.push_back(string_module(alg, w));
    return direct_sum(alg, parts);
}

bool is_tau_rigid_pair(const AlgebraPtr& alg, const TauRigidPair& p) {
    std::vector<Representation> mods, taus;
    for (const auto& w : p.modules()) {
        mods.push_back(string_module(alg, w));
        taus.push_back(ar_translate(mods.back()));
    }
    for (auto v : p.supports()) {
        if (v >= alg->num_vertices()) throw AlgebraError("unknown vertex in pair");
        for (const auto& m : mods)
            if (m.dim(v) != 0) return false;
    }
    for (const auto& m : mods)
        for (const auto& t : taus)
            if (hom_dimension(m, t) != 0) return false;
    return p.rank() <= alg->num_vertices();
}

bool pair_compatible(const AlgebraPtr& alg, const TauRigidPair& p, const TauRigidPair& q) {
    return is_tau_rigid_pair(alg, p.merged(q));
}

bool in_fac(const Representation& x, const Representation& m) {
    const HomSpace h = hom_space(m, x);
    for (VertexId v = 0; v < x.dims().size(); ++v) {
        if (x.dim(v) == 0) continue;
        std::vector<Matrix> images;
        for (const auto& f : h.basis) images.push_back(f.components[v]);
        if (rank(hstack(x.dim(v), images)) != x.dim(v)) return false;
    }
    return true;
}

bool fac_leq(const AlgebraPtr& alg, const TauRigidPair& p, const TauRigidPair& q) {
    if (p.modules().empty()) return true;
    if (q.modules().empty()) return false;
    const Representation target = module_part(alg, q);
    for (const auto& w : p.modules())
        if (!in_fac(string_module(alg, w), target)) return false;
    return true;
}

using detail::parallel_for;

CandidateSet::CandidateSet(AlgebraPtr alg, std::size_t max_letters, std::size_t jobs)
    : alg_(std::move(alg)), max_letters_(max_letters) {
    const auto words = enumerate_strings(alg_->presentation(), max_letters);
    saturated_ = enumerate_strings(alg_->presentation(), max_letters + 1).size() == words.size();
    std::vector<Representation> mods(words.size()), taus(words.size());
    std::vector<char> rigid(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t i) {
        mods[i] = string_module(alg_, words[i]);
        taus[i] = ar_translate(mods[i]);
        rigid[i] = taus[i].is_zero() || hom_dimension(mods[i], taus[i]) == 0;
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!rigid[i]) continue;
        summands_.push_back(Summand::module(words[i]));
        modules_.push_back(std::move(mods[i]));
        translates_.push_back(std::move(taus[i]));
    }
    const std::size_t num_modules = summands_.size();
    for (VertexId v = 0; v < alg_->num_vertices(); ++v) summands_.push_back(Summand::projective(v));
    const std::size_t n = summands_.size();
    compatible_.assign(n * n, 0);
    parallel_for(n, jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool ok = true;
            if (i == j) {
                ok = true;
            } else if (i < num_modules && j < num_modules) {
                ok = (translates_[j].is_zero() || hom_dimension(modules_[i], translates_[j]) == 0) &&
                     (translates_[i].is_zero() || hom_dimension(modules_[j], translates_[i]) == 0);
            } else if (i < num_modules) {
                ok = modules_[i].dim(summands_[j].vertex) == 0;
            } else if (j < num_modules) {
                ok = modules_[j].dim(summands_[i].vertex) == 0;
            }
            compatible_[i * n + j] = ok;
        }
    });
}

std::optional<std::size_t> CandidateSet::index_of(const Summand& s) const {
    auto it = std::lower_bound(summands_.begin(), summands_.end(), s);
    if (it == summands_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - summands_.begin());
}

std::optional<std::vector<std::size_t>> CandidateSet::indices_of(const TauRigidPair& p) const {
    std::vector<std::size_t> out;
    for (const auto& s : p.summands()) {
        auto i = index_of(s);
        if (!i) return std::nullopt;
        out.push_back(*i);
    }
    return out;
}

bool CandidateSet::at_frontier(std::size_t i) const {
    return !saturated_ && !summands_[i].is_projective && summands_[i].word.length() == max_letters_;
}

std::vector<TauRigidPair> CandidateSet::indecomposables() const {
    std::vector<TauRigidPair> out;
    for (const auto& s : summands_) out.push_back(TauRigidPair::from_summands({s}));
    return out;
}

std::vector<TauRigidPair> indec_tau_rigid_pairs(const AlgebraPtr& alg, std::size_t max_letters) {
    return CandidateSet(alg, max_letters).indecomposables();
}

namespace {

std::vector<std::size_t> checked_indices(const CandidateSet& cs, const TauRigidPair& u) {
    auto idx = cs.indices_of(u);
    if (!idx) throw PreconditionError("pair " + format_pair(cs.presentation(), u) +
                                      " has a summand outside the candidate set");
    for (auto i : *idx)
        for (auto j : *idx)
            if (!cs.compatible(i, j))
                throw PreconditionError("pair " + format_pair(cs.presentation(), u) + " is not tau-rigid");
    return *idx;
}

TauRigidPair pair_of(const CandidateSet& cs, const std::vector<std::size_t>& idx) {
    std::vector<Summand> s;
    for (auto i : idx) s.push_back(cs.summand(i));
    return TauRigidPair::from_summands(s);
}

// Visits every clique extending `base`, each once. `visit` returns false to stop
// descending; `maximal` is called on cliques with no compatible extension at all.
void extend_cliques(const CandidateSet& cs, std::vector<std::size_t>& clique, std::size_t min_index,
                    const std::vector<std::size_t>& common, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                    const std::function<void(const std::vector<std::size_t>&)>& maximal) {
    if (!visit(clique)) return;
    if (common.empty()) {
        maximal(clique);
        return;
    }
    for (std::size_t k = 0; k < common.size(); ++k) {
        const std::size_t c = common[k];
        if (c < min_index) continue;
        std::vector<std::size_t> next;
        for (std::size_t other : common)
            if (other != c && cs.compatible(c, other)) next.push_back(other);
        clique.push_back(c);
        extend_cliques(cs, clique, c + 1, next, visit, maximal);
        clique.pop_back();
    }
}

std::vector<std::size_t> common_candidates(const CandidateSet& cs, const std::vector<std::size_t>& base) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cs.size(); ++c) {
        if (std::find(base.begin(), base.end(), c) != base.end()) continue;
        bool ok = true;
        for (auto b : base) ok = ok && cs.compatible(b, c);
        if (ok) out.push_back(c);
    }
    return out;
}

} // namespace

Completions completions(const CandidateSet& cs, const TauRigidPair& u) {
    auto base = checked_indices(cs, u);
    const std::size_t n = cs.num_vertices();
    if (base.size() > n) throw PreconditionError("pair has more summands than the algebra has vertices");
    Completions out;
    extend_cliques(
        cs, base, 0, common_candidates(cs, base),
        [&](const std::vector<std::size_t>& clique) {
            if (clique.size() < n) return true;
            // A word at the bound may have exchange partners beyond it.
            for (auto i : clique) out.bound_exhausted = out.bound_exhausted || cs.at_frontier(i);
            out.pairs.push_back(pair_of(cs, clique));
            return false;
        },
        [&](const std::vector<std::size_t>& clique) {
            if (clique.size() < n) out.bound_exhausted = true;
        });
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::vector<TauRigidPair> all_tau_rigid_pairs(const CandidateSet& cs) {
    std::vector<TauRigidPair> out;
    std::vector<std::size_t> clique;
    extend_cliques(
        cs, clique, 0, common_candidates(cs, {}),
        [&](const std::vector<std::size_t>& c) {
            out.push_back(pair_of(cs, c));
            return c.size() < cs.num_vertices();
        },
        [](const std::vector<std::size_t>&) {});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

TauRigidPair extremum(const CandidateSet& cs, const TauRigidPair& u, bool maximum) {
    const Completions c = completions(cs, u);
    if (c.bound_exhausted || c.pairs.empty())
        throw BoundExhausted("completions of " + format_pair(cs.presentation(), u) + " are incomplete at " +
                             std::to_string(cs.max_letters()) + " letters");
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        bool extreme = true;
        for (std::size_t j = 0; j < c.pairs.size() && extreme; ++j) {
            if (i == j) continue;
            extreme = maximum ? fac_leq(cs.algebra_ptr(), c.pairs[j], c.pairs[i])
                              : fac_leq(cs.algebra_ptr(), c.pairs[i], c.pairs[j]);
        }
        if (!extreme) continue;
        if (found) throw ConsistencyError("two extremal completions of " + format_pair(cs.presentation(), u));
        found = i;
    }
    if (!found) throw ConsistencyError("no extremal completion of " + format_pair(cs.presentation(), u));
    return c.pairs[*found];
}

} // namespace

TauRigidPair bongartz_completion(const CandidateSet& cs, const TauRigidPair& u) { return extremum(cs, u, true); }

TauRigidPair co_bongartz_completion(const CandidateSet& cs, const TauRigidPair& u) { return extremum(cs, u, false); }

TauRigidPair mutate(const CandidateSet& cs, const TauRigidPair& x, const Summand& s) {
    if (x.rank() != cs.num_vertices()) throw PreconditionError("mutation needs a support tau-tilting pair");
    if (!x.contains(s)) throw PreconditionError(format_summand(cs.presentation(), s) + " is not a summand");
    const Completions c = completions(cs, x.without(s));
    if (c.bound_exhausted || c.pairs.size() != 2)
        throw BoundExhausted("mutation of " + format_pair(cs.presentation(), x) + " at " +
                             format_summand(cs.presentation(), s) + " found " + std::to_string(c.pairs.size()) +
                             " completions at " + std::to_string(cs.max_letters()) + " letters");
    return c.pairs[0] == x ? c.pairs[1] : c.pairs[0];
}

std::string ExchangeGraph::status() const {
    return complete ? "complete" : "truncated@" + std::to_string(max_letters);
}

std::optional<std::size_t> ExchangeGraph::index_of(const TauRigidPair& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> ExchangeGraph::neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges) {
        if (e.from == v) out.push_back(e.to);
        if (e.to == v) out.push_back(e.from);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> ExchangeGraph::degrees() const {
    std::vector<std::size_t> out(vertices.size(), 0);
    for (const auto& e : edges) {
        ++out[e.from];
        ++out[e.to];
    }
    return out;
}

std::vector<std::vector<std::size_t>> ExchangeGraph::components() const {
    std::vector<std::size_t> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (const auto& e : edges) parent[find(e.from)] = find(e.to);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < vertices.size(); ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

TauRigidPair root_pair(const CandidateSet& cs) {
    const Algebra& alg = cs.algebra();
    std::vector<StringWord> words;
    for (VertexId v = 0; v < alg.num_vertices(); ++v) {
        auto w = projective_word(alg, v);
        if (!w || !cs.index_of(Summand::module(*w))) {
            std::vector<VertexId> all(alg.num_vertices());
            for (VertexId x = 0; x < all.size(); ++x) all[x] = x;
            return TauRigidPair({}, all);
        }
        words.push_back(*w);
    }
    return TauRigidPair(words, {});
}

} // namespace

ExchangeGraph exchange_graph(const CandidateSet& cs, std::size_t max_vertices) {
    ExchangeGraph g;
    g.algebra = cs.algebra_ptr();
    g.max_letters = cs.max_letters();
    bool complete = true;
    std::map<TauRigidPair, std::size_t> index;
    std::vector<TauRigidPair> found;
    std::map<std::pair<std::size_t, std::size_t>, ExchangeEdge> edges;
    auto add = [&](const TauRigidPair& p) -> std::optional<std::size_t> {
        if (auto it = index.find(p); it != index.end()) return it->second;
        if (found.size() >= max_vertices) {
            complete = false;
            return std::nullopt;
        }
        index.emplace(p, found.size());
        found.push_back(p);
        return found.size() - 1;
    };
    auto explore = [&](const TauRigidPair& seed) {
        std::deque<std::size_t> queue;
        if (auto s = add(seed)) queue.push_back(*s);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            const TauRigidPair current = found[x];
            for (const auto& s : current.summands()) {
                TauRigidPair y;
                try {
                    y = mutate(cs, current, s);
                } catch (const BoundExhausted&) {
                    complete = false;
                    continue;
                }
                const bool fresh = !index.count(y);
                auto yi = add(y);
                if (!yi) continue;
                if (fresh) queue.push_back(*yi);
                Summand added;
                for (const auto& t : y.summands())
                    if (!current.contains(t)) added = t;
                const auto key = std::minmax(x, *yi);
                if (!edges.count(key)) {
                    if (x < *yi) edges[key] = {x, *yi, s, added};
                    else edges[key] = {*yi, x, added, s};
                }
            }
        }
    };
    const TauRigidPair root = root_pair(cs);
    explore(root);
    g.root_component_size = found.size();
    if (complete) {
        // Support tau-tilting pairs outside the mutation class of the root.
        const Completions all = completions(cs, TauRigidPair());
        if (all.bound_exhausted) complete = false;
        for (const auto& p : all.pairs)
            if (!index.count(p)) explore(p);
    }
    for (const auto& p : found)
        for (const auto& s : p.summands()) {
            auto i = cs.index_of(s);
            if (i && cs.at_frontier(*i)) complete = false;
        }
    // Renumber by canonical order.
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
    std::vector<std::size_t> renumber(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[order[i]] = i;
        g.vertices.push_back(found[order[i]]);
    }
    for (const auto& [key, e] : edges) {
        ExchangeEdge r = e;
        r.from = renumber[e.from];
        r.to = renumber[e.to];
        if (r.from > r.to) {
            std::swap(r.from, r.to);
            std::swap(r.removed, r.added);
        }
        g.edges.push_back(r);
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const ExchangeEdge& a, const ExchangeEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    g.complete = complete;
    return g;
}

ExchangeGraph face(const ExchangeGraph& g, const TauRigidPair& u) {
    if (!g.complete) throw PreconditionError("faces are only taken of complete exchange graphs");
    ExchangeGraph f;
    f.algebra = g.algebra;
    f.max_letters = g.max_letters;
    f.complete = true;
    std::vector<std::optional<std::size_t>> renumber(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i].contains(u)) {
            renumber[i] = f.vertices.size();
            f.vertices.push_back(g.vertices[i]);
        }
    for (const auto& e : g.edges)
        if (renumber[e.from] && renumber[e.to]) f.edges.push_back({*renumber[e.from], *renumber[e.to], e.removed, e.added});
    f.root_component_size = f.vertices.empty() ? 0 : f.components().front().size();
    return f;
}

} // namespace taut
