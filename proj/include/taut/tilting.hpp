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
// tau-rigid pairs, support tau-tilting pairs, the Fac order, completions, mutation
// and the exchange graph.
//
// Indecomposable tau-rigid modules are searched among string modules whose words
// have at most `max_letters` letters. A pair is a set of summands: string words in
// the module slot, vertices (standing for P_v) in the projective slot.

#ifndef TAUT_TILTING_HPP
#define TAUT_TILTING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taut/module.hpp"

namespace taut {

/// One indecomposable summand of a pair: a module (string word) or a shifted projective.
struct Summand {
    bool is_projective = false;
    StringWord word;      // when !is_projective; canonical
    VertexId vertex = 0;  // when is_projective

    static Summand module(StringWord w) { return {false, w.canonical(), 0}; }
    static Summand projective(VertexId v) { return {true, StringWord(), v}; }

    friend bool operator==(const Summand&, const Summand&) = default;
    friend std::strong_ordering operator<=>(const Summand& a, const Summand& b);
};

std::string format_summand(const Presentation& alg, const Summand& s);

class TauRigidPair {
public:
    TauRigidPair() = default;
    /// Canonicalises words, sorts and removes duplicates.
    TauRigidPair(std::vector<StringWord> modules, std::vector<VertexId> supports);
    static TauRigidPair from_summands(const std::vector<Summand>& summands);

    const std::vector<StringWord>& modules() const { return modules_; }
    const std::vector<VertexId>& supports() const { return supports_; }
    std::size_t rank() const { return modules_.size() + supports_.size(); }
    std::vector<Summand> summands() const;

    bool contains(const Summand& s) const;
    /// Every summand of `other` is a summand of this pair.
    bool contains(const TauRigidPair& other) const;
    TauRigidPair with(const Summand& s) const;
    TauRigidPair without(const Summand& s) const;
    TauRigidPair merged(const TauRigidPair& other) const;

    friend bool operator==(const TauRigidPair&, const TauRigidPair&) = default;
    friend std::strong_ordering operator<=>(const TauRigidPair& a, const TauRigidPair& b);

private:
    std::vector<StringWord> modules_;
    std::vector<VertexId> supports_;
};

/// "[w1|w2] / supp{v1,v2}" with words in the string syntax and vertex names.
std::string format_pair(const Presentation& alg, const TauRigidPair& p);

/// Comma-separated items "module <word>" and "proj <vertex>"; empty text is the zero pair.
/// Throws AlgebraError on unknown arrows/vertices or invalid words.
TauRigidPair parse_pair(const Presentation& alg, std::string_view text);

/// Direct check (no candidate bound): M tau-rigid and vanishing on the supports.
bool is_tau_rigid_pair(const AlgebraPtr& alg, const TauRigidPair& p);

/// The direct sum of the module slot.
Representation module_part(const AlgebraPtr& alg, const TauRigidPair& p);

/// Whether the union of the two pairs is again a tau-rigid pair.
bool pair_compatible(const AlgebraPtr& alg, const TauRigidPair& p, const TauRigidPair& q);

/// True iff the images of all maps M -> X span X.
bool in_fac(const Representation& x, const Representation& m);

/// Fac of the module part of p is contained in Fac of the module part of q.
bool fac_leq(const AlgebraPtr& alg, const TauRigidPair& p, const TauRigidPair& q);

/// Indecomposable tau-rigid pairs within the word bound, with their translates and the
/// pairwise compatibility table, computed once and shared by all searches.
class CandidateSet {
public:
    /// `jobs` > 1 computes translates and compatibilities on that many threads; the
    /// result does not depend on it.
    CandidateSet(AlgebraPtr alg, std::size_t max_letters, std::size_t jobs = 1);

    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const Algebra& algebra() const { return *alg_; }
    const Presentation& presentation() const { return alg_->presentation(); }
    std::size_t max_letters() const { return max_letters_; }
    std::size_t num_vertices() const { return alg_->num_vertices(); }

    /// Modules first (in word order), then projective slots by vertex.
    std::size_t size() const { return summands_.size(); }
    const Summand& summand(std::size_t i) const { return summands_[i]; }
    const std::vector<Summand>& summands() const { return summands_; }
    std::optional<std::size_t> index_of(const Summand& s) const;
    /// Indices of the summands of p, or nullopt if some summand is not a candidate.
    std::optional<std::vector<std::size_t>> indices_of(const TauRigidPair& p) const;

    bool compatible(std::size_t i, std::size_t j) const { return compatible_[i * summands_.size() + j]; }
    /// Every string of the algebra has at most max_letters letters.
    bool saturated() const { return saturated_; }
    /// A module summand whose word has exactly max_letters letters while longer
    /// strings exist.
    bool at_frontier(std::size_t i) const;

    /// The module of a module candidate.
    const Representation& module(std::size_t i) const { return modules_[i]; }
    const Representation& translate(std::size_t i) const { return translates_[i]; }

    /// All rank-one pairs, in candidate order.
    std::vector<TauRigidPair> indecomposables() const;

private:
    AlgebraPtr alg_;
    std::size_t max_letters_;
    bool saturated_ = false;
    std::vector<Summand> summands_;
    std::vector<Representation> modules_;
    std::vector<Representation> translates_;
    std::vector<char> compatible_;
};

std::vector<TauRigidPair> indec_tau_rigid_pairs(const AlgebraPtr& alg, std::size_t max_letters);

struct Completions {
    std::vector<TauRigidPair> pairs;  // sorted
    /// Some maximal compatible extension of u stays below rank |A|, or some completion
    /// uses a word at the bound: completions beyond the word bound may be missing.
    bool bound_exhausted = false;
};

/// Support tau-tilting pairs containing u, by exhaustive search over the candidates.
/// Throws PreconditionError if u is not a tau-rigid pair made of candidates.
Completions completions(const CandidateSet& cs, const TauRigidPair& u);

/// Every tau-rigid pair (all ranks, the zero pair included) made of candidates, sorted.
std::vector<TauRigidPair> all_tau_rigid_pairs(const CandidateSet& cs);

/// The maximum / minimum of completions(u) under fac_leq. Throws BoundExhausted when the
/// search is exhausted, ConsistencyError when no unique extremum exists.
TauRigidPair bongartz_completion(const CandidateSet& cs, const TauRigidPair& u);
TauRigidPair co_bongartz_completion(const CandidateSet& cs, const TauRigidPair& u);

/// The other completion of x without s. Throws BoundExhausted unless exactly two
/// completions are found, PreconditionError if s is not a summand of a support
/// tau-tilting pair x.
TauRigidPair mutate(const CandidateSet& cs, const TauRigidPair& x, const Summand& s);

struct ExchangeEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Summand removed;  // summand of `from` replaced
    Summand added;    // the summand of `to` replacing it
};

struct ExchangeGraph {
    AlgebraPtr algebra;
    std::size_t max_letters = 0;
    std::vector<TauRigidPair> vertices;
    std::vector<ExchangeEdge> edges;  // from < to, sorted
    bool complete = false;
    /// Vertices reached by mutation from the first vertex.
    std::size_t root_component_size = 0;

    /// "complete" or "truncated@<bound>".
    std::string status() const;
    std::optional<std::size_t> index_of(const TauRigidPair& p) const;
    std::vector<std::size_t> neighbours(std::size_t v) const;
    std::vector<std::size_t> degrees() const;
    /// Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;
};

/// Breadth-first mutation from (A, 0) (or (0, A) when some P_v is not a string module),
/// followed by seeding any support tau-tilting pair the exhaustive search finds but
/// mutation did not reach. Vertices are sorted by canonical pair form. Complete iff
/// every mutation succeeded, no vertex uses a word at the bound and the vertex budget
/// was not hit.
ExchangeGraph exchange_graph(const CandidateSet& cs, std::size_t max_vertices = 10000);

/// Full subgraph on the vertices containing u. Throws PreconditionError on a
/// truncated graph.
ExchangeGraph face(const ExchangeGraph& g, const TauRigidPair& u);

} // namespace taut

#endif // TAUT_TILTING_HPP
