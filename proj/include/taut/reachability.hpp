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
// Reachability properties of the support tau-tilting combinatorics.
//
// Verdicts are three-valued. A property over a truncated enumeration is never
// reported as holding when it is universal, and never as failing unless the
// counterexample is certified by complete data.
//
// Chains through decomposable tau-rigid pairs reduce to chains of indecomposable
// ones (any two summands of a tau-rigid pair are compatible), so tau-reachability is
// path connectivity in the rank-one compatibility graph.

#ifndef TAUT_REACHABILITY_HPP
#define TAUT_REACHABILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taut/tilting.hpp"

namespace taut {

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);
/// fails dominates inconclusive, which dominates holds.
Verdict conjunction(Verdict a, Verdict b);

/// Indecomposable tau-rigid pairs and their compatibilities.
struct CompatibilityGraph {
    AlgebraPtr algebra;
    std::size_t max_letters = 0;
    std::vector<TauRigidPair> nodes;                // candidate order
    std::vector<std::vector<std::size_t>> adjacent;  // sorted, loop-free
    /// No indecomposable tau-rigid pair lies beyond the word bound.
    bool complete = false;

    std::string status() const;
    std::size_t num_edges() const;
    std::optional<std::size_t> index_of(const TauRigidPair& p) const;
    /// Connected components as sorted node lists, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;
};

/// Complete when the candidates are saturated or when `g`, if given, is a complete
/// exchange graph (every indecomposable tau-rigid pair is then a summand of a vertex).
CompatibilityGraph compatibility_graph(const CandidateSet& cs, const ExchangeGraph* g = nullptr);

struct ReachabilityChain {
    Verdict verdict = Verdict::inconclusive;
    /// p, the intermediate pairs, q; empty unless the verdict holds.
    std::vector<TauRigidPair> chain;
};

/// Shortest chain from p to q. Throws PreconditionError if either is not a node.
ReachabilityChain tau_reachable(const CompatibilityGraph& g, const TauRigidPair& p, const TauRigidPair& q);

struct ReachabilityReport {
    std::string property;  // tau-reachable, totally-tau-reachable, reachable-in-face, graph-connected
    std::string subject;   // the algebra label, or the pair of a sub-report
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::pair<std::string, std::string>> evidence;
    std::string witness;  // set when the verdict fails
    std::vector<ReachabilityReport> sub_reports;
};

/// "key: value" lines; sub-reports are indented below their parent.
std::string format_report(const ReachabilityReport& r);

/// Holds iff the compatibility graph is connected and complete.
ReachabilityReport has_tau_reachable_property(const CandidateSet& cs, const ExchangeGraph* g = nullptr);

/// Component count of the exchange graph; holds only on complete graphs.
ReachabilityReport graph_connected(const ExchangeGraph& g);

/// The vertices of the face of u when the candidates alone determine it: u of rank |A|,
/// or u of rank |A| - 1 with both of its completions found. nullopt otherwise.
std::optional<std::vector<TauRigidPair>> certified_face(const CandidateSet& cs, const TauRigidPair& u);

/// Connectivity of the face of every tau-rigid pair. On a truncated graph the verdict is
/// inconclusive; the certified faces are still examined and counted in the evidence.
ReachabilityReport reachable_in_face(const CandidateSet& cs, const ExchangeGraph& g);

/// tau-reachability of the reduction at every tau-rigid pair of co-rank > 1. The
/// evidence records the three-valued conjunction of reachable-in-face and
/// graph-connected and whether it agrees with the verdict.
ReachabilityReport totally_tau_reachable(const CandidateSet& cs, const ExchangeGraph& g, std::size_t jobs = 1);

struct DescentWitness {
    Verdict verdict = Verdict::inconclusive;
    StringWord smaller;  // N, when found
    /// (M, 0), intermediate pairs, (N, 0).
    std::vector<TauRigidPair> chain;
};

/// An indecomposable tau-rigid N with dim N < dim M from which (M, 0) is tau-reachable,
/// preferring N compatible with M, then a two-step chain, then any chain. Throws
/// PreconditionError unless |A| > 1 and M is a sincere tau-rigid string module among
/// the candidates.
DescentWitness sincere_descent_witness(const CompatibilityGraph& g, const CandidateSet& cs, const StringWord& m);

} // namespace taut

#endif // TAUT_REACHABILITY_HPP
