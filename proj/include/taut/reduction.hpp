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
// tau-tilting reduction: End(T) for the Bongartz completion (T, R) of a tau-rigid pair
// (U, R), its quotient by the ideal generated by the idempotents of U, a bound quiver
// presentation of the quotient, and the functor Hom(T, -) on the subcategory
// W(U, R) = {X : Hom(X, tau U) = 0, X vanishes on R, Hom(U, X) = 0}.
//
// Multiplication convention: for T = T_1 + ... + T_n, the block e_i B e_j is
// Hom(T_j, T_i) and x y = x o y. An arrow i -> j of the presented quiver is thus a
// map T_j -> T_i, and a path "x then y" is the composite x o y, matching the
// right-module conventions used for bound quiver algebras.

#ifndef TAUT_REDUCTION_HPP
#define TAUT_REDUCTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taut/tilting.hpp"

namespace taut {

/// A finite-dimensional algebra given by structure constants on a basis adapted to a
/// complete set of orthogonal idempotents e_1, ..., e_n.
struct AssociativeAlgebraTable {
    std::vector<std::string> vertex_labels;  // one per idempotent
    std::vector<std::string> basis_labels;
    /// Basis element k lies in e_i B e_j for (i, j) = blocks[k].
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    /// products[k][l] = coordinates of b_k b_l.
    std::vector<std::vector<Vector>> products;
    /// Coordinates of the idempotents.
    std::vector<Vector> idempotents;

    std::size_t dimension() const { return basis_labels.size(); }
    Vector multiply(const Vector& x, const Vector& y) const;
    bool is_associative() const;
    /// Orthogonal, idempotent, summing to the identity.
    bool has_valid_idempotents() const;
};

/// The table of End(T_1 + ... + T_n) from explicit Hom bases; each diagonal block
/// starts with the identity of its summand.
AssociativeAlgebraTable endomorphism_algebra(const std::vector<Representation>& summands,
                                             const std::vector<std::string>& labels);

/// The quotient by the two-sided ideal generated by the idempotents `killed`.
/// Basis elements of the quotient are representatives chosen among the original
/// ones; `lift[k]` is the original index of quotient basis element k.
struct QuotientTable {
    AssociativeAlgebraTable table;
    std::vector<std::size_t> lift;
    std::vector<std::size_t> kept_vertices;  // original idempotent indices
};
QuotientTable quotient_by_idempotents(const AssociativeAlgebraTable& t, const std::vector<std::size_t>& killed);

struct BoundQuiverPresentation {
    Presentation presentation;
    /// Coordinates (in the table basis) of the element chosen for each arrow.
    std::vector<Vector> arrow_elements;
};

/// Vertices "1".."n" for the idempotents, arrows "a1".."am" for an echelon basis of
/// rad/rad^2, relations the arrow pairs with zero product. Verifies that the path
/// algebra modulo these relations maps isomorphically onto the table; throws
/// AlgebraError with a witness otherwise (non-basic input, non-monomial relations).
BoundQuiverPresentation present_as_bound_quiver(const AssociativeAlgebraTable& t);

struct ReductionData {
    AlgebraPtr base;
    TauRigidPair u;
    TauRigidPair bongartz;
    /// The summands of T outside U, in the order of the reduced vertices.
    std::vector<StringWord> vertex_words;
    std::vector<Representation> vertex_modules;
    AlgebraPtr reduced;
    /// For each reduced arrow i -> j, a map T_j -> T_i representing it.
    std::vector<ModuleMap> arrow_maps;
    Representation u_module;
    Representation tau_u;

    /// |A| - |U| - |R|.
    std::size_t co_rank() const { return base->num_vertices() - u.rank(); }
};

/// Throws PreconditionError if u is not tau-rigid over the candidates, BoundExhausted
/// when the Bongartz completion cannot be certified at the bound.
ReductionData reduce(const CandidateSet& cs, const TauRigidPair& u);

bool wide_membership(const Representation& x, const ReductionData& rd);

/// Hom(T, X) as a module over the reduced algebra. Throws PreconditionError when X is
/// not in W(U, R).
Representation reduction_functor(const Representation& x, const ReductionData& rd);

/// The reduced support tau-tilting pair whose torsion class is the image of
/// Fac(M_p) within W(U, R). `reduced` must be a candidate set over rd.reduced.
/// Throws ConsistencyError unless exactly one reduced pair matches.
TauRigidPair transport_pair(const CandidateSet& cs, const ReductionData& rd, const CandidateSet& reduced,
                            const TauRigidPair& p);

/// A vertex and arrow bijection carrying one presentation onto the other, if any.
struct PresentationIsomorphism {
    std::vector<VertexId> vertex_map;
    std::vector<ArrowId> arrow_map;
};
std::optional<PresentationIsomorphism> find_isomorphism(const Presentation& a, const Presentation& b);

} // namespace taut

#endif // TAUT_REDUCTION_HPP
