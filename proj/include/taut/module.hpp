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
// Finite-dimensional right modules, viewed as representations of the bound quiver.
//
// A representation M assigns a space M_v to each vertex and a matrix
// M(a): M_source(a) -> M_target(a) to each arrow, so that M(b) M(a) = 0 for every
// relation (a, b). The indecomposable projective P_v = e_v A has basis the nonzero
// paths starting at v, and Hom(P_v, M) = M_v.

#ifndef TAUT_MODULE_HPP
#define TAUT_MODULE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taut/algebra.hpp"
#include "taut/linalg.hpp"

namespace taut {

class Representation {
public:
    Representation() = default;
    /// Validates matrix shapes and relation equations; throws AlgebraError.
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

    static Representation zero(AlgebraPtr algebra);

    const Algebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(VertexId v) const { return dims_[v]; }
    const Matrix& map(ArrowId a) const { return maps_[a]; }
    const std::vector<Matrix>& maps() const { return maps_; }
    std::size_t dimension() const;
    bool is_zero() const { return dimension() == 0; }

    /// Image of `v` in M_target(p) under the action of the path `path_index`.
    Vector act(std::size_t path_index, const Vector& v) const;

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
};

bool same_algebra(const Representation& a, const Representation& b);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(AlgebraPtr algebra, const std::vector<Representation>& parts);

/// The subrepresentation spanned, at each vertex, by the columns of `bases[v]`.
/// Throws AlgebraError if the subspaces are not closed under the arrows.
Representation restrict_to(const Representation& ambient, const std::vector<Matrix>& bases);

/// A module homomorphism: one matrix per vertex.
struct ModuleMap {
    std::vector<Matrix> components;

    bool is_zero() const;
};

/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f);
bool is_bijective(const ModuleMap& f);

struct HomSpace {
    std::size_t dimension = 0;
    std::vector<ModuleMap> basis;
};

HomSpace hom_space(const Representation& m, const Representation& n);
std::size_t hom_dimension(const Representation& m, const Representation& n);

// ---------------------------------------------------------------------------
// Strings

struct Letter {
    ArrowId arrow = 0;
    bool inverse = false;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A walk in the quiver. The trivial word at v has no letters and stands for the
/// simple module S_v. Ordering is by length, then lexicographic on letters (direct
/// before inverse, arrows in declaration order), then start vertex.
class StringWord {
public:
    StringWord() = default;
    static StringWord trivial(VertexId v) { return StringWord(v, v, {}); }
    /// Computes endpoints from the quiver; throws AlgebraError if letters do not chain.
    static StringWord from_letters(const Quiver& q, std::vector<Letter> letters);

    VertexId start() const { return start_; }
    VertexId end() const { return end_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_trivial() const { return letters_.empty(); }

    StringWord inverse() const;
    /// The lexicographic minimum of the word and its inverse.
    StringWord canonical() const;
    bool is_canonical() const { return *this == canonical(); }

    /// Vertices visited, start to end; size is length() + 1.
    std::vector<VertexId> walk(const Quiver& q) const;

    friend bool operator==(const StringWord&, const StringWord&) = default;
    friend std::strong_ordering operator<=>(const StringWord& a, const StringWord& b);

private:
    StringWord(VertexId start, VertexId end, std::vector<Letter> letters)
        : start_(start), end_(end), letters_(std::move(letters)) {}

    VertexId start_ = 0;
    VertexId end_ = 0;
    std::vector<Letter> letters_;
};

/// Empty string when `w` is a valid string for `alg`, otherwise the reason.
std::string word_defect(const Presentation& alg, const StringWord& w);

/// "S<v>" for trivial words, otherwise arrow names with '~' marking inverse letters.
std::string format_word(const Presentation& alg, const StringWord& w);
StringWord parse_word(const Presentation& alg, std::string_view text);

/// Throws AlgebraError when `w` is not a valid string.
Representation string_module(const AlgebraPtr& alg, const StringWord& w);

/// All canonical strings with at most `max_letters` letters, sorted.
std::vector<StringWord> enumerate_strings(const Presentation& alg, std::size_t max_letters);

/// The string of the indecomposable projective P_v, when P_v is a string module
/// (at most two maximal paths leave v).
std::optional<StringWord> projective_word(const Algebra& alg, VertexId v);

// ---------------------------------------------------------------------------
// Projectives, injectives, presentations, the AR translate

Representation projective(const AlgebraPtr& alg, VertexId v);
Representation injective(const AlgebraPtr& alg, VertexId v);
Representation projective_sum(const AlgebraPtr& alg, const std::vector<VertexId>& vertices);
Representation injective_sum(const AlgebraPtr& alg, const std::vector<VertexId>& vertices);

/// Sparse linear combination of basis paths.
using PathCombination = std::vector<std::pair<std::size_t, Rational>>;

/// A map between direct sums of indecomposable projectives. entries[i][j] is the
/// component P_domain[j] -> P_codomain[i], an element of e_codomain[i] A e_domain[j],
/// i.e. a combination of paths from codomain[i] to domain[j].
struct ProjectiveMap {
    std::vector<VertexId> domain;
    std::vector<VertexId> codomain;
    std::vector<std::vector<PathCombination>> entries;
};

struct ProjectivePresentation {
    std::vector<VertexId> p1;
    std::vector<VertexId> p0;
    ProjectiveMap map;
};

/// P1 -> P0 -> M -> 0 with P0 the projective cover of M and P1 that of the kernel.
ProjectivePresentation min_projective_presentation(const Representation& m);

/// Kernel of the projective cover of M.
Representation syzygy(const Representation& m);

/// Top multiplicities: dim (M / rad M)_v.
std::vector<std::size_t> top_dims(const Representation& m);

/// tau M as the kernel of nu(P1) -> nu(P0), nu the Nakayama functor.
Representation ar_translate(const Representation& m);

bool is_tau_rigid(const Representation& m);

/// Isomorphism test. Exact for indecomposable modules (a pair of basis maps whose
/// composite is invertible exists iff M and N are isomorphic); for decomposable
/// modules a failed search over basis maps and fixed combinations returns false.
bool is_isomorphic(const Representation& m, const Representation& n);
bool is_isomorphic(const StringWord& a, const StringWord& b);

bool is_sincere(const Representation& m);

} // namespace taut

#endif // TAUT_MODULE_HPP
