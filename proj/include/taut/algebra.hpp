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
// Bound quiver presentations kQ/I with I generated by length-2 monomial relations.
//
// Conventions: an arrow a goes from source(a) to target(a). The relation (a, b)
// requires target(a) == source(b) and says the path "a then b" (written ba in
// composition order) lies in I. Vertices and arrows are addressed by their
// declaration index; every enumeration follows declaration order.

#ifndef TAUT_ALGEBRA_HPP
#define TAUT_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    Quiver() = default;
    /// Throws AlgebraError on duplicate identifiers or dangling endpoints.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;

    std::vector<ArrowId> arrows_from(VertexId v) const;
    std::vector<ArrowId> arrows_to(VertexId v) const;

    /// Number of connected components of the underlying graph.
    std::size_t num_components() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct Relation {
    ArrowId first = 0;
    ArrowId second = 0;

    friend auto operator<=>(const Relation&, const Relation&) = default;
};

class Presentation {
public:
    Presentation() = default;
    /// Relations are deduplicated and sorted. Throws AlgebraError when a relation is
    /// not a composable length-2 path.
    Presentation(std::string label, Quiver quiver, std::vector<Relation> relations);

    const std::string& label() const { return label_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t num_vertices() const { return quiver_.num_vertices(); }
    std::size_t num_arrows() const { return quiver_.num_arrows(); }

    bool is_relation(ArrowId first, ArrowId second) const;

    /// An arrow cycle in the composition digraph (a -> b when a, b compose and
    /// (a, b) is not a relation). Empty iff the presentation is finite-dimensional.
    std::vector<ArrowId> composition_cycle() const;
    bool is_finite_dimensional() const { return composition_cycle().empty(); }

    Presentation relabeled(std::string label) const;

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.quiver_ == b.quiver_ && a.relations_ == b.relations_;
    }

private:
    std::string label_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::set<std::pair<ArrowId, ArrowId>> relation_set_;
};

struct Violation {
    std::string axiom;  // G1, G2, G3, G4 or FINITE-DIM
    std::vector<std::string> witnesses;
    std::string message;
};

struct GentleReport {
    bool is_gentle = true;
    std::vector<Violation> violations;
};

/// A path of the quiver: a composable arrow sequence read first-to-last, or the
/// trivial path at `source` when `arrows` is empty.
struct Path {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<ArrowId> arrows;

    std::size_t length() const { return arrows.size(); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

struct PathBasis {
    std::vector<Path> paths;
    std::size_t dimension() const { return paths.size(); }
};

Presentation parse_algebra(std::string_view text);
std::string format_algebra(const Presentation& alg);

GentleReport check_gentle(const Presentation& alg);

/// Relation-avoiding paths ordered by length, then lexicographically by arrow index
/// (trivial paths by vertex). Throws AlgebraError on infinite-dimensional input.
PathBasis path_basis(const Presentation& alg);

/// Presentation of A / <e> where e is the sum of the trivial paths at `vertices`.
Presentation factor_by_idempotent(const Presentation& alg, const std::vector<std::string>& vertices);

/// The product algebra; identifiers of `b` that collide with `a` get primes appended.
Presentation disjoint_union(const Presentation& a, const Presentation& b);

std::string format_path(const Presentation& alg, const Path& p);

/// A finite-dimensional presentation together with its path basis and lookup tables.
/// Every module and tilting computation is anchored on one of these.
class Algebra {
public:
    explicit Algebra(Presentation presentation);

    const Presentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver(); }
    std::size_t num_vertices() const { return pres_.num_vertices(); }
    std::size_t num_arrows() const { return pres_.num_arrows(); }

    const PathBasis& basis() const { return basis_; }
    const Path& path(std::size_t index) const { return basis_.paths[index]; }
    std::size_t trivial_path(VertexId v) const { return trivial_.at(v); }
    /// Indices (into basis()) of the nonzero paths from `from` to `to`, in basis order.
    const std::vector<std::size_t>& paths_between(VertexId from, VertexId to) const {
        return between_[from][to];
    }
    /// Position of path `index` inside paths_between(source, target).
    std::size_t position_between(std::size_t index) const { return position_[index]; }

    /// Index of "p then q", or nullopt when the composite is zero.
    std::optional<std::size_t> concat(std::size_t p, std::size_t q) const;
    std::optional<std::size_t> extend(std::size_t p, ArrowId a) const;

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.pres_ == b.pres_; }

private:
    Presentation pres_;
    PathBasis basis_;
    std::vector<std::size_t> trivial_;
    std::vector<std::vector<std::vector<std::size_t>>> between_;
    std::vector<std::size_t> position_;
    std::map<std::pair<VertexId, std::vector<ArrowId>>, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Presentation presentation);

} // namespace taut

#endif // TAUT_ALGEBRA_HPP
