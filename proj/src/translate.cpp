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
// Projective presentations and the Auslander-Reiten translate.
//
// The Nakayama functor sends P_v to I_v = D(A e_v), whose space at x is dual to the
// paths x ~> v. A map P_v -> P_w given by c in e_w A e_v (paths w ~> v) becomes
// I_v -> I_w, the transpose of r |-> r then c on paths x ~> w.

#include "taut/errors.hpp"
#include "taut/module.hpp"

namespace taut {

Representation projective(const AlgebraPtr& alg, VertexId v) {
    const Quiver& q = alg->quiver();
    if (v >= q.num_vertices()) throw AlgebraError("unknown vertex");
    std::vector<std::size_t> dims(q.num_vertices());
    for (VertexId x = 0; x < q.num_vertices(); ++x) dims[x] = alg->paths_between(v, x).size();
    std::vector<Matrix> maps;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        Matrix m(dims[ar.target], dims[ar.source]);
        for (std::size_t p : alg->paths_between(v, ar.source))
            if (auto e = alg->extend(p, a)) m(alg->position_between(*e), alg->position_between(p)) = 1;
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

Representation injective(const AlgebraPtr& alg, VertexId v) {
    const Quiver& q = alg->quiver();
    if (v >= q.num_vertices()) throw AlgebraError("unknown vertex");
    std::vector<std::size_t> dims(q.num_vertices());
    for (VertexId x = 0; x < q.num_vertices(); ++x) dims[x] = alg->paths_between(x, v).size();
    std::vector<Matrix> maps;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        Matrix m(dims[ar.target], dims[ar.source]);
        // q* |-> q'* when q = a then q'.
        const std::size_t single = *alg->extend(alg->trivial_path(ar.source), a);
        for (std::size_t rest : alg->paths_between(ar.target, v))
            if (auto whole = alg->concat(single, rest))
                m(alg->position_between(rest), alg->position_between(*whole)) = 1;
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

Representation projective_sum(const AlgebraPtr& alg, const std::vector<VertexId>& vertices) {
    std::vector<Representation> parts;
    for (auto v : vertices) parts.push_back(projective(alg, v));
    return direct_sum(alg, parts);
}

Representation injective_sum(const AlgebraPtr& alg, const std::vector<VertexId>& vertices) {
    std::vector<Representation> parts;
    for (auto v : vertices) parts.push_back(injective(alg, v));
    return direct_sum(alg, parts);
}

namespace {

// Columns of the identity that complete the radical (sum of arrow images) at v.
std::vector<std::size_t> top_columns(const Representation& m, VertexId v) {
    const Quiver& q = m.algebra().quiver();
    std::vector<Matrix> images;
    for (ArrowId a : q.arrows_to(v))
        if (m.dim(q.arrow(a).source) > 0) images.push_back(m.map(a));
    const Matrix rad = hstack(m.dim(v), images);
    return extending_columns(rad, Matrix::identity(m.dim(v)));
}

struct Cover {
    std::vector<VertexId> vertices;  // one per generator
    std::vector<Vector> generators;  // in M_vertex coordinates
};

Cover projective_cover(const Representation& m) {
    Cover c;
    for (VertexId v = 0; v < m.dims().size(); ++v)
        for (auto col : top_columns(m, v)) {
            Vector g(m.dim(v));
            g[col] = 1;
            c.vertices.push_back(v);
            c.generators.push_back(std::move(g));
        }
    return c;
}

// At vertex x: the matrix of P0 -> M, columns ordered generator-major, then by paths.
Matrix cover_map_at(const Representation& m, const Cover& c, VertexId x) {
    const Algebra& alg = m.algebra();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < c.vertices.size(); ++j)
        for (std::size_t p : alg.paths_between(c.vertices[j], x)) cols.push_back(m.act(p, c.generators[j]));
    return Matrix::from_columns(m.dim(x), cols);
}

struct Syzygy {
    Cover cover;
    Representation kernel;
    std::vector<Matrix> inclusion;  // per vertex, kernel basis in P0 coordinates
};

Syzygy compute_syzygy(const Representation& m) {
    Syzygy s;
    s.cover = projective_cover(m);
    const Representation p0 = projective_sum(m.algebra_ptr(), s.cover.vertices);
    for (VertexId x = 0; x < m.dims().size(); ++x) {
        Matrix k = nullspace(cover_map_at(m, s.cover, x));
        if (k.rows() != p0.dim(x)) k = Matrix(p0.dim(x), 0);
        s.inclusion.push_back(std::move(k));
    }
    s.kernel = restrict_to(p0, s.inclusion);
    return s;
}

} // namespace

std::vector<std::size_t> top_dims(const Representation& m) {
    std::vector<std::size_t> out;
    for (VertexId v = 0; v < m.dims().size(); ++v) out.push_back(top_columns(m, v).size());
    return out;
}

Representation syzygy(const Representation& m) { return compute_syzygy(m).kernel; }

ProjectivePresentation min_projective_presentation(const Representation& m) {
    const Algebra& alg = m.algebra();
    Syzygy s = compute_syzygy(m);
    ProjectivePresentation out;
    out.p0 = s.cover.vertices;
    out.map.codomain = s.cover.vertices;
    const Representation& k = s.kernel;
    for (VertexId x = 0; x < k.dims().size(); ++x)
        for (auto col : top_columns(k, x)) {
            // Generator of the kernel at x, in P0(x) coordinates.
            const Vector g = s.inclusion[x].column(col);
            out.p1.push_back(x);
            std::vector<PathCombination> column;
            std::size_t offset = 0;
            for (VertexId v0 : s.cover.vertices) {
                PathCombination comb;
                const auto& paths = alg.paths_between(v0, x);
                for (std::size_t i = 0; i < paths.size(); ++i)
                    if (sgn(g[offset + i]) != 0) comb.push_back({paths[i], g[offset + i]});
                offset += paths.size();
                column.push_back(std::move(comb));
            }
            for (std::size_t i = 0; i < column.size(); ++i) {
                if (out.map.entries.size() <= i) out.map.entries.resize(column.size());
                out.map.entries[i].push_back(std::move(column[i]));
            }
        }
    out.map.domain = out.p1;
    out.map.entries.resize(out.p0.size());
    return out;
}

Representation ar_translate(const Representation& m) {
    const AlgebraPtr& alg = m.algebra_ptr();
    const ProjectivePresentation pres = min_projective_presentation(m);
    const Representation i1 = injective_sum(alg, pres.p1);
    if (i1.is_zero()) return Representation::zero(alg);
    std::vector<Matrix> kernels;
    for (VertexId x = 0; x < m.dims().size(); ++x) {
        // nu(f) at x: rows = I0(x), columns = I1(x).
        std::vector<std::size_t> row_off{0}, col_off{0};
        for (VertexId w : pres.p0) row_off.push_back(row_off.back() + alg->paths_between(x, w).size());
        for (VertexId w : pres.p1) col_off.push_back(col_off.back() + alg->paths_between(x, w).size());
        Matrix nu(row_off.back(), col_off.back());
        for (std::size_t i = 0; i < pres.p0.size(); ++i)
            for (std::size_t j = 0; j < pres.p1.size(); ++j)
                for (const auto& [c, coef] : pres.map.entries[i][j])
                    for (std::size_t r : alg->paths_between(x, pres.p0[i]))
                        if (auto s = alg->concat(r, c))
                            nu(row_off[i] + alg->position_between(r), col_off[j] + alg->position_between(*s)) += coef;
        Matrix k = nullspace(nu);
        if (k.rows() != i1.dim(x)) k = Matrix(i1.dim(x), 0);
        kernels.push_back(std::move(k));
    }
    return restrict_to(i1, kernels);
}

bool is_tau_rigid(const Representation& m) {
    if (m.is_zero()) return true;
    return hom_dimension(m, ar_translate(m)) == 0;
}

} // namespace taut
