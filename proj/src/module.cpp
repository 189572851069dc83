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

#include <numeric>
#include <random>

#include "taut/errors.hpp"
#include "taut/module.hpp"

namespace taut {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.num_vertices()) throw AlgebraError("dimension vector has the wrong length");
    if (maps_.size() != q.num_arrows()) throw AlgebraError("one matrix per arrow is required");
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        // Zero-sized matrices may come in default constructed.
        if (dims_[ar.target] == 0 || dims_[ar.source] == 0) {
            maps_[a] = Matrix(dims_[ar.target], dims_[ar.source]);
            continue;
        }
        if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
            throw AlgebraError("matrix for arrow '" + ar.name + "' has the wrong shape");
    }
    for (const auto& r : algebra_->presentation().relations())
        if (!(maps_[r.second] * maps_[r.first]).is_zero())
            throw AlgebraError("relation '" + q.arrow(r.first).name + " " + q.arrow(r.second).name +
                               "' is not satisfied");
}

Representation Representation::zero(AlgebraPtr algebra) {
    const auto n = algebra->num_vertices();
    const auto m = algebra->num_arrows();
    return Representation(std::move(algebra), std::vector<std::size_t>(n, 0), std::vector<Matrix>(m));
}

std::size_t Representation::dimension() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Vector Representation::act(std::size_t path_index, const Vector& v) const {
    Vector out = v;
    for (ArrowId a : algebra_->path(path_index).arrows) out = maps_[a] * out;
    return out;
}

bool same_algebra(const Representation& a, const Representation& b) {
    return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!same_algebra(a, b)) throw AlgebraError("direct sum of modules over different algebras");
    std::vector<std::size_t> dims(a.dims().size());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
    std::vector<Matrix> maps;
    for (ArrowId x = 0; x < a.maps().size(); ++x) maps.push_back(block_diagonal(a.map(x), b.map(x)));
    return Representation(a.algebra_ptr(), std::move(dims), std::move(maps));
}

Representation direct_sum(AlgebraPtr algebra, const std::vector<Representation>& parts) {
    Representation out = Representation::zero(std::move(algebra));
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

Representation restrict_to(const Representation& ambient, const std::vector<Matrix>& bases) {
    const Quiver& q = ambient.algebra().quiver();
    std::vector<std::size_t> dims(q.num_vertices());
    for (VertexId v = 0; v < dims.size(); ++v) dims[v] = bases[v].cols();
    std::vector<Matrix> maps(q.num_arrows());
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        if (dims[ar.source] == 0 || dims[ar.target] == 0) {
            if (dims[ar.source] != 0 && !(ambient.map(a) * bases[ar.source]).is_zero())
                throw AlgebraError("subspaces are not closed under arrow '" + ar.name + "'");
            continue;
        }
        auto x = solve(bases[ar.target], ambient.map(a) * bases[ar.source]);
        if (!x) throw AlgebraError("subspaces are not closed under arrow '" + ar.name + "'");
        maps[a] = std::move(*x);
    }
    return Representation(ambient.algebra_ptr(), std::move(dims), std::move(maps));
}

bool ModuleMap::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    ModuleMap out;
    for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
    return out;
}

bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f) {
    const Quiver& q = from.algebra().quiver();
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        if (!(to.map(a) * f.components[ar.source] == f.components[ar.target] * from.map(a))) return false;
    }
    return true;
}

bool is_bijective(const ModuleMap& f) {
    for (const auto& c : f.components)
        if (c.rows() != c.cols() || !is_invertible(c)) return false;
    return true;
}

namespace {

// Coefficient matrix of the intertwining equations N(a) f_s = f_t M(a); unknowns are
// the entries of the f_v, row-major within each vertex block.
Matrix intertwining_system(const Representation& m, const Representation& n, std::vector<std::size_t>& offsets) {
    if (!same_algebra(m, n)) throw AlgebraError("Hom between modules over different algebras");
    const Quiver& q = m.algebra().quiver();
    offsets.assign(q.num_vertices() + 1, 0);
    for (VertexId v = 0; v < q.num_vertices(); ++v) offsets[v + 1] = offsets[v] + n.dim(v) * m.dim(v);
    std::size_t equations = 0;
    for (const auto& ar : q.arrows()) equations += n.dim(ar.target) * m.dim(ar.source);
    Matrix sys(equations, offsets.back());
    std::size_t row = 0;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrow(a);
        const std::size_t s = ar.source, t = ar.target;
        const Matrix& na = n.map(a);
        const Matrix& ma = m.map(a);
        for (std::size_t r = 0; r < n.dim(t); ++r)
            for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
                // (N(a) f_s)[r][c] = sum_k N(a)[r][k] f_s[k][c]
                for (std::size_t k = 0; k < n.dim(s); ++k)
                    if (sgn(na(r, k)) != 0) sys(row, offsets[s] + k * m.dim(s) + c) += na(r, k);
                // (f_t M(a))[r][c] = sum_k f_t[r][k] M(a)[k][c]
                for (std::size_t k = 0; k < m.dim(t); ++k)
                    if (sgn(ma(k, c)) != 0) sys(row, offsets[t] + r * m.dim(t) + k) -= ma(k, c);
            }
    }
    return sys;
}

} // namespace

HomSpace hom_space(const Representation& m, const Representation& n) {
    std::vector<std::size_t> offsets;
    const Matrix sys = intertwining_system(m, n, offsets);
    const Matrix kernel = nullspace(sys);
    HomSpace out;
    out.dimension = kernel.cols();
    const std::size_t nv = m.dims().size();
    for (std::size_t b = 0; b < kernel.cols(); ++b) {
        ModuleMap f;
        for (VertexId v = 0; v < nv; ++v) {
            Matrix comp(n.dim(v), m.dim(v));
            for (std::size_t r = 0; r < n.dim(v); ++r)
                for (std::size_t c = 0; c < m.dim(v); ++c) comp(r, c) = kernel(offsets[v] + r * m.dim(v) + c, b);
            f.components.push_back(std::move(comp));
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dimension(const Representation& m, const Representation& n) {
    std::vector<std::size_t> offsets;
    Matrix sys = intertwining_system(m, n, offsets);
    return sys.cols() - rank(std::move(sys));
}

bool is_sincere(const Representation& m) {
    if (m.dims().empty()) return false;
    for (auto d : m.dims())
        if (d == 0) return false;
    return true;
}

bool is_isomorphic(const StringWord& a, const StringWord& b) { return a.canonical() == b.canonical(); }

bool is_isomorphic(const Representation& m, const Representation& n) {
    if (!same_algebra(m, n) || m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    const HomSpace mn = hom_space(m, n);
    const HomSpace nm = hom_space(n, m);
    if (mn.dimension != nm.dimension) return false;
    if (mn.dimension != hom_dimension(m, m) || mn.dimension != hom_dimension(n, n)) return false;
    for (const auto& f : mn.basis)
        if (is_bijective(f)) return true;
    // If some composite g f is invertible then f is injective, hence bijective.
    for (const auto& f : mn.basis)
        for (const auto& g : nm.basis)
            if (is_bijective(compose(g, f))) return true;
    std::mt19937 gen(0x7461u);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (int attempt = 0; attempt < 32; ++attempt) {
        ModuleMap f;
        for (VertexId v = 0; v < m.dims().size(); ++v) f.components.emplace_back(n.dim(v), m.dim(v));
        for (const auto& b : mn.basis) {
            const Rational c = coeff(gen);
            for (VertexId v = 0; v < m.dims().size(); ++v) f.components[v] = f.components[v] + c * b.components[v];
        }
        if (is_bijective(f)) return true;
    }
    return false;
}

} // namespace taut
