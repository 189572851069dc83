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
#include <functional>
#include <set>

#include "taut/errors.hpp"
#include "taut/reduction.hpp"

namespace taut {
namespace {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v = zero_vector(n);
    v[k] = 1;
    return v;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector flatten(const ModuleMap& f) {
    Vector out;
    for (const auto& c : f.components)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c(r, k));
    return out;
}

ModuleMap combine(const std::vector<ModuleMap>& maps, const Vector& coeffs, const ModuleMap& zero) {
    ModuleMap out = zero;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) == 0) continue;
        for (std::size_t v = 0; v < out.components.size(); ++v)
            out.components[v] = out.components[v] + coeffs[k] * maps[k].components[v];
    }
    return out;
}

ModuleMap zero_map(const Representation& from, const Representation& to) {
    ModuleMap z;
    for (VertexId v = 0; v < from.dims().size(); ++v) z.components.emplace_back(to.dim(v), from.dim(v));
    return z;
}

// The table of End(T) together with the module maps behind its basis.
struct EndomorphismData {
    AssociativeAlgebraTable table;
    std::vector<ModuleMap> maps;
};

EndomorphismData build_endomorphisms(const std::vector<Representation>& summands, const std::vector<std::string>& labels) {
    const std::size_t n = summands.size();
    EndomorphismData out;
    out.table.vertex_labels = labels;
    // Flattened basis of each block, for solving.
    std::vector<std::vector<Matrix>> block_basis(n, std::vector<Matrix>(n));
    std::vector<std::vector<std::size_t>> block_offset(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // e_i B e_j = Hom(T_j, T_i)
            HomSpace h = hom_space(summands[j], summands[i]);
            std::vector<ModuleMap> chosen;
            if (i == j) {
                ModuleMap id;
                for (VertexId v = 0; v < summands[i].dims().size(); ++v) id.components.push_back(Matrix::identity(summands[i].dim(v)));
                std::vector<Vector> flat;
                for (const auto& f : h.basis) flat.push_back(flatten(f));
                const Vector idf = flatten(id);
                const auto extra = extending_columns(Matrix::from_columns(idf.size(), {idf}),
                                                     Matrix::from_columns(idf.size(), flat));
                chosen.push_back(id);
                for (auto k : extra) chosen.push_back(h.basis[k]);
            } else {
                chosen = h.basis;
            }
            block_offset[i][j] = out.maps.size();
            std::vector<Vector> cols;
            for (std::size_t k = 0; k < chosen.size(); ++k) {
                cols.push_back(flatten(chosen[k]));
                out.table.basis_labels.push_back(i == j && k == 0 ? "id(" + labels[i] + ")"
                                                                  : labels[j] + "->" + labels[i] + "#" + std::to_string(k));
                out.table.blocks.emplace_back(i, j);
                out.maps.push_back(std::move(chosen[k]));
            }
            std::size_t len = 0;
            for (VertexId v = 0; v < summands[i].dims().size(); ++v) len += summands[i].dim(v) * summands[j].dim(v);
            block_basis[i][j] = Matrix::from_columns(len, cols);
        }
    const std::size_t d = out.maps.size();
    out.table.products.assign(d, std::vector<Vector>(d, zero_vector(d)));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const auto [i, j] = out.table.blocks[k];
            const auto [j2, m] = out.table.blocks[l];
            if (j != j2) continue;
            const Vector prod = flatten(compose(out.maps[k], out.maps[l]));
            if (is_zero_vector(prod)) continue;
            const Matrix& basis = block_basis[i][m];
            auto c = solve(basis, Matrix::from_columns(prod.size(), {prod}));
            if (!c) throw ConsistencyError("composite outside its Hom space");
            for (std::size_t r = 0; r < c->rows(); ++r) out.table.products[k][l][block_offset[i][m] + r] = (*c)(r, 0);
        }
    for (std::size_t i = 0; i < n; ++i) out.table.idempotents.push_back(unit_vector(d, block_offset[i][i]));
    return out;
}

} // namespace

Vector AssociativeAlgebraTable::multiply(const Vector& x, const Vector& y) const {
    const std::size_t d = dimension();
    Vector out = zero_vector(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (sgn(x[k]) == 0) continue;
        for (std::size_t l = 0; l < d; ++l) {
            if (sgn(y[l]) == 0) continue;
            const Rational c = x[k] * y[l];
            for (std::size_t m = 0; m < d; ++m)
                if (sgn(products[k][l][m]) != 0) out[m] += c * products[k][l][m];
        }
    }
    return out;
}

bool AssociativeAlgebraTable::is_associative() const {
    const std::size_t d = dimension();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                const Vector ea = unit_vector(d, a), eb = unit_vector(d, b), ec = unit_vector(d, c);
                if (multiply(multiply(ea, eb), ec) != multiply(ea, multiply(eb, ec))) return false;
            }
    return true;
}

bool AssociativeAlgebraTable::has_valid_idempotents() const {
    const std::size_t d = dimension();
    Vector one = zero_vector(d);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        for (std::size_t j = 0; j < idempotents.size(); ++j) {
            const Vector p = multiply(idempotents[i], idempotents[j]);
            if (i == j ? p != idempotents[i] : !is_zero_vector(p)) return false;
        }
        for (std::size_t k = 0; k < d; ++k) one[k] += idempotents[i][k];
    }
    for (std::size_t k = 0; k < d; ++k) {
        const Vector b = unit_vector(d, k);
        if (multiply(one, b) != b || multiply(b, one) != b) return false;
    }
    return true;
}

AssociativeAlgebraTable endomorphism_algebra(const std::vector<Representation>& summands,
                                             const std::vector<std::string>& labels) {
    if (labels.size() != summands.size()) throw AlgebraError("one label per summand is required");
    return build_endomorphisms(summands, labels).table;
}

QuotientTable quotient_by_idempotents(const AssociativeAlgebraTable& t, const std::vector<std::size_t>& killed) {
    const std::size_t d = t.dimension();
    std::vector<Vector> gens;
    for (auto u : killed) {
        if (u >= t.idempotents.size()) throw AlgebraError("unknown idempotent");
        for (std::size_t k = 0; k < d; ++k) {
            const Vector left = t.multiply(unit_vector(d, k), t.idempotents[u]);
            if (is_zero_vector(left)) continue;
            for (std::size_t l = 0; l < d; ++l) {
                Vector g = t.multiply(left, unit_vector(d, l));
                if (!is_zero_vector(g)) gens.push_back(std::move(g));
            }
        }
    }
    const Matrix ideal = independent_columns(Matrix::from_columns(d, gens));
    const auto reps = extending_columns(ideal, Matrix::identity(d));
    // Coordinates with respect to (ideal basis | representatives).
    std::vector<Vector> cols = ideal.columns();
    for (auto r : reps) cols.push_back(unit_vector(d, r));
    const Matrix change = Matrix::from_columns(d, cols);
    const Matrix inverse = d ? *solve(change, Matrix::identity(d)) : Matrix();
    auto project = [&](const Vector& v) {
        const Vector all = d ? inverse * v : Vector{};
        return Vector(all.begin() + static_cast<std::ptrdiff_t>(ideal.cols()), all.end());
    };
    QuotientTable q;
    q.lift = reps;
    std::vector<std::optional<std::size_t>> renumber(t.idempotents.size());
    for (std::size_t i = 0; i < t.idempotents.size(); ++i)
        if (std::find(killed.begin(), killed.end(), i) == killed.end()) {
            renumber[i] = q.kept_vertices.size();
            q.kept_vertices.push_back(i);
            q.table.vertex_labels.push_back(t.vertex_labels[i]);
        }
    for (auto r : reps) {
        const auto [i, j] = t.blocks[r];
        if (!renumber[i] || !renumber[j]) throw ConsistencyError("quotient representative in a killed block");
        q.table.basis_labels.push_back(t.basis_labels[r]);
        q.table.blocks.emplace_back(*renumber[i], *renumber[j]);
    }
    const std::size_t qd = reps.size();
    q.table.products.assign(qd, std::vector<Vector>(qd));
    for (std::size_t k = 0; k < qd; ++k)
        for (std::size_t l = 0; l < qd; ++l) q.table.products[k][l] = project(t.products[reps[k]][reps[l]]);
    for (auto i : q.kept_vertices) q.table.idempotents.push_back(project(t.idempotents[i]));
    return q;
}

BoundQuiverPresentation present_as_bound_quiver(const AssociativeAlgebraTable& t) {
    const std::size_t n = t.idempotents.size();
    const std::size_t d = t.dimension();
    if (!t.has_valid_idempotents()) throw AlgebraError("idempotents are not orthogonal or do not sum to one");
    // Elements of each block, and the radical part.
    std::vector<std::vector<std::vector<Vector>>> rad(n, std::vector<std::vector<Vector>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < d; ++k)
                if (t.blocks[k] == std::make_pair(i, j)) members.push_back(k);
            if (i != j) {
                for (auto k : members) rad[i][j].push_back(unit_vector(d, k));
                continue;
            }
            // e_i B e_i is local when basic; its radical is the kernel of x |-> trace(left
            // multiplication by x), and must consist of nilpotent elements.
            const std::size_t m = members.size();
            auto left_mult = [&](const Vector& x) {
                Matrix l(m, m);
                for (std::size_t c = 0; c < m; ++c) {
                    const Vector p = t.multiply(x, unit_vector(d, members[c]));
                    for (std::size_t r = 0; r < m; ++r) l(r, c) = p[members[r]];
                }
                return l;
            };
            Matrix functional(1, m);
            for (std::size_t c = 0; c < m; ++c) functional(0, c) = trace(left_mult(unit_vector(d, members[c])));
            const Matrix kernel = nullspace(functional);
            if (kernel.cols() + 1 != m)
                throw AlgebraError("algebra is not basic: e_" + t.vertex_labels[i] + " B e_" + t.vertex_labels[i] +
                                   " has no one-dimensional top");
            for (std::size_t c = 0; c < kernel.cols(); ++c) {
                Vector x = zero_vector(d);
                for (std::size_t r = 0; r < m; ++r) x[members[r]] = kernel(r, c);
                if (!is_nilpotent(left_mult(x)))
                    throw AlgebraError("algebra is not basic: a non-nilpotent element of trace zero lies in e_" +
                                       t.vertex_labels[i] + " B e_" + t.vertex_labels[i]);
                rad[i][j].push_back(std::move(x));
            }
        }
    // Arrows: an echelon complement of rad^2 in rad, block by block.
    std::vector<std::string> vertex_names;
    for (std::size_t i = 0; i < n; ++i) vertex_names.push_back(std::to_string(i + 1));
    std::vector<Arrow> arrows;
    BoundQuiverPresentation out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rad[i][j].empty()) continue;
            std::vector<Vector> square;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& x : rad[i][k])
                    for (const auto& y : rad[k][j]) {
                        Vector p = t.multiply(x, y);
                        if (!is_zero_vector(p)) square.push_back(std::move(p));
                    }
            const auto picks = extending_columns(Matrix::from_columns(d, square), Matrix::from_columns(d, rad[i][j]));
            for (auto c : picks) {
                arrows.push_back({"a" + std::to_string(arrows.size() + 1), i, j});
                out.arrow_elements.push_back(rad[i][j][c]);
            }
        }
    std::vector<Relation> relations;
    for (ArrowId a = 0; a < arrows.size(); ++a)
        for (ArrowId b = 0; b < arrows.size(); ++b)
            if (arrows[a].target == arrows[b].source &&
                is_zero_vector(t.multiply(out.arrow_elements[a], out.arrow_elements[b])))
                relations.push_back({a, b});
    out.presentation = Presentation("", Quiver(vertex_names, arrows), relations);
    if (auto cycle = out.presentation.composition_cycle(); !cycle.empty()) {
        std::string witness;
        for (auto a : cycle) witness += (witness.empty() ? "" : " ") + arrows[a].name;
        throw AlgebraError("relations are not length-2 monomial: the arrow cycle " + witness +
                           " has no zero composite, but the table is finite-dimensional");
    }
    // Multiplication replay: path images must form a basis of the table.
    const PathBasis paths = path_basis(out.presentation);
    std::vector<Vector> images;
    for (const auto& p : paths.paths) {
        Vector img = t.idempotents[p.source];
        for (auto a : p.arrows) img = t.multiply(img, out.arrow_elements[a]);
        images.push_back(img);
        if (rank(Matrix::from_columns(d, images)) != images.size())
            throw AlgebraError("relations are not length-2 monomial: the path " +
                               format_path(out.presentation, p) + " is dependent on the other paths");
    }
    if (images.size() != d)
        throw AlgebraError("presentation has dimension " + std::to_string(images.size()) + " but the table has " +
                           std::to_string(d));
    return out;
}

ReductionData reduce(const CandidateSet& cs, const TauRigidPair& u) {
    ReductionData rd;
    rd.base = cs.algebra_ptr();
    rd.u = u;
    rd.bongartz = bongartz_completion(cs, u);
    const AlgebraPtr& alg = rd.base;
    std::vector<Representation> summands;
    std::vector<std::string> labels;
    std::vector<std::size_t> killed;
    for (const auto& w : rd.bongartz.modules()) {
        if (std::binary_search(u.modules().begin(), u.modules().end(), w)) killed.push_back(summands.size());
        summands.push_back(string_module(alg, w));
        labels.push_back(format_word(alg->presentation(), w));
    }
    EndomorphismData end = build_endomorphisms(summands, labels);
    const QuotientTable q = quotient_by_idempotents(end.table, killed);
    const BoundQuiverPresentation bq = present_as_bound_quiver(q.table);
    for (auto i : q.kept_vertices) {
        rd.vertex_words.push_back(rd.bongartz.modules()[i]);
        rd.vertex_modules.push_back(summands[i]);
    }
    const Quiver& rq = bq.presentation.quiver();
    for (ArrowId a = 0; a < rq.num_arrows(); ++a) {
        // Lift from quotient coordinates to End(T) coordinates.
        Vector coeffs = zero_vector(end.maps.size());
        for (std::size_t k = 0; k < q.lift.size(); ++k) coeffs[q.lift[k]] = bq.arrow_elements[a][k];
        const auto& from = rd.vertex_modules[rq.arrow(a).target];
        const auto& to = rd.vertex_modules[rq.arrow(a).source];
        rd.arrow_maps.push_back(combine(end.maps, coeffs, zero_map(from, to)));
    }
    std::string label = alg->presentation().label();
    label = (label.empty() ? "A" : label) + " reduced at " + format_pair(alg->presentation(), u);
    rd.reduced = make_algebra(bq.presentation.relabeled(label));
    rd.u_module = module_part(alg, u);
    rd.tau_u = ar_translate(rd.u_module);
    return rd;
}

bool wide_membership(const Representation& x, const ReductionData& rd) {
    for (auto v : rd.u.supports())
        if (x.dim(v) != 0) return false;
    if (x.is_zero()) return true;
    return hom_dimension(x, rd.tau_u) == 0 && hom_dimension(rd.u_module, x) == 0;
}

Representation reduction_functor(const Representation& x, const ReductionData& rd) {
    if (!wide_membership(x, rd)) throw PreconditionError("module is not in the wide subcategory of the reduction");
    const std::size_t n = rd.vertex_modules.size();
    std::vector<HomSpace> spaces;
    std::vector<Matrix> flat;
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < n; ++i) {
        spaces.push_back(hom_space(rd.vertex_modules[i], x));
        std::vector<Vector> cols;
        for (const auto& f : spaces.back().basis) cols.push_back(flatten(f));
        std::size_t len = 0;
        for (VertexId v = 0; v < x.dims().size(); ++v) len += x.dim(v) * rd.vertex_modules[i].dim(v);
        flat.push_back(Matrix::from_columns(len, cols));
        dims.push_back(spaces.back().dimension);
    }
    const Quiver& rq = rd.reduced->quiver();
    std::vector<Matrix> maps;
    for (ArrowId a = 0; a < rq.num_arrows(); ++a) {
        const std::size_t i = rq.arrow(a).source, j = rq.arrow(a).target;
        Matrix m(dims[j], dims[i]);
        for (std::size_t k = 0; k < dims[i]; ++k) {
            const Vector img = flatten(compose(spaces[i].basis[k], rd.arrow_maps[a]));
            if (dims[j] == 0 || is_zero_vector(img)) continue;
            auto c = solve(flat[j], Matrix::from_columns(img.size(), {img}));
            if (!c) throw ConsistencyError("precomposition left the Hom space");
            for (std::size_t r = 0; r < dims[j]; ++r) m(r, k) = (*c)(r, 0);
        }
        maps.push_back(std::move(m));
    }
    return Representation(rd.reduced, std::move(dims), std::move(maps));
}

TauRigidPair transport_pair(const CandidateSet& cs, const ReductionData& rd, const CandidateSet& reduced,
                            const TauRigidPair& p) {
    if (p.rank() != cs.num_vertices() || !p.contains(rd.u))
        throw PreconditionError("transport needs a support tau-tilting pair containing the reduced pair");
    const AlgebraPtr& base = cs.algebra_ptr();
    const AlgebraPtr& red = reduced.algebra_ptr();
    const auto reduced_words = enumerate_strings(red->presentation(), reduced.max_letters());
    std::vector<Representation> reduced_modules;
    for (const auto& w : reduced_words) reduced_modules.push_back(string_module(red, w));

    // Images of the indecomposables of Fac(M_p) lying in W.
    const Representation mp = module_part(base, p);
    std::set<std::size_t> image;
    for (const auto& w : enumerate_strings(base->presentation(), cs.max_letters())) {
        const Representation x = string_module(base, w);
        if (!wide_membership(x, rd) || !in_fac(x, mp)) continue;
        const Representation y = reduction_functor(x, rd);
        std::optional<std::size_t> match;
        for (std::size_t k = 0; k < reduced_words.size() && !match; ++k)
            if (reduced_modules[k].dims() == y.dims() && is_isomorphic(reduced_modules[k], y)) match = k;
        if (!match)
            throw ConsistencyError("image of " + format_word(base->presentation(), w) +
                                   " is not a string module of the reduced algebra within the bound");
        image.insert(*match);
    }
    const Completions targets = completions(reduced, TauRigidPair());
    if (targets.bound_exhausted) throw BoundExhausted("reduced support tau-tilting pairs are incomplete at the bound");
    std::vector<TauRigidPair> matches;
    for (const auto& q : targets.pairs) {
        const Representation mq = module_part(red, q);
        std::set<std::size_t> fac;
        for (std::size_t k = 0; k < reduced_words.size(); ++k)
            if (!q.modules().empty() && in_fac(reduced_modules[k], mq)) fac.insert(k);
        if (fac == image) matches.push_back(q);
    }
    if (matches.size() != 1)
        throw ConsistencyError(std::to_string(matches.size()) + " reduced pairs match the torsion class of " +
                               format_pair(base->presentation(), p));
    return matches.front();
}

std::optional<PresentationIsomorphism> find_isomorphism(const Presentation& a, const Presentation& b) {
    const Quiver& qa = a.quiver();
    const Quiver& qb = b.quiver();
    if (qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows() ||
        a.relations().size() != b.relations().size())
        return std::nullopt;
    const std::size_t nv = qa.num_vertices(), na = qa.num_arrows();
    auto signature = [](const Quiver& q, const Presentation& p, VertexId v) {
        std::size_t loops = 0, rels = 0;
        for (const auto& ar : q.arrows()) loops += ar.source == v && ar.target == v;
        for (const auto& r : p.relations()) rels += q.arrow(r.first).target == v;
        return std::make_tuple(q.arrows_from(v).size(), q.arrows_to(v).size(), loops, rels);
    };
    PresentationIsomorphism iso;
    iso.vertex_map.assign(nv, 0);
    iso.arrow_map.assign(na, 0);
    std::vector<char> used_v(nv, 0), used_a(na, 0);
    std::function<bool(ArrowId)> match_arrows = [&](ArrowId x) -> bool {
        if (x == na) return true;
        const auto& ar = qa.arrow(x);
        for (ArrowId y = 0; y < na; ++y) {
            if (used_a[y]) continue;
            const auto& br = qb.arrow(y);
            if (br.source != iso.vertex_map[ar.source] || br.target != iso.vertex_map[ar.target]) continue;
            iso.arrow_map[x] = y;
            bool ok = true;
            for (ArrowId z = 0; z <= x && ok; ++z) {
                const ArrowId w = iso.arrow_map[z];
                ok = a.is_relation(x, z) == b.is_relation(y, w) && a.is_relation(z, x) == b.is_relation(w, y);
            }
            if (!ok) continue;
            used_a[y] = 1;
            if (match_arrows(x + 1)) return true;
            used_a[y] = 0;
        }
        return false;
    };
    std::function<bool(VertexId)> match_vertices = [&](VertexId v) -> bool {
        if (v == nv) return match_arrows(0);
        for (VertexId w = 0; w < nv; ++w) {
            if (used_v[w] || signature(qa, a, v) != signature(qb, b, w)) continue;
            iso.vertex_map[v] = w;
            used_v[w] = 1;
            if (match_vertices(v + 1)) return true;
            used_v[w] = 0;
        }
        return false;
    };
    if (!match_vertices(0)) return std::nullopt;
    return iso;
}

} // namespace taut
