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
// Library-versus-oracle comparisons shared by the unit and acceptance suites. Each
// function returns a description of every disagreement; empty means full agreement.

#ifndef TAUT_TESTS_ENGINE_AGREEMENT_HPP
#define TAUT_TESTS_ENGINE_AGREEMENT_HPP

#include <string>
#include <vector>

#include "oracle.hpp"
#include "taut/module.hpp"

namespace agreement {

struct Tally {
    std::size_t compared = 0;
    std::vector<std::string> mismatches;

    void expect(bool ok, const std::string& what) {
        ++compared;
        if (!ok) mismatches.push_back(what);
    }
};

inline std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/// Hom dimensions, tau dimension vectors, Hom(X, tau N) and tau-rigidity for all
/// strings up to `bound` letters.
inline void compare_strings(const taut::AlgebraPtr& alg, std::size_t bound, Tally& t) {
    const auto& pres = alg->presentation();
    std::vector<taut::Representation> mods;
    std::vector<oracle::Rep> reps;
    std::vector<std::string> names;
    for (const auto& w : taut::enumerate_strings(pres, bound)) {
        mods.push_back(taut::string_module(alg, w));
        reps.push_back(oracle::from_library(mods.back()));
        names.push_back(pres.label() + ":" + taut::format_word(pres, w));
    }
    const std::size_t nv = pres.num_vertices();
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const auto tau = taut::ar_translate(mods[i]);
        const auto expected = oracle::tau_dims(pres, reps[i]);
        std::vector<std::size_t> want(nv);
        bool nonneg = true;
        for (std::size_t v = 0; v < nv; ++v) {
            nonneg = nonneg && expected[v] >= 0;
            want[v] = static_cast<std::size_t>(std::max(0L, expected[v]));
        }
        t.expect(nonneg && tau.dims() == want,
                 "tau " + names[i] + ": library " + dims_text(tau.dims()) + ", oracle " + dims_text(want));
        t.expect(oracle::is_indecomposable(pres, reps[i]), "string module " + names[i] + " decomposes");
        // Top and first syzygy multiplicities give dim Hom(X, tau N) for every X.
        std::vector<long> t0(nv), t1(nv);
        for (std::size_t w = 0; w < nv; ++w) {
            t0[w] = static_cast<long>(oracle::hom_dim(pres, reps[i], oracle::simple(pres, w)));
            t1[w] = static_cast<long>(oracle::ext1_dim(pres, reps[i], oracle::simple(pres, w)));
        }
        for (std::size_t j = 0; j < mods.size(); ++j) {
            const auto lib = taut::hom_dimension(mods[j], mods[i]);
            const auto orc = oracle::hom_dim(pres, reps[j], reps[i]);
            t.expect(lib == orc, "Hom(" + names[j] + ", " + names[i] + "): library " + std::to_string(lib) +
                                     ", oracle " + std::to_string(orc));
            long into_tau = static_cast<long>(oracle::hom_dim(pres, reps[i], reps[j]));
            for (std::size_t w = 0; w < nv; ++w) into_tau += (t1[w] - t0[w]) * static_cast<long>(reps[j].dims[w]);
            const auto lib_tau = static_cast<long>(taut::hom_dimension(mods[j], tau));
            t.expect(lib_tau == into_tau, "Hom(" + names[j] + ", tau " + names[i] + "): library " +
                                              std::to_string(lib_tau) + ", oracle " + std::to_string(into_tau));
            if (i == j)
                t.expect(taut::is_tau_rigid(mods[i]) == (into_tau == 0), "tau-rigidity of " + names[i]);
        }
    }
}

/// Every indecomposable representation with small dimension vector and 0/1 entries
/// is isomorphic to a string module of at most `bound` letters.
inline void compare_indecomposables(const taut::AlgebraPtr& alg, std::size_t bound, Tally& t) {
    const auto& pres = alg->presentation();
    std::vector<taut::Representation> strings;
    std::vector<oracle::Rep> string_reps;
    for (const auto& w : taut::enumerate_strings(pres, bound)) {
        strings.push_back(taut::string_module(alg, w));
        string_reps.push_back(oracle::from_library(strings.back()));
    }
    for (const auto& r : oracle::all_representations(pres, 2)) {
        if (!oracle::is_indecomposable(pres, r)) continue;
        const auto end = oracle::hom_dim(pres, r, r);
        const auto m = oracle::to_library(alg, r);
        bool found = false;
        for (std::size_t s = 0; s < strings.size() && !found; ++s) {
            if (string_reps[s].dims != r.dims) continue;
            if (oracle::hom_dim(pres, r, string_reps[s]) != end || oracle::hom_dim(pres, string_reps[s], r) != end ||
                oracle::hom_dim(pres, string_reps[s], string_reps[s]) != end)
                continue;
            found = taut::is_isomorphic(m, strings[s]);
        }
        t.expect(found, pres.label() + ": indecomposable with dims " + dims_text(r.dims) + " is not a string module");
    }
}

/// dim Hom(M, tau N) = dim Ext^1(N, M) over hereditary algebras.
inline void compare_ar_formula(const taut::AlgebraPtr& alg, Tally& t) {
    const auto& pres = alg->presentation();
    std::vector<taut::Representation> mods;
    for (const auto& w : taut::enumerate_strings(pres, 8)) mods.push_back(taut::string_module(alg, w));
    for (const auto& n : mods) {
        const auto tau = taut::ar_translate(n);
        for (const auto& m : mods) {
            const auto lib = taut::hom_dimension(m, tau);
            const auto ext = oracle::ext1_dim(pres, oracle::from_library(n), oracle::from_library(m));
            t.expect(lib == ext, pres.label() + ": AR formula fails");
        }
    }
}

} // namespace agreement

#endif // TAUT_TESTS_ENGINE_AGREEMENT_HPP
