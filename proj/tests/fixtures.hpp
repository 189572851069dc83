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
#ifndef TAUT_TESTS_FIXTURES_HPP
#define TAUT_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taut/algebra.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(TAUT_FIXTURE_DIR) + "/" + name + ".alg"; }

inline std::string text(const std::string& name) {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline taut::Presentation load(const std::string& name) { return taut::parse_algebra(text(name)); }

inline taut::AlgebraPtr algebra(const std::string& name) { return taut::make_algebra(load(name)); }

inline taut::Presentation a2_loop() { return taut::disjoint_union(load("a2"), load("loop")); }
inline taut::Presentation a1_a1() { return taut::disjoint_union(load("a1"), load("a1")); }

/// The finite-type fixtures, named, products included.
inline std::vector<std::pair<std::string, taut::Presentation>> finite_suite() {
    std::vector<std::pair<std::string, taut::Presentation>> out;
    for (const char* n : {"a1", "loop", "a2", "a3_linear", "a3_sink", "a3_source", "a3_rel", "cycle3"})
        out.emplace_back(n, load(n));
    out.emplace_back("a1+a1", a1_a1());
    out.emplace_back("a2+loop", a2_loop());
    return out;
}

} // namespace fixtures

#endif // TAUT_TESTS_FIXTURES_HPP
