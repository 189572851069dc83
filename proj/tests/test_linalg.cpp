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
#include <doctest.h>

#include <random>

#include "taut/linalg.hpp"

using taut::Matrix;
using taut::Rational;

namespace {

Matrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(gen);
    return m;
}

} // namespace

TEST_CASE("rank and nullspace") {
    Matrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    CHECK(taut::rank(m) == 1);
    const Matrix k = taut::nullspace(m);
    CHECK(k.rows() == 3);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    CHECK(taut::nullspace(Matrix(0, 4)).cols() == 4);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 gen(3);
    for (int i = 0; i < 50; ++i) {
        const Matrix m = random_matrix(gen, 1 + i % 5, 1 + i % 7);
        const Matrix k = taut::nullspace(m);
        CHECK(taut::rank(m) + k.cols() == m.cols());
        CHECK((m * k).is_zero());
        CHECK(taut::rank(k) == k.cols());
    }
}

TEST_CASE("solve") {
    Matrix a = Matrix::identity(2);
    a(0, 1) = Rational(1, 2);
    Matrix b(2, 1);
    b(0, 0) = 1;
    b(1, 0) = 2;
    auto x = taut::solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    Matrix c(2, 1);
    c(0, 0) = 1;
    Matrix d(2, 1);
    d(1, 0) = 1;
    CHECK_FALSE(taut::solve(c, d).has_value());
}

TEST_CASE("extending columns, nilpotency, invertibility, trace") {
    Matrix sub(2, 1);
    sub(0, 0) = 1;
    const auto ext = taut::extending_columns(sub, Matrix::identity(2));
    CHECK(ext == std::vector<std::size_t>{1});
    Matrix n(2, 2);
    n(0, 1) = 5;
    CHECK(taut::is_nilpotent(n));
    CHECK_FALSE(taut::is_invertible(n));
    CHECK(taut::is_invertible(Matrix::identity(3)));
    CHECK(taut::trace(Matrix::identity(3)) == 3);
    CHECK(taut::block_diagonal(Matrix::identity(1), Matrix::identity(2)) == Matrix::identity(3));
    CHECK(taut::independent_columns(taut::hstack(2, {Matrix::identity(2), Matrix::identity(2)})).cols() == 2);
}
