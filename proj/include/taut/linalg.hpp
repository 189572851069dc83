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
// Dense exact linear algebra over the rationals.

#ifndef TAUT_LINALG_HPP
#define TAUT_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace taut {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    std::vector<Vector> columns() const;

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Reduces `m` to reduced row echelon form in place and returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the right kernel, as the columns of a cols() x k matrix.
Matrix nullspace(const Matrix& m);

/// Unique solution X of A X = B when A has full column rank; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Horizontal concatenation; all inputs must share the row count `rows`.
Matrix hstack(std::size_t rows, const std::vector<Matrix>& blocks);

/// Block-diagonal sum.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Indices of the columns of `ambient` that, taken greedily left to right, extend
/// span(columns of `sub`) to span(sub | ambient).
std::vector<std::size_t> extending_columns(const Matrix& sub, const Matrix& ambient);

/// A maximal linearly independent subset of the columns, chosen greedily.
Matrix independent_columns(const Matrix& m);

bool is_nilpotent(const Matrix& square);
bool is_invertible(const Matrix& square);

Rational trace(const Matrix& square);

} // namespace taut

#endif // TAUT_LINALG_HPP
