//  Copyright (c) 2026 The actdct authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "act/rational.hpp"

namespace act {

/// Small dense row-major matrix of doubles. Immutable use after
/// construction is the expected pattern; all free functions are pure.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<double>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Exact-rational counterpart; entries stay in lowest terms with positive
/// denominators (maintained by the Rational type).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RationalMatrix from_int_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Raised when Gaussian elimination meets a pivot below threshold;
/// carries the elimination step at which it happened.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t pivot);
    std::size_t pivot_index;
};

Matrix matmul(const Matrix& a, const Matrix& b);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

Matrix transpose(const Matrix& a);

/// Solves a * X = b by Gaussian elimination with partial pivoting.
/// Pivots below 1e-12 in magnitude raise SingularMatrixError; a pivot
/// magnitude ratio above 1e8 emits a conditioning warning on stderr.
Matrix solve(Matrix a, Matrix b);

/// Left inverse (A^T A)^-1 A^T of a full-column-rank matrix.
Matrix pseudo_inverse(const Matrix& a);

/// 1 x cols row vector of per-column totals, summed top to bottom.
Matrix column_sums(const Matrix& a);

Matrix to_matrix(const RationalMatrix& a);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace act
