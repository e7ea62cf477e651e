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

#include "act/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace act {

namespace {
constexpr double kPivotThreshold = 1e-12;
constexpr double kConditionWarnRatio = 1e8;
}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::from_int_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_int_rows: ragged rows");
        std::size_t j = 0;
        for (long long x : row) m(i, j++) = make_rational(x);
        ++i;
    }
    return m;
}

SingularMatrixError::SingularMatrixError(std::size_t pivot)
    : std::runtime_error("singular matrix at pivot " + std::to_string(pivot)),
      pivot_index(pivot) {}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double acc = 0.0;  // left-to-right over the inner index
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix solve(Matrix a, Matrix b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix not square");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: right-hand side mismatch");
    const std::size_t n = a.rows();
    double pivot_max = 0.0;
    double pivot_min = 0.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(best, col))) best = r;
        const double pivot = a(best, col);
        if (std::fabs(pivot) < kPivotThreshold) throw SingularMatrixError(col);
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(best, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(best, j));
        }
        pivot_max = std::max(pivot_max, std::fabs(pivot));
        pivot_min = (col == 0) ? std::fabs(pivot) : std::min(pivot_min, std::fabs(pivot));

        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / pivot;
            if (f == 0.0) continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    if (pivot_min > 0.0 && pivot_max / pivot_min > kConditionWarnRatio) {
        std::fprintf(stderr, "solve: pivot ratio %.3e exceeds 1e8, result may be inaccurate\n",
                     pivot_max / pivot_min);
    }

    Matrix x(n, b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t ri = n; ri-- > 0;) {
            double acc = b(ri, col);
            for (std::size_t j = ri + 1; j < n; ++j) acc -= a(ri, j) * x(j, col);
            x(ri, col) = acc / a(ri, ri);
        }
    }
    return x;
}

Matrix pseudo_inverse(const Matrix& a) {
    const Matrix at = transpose(a);
    return solve(matmul(at, a), at);
}

Matrix column_sums(const Matrix& a) {
    Matrix out(1, a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, j);
        out(0, j) = acc;
    }
    return out;
}

Matrix to_matrix(const RationalMatrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_double(a(i, j));
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace act
