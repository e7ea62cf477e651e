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

#include "act/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "act/numtheory.hpp"

namespace act {

namespace {

void check_samples(const SamplingGrid& grid, const std::vector<double>& samples) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("sample length does not match grid");
}

// Known entries of the 8-point factorization, used as construction
// self-checks.
const RationalMatrix& known_mo() {
    static const RationalMatrix mo = RationalMatrix::from_int_rows({
        {1, -1, -1, 0, -1, 1, -1},
        {0, 1, 0, -1, 0, -1, 0},
        {0, 0, 1, 0, 0, -1, 0},
        {0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1},
    });
    return mo;
}

const RationalMatrix& known_s() {
    static const RationalMatrix s = RationalMatrix::from_int_rows({
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {1, 0, 0, 0, 0, 0, 2, 0, 0, 0},
        {1, 0, 0, 0, 2, 0, 0, 0, 0, 1},
        {1, 0, 0, 2, 0, 0, 0, 2, 0, 0},
        {1, 0, 2, 0, 0, 0, 2, 0, 0, 1},
        {1, 2, 0, 0, 0, 2, 0, 0, 2, 0},
    });
    return s;
}

}  // namespace

std::vector<double> act_averages(const SamplingGrid& grid, const std::vector<double>& samples) {
    check_samples(grid, samples);
    std::vector<double> averages(static_cast<std::size_t>(grid.n - 1));
    for (int k = 1; k < grid.n; ++k) {
        double acc = 0.0;
        const auto& row = grid.multiplicity[static_cast<std::size_t>(k - 1)];
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * samples[j];
        averages[static_cast<std::size_t>(k - 1)] = acc / k;
    }
    return averages;
}

std::vector<double> act_null_mean(const SamplingGrid& grid, const std::vector<double>& samples) {
    check_samples(grid, samples);
    const int n = grid.n;
    const double scale = std::sqrt(n / 2.0);
    const std::vector<double> averages = act_averages(grid, samples);
    std::vector<double> coeffs(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k < n; ++k) {
        double acc = 0.0;
        for (int l = 1; k * l <= n - 1; ++l)
            acc += moebius(l) * averages[static_cast<std::size_t>(k * l - 1)];
        coeffs[static_cast<std::size_t>(k)] = scale * acc;
    }
    return coeffs;
}

std::vector<double> act_mertens(const SamplingGrid& grid, const std::vector<double>& samples) {
    const int n = grid.n;
    const double scale = std::sqrt(n / 2.0);
    const double mean = mean_from_nonuniform(grid, samples);
    std::vector<double> coeffs = act_null_mean(grid, samples);
    coeffs[0] = std::sqrt(static_cast<double>(n)) * mean;
    for (int k = 1; k < n; ++k)
        coeffs[static_cast<std::size_t>(k)] -= scale * mean * mertens((n - 1) / k);
    return coeffs;
}

FactorizationBundle build_factorization(const SamplingGrid& grid) {
    if (grid.n != 8)
        throw std::invalid_argument("build_factorization: derived for n = 8 only");

    FactorizationBundle bundle;

    bundle.mo = RationalMatrix(7, 7);
    for (int k = 1; k <= 7; ++k)
        for (int j = k; j <= 7; j += k)
            bundle.mo(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)) =
                make_rational(moebius(j / k));

    bundle.d1 = RationalMatrix(7, 7);
    for (int k = 1; k <= 7; ++k)
        bundle.d1(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) =
            make_rational(1, k);

    bundle.s = RationalMatrix(7, 10);
    for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t j = 0; j < 10; ++j)
            bundle.s(k, j) = make_rational(grid.multiplicity[k][j]);

    if (!(bundle.mo == known_mo())) throw std::logic_error("factorization self-check: Mo mismatch");
    if (!(bundle.s == known_s())) throw std::logic_error("factorization self-check: S mismatch");
    for (int k = 1; k <= 7; ++k) {
        const auto idx = static_cast<std::size_t>(k - 1);
        if (bundle.d1(idx, idx) != make_rational(1, k))
            throw std::logic_error("factorization self-check: D1 mismatch");
    }

    // Me row k = -sqrt(n/2) * M(floor(7/k)) / 8 replicated across 8 columns;
    // sqrt(8/2) = 2 keeps the entries rational: -M(floor(7/k)) / 4.
    bundle.me = RationalMatrix(7, 8);
    for (int k = 1; k <= 7; ++k) {
        const Rational entry = make_rational(-mertens(7 / k), 4);
        for (std::size_t j = 0; j < 8; ++j)
            bundle.me(static_cast<std::size_t>(k - 1), j) = entry;
    }

    bundle.wplus = pseudo_inverse(build_w(grid));

    // T = 2 Mo D1 S + Me W+, first term carried exactly until the final
    // conversion.
    RationalMatrix first = matmul(matmul(bundle.mo, bundle.d1), bundle.s);
    const Matrix correction = matmul(to_matrix(bundle.me), bundle.wplus);
    bundle.t = Matrix(7, 10);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            bundle.t(i, j) = 2.0 * to_double(first(i, j)) + correction(i, j);
    return bundle;
}

std::vector<double> transform_via_t(const FactorizationBundle& bundle,
                                    const std::vector<double>& samples) {
    if (samples.size() != bundle.t.cols())
        throw std::invalid_argument("transform_via_t: sample length does not match T");
    std::vector<double> out(7, 0.0);
    for (std::size_t k = 0; k < 7; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < samples.size(); ++j) acc += bundle.t(k, j) * samples[j];
        out[k] = acc;
    }
    return out;
}

std::vector<double> dct2_oracle(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double alpha = (k == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += v[i] * std::cos(std::numbers::pi * (2.0 * i + 1.0) * k / (2.0 * n));
        out[k] = alpha * acc;
    }
    return out;
}

}  // namespace act
