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

#include <string>
#include <vector>

#include "act/linalg.hpp"
#include "act/rational.hpp"

namespace act {

/// Non-uniform sampling grid of the N-point arithmetic cosine transform.
///
/// Points are the distinct values of r = 2mN/k - 1/2 (k = 1..N-1,
/// m = 0..k-1), with instants past N - 1/2 reflected to (2N-1) - r, kept
/// as exact rationals and sorted ascending. Ascending point order is the
/// canonical channel order everywhere downstream (matrices, file formats,
/// simulator ports).
///
/// multiplicity[k-1][j] counts how often frequency k samples point j; for
/// N = 8 that 7 x 10 integer table is exactly the factorization matrix S.
struct SamplingGrid {
    int n = 0;
    std::vector<Rational> points;
    std::vector<std::vector<int>> multiplicity;

    std::size_t size() const { return points.size(); }
};

/// Builds the grid for even transform length n >= 2.
SamplingGrid build_grid(int n);

/// Dirichlet kernel D_order(x) = sin((order + 1/2) x) / sin(x / 2).
/// Total function: at poles of the denominator it returns the limit
/// 2 * order + 1 (the kernel is 2*pi-periodic).
double dirichlet(int order, double x);

/// Interpolation weight w_idx(r) =
///   (1/2n) * [ D_{n-1}(pi/n (idx + r + 1)) + D_{n-1}(pi/n (idx - r)) ].
double interp_weight(int n, int sample_index, double r);
double interp_weight(int n, int sample_index, const Rational& r);

/// |R| x n interpolation matrix W, one row per grid point in ascending
/// order.
Matrix build_w(const SamplingGrid& grid);

/// v_r = W * v: non-uniform samples of a uniformly sampled signal.
std::vector<double> interpolate(const SamplingGrid& grid, const std::vector<double>& v);

/// The vector w/n: per-sample weights whose dot product with the
/// non-uniform samples yields the signal mean.
std::vector<double> mean_weights(const SamplingGrid& grid);

/// Mean of the generating uniform signal, computed from the non-uniform
/// samples alone.
double mean_from_nonuniform(const SamplingGrid& grid, const std::vector<double>& samples);

/// JSON grid export/import: points as {numerator, denominator} pairs plus
/// the multiplicity table. Round-trip stable.
std::string grid_to_json(const SamplingGrid& grid);
SamplingGrid grid_from_json(const std::string& text);

}  // namespace act
