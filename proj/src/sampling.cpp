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

#include "act/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace act {

SamplingGrid build_grid(int n) {
    if (n < 2) throw std::invalid_argument("build_grid: n must be >= 2");
    if (n % 2 != 0) throw std::invalid_argument("build_grid: n must be even");

    const Rational half = make_rational(1, 2);
    const Rational upper = make_rational(n) - half;        // n - 1/2
    const Rational mirror = make_rational(2 * n - 1);      // fold axis offset

    // point -> per-k occurrence counts
    std::map<Rational, std::vector<int>> counts;
    for (int k = 1; k < n; ++k) {
        for (int m = 0; m < k; ++m) {
            Rational r = make_rational(2LL * m * n, k) - half;
            if (r > upper) r = mirror - r;  // reflect into [-1/2, n - 1/2]
            auto& per_k = counts[r];
            per_k.resize(static_cast<std::size_t>(n - 1), 0);
            ++per_k[static_cast<std::size_t>(k - 1)];
        }
    }

    SamplingGrid grid;
    grid.n = n;
    grid.multiplicity.assign(static_cast<std::size_t>(n - 1), {});
    for (auto& row : grid.multiplicity) row.assign(counts.size(), 0);
    std::size_t j = 0;
    for (const auto& [point, per_k] : counts) {  // std::map iterates ascending
        grid.points.push_back(point);
        for (std::size_t k = 0; k < per_k.size(); ++k) grid.multiplicity[k][j] = per_k[k];
        ++j;
    }
    return grid;
}

double dirichlet(int order, double x) {
    const double denom = std::sin(x / 2.0);
    if (std::fabs(denom) < 1e-12) {
        // 2*pi-periodic kernel: the limit at every pole is 2*order + 1.
        return 2.0 * order + 1.0;
    }
    return std::sin((order + 0.5) * x) / denom;
}

double interp_weight(int n, int sample_index, double r) {
    const double step = std::numbers::pi / n;
    return (dirichlet(n - 1, step * (sample_index + r + 1)) +
            dirichlet(n - 1, step * (sample_index - r))) /
           (2.0 * n);
}

double interp_weight(int n, int sample_index, const Rational& r) {
    return interp_weight(n, sample_index, to_double(r));
}

Matrix build_w(const SamplingGrid& grid) {
    Matrix w(grid.size(), static_cast<std::size_t>(grid.n));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (int idx = 0; idx < grid.n; ++idx)
            w(i, static_cast<std::size_t>(idx)) = interp_weight(grid.n, idx, grid.points[i]);
    return w;
}

std::vector<double> interpolate(const SamplingGrid& grid, const std::vector<double>& v) {
    if (v.size() != static_cast<std::size_t>(grid.n))
        throw std::invalid_argument("interpolate: signal length does not match grid");
    const Matrix w = build_w(grid);
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += w(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> mean_weights(const SamplingGrid& grid) {
    const Matrix sums = column_sums(pseudo_inverse(build_w(grid)));
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) out[j] = sums(0, j) / grid.n;
    return out;
}

double mean_from_nonuniform(const SamplingGrid& grid, const std::vector<double>& samples) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("mean_from_nonuniform: sample length does not match grid");
    const std::vector<double> w = mean_weights(grid);
    double acc = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) acc += w[j] * samples[j];
    return acc;
}

std::string grid_to_json(const SamplingGrid& grid) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : grid.points) {
        points.push_back({{"numerator", p.numerator().convert_to<long long>()},
                          {"denominator", p.denominator().convert_to<long long>()}});
    }
    nlohmann::json j{{"n", grid.n}, {"points", points}, {"multiplicity", grid.multiplicity}};
    return j.dump(2) + "\n";
}

SamplingGrid grid_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SamplingGrid grid;
    grid.n = j.at("n").get<int>();
    for (const auto& p : j.at("points")) {
        grid.points.push_back(
            make_rational(p.at("numerator").get<long long>(), p.at("denominator").get<long long>()));
    }
    grid.multiplicity = j.at("multiplicity").get<std::vector<std::vector<int>>>();
    if (!std::is_sorted(grid.points.begin(), grid.points.end()))
        throw std::invalid_argument("grid_from_json: points not ascending");
    for (const auto& row : grid.multiplicity)
        if (row.size() != grid.points.size())
            throw std::invalid_argument("grid_from_json: multiplicity shape mismatch");
    return grid;
}

}  // namespace act
