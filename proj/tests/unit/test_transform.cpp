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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "act/linalg.hpp"
#include "act/metrics.hpp"
#include "act/sampling.hpp"
#include "act/transform.hpp"

namespace {

const act::SamplingGrid& grid8() {
    static const act::SamplingGrid grid = act::build_grid(8);
    return grid;
}

std::vector<double> random_signal(std::uint64_t seed, double scale = 1.0) {
    act::SplitMix64 rng(seed);
    std::vector<double> v(8);
    for (double& x : v) x = scale * rng.next_pm1();
    return v;
}

void remove_mean(std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double max_abs_err(const std::vector<double>& a, const std::vector<double>& b,
                   std::size_t first = 0) {
    double m = 0.0;
    for (std::size_t i = first; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("dct2 oracle basics") {
    const std::vector<double> ones(8, 1.0);
    const std::vector<double> v = act::dct2_oracle(ones);
    CHECK(v[0] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    for (std::size_t k = 1; k < 8; ++k) CHECK(std::fabs(v[k]) < 1e-14);

    std::vector<double> e0(8, 0.0);
    e0[0] = 1.0;
    const std::vector<double> ve = act::dct2_oracle(e0);
    for (std::size_t k = 0; k < 8; ++k) {
        const double alpha = (k == 0) ? std::sqrt(1.0 / 8.0) : 0.5;
        CHECK(ve[k] ==
              doctest::Approx(alpha * std::cos(std::numbers::pi * k / 16.0)).epsilon(1e-14));
    }
}

TEST_CASE("dct2 oracle matrix is orthonormal") {
    act::Matrix c(8, 8);
    for (std::size_t n = 0; n < 8; ++n) {
        std::vector<double> basis(8, 0.0);
        basis[n] = 1.0;
        const std::vector<double> col = act::dct2_oracle(basis);
        for (std::size_t k = 0; k < 8; ++k) c(k, n) = col[k];
    }
    CHECK(act::max_abs_diff(act::matmul(c, act::transpose(c)), act::Matrix::identity(8)) < 1e-12);
}

TEST_CASE("averages of constant samples are that constant") {
    for (double s : act::act_averages(grid8(), std::vector<double>(10, 0.75)))
        CHECK(s == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("averages of the basis sample at -1/2 are 1/k") {
    std::vector<double> samples(10, 0.0);
    samples[0] = 1.0;  // the instant -1/2 is read once by every channel
    const std::vector<double> averages = act::act_averages(grid8(), samples);
    for (int k = 1; k <= 7; ++k)
        CHECK(averages[static_cast<std::size_t>(k - 1)] ==
              doctest::Approx(1.0 / k).epsilon(1e-15));
}

TEST_CASE("null-mean transform on zero input") {
    const std::vector<double> coeffs = act::act_null_mean(grid8(), std::vector<double>(10, 0.0));
    for (double c : coeffs) CHECK(c == 0.0);
}

TEST_CASE("null-mean transform reproduces the DCT of [1,-1,0,...]") {
    std::vector<double> v{1, -1, 0, 0, 0, 0, 0, 0};
    const std::vector<double> expected = act::dct2_oracle(v);
    const std::vector<double> got = act::act_null_mean(grid8(), act::interpolate(grid8(), v));
    CHECK(max_abs_err(got, expected, 1) < 1e-10);
    CHECK(got[0] == 0.0);
}

TEST_CASE("null-mean transform singles out a DCT basis vector") {
    // The signal whose orthonormal DCT is e_3; null-mean by orthogonality
    // to the constant row.
    std::vector<double> v(8);
    for (std::size_t n = 0; n < 8; ++n)
        v[n] = 0.5 * std::cos(std::numbers::pi * (2.0 * n + 1.0) * 3.0 / 16.0);
    const std::vector<double> got = act::act_null_mean(grid8(), act::interpolate(grid8(), v));
    for (std::size_t k = 1; k < 8; ++k)
        CHECK(got[k] == doctest::Approx(k == 3 ? 1.0 : 0.0).epsilon(1e-10));
}

TEST_CASE("exactness on seeded null-mean signals") {
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        std::vector<double> v = random_signal(trial + 1000);
        remove_mean(v);
        const std::vector<double> got = act::act_null_mean(grid8(), act::interpolate(grid8(), v));
        worst = std::max(worst, max_abs_err(got, act::dct2_oracle(v), 1));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("mertens transform of the constant signal") {
    const std::vector<double> coeffs = act::act_mertens(grid8(), std::vector<double>(10, 1.0));
    CHECK(coeffs[0] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
    for (std::size_t k = 1; k < 8; ++k) CHECK(std::fabs(coeffs[k]) < 1e-10);
}

TEST_CASE("mertens transform matches the oracle on arbitrary-mean signals") {
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        const std::vector<double> v = random_signal(trial + 5000);
        const std::vector<double> got = act::act_mertens(grid8(), act::interpolate(grid8(), v));
        worst = std::max(worst, max_abs_err(got, act::dct2_oracle(v)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("mertens correction vanishes on null-mean samples") {
    std::vector<double> v = random_signal(77);
    remove_mean(v);
    const std::vector<double> samples = act::interpolate(grid8(), v);
    const std::vector<double> plain = act::act_null_mean(grid8(), samples);
    const std::vector<double> corrected = act::act_mertens(grid8(), samples);
    CHECK(max_abs_err(plain, corrected, 1) < 1e-12);
}

TEST_CASE("V0 equals sqrt(8) times the recovered mean") {
    const std::vector<double> v = random_signal(31);
    const std::vector<double> samples = act::interpolate(grid8(), v);
    const std::vector<double> coeffs = act::act_mertens(grid8(), samples);
    CHECK(coeffs[0] == doctest::Approx(std::sqrt(8.0) *
                                       act::mean_from_nonuniform(grid8(), samples))
                           .epsilon(1e-14));
}

TEST_CASE("transform is linear") {
    const std::vector<double> x = act::interpolate(grid8(), random_signal(41));
    const std::vector<double> y = act::interpolate(grid8(), random_signal(42));
    const double a = 0.7, b = -1.3;
    std::vector<double> mix(10);
    for (std::size_t i = 0; i < 10; ++i) mix[i] = a * x[i] + b * y[i];
    const std::vector<double> lhs = act::act_mertens(grid8(), mix);
    const std::vector<double> vx = act::act_mertens(grid8(), x);
    const std::vector<double> vy = act::act_mertens(grid8(), y);
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(lhs[k] == doctest::Approx(a * vx[k] + b * vy[k]).epsilon(1e-10));
}

TEST_CASE("null-mean path is exact for other even lengths") {
    for (const int n : {2, 4, 6}) {
        const act::SamplingGrid grid = act::build_grid(n);
        double worst = 0.0;
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            act::SplitMix64 rng(trial + 300 * static_cast<std::uint64_t>(n));
            std::vector<double> v(static_cast<std::size_t>(n));
            for (double& x : v) x = rng.next_pm1();
            remove_mean(v);
            const std::vector<double> got = act::act_null_mean(grid, act::interpolate(grid, v));
            worst = std::max(worst, max_abs_err(got, act::dct2_oracle(v), 1));
        }
        CHECK(worst < 1e-12);
    }

    // n = 4 has only 3 sampling instants, so W cannot have full column
    // rank and the mean-recovery path must refuse.
    CHECK_THROWS_AS(act::mean_weights(act::build_grid(4)), act::SingularMatrixError);
}

TEST_CASE("factorization bundle reproduces the printed factors") {
    const act::FactorizationBundle bundle = act::build_factorization(grid8());
    REQUIRE(bundle.mo.rows() == 7);
    REQUIRE(bundle.s.cols() == 10);
    REQUIRE(bundle.me.rows() == 7);
    REQUIRE(bundle.me.cols() == 8);
    REQUIRE(bundle.t.rows() == 7);
    REQUIRE(bundle.t.cols() == 10);

    const long long mo_row2[7] = {0, 1, 0, -1, 0, -1, 0};
    for (std::size_t j = 0; j < 7; ++j)
        CHECK(bundle.mo(1, j) == act::make_rational(mo_row2[j]));

    const long long s_row7[10] = {1, 2, 0, 0, 0, 2, 0, 0, 2, 0};
    for (std::size_t j = 0; j < 10; ++j)
        CHECK(bundle.s(6, j) == act::make_rational(s_row7[j]));

    // Mertens-correction multipliers 1/2, 1/4, 0, -1/4, -1/4, -1/4, -1/4.
    const act::Rational me_diag[7] = {
        act::make_rational(1, 2),  act::make_rational(1, 4),  act::make_rational(0),
        act::make_rational(-1, 4), act::make_rational(-1, 4), act::make_rational(-1, 4),
        act::make_rational(-1, 4)};
    for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(bundle.me(k, j) == me_diag[k]);

    CHECK_THROWS_AS(act::build_factorization(act::build_grid(4)), std::invalid_argument);
}

TEST_CASE("T composed with interpolation is the DCT on AC rows") {
    const act::FactorizationBundle bundle = act::build_factorization(grid8());
    const act::Matrix w = act::build_w(grid8());
    const act::Matrix tw = act::matmul(bundle.t, w);
    act::Matrix expected(7, 8);
    for (std::size_t n = 0; n < 8; ++n) {
        std::vector<double> basis(8, 0.0);
        basis[n] = 1.0;
        const std::vector<double> col = act::dct2_oracle(basis);
        for (std::size_t k = 0; k < 7; ++k) expected(k, n) = col[k + 1];
    }
    CHECK(act::max_abs_diff(tw, expected) < 1e-10);
}

TEST_CASE("factorized and direct Mertens paths agree on arbitrary samples") {
    const act::FactorizationBundle bundle = act::build_factorization(grid8());
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        act::SplitMix64 rng(trial + 900);
        std::vector<double> samples(10);
        for (double& s : samples) s = rng.next_pm1();
        const std::vector<double> via_t = act::transform_via_t(bundle, samples);
        const std::vector<double> direct = act::act_mertens(grid8(), samples);
        for (std::size_t k = 0; k < 7; ++k)
            worst = std::max(worst, std::fabs(via_t[k] - direct[k + 1]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("T annihilates constants and zero") {
    const act::FactorizationBundle bundle = act::build_factorization(grid8());
    for (double c : act::transform_via_t(bundle, std::vector<double>(10, 0.0))) CHECK(c == 0.0);
    for (double c : act::transform_via_t(bundle, std::vector<double>(10, 1.0)))
        CHECK(std::fabs(c) < 1e-10);
}

}  // TEST_SUITE
