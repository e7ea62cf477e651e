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

#include <vector>

#include "act/linalg.hpp"
#include "act/sampling.hpp"

namespace act {

/// ACT averages S_1..S_{n-1}: S_k is the mean of the k-th frequency's
/// non-uniform samples, folded points counted with multiplicity.
std::vector<double> act_averages(const SamplingGrid& grid, const std::vector<double>& samples);

/// DCT-II coefficients of a null-mean signal from its non-uniform samples
/// via Moebius inversion. Returns n values with V_0 forced to 0; the
/// null-mean precondition is the caller's responsibility (use act_mertens
/// for arbitrary signals).
std::vector<double> act_null_mean(const SamplingGrid& grid, const std::vector<double>& samples);

/// DCT-II coefficients of an arbitrary-mean signal: Moebius inversion
/// plus the Mertens correction, with the mean recovered from the samples
/// themselves. Returns all n coefficients, V_0 = sqrt(n) * mean.
std::vector<double> act_mertens(const SamplingGrid& grid, const std::vector<double>& samples);

/// The 8-point factorized transform T = 2 Mo D1 S + Me W+ together with
/// its rational factors. Me is 7 x 8 (the printed 7 x 7 ones-matrix forms
/// a dimensionally impossible product with the 8 x 10 W+; the 7 x 8 shape
/// is the unique repair validated by the transform identities).
struct FactorizationBundle {
    RationalMatrix mo;   // 7 x 7 Moebius values
    RationalMatrix d1;   // 7 x 7 diagonal 1/k
    RationalMatrix s;    // 7 x 10 grid multiplicities
    RationalMatrix me;   // 7 x 8 Mertens correction rows
    Matrix wplus;        // 8 x 10
    Matrix t;            // 7 x 10
};

/// Builds the bundle for the n = 8 grid and self-checks Mo, D1, S against
/// their known entries; throws std::logic_error on any mismatch.
FactorizationBundle build_factorization(const SamplingGrid& grid);

/// AC coefficients V_1..V_7 = T * v_r.
std::vector<double> transform_via_t(const FactorizationBundle& bundle,
                                    const std::vector<double>& samples);

/// Orthonormal DCT-II by direct summation; the reference the ACT paths
/// are checked against. Independent of every other routine in this
/// library by construction.
std::vector<double> dct2_oracle(const std::vector<double>& v);

}  // namespace act
