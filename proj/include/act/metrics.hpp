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

#include <cstdint>
#include <vector>

#include "act/arch_sim.hpp"

namespace act {

/// SplitMix64 generator. Per-trial substreams are seeded by mixing the
/// run seed with the trial index, so serial and fanned-out evaluation
/// draw identical values.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static SplitMix64 trial_stream(std::uint64_t seed, long long trial);

    std::uint64_t next();
    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit();
    /// Uniform in [-1, 1).
    double next_pm1() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

/// Signed percentage error: 100 * mean_k (est_k - ref_k) / max_j |ref_j|;
/// 0 when the reference peak is below 1e-12.
double pct_error(const std::vector<double>& estimate, const std::vector<double>& reference);

/// 10 log10(peak^2 / MSE), capped at 400 dB when the error vanishes.
double psnr(const std::vector<double>& estimate, const std::vector<double>& reference,
            double peak);
double psnr_from_mse(double mse, double peak);

struct TrialConfig {
    long long trials = 10000;
    std::uint64_t seed = 0;
    Arch arch = Arch::I;
    std::vector<int> word_lengths;
    int threads = 1;
};

struct LevelMetrics {
    int l = 0;
    double avg_pct_error = 0.0;
    double psnr_db = 0.0;
};

struct MetricsReport {
    TrialConfig config;
    std::vector<LevelMetrics> per_l;
};

/// Fixed-point accuracy sweep: for each word length, runs `trials`
/// pseudo-random 8-point signals through interpolation (ideal, double
/// precision) and the architecture simulator, comparing descaled outputs
/// against the direct DCT-II reference. Architecture I trials are
/// mean-removed before interpolation; generated signals are scaled so the
/// simulator inputs stay inside [-1, 1] in the worst case. Deterministic
/// for a fixed seed regardless of `threads`.
MetricsReport run_experiment(const TrialConfig& config,
                             const QuantizationSchedule& schedule_template);

/// One row per word length: L,arch,avg_pct_error,psnr_db,trials,seed.
std::string report_to_csv(const MetricsReport& report);
std::string report_to_json(const MetricsReport& report);

}  // namespace act
