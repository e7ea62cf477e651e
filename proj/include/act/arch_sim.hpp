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

#include <map>
#include <string>
#include <vector>

#include "act/fixedpoint.hpp"

namespace act {

enum class Arch { I, II };

std::string to_string(Arch arch);
Arch arch_from_string(const std::string& s);

enum class NodeKind { input, shift, add, sub, int_mul, frac_mul, output };

/// One signed digit of a canonical-signed-digit decomposition:
/// contributes sign * 2^shift.
struct CsdDigit {
    int shift = 0;
    int sign = 1;
};

/// Canonical signed digit (non-adjacent form) recoding of a positive
/// integer; minimizes nonzero digits, so an n-digit constant costs n - 1
/// two-input adders as a shift-add chain.
std::vector<CsdDigit> csd_digits(long long value);

/// Fraction bits used to freeze each fractional multiplier coefficient
/// onto an integer; products are computed exactly and re-rounded onto the
/// working grid, which keeps the simulation bit-reproducible.
inline constexpr int kCoeffFracBits = 40;

/// Dataflow node. Node ids are 1-based and equal the node's position in
/// the graph, which is construction (= topological) order: inputs in grid
/// order, per-channel gather shifts/adds, per-channel integer scaling,
/// Moebius combination stage, then (Architecture II) mean products/adders,
/// Mertens correction and the DC path, and finally the output taps.
struct Node {
    int id = 0;
    NodeKind kind = NodeKind::input;
    int a = 0;                 // first operand id
    int b = 0;                 // second operand id (add/sub)
    int port = -1;             // input port, grid order
    int shift_amount = 0;      // left shift
    long long constant = 0;    // integer multiplier constant
    double coeff = 0.0;        // fractional multiplier coefficient
    long long coeff_raw = 0;   // coeff frozen to kCoeffFracBits fraction bits
    int channel = -1;          // output coefficient index
    double output_scale = 1.0; // divide raw value by this to descale
    std::string stage;         // breakdown bucket
};

struct ArchitectureGraph {
    Arch arch = Arch::I;
    int input_count = 0;
    std::vector<Node> nodes;
    std::vector<int> output_ids;  // ascending channel order
};

/// Null-mean 8-point ACT: per-channel integer-weighted sums scaled by
/// 420/k, doubled taps as left shifts, integer constants as CSD shift-add
/// chains, then the Moebius combination. Multiplier-free; AC outputs
/// carry scale 420 * sqrt(2/8) = 210.
ArchitectureGraph build_arch1_graph();

/// Architecture I plus the mean block (10 fractional multiplies by the
/// w/8 weights and an adder chain), the Mertens correction into channels
/// 1, 2, 4..7 (integer-scaled mean, power-of-two taps as shifts) and the
/// V_0 = sqrt(8) * mean path; 11 fractional multipliers in total.
ArchitectureGraph build_arch2_graph();

struct StageComplexity {
    int multipliers = 0;
    int two_input_adders = 0;
    int shifts = 0;
};

struct ComplexityReport {
    int multipliers = 0;
    int two_input_adders = 0;  // includes adders inside CSD chains
    int shifts = 0;            // doubling taps plus shifted CSD partials
    std::map<std::string, StageComplexity> breakdown;
};

ComplexityReport count_complexity(const ArchitectureGraph& graph);

/// Worst-case word-length plan: per-node amplitude bounds are propagated
/// from |input| <= 1 and each node gets delta L = ceil(log2(bound)).
/// Like the reference schedule, the deltas do not depend on base_l.
QuantizationSchedule default_schedule(const ArchitectureGraph& graph, int base_l,
                                      Rounding rounding = Rounding::round_half_up,
                                      OverflowMode overflow = OverflowMode::error);

struct SimulationResult {
    std::vector<int> channels;      // coefficient index per output
    std::vector<long long> raw;     // fixed-point output words
    std::vector<double> values;     // descaled to oracle scale
    std::vector<long long> node_raw;  // per-node trace, index id - 1
};

/// Evaluates the graph on samples in [-1, 1], quantizing every node
/// result to base_l + delta L total bits with base_l - 1 fraction bits.
/// Under OverflowMode::error an out-of-range node raises
/// FixedPointOverflow naming the node.
SimulationResult simulate(const ArchitectureGraph& graph, const std::vector<double>& samples,
                          const QuantizationSchedule& schedule);

/// JSON node-list dump for audit; round-trip stable.
std::string graph_to_json(const ArchitectureGraph& graph);
ArchitectureGraph graph_from_json(const std::string& text);

std::string complexity_to_json(const ComplexityReport& report, Arch arch);

}  // namespace act
