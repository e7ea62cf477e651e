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

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace act {

enum class Rounding { truncate, round_half_up };
enum class OverflowMode { error, saturate };

std::string to_string(Rounding r);
std::string to_string(OverflowMode m);
Rounding rounding_from_string(const std::string& s);
OverflowMode overflow_from_string(const std::string& s);

/// Two's-complement fixed-point value: represented real = raw / 2^frac_bits,
/// with -2^(total_bits-1) <= raw < 2^(total_bits-1).
struct FixedPointValue {
    long long raw = 0;
    int total_bits = 0;
    int frac_bits = 0;

    double to_double() const { return std::ldexp(static_cast<double>(raw), -frac_bits); }
};

/// Raised when a value exceeds its allocated word length under
/// OverflowMode::error; node_id identifies the offending dataflow node
/// (-1 for a bare quantize call).
class FixedPointOverflow : public std::runtime_error {
public:
    explicit FixedPointOverflow(int node, const std::string& what);
    int node_id;
};

/// Quantizes a real to total_bits/frac_bits. Truncation rounds toward
/// negative infinity; round_half_up adds half an LSB first.
FixedPointValue quantize(double x, int total_bits, int frac_bits,
                         Rounding rounding = Rounding::truncate,
                         OverflowMode overflow = OverflowMode::error);

/// raw >> shift with the given rounding mode (shift >= 0); used for
/// re-quantizing exact products back onto the working fraction grid.
long long shift_round(__int128 raw, int shift, Rounding rounding);

/// Per-node word-length plan: node id -> word-length increase over the
/// input word length. Fraction width stays base_l - 1 everywhere; node k
/// is allocated base_l + deltas[k] total bits.
struct QuantizationSchedule {
    int base_l = 8;
    Rounding rounding = Rounding::truncate;
    OverflowMode overflow = OverflowMode::error;
    std::map<int, int> deltas;

    int total_bits_for(int node_id) const;
    int frac_bits() const { return base_l - 1; }
};

std::string schedule_to_json(const QuantizationSchedule& schedule);
QuantizationSchedule schedule_from_json(const std::string& text);

}  // namespace act
