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

#include "act/fixedpoint.hpp"

#include <cmath>

#include <json.hpp>

namespace act {

std::string to_string(Rounding r) {
    return r == Rounding::truncate ? "truncate" : "round-half-up";
}

std::string to_string(OverflowMode m) {
    return m == OverflowMode::error ? "error" : "saturate";
}

Rounding rounding_from_string(const std::string& s) {
    if (s == "truncate") return Rounding::truncate;
    if (s == "round-half-up") return Rounding::round_half_up;
    throw std::invalid_argument("unknown rounding mode: " + s);
}

OverflowMode overflow_from_string(const std::string& s) {
    if (s == "error") return OverflowMode::error;
    if (s == "saturate") return OverflowMode::saturate;
    throw std::invalid_argument("unknown overflow mode: " + s);
}

FixedPointOverflow::FixedPointOverflow(int node, const std::string& what)
    : std::runtime_error(what), node_id(node) {}

FixedPointValue quantize(double x, int total_bits, int frac_bits, Rounding rounding,
                         OverflowMode overflow) {
    if (total_bits < frac_bits + 1)
        throw std::invalid_argument("quantize: total_bits must exceed frac_bits");
    if (total_bits > 62) throw std::invalid_argument("quantize: total_bits above 62 unsupported");

    const double scaled = std::ldexp(x, frac_bits);
    double rounded = (rounding == Rounding::truncate) ? std::floor(scaled)
                                                      : std::floor(scaled + 0.5);
    const double max_raw = std::ldexp(1.0, total_bits - 1);
    if (rounded >= max_raw || rounded < -max_raw) {
        if (overflow == OverflowMode::error)
            throw FixedPointOverflow(-1, "quantize: value " + std::to_string(x) +
                                             " exceeds " + std::to_string(total_bits) + " bits");
        rounded = (rounded < 0) ? -max_raw : max_raw - 1.0;
    }
    return FixedPointValue{static_cast<long long>(rounded), total_bits, frac_bits};
}

long long shift_round(__int128 raw, int shift, Rounding rounding) {
    if (shift == 0) return static_cast<long long>(raw);
    if (rounding == Rounding::round_half_up) raw += static_cast<__int128>(1) << (shift - 1);
    return static_cast<long long>(raw >> shift);  // arithmetic shift: floor
}

int QuantizationSchedule::total_bits_for(int node_id) const {
    const auto it = deltas.find(node_id);
    if (it == deltas.end())
        throw std::invalid_argument("schedule has no delta for node " + std::to_string(node_id));
    if (it->second < 0) throw std::invalid_argument("negative delta L in schedule");
    return base_l + it->second;
}

std::string schedule_to_json(const QuantizationSchedule& schedule) {
    nlohmann::json deltas = nlohmann::json::object();
    for (const auto& [node, delta] : schedule.deltas) deltas[std::to_string(node)] = delta;
    const nlohmann::json j{{"base_l", schedule.base_l},
                           {"rounding", to_string(schedule.rounding)},
                           {"overflow", to_string(schedule.overflow)},
                           {"deltas", deltas}};
    return j.dump(2) + "\n";
}

QuantizationSchedule schedule_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    QuantizationSchedule schedule;
    schedule.base_l = j.at("base_l").get<int>();
    schedule.rounding = rounding_from_string(j.at("rounding").get<std::string>());
    schedule.overflow = overflow_from_string(j.at("overflow").get<std::string>());
    for (const auto& [key, value] : j.at("deltas").items()) {
        const int delta = value.get<int>();
        if (delta < 0) throw std::invalid_argument("schedule: delta L must be >= 0");
        schedule.deltas[std::stoi(key)] = delta;
    }
    return schedule;
}

}  // namespace act
