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

#include "act/arch_sim.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "act/numtheory.hpp"
#include "act/sampling.hpp"

namespace act {

namespace {

constexpr int kTransformLength = 8;
constexpr long long kLcmScale = 420;    // lcm(1..7)
constexpr double kOutputScale = 210.0;  // 420 * sqrt(2/8)

const char* kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::input: return "input";
        case NodeKind::shift: return "shift";
        case NodeKind::add: return "add";
        case NodeKind::sub: return "sub";
        case NodeKind::int_mul: return "int_mul";
        case NodeKind::frac_mul: return "frac_mul";
        case NodeKind::output: return "output";
    }
    return "?";
}

NodeKind kind_from_name(const std::string& name) {
    for (NodeKind k : {NodeKind::input, NodeKind::shift, NodeKind::add, NodeKind::sub,
                       NodeKind::int_mul, NodeKind::frac_mul, NodeKind::output})
        if (name == kind_name(k)) return k;
    throw std::invalid_argument("unknown node kind: " + name);
}

/// Incremental graph builder; append order is topological by construction.
class GraphBuilder {
public:
    explicit GraphBuilder(Arch arch) { graph_.arch = arch; }

    int input(int port) {
        Node n;
        n.kind = NodeKind::input;
        n.port = port;
        n.stage = "input";
        ++graph_.input_count;
        return append(n);
    }
    int shift(int a, int amount, const std::string& stage) {
        Node n;
        n.kind = NodeKind::shift;
        n.a = a;
        n.shift_amount = amount;
        n.stage = stage;
        return append(n);
    }
    int add(int a, int b, const std::string& stage) { return binop(NodeKind::add, a, b, stage); }
    int sub(int a, int b, const std::string& stage) { return binop(NodeKind::sub, a, b, stage); }
    int int_mul(int a, long long constant, const std::string& stage) {
        Node n;
        n.kind = NodeKind::int_mul;
        n.a = a;
        n.constant = constant;
        n.stage = stage;
        return append(n);
    }
    int frac_mul(int a, double coeff, const std::string& stage) {
        Node n;
        n.kind = NodeKind::frac_mul;
        n.a = a;
        n.coeff = coeff;
        n.coeff_raw = std::llround(std::ldexp(coeff, kCoeffFracBits));
        n.stage = stage;
        return append(n);
    }
    int output(int a, int channel, double scale) {
        Node n;
        n.kind = NodeKind::output;
        n.a = a;
        n.channel = channel;
        n.output_scale = scale;
        n.stage = "output";
        const int id = append(n);
        graph_.output_ids.push_back(id);
        return id;
    }

    ArchitectureGraph take() { return std::move(graph_); }

private:
    int binop(NodeKind kind, int a, int b, const std::string& stage) {
        Node n;
        n.kind = kind;
        n.a = a;
        n.b = b;
        n.stage = stage;
        return append(n);
    }
    int append(Node n) {
        n.id = static_cast<int>(graph_.nodes.size()) + 1;
        graph_.nodes.push_back(std::move(n));
        return graph_.nodes.back().id;
    }

    ArchitectureGraph graph_;
};

struct NullMeanBody {
    std::vector<int> input_ids;    // 10 ports
    std::vector<int> scaled_ids;   // A_k = (420/k) * gather_k, k = 1..7
    std::vector<int> channel_ids;  // Moebius-combined 210 * V_k, k = 1..7
};

/// Shared Architecture I body: gathers, integer scaling, Moebius stage.
NullMeanBody build_null_mean_body(GraphBuilder& builder) {
    const SamplingGrid grid = build_grid(kTransformLength);
    NullMeanBody body;

    for (int port = 0; port < static_cast<int>(grid.size()); ++port)
        body.input_ids.push_back(builder.input(port));

    for (int k = 1; k < kTransformLength; ++k) {
        const auto& mult = grid.multiplicity[static_cast<std::size_t>(k - 1)];
        int acc = 0;
        for (std::size_t j = 0; j < mult.size(); ++j) {
            if (mult[j] == 0) continue;
            int tap = body.input_ids[j];
            if (mult[j] == 2) tap = builder.shift(tap, 1, "gather");
            acc = (acc == 0) ? tap : builder.add(acc, tap, "gather");
        }
        body.scaled_ids.push_back(builder.int_mul(acc, kLcmScale / k, "scale"));
    }

    for (int k = 1; k < kTransformLength; ++k) {
        int acc = body.scaled_ids[static_cast<std::size_t>(k - 1)];
        for (int l = 2; k * l <= kTransformLength - 1; ++l) {
            const int mu = moebius(l);
            if (mu == 0) continue;
            const int term = body.scaled_ids[static_cast<std::size_t>(k * l - 1)];
            acc = (mu > 0) ? builder.add(acc, term, "moebius") : builder.sub(acc, term, "moebius");
        }
        body.channel_ids.push_back(acc);
    }
    return body;
}

long long check_range(__int128 value, int total_bits, int node_id, OverflowMode overflow) {
    const __int128 limit = static_cast<__int128>(1) << (total_bits - 1);
    if (value >= limit || value < -limit) {
        if (overflow == OverflowMode::error)
            throw FixedPointOverflow(node_id, "fixed-point overflow at node " +
                                                  std::to_string(node_id) + " (" +
                                                  std::to_string(total_bits) + " bits)");
        value = (value < 0) ? -limit : limit - 1;
    }
    return static_cast<long long>(value);
}

}  // namespace

std::string to_string(Arch arch) { return arch == Arch::I ? "I" : "II"; }

Arch arch_from_string(const std::string& s) {
    if (s == "I" || s == "1" || s == "i") return Arch::I;
    if (s == "II" || s == "2" || s == "ii") return Arch::II;
    throw std::invalid_argument("unknown architecture: " + s);
}

std::vector<CsdDigit> csd_digits(long long value) {
    if (value <= 0) throw std::invalid_argument("csd_digits: positive constants only");
    std::vector<CsdDigit> digits;
    int bit = 0;
    while (value != 0) {
        if (value & 1) {
            const int digit = 2 - static_cast<int>(value & 3);  // +1 or -1, non-adjacent
            digits.push_back(CsdDigit{bit, digit});
            value -= digit;
        }
        value >>= 1;
        ++bit;
    }
    return digits;
}

ArchitectureGraph build_arch1_graph() {
    GraphBuilder builder(Arch::I);
    const NullMeanBody body = build_null_mean_body(builder);
    for (int k = 1; k < kTransformLength; ++k)
        builder.output(body.channel_ids[static_cast<std::size_t>(k - 1)], k, kOutputScale);
    return builder.take();
}

ArchitectureGraph build_arch2_graph() {
    GraphBuilder builder(Arch::II);
    const NullMeanBody body = build_null_mean_body(builder);

    // Mean block: v_bar = sum of (w_j / 8) * input_j.
    const std::vector<double> weights = mean_weights(build_grid(kTransformLength));
    int mean_id = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const int product = builder.frac_mul(body.input_ids[j], weights[j], "mean");
        mean_id = (mean_id == 0) ? product : builder.add(mean_id, product, "mean");
    }

    // Mertens correction: channel k receives -M(floor(7/k)) * 420 * v_bar,
    // folded onto the same 210 output scale as the Moebius stage.
    const int scaled_mean = builder.int_mul(mean_id, kLcmScale, "correction");
    int doubled_mean = 0;
    std::vector<int> corrected = body.channel_ids;
    for (int k = 1; k < kTransformLength; ++k) {
        const long long weight = -mertens((kTransformLength - 1) / k);
        if (weight == 0) continue;
        const auto idx = static_cast<std::size_t>(k - 1);
        if (weight == 2) {
            if (doubled_mean == 0) doubled_mean = builder.shift(scaled_mean, 1, "correction");
            corrected[idx] = builder.add(corrected[idx], doubled_mean, "correction");
        } else if (weight == 1) {
            corrected[idx] = builder.add(corrected[idx], scaled_mean, "correction");
        } else if (weight == -1) {
            corrected[idx] = builder.sub(corrected[idx], scaled_mean, "correction");
        } else {
            throw std::logic_error("unexpected Mertens correction weight");
        }
    }

    // DC path: V_0 = sqrt(8) * v_bar, the eleventh multiplier.
    const int dc = builder.frac_mul(mean_id, std::sqrt(8.0), "dc");

    builder.output(dc, 0, 1.0);
    for (int k = 1; k < kTransformLength; ++k)
        builder.output(corrected[static_cast<std::size_t>(k - 1)], k, kOutputScale);
    return builder.take();
}

ComplexityReport count_complexity(const ArchitectureGraph& graph) {
    ComplexityReport report;
    for (const Node& node : graph.nodes) {
        StageComplexity& stage = report.breakdown[node.stage];
        switch (node.kind) {
            case NodeKind::add:
            case NodeKind::sub:
                ++report.two_input_adders;
                ++stage.two_input_adders;
                break;
            case NodeKind::shift:
                ++report.shifts;
                ++stage.shifts;
                break;
            case NodeKind::int_mul: {
                const auto digits = csd_digits(node.constant);
                const int adders = static_cast<int>(digits.size()) - 1;
                int shifts = 0;
                for (const CsdDigit& d : digits)
                    if (d.shift > 0) ++shifts;
                report.two_input_adders += adders;
                report.shifts += shifts;
                stage.two_input_adders += adders;
                stage.shifts += shifts;
                break;
            }
            case NodeKind::frac_mul:
                ++report.multipliers;
                ++stage.multipliers;
                break;
            case NodeKind::input:
            case NodeKind::output:
                break;
        }
    }
    return report;
}

QuantizationSchedule default_schedule(const ArchitectureGraph& graph, int base_l,
                                      Rounding rounding, OverflowMode overflow) {
    QuantizationSchedule schedule;
    schedule.base_l = base_l;
    schedule.rounding = rounding;
    schedule.overflow = overflow;

    std::vector<double> bound(graph.nodes.size() + 1, 0.0);
    for (const Node& node : graph.nodes) {
        double b = 0.0;
        switch (node.kind) {
            case NodeKind::input: b = 1.0; break;
            case NodeKind::shift: b = std::ldexp(bound[node.a], node.shift_amount); break;
            case NodeKind::add:
            case NodeKind::sub: b = bound[node.a] + bound[node.b]; break;
            case NodeKind::int_mul: b = std::abs(static_cast<double>(node.constant)) * bound[node.a]; break;
            case NodeKind::frac_mul: b = std::fabs(node.coeff) * bound[node.a]; break;
            case NodeKind::output: b = bound[node.a]; break;
        }
        bound[node.id] = b;
        const int delta = std::max(0, static_cast<int>(std::ceil(std::log2(b))));
        schedule.deltas[node.id] = delta;
    }
    return schedule;
}

SimulationResult simulate(const ArchitectureGraph& graph, const std::vector<double>& samples,
                          const QuantizationSchedule& schedule) {
    if (samples.size() != static_cast<std::size_t>(graph.input_count))
        throw std::invalid_argument("simulate: expected " + std::to_string(graph.input_count) +
                                    " samples, got " + std::to_string(samples.size()));
    const int frac = schedule.frac_bits();

    SimulationResult result;
    result.node_raw.assign(graph.nodes.size(), 0);
    std::vector<long long> raw(graph.nodes.size() + 1, 0);

    for (const Node& node : graph.nodes) {
        const int bits = schedule.total_bits_for(node.id);
        if (bits > 62)
            throw std::invalid_argument("simulate: node " + std::to_string(node.id) +
                                        " allocated " + std::to_string(bits) +
                                        " bits, above the supported 62");
        __int128 value = 0;
        switch (node.kind) {
            case NodeKind::input: {
                const double scaled = std::ldexp(samples[static_cast<std::size_t>(node.port)], frac);
                const double rounded = schedule.rounding == Rounding::truncate
                                           ? std::floor(scaled)
                                           : std::floor(scaled + 0.5);
                if (!(std::fabs(rounded) < 0x1p62))  // also rejects NaN
                    throw FixedPointOverflow(node.id, "fixed-point overflow at node " +
                                                          std::to_string(node.id) +
                                                          " (input far outside [-1, 1])");
                value = static_cast<__int128>(static_cast<long long>(rounded));
                break;
            }
            case NodeKind::shift:
                value = static_cast<__int128>(raw[node.a]) << node.shift_amount;
                break;
            case NodeKind::add:
                value = static_cast<__int128>(raw[node.a]) + raw[node.b];
                break;
            case NodeKind::sub:
                value = static_cast<__int128>(raw[node.a]) - raw[node.b];
                break;
            case NodeKind::int_mul:
                value = static_cast<__int128>(raw[node.a]) * node.constant;
                break;
            case NodeKind::frac_mul:
                value = shift_round(static_cast<__int128>(raw[node.a]) * node.coeff_raw,
                                    kCoeffFracBits, schedule.rounding);
                break;
            case NodeKind::output:
                value = raw[node.a];
                break;
        }
        raw[node.id] = check_range(value, bits, node.id, schedule.overflow);
        result.node_raw[static_cast<std::size_t>(node.id - 1)] = raw[node.id];
    }

    for (const int id : graph.output_ids) {
        const Node& node = graph.nodes[static_cast<std::size_t>(id - 1)];
        result.channels.push_back(node.channel);
        result.raw.push_back(raw[id]);
        result.values.push_back(std::ldexp(static_cast<double>(raw[id]), -frac) / node.output_scale);
    }
    return result;
}

std::string graph_to_json(const ArchitectureGraph& graph) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& node : graph.nodes) {
        nlohmann::json j{{"id", node.id}, {"kind", kind_name(node.kind)}, {"stage", node.stage}};
        switch (node.kind) {
            case NodeKind::input: j["port"] = node.port; break;
            case NodeKind::shift:
                j["a"] = node.a;
                j["shift"] = node.shift_amount;
                break;
            case NodeKind::add:
            case NodeKind::sub:
                j["a"] = node.a;
                j["b"] = node.b;
                break;
            case NodeKind::int_mul:
                j["a"] = node.a;
                j["constant"] = node.constant;
                break;
            case NodeKind::frac_mul:
                j["a"] = node.a;
                j["coeff"] = node.coeff;
                j["coeff_raw"] = node.coeff_raw;
                j["coeff_frac_bits"] = kCoeffFracBits;
                break;
            case NodeKind::output:
                j["a"] = node.a;
                j["channel"] = node.channel;
                j["scale"] = node.output_scale;
                break;
        }
        nodes.push_back(std::move(j));
    }
    const nlohmann::json j{{"arch", to_string(graph.arch)},
                           {"input_count", graph.input_count},
                           {"nodes", nodes}};
    return j.dump(2) + "\n";
}

ArchitectureGraph graph_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ArchitectureGraph graph;
    graph.arch = arch_from_string(j.at("arch").get<std::string>());
    graph.input_count = j.at("input_count").get<int>();
    for (const auto& nj : j.at("nodes")) {
        Node node;
        node.id = nj.at("id").get<int>();
        node.kind = kind_from_name(nj.at("kind").get<std::string>());
        node.stage = nj.at("stage").get<std::string>();
        switch (node.kind) {
            case NodeKind::input: node.port = nj.at("port").get<int>(); break;
            case NodeKind::shift:
                node.a = nj.at("a").get<int>();
                node.shift_amount = nj.at("shift").get<int>();
                break;
            case NodeKind::add:
            case NodeKind::sub:
                node.a = nj.at("a").get<int>();
                node.b = nj.at("b").get<int>();
                break;
            case NodeKind::int_mul:
                node.a = nj.at("a").get<int>();
                node.constant = nj.at("constant").get<long long>();
                break;
            case NodeKind::frac_mul:
                node.a = nj.at("a").get<int>();
                node.coeff = nj.at("coeff").get<double>();
                node.coeff_raw = nj.at("coeff_raw").get<long long>();
                break;
            case NodeKind::output:
                node.a = nj.at("a").get<int>();
                node.channel = nj.at("channel").get<int>();
                node.output_scale = nj.at("scale").get<double>();
                graph.output_ids.push_back(node.id);
                break;
        }
        if (node.id != static_cast<int>(graph.nodes.size()) + 1)
            throw std::invalid_argument("graph_from_json: node ids must be 1..n in order");
        if (node.a > 0 && node.a >= node.id)
            throw std::invalid_argument("graph_from_json: operand does not precede node");
        graph.nodes.push_back(std::move(node));
    }
    return graph;
}

std::string complexity_to_json(const ComplexityReport& report, Arch arch) {
    nlohmann::json breakdown = nlohmann::json::object();
    for (const auto& [stage, counts] : report.breakdown) {
        breakdown[stage] = {{"multipliers", counts.multipliers},
                            {"two_input_adders", counts.two_input_adders},
                            {"shifts", counts.shifts}};
    }
    const nlohmann::json j{{"arch", to_string(arch)},
                           {"multipliers", report.multipliers},
                           {"two_input_adders", report.two_input_adders},
                           {"shifts", report.shifts},
                           {"breakdown", breakdown}};
    return j.dump(2) + "\n";
}

}  // namespace act
