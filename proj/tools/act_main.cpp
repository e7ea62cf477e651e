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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "act/arch_sim.hpp"
#include "act/linalg.hpp"
#include "act/metrics.hpp"
#include "act/numtheory.hpp"
#include "act/sampling.hpp"
#include "act/transform.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitLengthMismatch = 3;
constexpr int kExitOverflow = 4;

struct CliError {
    int code;
    std::string message;
};

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_number_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(values[i]);
    }
    out += "]";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitMalformed, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{1, "cannot write " + path};
    out << text;
}

/// Sample files are a bare JSON number array or an object with a
/// "samples" array; an embedded "grid" header, when present, must match
/// the transform's grid.
std::vector<double> load_samples(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw CliError{kExitMalformed, std::string("malformed input: ") + e.what()};
    }
    if (j.is_object() && j.contains("samples")) {
        if (j.contains("grid")) {
            try {
                const act::SamplingGrid embedded = act::grid_from_json(j.at("grid").dump());
                if (embedded.points != act::build_grid(8).points)
                    throw CliError{kExitMalformed, "embedded grid does not match the 8-point grid"};
            } catch (const nlohmann::json::exception& e) {
                throw CliError{kExitMalformed, std::string("malformed grid header: ") + e.what()};
            }
        }
        j = j.at("samples");
    }
    if (!j.is_array()) throw CliError{kExitMalformed, "input must be a JSON array of numbers"};
    std::vector<double> samples;
    for (const auto& x : j) {
        if (!x.is_number()) throw CliError{kExitMalformed, "input must contain numbers only"};
        samples.push_back(x.get<double>());
    }
    return samples;
}

act::Arch parse_arch(const std::string& s) {
    try {
        return act::arch_from_string(s);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitMalformed, e.what()};
    }
}

act::ArchitectureGraph graph_for(act::Arch arch) {
    return arch == act::Arch::I ? act::build_arch1_graph() : act::build_arch2_graph();
}

act::QuantizationSchedule load_schedule(const std::string& path, const act::ArchitectureGraph& graph,
                                        int base_l) {
    act::QuantizationSchedule schedule;
    if (path.empty()) {
        schedule = act::default_schedule(graph, base_l);
    } else {
        try {
            schedule = act::schedule_from_json(read_file(path));
        } catch (const nlohmann::json::parse_error& e) {
            throw CliError{kExitMalformed, std::string("malformed schedule: ") + e.what()};
        }
        if (base_l > 0) schedule.base_l = base_l;
    }
    for (const act::Node& node : graph.nodes)
        if (!schedule.deltas.count(node.id))
            throw CliError{kExitMalformed,
                           "schedule missing delta for node " + std::to_string(node.id)};
    return schedule;
}

int run_transform(const std::string& input, const std::string& mode, bool from_uniform) {
    std::vector<double> samples = load_samples(input);
    const act::SamplingGrid grid = act::build_grid(8);
    if (from_uniform) {
        if (samples.size() != 8)
            throw CliError{kExitLengthMismatch, "--from-uniform expects 8 values, got " +
                                                    std::to_string(samples.size())};
        samples = act::interpolate(grid, samples);
    } else if (samples.size() != grid.size()) {
        throw CliError{kExitLengthMismatch,
                       "expected 10 non-uniform samples, got " + std::to_string(samples.size())};
    }

    std::vector<double> coeffs;
    if (mode == "null-mean") {
        coeffs = act::act_null_mean(grid, samples);
    } else if (mode == "mertens") {
        coeffs = act::act_mertens(grid, samples);
    } else if (mode == "factorized") {
        coeffs = act::transform_via_t(act::build_factorization(grid), samples);
    } else {
        throw CliError{kExitMalformed, "unknown mode: " + mode};
    }
    std::cout << json_number_array(coeffs) << "\n";
    return 0;
}

std::string matrix_to_csv(const act::Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += format_double(m(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string matrix_to_csv(const act::RationalMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            const act::Rational& r = m(i, j);
            out += r.numerator().str();
            if (r.denominator() != 1) out += "/" + r.denominator().str();
        }
        out += "\n";
    }
    return out;
}

int run_matrices(const std::string& which, bool exact) {
    const act::SamplingGrid grid = act::build_grid(8);
    const act::FactorizationBundle bundle = act::build_factorization(grid);

    const act::RationalMatrix* rational = nullptr;
    std::optional<act::Matrix> dense;
    if (which == "Mo") rational = &bundle.mo;
    else if (which == "D1") rational = &bundle.d1;
    else if (which == "S") rational = &bundle.s;
    else if (which == "Me") rational = &bundle.me;
    else if (which == "W") dense = act::build_w(grid);
    else if (which == "Wplus") dense = bundle.wplus;
    else if (which == "T") dense = bundle.t;
    else if (which == "mean-weights") {
        const std::vector<double> w = act::mean_weights(grid);
        act::Matrix row(1, w.size());
        for (std::size_t j = 0; j < w.size(); ++j) row(0, j) = w[j];
        dense = row;
    } else {
        throw CliError{kExitMalformed, "unknown matrix: " + which};
    }

    if (exact) {
        if (!rational)
            throw CliError{kExitMalformed, "exact form not defined for " + which};
        std::cout << matrix_to_csv(*rational);
    } else {
        std::cout << matrix_to_csv(dense ? *dense : act::to_matrix(*rational));
    }
    return 0;
}

int run_simulate(const std::string& arch_name, int base_l, const std::string& schedule_path,
                 const std::string& input, bool trace) {
    const act::Arch arch = parse_arch(arch_name);
    const act::ArchitectureGraph graph = graph_for(arch);
    const act::QuantizationSchedule schedule = load_schedule(schedule_path, graph, base_l);
    const std::vector<double> samples = load_samples(input);
    if (samples.size() != static_cast<std::size_t>(graph.input_count))
        throw CliError{kExitLengthMismatch, "expected " + std::to_string(graph.input_count) +
                                                " samples, got " + std::to_string(samples.size())};

    const act::SimulationResult result = act::simulate(graph, samples, schedule);
    nlohmann::json j{{"arch", act::to_string(arch)},
                     {"L", schedule.base_l},
                     {"channels", result.channels},
                     {"raw", result.raw},
                     {"values", result.values}};
    if (trace) {
        nlohmann::json nodes = nlohmann::json::array();
        for (std::size_t i = 0; i < result.node_raw.size(); ++i) {
            nodes.push_back({{"id", static_cast<int>(i) + 1},
                             {"raw", result.node_raw[i]},
                             {"value", std::ldexp(static_cast<double>(result.node_raw[i]),
                                                  -schedule.frac_bits())}});
        }
        j["trace"] = nodes;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_sweep(const std::string& arch_name, std::vector<int> word_lengths, long long trials,
              std::uint64_t seed, int threads, const std::string& schedule_path,
              const std::string& out_path, const std::string& json_path) {
    act::TrialConfig config;
    config.arch = parse_arch(arch_name);
    config.word_lengths = std::move(word_lengths);
    config.trials = trials;
    config.seed = seed;
    config.threads = threads;

    const act::ArchitectureGraph graph = graph_for(config.arch);
    const act::QuantizationSchedule schedule =
        load_schedule(schedule_path, graph, config.word_lengths.empty() ? 8 : config.word_lengths[0]);

    const act::MetricsReport report = act::run_experiment(config, schedule);
    const std::string csv = act::report_to_csv(report);
    if (out_path.empty()) std::cout << csv;
    else write_file(out_path, csv);
    if (!json_path.empty()) write_file(json_path, act::report_to_json(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"8-point arithmetic cosine transform toolkit"};
    app.require_subcommand(1);

    std::string input_path;
    std::string mode = "mertens";
    bool from_uniform = false;
    auto* transform = app.add_subcommand("transform", "DCT coefficients from sample file");
    transform->add_option("--input", input_path, "JSON sample file")->required();
    transform->add_option("--mode", mode, "null-mean | mertens | factorized");
    transform->add_flag("--from-uniform", from_uniform, "input holds 8 uniform samples");

    std::string which;
    bool exact = false;
    auto* matrices = app.add_subcommand("matrices", "dump a transform matrix as CSV");
    matrices->add_option("--which", which, "W | Wplus | T | Mo | D1 | S | Me | mean-weights")
        ->required();
    matrices->add_flag("--exact", exact, "emit exact rationals where defined");

    auto* grid_cmd = app.add_subcommand("grid", "dump the sampling grid as JSON");

    std::string arch_name = "I";
    int base_l = 8;
    std::string schedule_path;
    bool trace = false;
    auto* simulate = app.add_subcommand("simulate", "run a fixed-point architecture simulation");
    simulate->add_option("--arch", arch_name, "I | II");
    simulate->add_option("--L", base_l, "input word length");
    simulate->add_option("--schedule", schedule_path, "schedule JSON (default: auto)");
    simulate->add_option("--input", input_path, "JSON sample file")->required();
    simulate->add_flag("--trace", trace, "include the per-node trace");

    std::string sched_arch = "I";
    int sched_l = 8;
    std::string sched_rounding = "round-half-up";
    std::string sched_overflow = "error";
    auto* schedule_cmd = app.add_subcommand("schedule", "emit the default quantization schedule");
    schedule_cmd->add_option("--arch", sched_arch, "I | II");
    schedule_cmd->add_option("--L", sched_l, "input word length");
    schedule_cmd->add_option("--rounding", sched_rounding, "truncate | round-half-up");
    schedule_cmd->add_option("--overflow", sched_overflow, "error | saturate");

    std::string sweep_arch = "I";
    std::vector<int> word_lengths{8, 12, 16, 20, 24, 28, 32};
    long long trials = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out_path;
    std::string json_path;
    auto* sweep = app.add_subcommand("sweep", "accuracy sweep over word lengths");
    sweep->add_option("--arch", sweep_arch, "I | II");
    sweep->add_option("--word-lengths", word_lengths, "word lengths to test")->delimiter(',');
    sweep->add_option("--trials", trials, "random trials per word length");
    sweep->add_option("--seed", seed, "PRNG seed");
    sweep->add_option("--threads", threads, "worker threads (result is thread-invariant)");
    sweep->add_option("--schedule", schedule_path, "schedule JSON (default: auto)");
    sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
    sweep->add_option("--json", json_path, "also write a JSON report here");

    std::string complexity_arch = "I";
    auto* complexity = app.add_subcommand("complexity", "operation counts for an architecture");
    complexity->add_option("--arch", complexity_arch, "I | II");

    std::string graph_arch = "I";
    auto* graph_cmd = app.add_subcommand("graph", "dump the dataflow graph as JSON");
    graph_cmd->add_option("--arch", graph_arch, "I | II");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) return run_transform(input_path, mode, from_uniform);
        if (matrices->parsed()) return run_matrices(which, exact);
        if (grid_cmd->parsed()) {
            std::cout << act::grid_to_json(act::build_grid(8));
            return 0;
        }
        if (simulate->parsed())
            return run_simulate(arch_name, base_l, schedule_path, input_path, trace);
        if (schedule_cmd->parsed()) {
            const act::Arch arch = parse_arch(sched_arch);
            std::cout << act::schedule_to_json(act::default_schedule(
                graph_for(arch), sched_l, act::rounding_from_string(sched_rounding),
                act::overflow_from_string(sched_overflow)));
            return 0;
        }
        if (sweep->parsed())
            return run_sweep(sweep_arch, word_lengths, trials, seed, threads, schedule_path,
                             out_path, json_path);
        if (complexity->parsed()) {
            const act::Arch arch = parse_arch(complexity_arch);
            std::cout << act::complexity_to_json(act::count_complexity(graph_for(arch)), arch);
            return 0;
        }
        if (graph_cmd->parsed()) {
            std::cout << act::graph_to_json(graph_for(parse_arch(graph_arch)));
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const act::FixedPointOverflow& e) {
        std::cerr << "error: " << e.what() << " (node " << e.node_id << ")\n";
        return kExitOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
