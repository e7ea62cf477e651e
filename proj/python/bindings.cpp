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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "act/arch_sim.hpp"
#include "act/linalg.hpp"
#include "act/metrics.hpp"
#include "act/numtheory.hpp"
#include "act/sampling.hpp"
#include "act/transform.hpp"

namespace py = pybind11;

namespace {

const act::SamplingGrid& grid8() {
    static const act::SamplingGrid grid = act::build_grid(8);
    return grid;
}

const act::FactorizationBundle& bundle8() {
    static const act::FactorizationBundle bundle = act::build_factorization(grid8());
    return bundle;
}

act::ArchitectureGraph graph_for(const std::string& arch) {
    return act::arch_from_string(arch) == act::Arch::I ? act::build_arch1_graph()
                                                       : act::build_arch2_graph();
}

std::vector<std::vector<double>> matrix_rows(const act::Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "8-point arithmetic cosine transform: exact DCT-II from non-uniform "
              "samples, plus fixed-point simulators of the two hardware architectures";

    m.def("moebius", &act::moebius, py::arg("n"));
    m.def("mertens", &act::mertens, py::arg("n"));

    m.def("grid_points", [] {
        std::vector<std::pair<long long, long long>> out;
        for (const auto& p : grid8().points)
            out.emplace_back(p.numerator().convert_to<long long>(),
                             p.denominator().convert_to<long long>());
        return out;
    }, "Non-uniform sampling instants as (numerator, denominator) pairs, ascending.");

    m.def("grid_json", [] { return act::grid_to_json(grid8()); });

    m.def("mean_weights", [] { return act::mean_weights(grid8()); },
          "Weights whose dot product with the samples gives the signal mean.");

    m.def("build_w", [] { return matrix_rows(act::build_w(grid8())); });

    m.def("interpolate", [](const std::vector<double>& v) { return act::interpolate(grid8(), v); },
          py::arg("signal"), "Non-uniform samples of an 8-point uniform signal.");

    m.def("mean_from_samples",
          [](const std::vector<double>& s) { return act::mean_from_nonuniform(grid8(), s); },
          py::arg("samples"));

    m.def("dct2", &act::dct2_oracle, py::arg("signal"),
          "Orthonormal DCT-II by direct summation (the reference path).");

    m.def("act_null_mean",
          [](const std::vector<double>& s) { return act::act_null_mean(grid8(), s); },
          py::arg("samples"),
          "DCT-II of a null-mean signal from its 10 non-uniform samples; V_0 = 0.");

    m.def("act_mertens",
          [](const std::vector<double>& s) { return act::act_mertens(grid8(), s); },
          py::arg("samples"),
          "DCT-II of an arbitrary signal from its 10 non-uniform samples.");

    m.def("transform_via_t",
          [](const std::vector<double>& s) { return act::transform_via_t(bundle8(), s); },
          py::arg("samples"), "AC coefficients V_1..V_7 through the factorized matrix T.");

    m.def("factorization_t", [] { return matrix_rows(bundle8().t); });

    m.def("complexity", [](const std::string& arch) {
        const act::ComplexityReport report = act::count_complexity(graph_for(arch));
        py::dict breakdown;
        for (const auto& [stage, counts] : report.breakdown) {
            py::dict d;
            d["multipliers"] = counts.multipliers;
            d["two_input_adders"] = counts.two_input_adders;
            d["shifts"] = counts.shifts;
            breakdown[py::str(stage)] = d;
        }
        py::dict out;
        out["multipliers"] = report.multipliers;
        out["two_input_adders"] = report.two_input_adders;
        out["shifts"] = report.shifts;
        out["breakdown"] = breakdown;
        return out;
    }, py::arg("arch"));

    m.def("simulate", [](const std::string& arch, int l, const std::vector<double>& samples,
                         const std::string& rounding) {
        const act::ArchitectureGraph graph = graph_for(arch);
        const act::QuantizationSchedule schedule =
            act::default_schedule(graph, l, act::rounding_from_string(rounding));
        const act::SimulationResult result = act::simulate(graph, samples, schedule);
        py::dict out;
        out["channels"] = result.channels;
        out["raw"] = result.raw;
        out["values"] = result.values;
        return out;
    }, py::arg("arch"), py::arg("l"), py::arg("samples"),
       py::arg("rounding") = "round-half-up",
       "Bit-accurate fixed-point evaluation with the default schedule.");

    m.def("sweep", [](const std::string& arch, const std::vector<int>& word_lengths,
                      long long trials, std::uint64_t seed, int threads) {
        act::TrialConfig config;
        config.arch = act::arch_from_string(arch);
        config.word_lengths = word_lengths;
        config.trials = trials;
        config.seed = seed;
        config.threads = threads;
        const act::QuantizationSchedule schedule =
            act::default_schedule(graph_for(arch), word_lengths.empty() ? 8 : word_lengths[0]);
        const act::MetricsReport report = act::run_experiment(config, schedule);
        py::list rows;
        for (const act::LevelMetrics& row : report.per_l) {
            py::dict d;
            d["L"] = row.l;
            d["avg_pct_error"] = row.avg_pct_error;
            d["psnr_db"] = row.psnr_db;
            rows.append(d);
        }
        return rows;
    }, py::arg("arch"), py::arg("word_lengths"), py::arg("trials") = 10000,
       py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("default_schedule_json", [](const std::string& arch, int l) {
        return act::schedule_to_json(act::default_schedule(graph_for(arch), l));
    }, py::arg("arch"), py::arg("l"));

    m.def("graph_json", [](const std::string& arch) { return act::graph_to_json(graph_for(arch)); },
          py::arg("arch"));
}
