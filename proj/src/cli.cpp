// Copyright 2026 The qjaccard authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qjaccard/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qjaccard/jaccard.hpp"
#include "qjaccard/qasm.hpp"
#include "qjaccard/simulator.hpp"

namespace qjaccard {

namespace {

using nlohmann::json;

Backend resolve_backend(const CliConfig& config, std::size_t input_length) {
    if (config.backend == "dense") {
        return Backend::Dense;
    }
    if (config.backend == "basis") {
        return Backend::Basis;
    }
    // auto: dense while the whole register file fits under the dense cap
    return layout_for_input_length(input_length).width() <= kDenseWidthCap ? Backend::Dense
                                                                           : Backend::Basis;
}

MeasurementResult measure_counter(const Circuit& circuit, Backend backend, std::uint64_t shots,
                                  std::uint64_t seed) {
    if (backend == Backend::Dense) {
        StateVector state = run_dense(circuit);
        return measure_register(state, circuit.layout(), circuit.measured_register(), shots, seed);
    }
    BasisState state = run_basis(circuit);
    return measure_register(state, circuit.layout(), circuit.measured_register(), shots, seed);
}

void print_histogram(std::ostream& out, const MeasurementResult& result, std::uint64_t shots) {
    out << "histogram (" << shots << " shots):\n";
    std::size_t count_width = 0;
    for (const auto& [bits, count] : result.histogram) {
        count_width = std::max(count_width, std::to_string(count).size());
    }
    for (const auto& [bits, count] : result.histogram) {
        out << "  " << bits << " " << std::setw(static_cast<int>(count_width)) << count << "\n";
    }
}

json histogram_json(const MeasurementResult& result) {
    json h = json::object();
    for (const auto& [bits, count] : result.histogram) {
        h[bits] = count;
    }
    return h;
}

json result_json(const CliConfig& config, Backend backend, const JaccardResult& result,
                 const MeasurementResult* measurement) {
    json j;
    j["a"] = result.intersection_count;
    j["b"] = result.union_count;
    j["jaccard"] = result.value ? json(to_string(*result.value)) : json(nullptr);
    j["histogram"] = measurement ? histogram_json(*measurement) : json::object();
    j["backend"] = backend_name(backend);
    j["shots"] = config.shots;
    j["seed"] = config.seed;
    return j;
}

void print_stats(std::ostream& out, const std::string& label, const CircuitStats& stats) {
    out << label << ":\n";
    out << "  width: " << stats.width << "\n";
    out << "  x: " << stats.x_gates << "\n";
    out << "  cx: " << stats.cx_gates << "\n";
    for (const auto& [controls, count] : stats.mcx_gates) {
        out << "  mcx[" << controls << " controls]: " << count << "\n";
    }
    out << "  total: " << stats.total_gates << "\n";
}

json stats_json(const CircuitStats& stats) {
    json mcx = json::object();
    for (const auto& [controls, count] : stats.mcx_gates) {
        mcx[std::to_string(controls)] = count;
    }
    return json{{"width", stats.width},
                {"x", stats.x_gates},
                {"cx", stats.cx_gates},
                {"mcx", mcx},
                {"total", stats.total_gates}};
}

int run_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.shots == 0) {
        err << "error: --shots must be at least 1\n";
        return 1;
    }
    const BitVector x = BitVector::parse(config.x);
    const BitVector y = BitVector::parse(config.y);
    if (x.length() != y.length()) {
        err << "error: --x and --y must have equal length\n";
        return 1;
    }
    const Backend backend = resolve_backend(config, x.length());

    if (config.command == "jaccard") {
        JaccardResult result = run_jaccard(x, y, backend);
        if (config.output == "json") {
            out << result_json(config, backend, result, nullptr).dump(2) << "\n";
        } else {
            out << "a=" << result.intersection_count << " b=" << result.union_count << " J=";
            if (result.value) {
                out << to_string(*result.value) << "\n";
            } else {
                out << "undefined (empty union)\n";
            }
        }
        return 0;
    }

    if (config.command == "intersect" || config.command == "union") {
        Circuit circuit = config.command == "intersect" ? build_intersection_circuit(x, y)
                                                        : build_union_circuit(x, y);
        MeasurementResult measurement = measure_counter(circuit, backend, config.shots, config.seed);
        if (config.output == "json") {
            JaccardResult result = run_jaccard(x, y, backend);
            out << result_json(config, backend, result, &measurement).dump(2) << "\n";
        } else {
            out << "counter=" << measurement.bitstring << " value=" << measurement.value << "\n";
            print_histogram(out, measurement, config.shots);
        }
        return 0;
    }

    if (config.command == "export-qasm") {
        Circuit circuit = config.circuit == "union" ? build_union_circuit(x, y)
                                                    : build_intersection_circuit(x, y);
        std::string text = to_qasm(circuit);
        if (config.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(config.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open '" << config.out_path << "' for writing\n";
                return 2;
            }
            file << text;
        }
        return 0;
    }

    // stats: one circuit when requested, both otherwise
    const bool want_intersect = config.circuit.empty() || config.circuit == "intersect";
    const bool want_union = config.circuit.empty() || config.circuit == "union";
    if (config.output == "json") {
        json j = json::object();
        if (want_intersect) {
            j["intersect"] = stats_json(circuit_stats(build_intersection_circuit(x, y)));
        }
        if (want_union) {
            j["union"] = stats_json(circuit_stats(build_union_circuit(x, y)));
        }
        out << j.dump(2) << "\n";
    } else {
        if (want_intersect) {
            print_stats(out, "intersect", circuit_stats(build_intersection_circuit(x, y)));
        }
        if (want_union) {
            print_stats(out, "union", circuit_stats(build_union_circuit(x, y)));
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Jaccard similarity of two binary vectors via quantum counting circuits"};
    app.require_subcommand(1);

    auto add_common = [&config](CLI::App* cmd, bool with_sampling) {
        cmd->add_option("--x", config.x, "first bitstring, most significant element first")
            ->required();
        cmd->add_option("--y", config.y, "second bitstring, same length as --x")->required();
        cmd->add_option("--backend", config.backend, "simulation backend")
            ->check(CLI::IsMember({"dense", "basis", "auto"}))
            ->capture_default_str();
        if (with_sampling) {
            cmd->add_option("--shots", config.shots, "measurement shots (at least 1)")
                ->capture_default_str();
            cmd->add_option("--seed", config.seed, "sampling seed")->capture_default_str();
        }
        cmd->add_option("--output", config.output, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    add_common(app.add_subcommand("jaccard", "compute a, b and the similarity a/b"), true);
    add_common(app.add_subcommand("intersect", "run the intersection-count circuit"), true);
    add_common(app.add_subcommand("union", "run the union-count circuit"), true);

    CLI::App* export_cmd =
        app.add_subcommand("export-qasm", "write a circuit as OpenQASM 2.0");
    add_common(export_cmd, false);
    export_cmd->add_option("--circuit", config.circuit, "which circuit to export")
        ->check(CLI::IsMember({"intersect", "union"}))
        ->required();
    export_cmd->add_option("--out", config.out_path, "output file (default: stdout)");

    CLI::App* stats_cmd = app.add_subcommand("stats", "print gate counts and width");
    add_common(stats_cmd, false);
    stats_cmd->add_option("--circuit", config.circuit, "restrict to one circuit")
        ->check(CLI::IsMember({"intersect", "union"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);  // contextual help, exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    config.command = app.get_subcommands().front()->get_name();

    try {
        return run_command(config, out, err);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExportError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qjaccard
