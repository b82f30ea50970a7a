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

#include "qjaccard/simulator.hpp"

#include <random>
#include <utility>

namespace qjaccard {

namespace {

// Hard ceiling on direct StateVector construction; 2^30 amplitudes is 16 GB.
constexpr QubitIndex kAbsoluteDenseLimit = 30;

std::uint64_t control_mask(const GateOp& gate) {
    std::uint64_t mask = 0;
    for (QubitIndex c : controls_of(gate)) {
        mask |= std::uint64_t{1} << c;
    }
    return mask;
}

// Uniform double in [0, 1) from the top 53 bits of a generator draw;
// identical across platforms for a given seed.
double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t extract_register(std::uint64_t basis_index, const RegisterLayout& layout,
                               Register reg) {
    QubitIndex size = layout.register_size(reg);
    std::uint64_t value = 0;
    for (QubitIndex i = 0; i < size; ++i) {
        std::uint64_t bit = (basis_index >> layout.register_qubit(reg, i)) & 1;
        value |= bit << i;
    }
    return value;
}

MeasurementResult histogram_to_result(std::map<std::string, std::uint64_t> histogram) {
    MeasurementResult result;
    std::uint64_t best = 0;
    for (const auto& [bits, count] : histogram) {
        if (count > best) {
            best = count;
            result.bitstring = bits;
        }
    }
    result.value = std::stoull(result.bitstring, nullptr, 2);
    result.histogram = std::move(histogram);
    return result;
}

void check_measure_args(QubitIndex state_width, const RegisterLayout& layout,
                        std::uint64_t shots) {
    if (shots == 0) {
        throw std::invalid_argument("measure_register: shots must be at least 1");
    }
    if (layout.width() != state_width) {
        throw std::invalid_argument("measure_register: layout width " +
                                    std::to_string(layout.width()) +
                                    " does not match state width " +
                                    std::to_string(state_width));
    }
}

}  // namespace

StateVector::StateVector(QubitIndex width) : width_(width) {
    if (width > kAbsoluteDenseLimit) {
        throw CapacityError("StateVector: width " + std::to_string(width) +
                            " exceeds the dense representation limit of " +
                            std::to_string(kAbsoluteDenseLimit) + " qubits");
    }
    amplitudes_.assign(std::uint64_t{1} << width_, {0.0, 0.0});
    amplitudes_[0] = {1.0, 0.0};
}

double StateVector::squared_norm() const {
    double total = 0.0;
    for (const auto& amp : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

std::uint64_t StateVector::dominant_index() const {
    std::uint64_t best_index = 0;
    double best_prob = std::norm(amplitudes_[0]);
    for (std::uint64_t i = 1; i < amplitudes_.size(); ++i) {
        double p = std::norm(amplitudes_[i]);
        if (p > best_prob) {
            best_prob = p;
            best_index = i;
        }
    }
    return best_index;
}

void apply_gate(StateVector& state, const GateOp& gate) {
    check_gate(gate, state.width());
    const std::uint64_t target_bit = std::uint64_t{1} << target_of(gate);
    const std::uint64_t controls = control_mask(gate);
    const std::uint64_t dim = state.dim();
    // Walk indices with target bit 0 and swap with the partner index; the
    // gate fires only where every control bit is set.
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & target_bit) == 0 && (i & controls) == controls) {
            std::swap(state[i], state[i | target_bit]);
        }
    }
}

void apply_gate(BasisState& state, const GateOp& gate) {
    check_gate(gate, state.width);
    const std::uint64_t controls = control_mask(gate);
    if ((state.bits & controls) == controls) {
        state.bits ^= std::uint64_t{1} << target_of(gate);
    }
}

std::string backend_name(Backend backend) {
    return backend == Backend::Dense ? "dense" : "basis";
}

StateVector run_dense(const Circuit& circuit, QubitIndex width_cap) {
    if (circuit.width() > width_cap) {
        throw CapacityError("dense backend: circuit width " + std::to_string(circuit.width()) +
                            " exceeds the cap of " + std::to_string(width_cap) +
                            " qubits; use the basis backend");
    }
    StateVector state(circuit.width());
    for (const GateOp& gate : circuit.gates()) {
        apply_gate(state, gate);
    }
    return state;
}

BasisState run_basis(const Circuit& circuit) {
    if (circuit.width() > kBasisWidthCap) {
        throw CapacityError("basis backend: circuit width " + std::to_string(circuit.width()) +
                            " exceeds " + std::to_string(kBasisWidthCap) + " qubits");
    }
    BasisState state{circuit.width(), 0};
    for (const GateOp& gate : circuit.gates()) {
        apply_gate(state, gate);
    }
    return state;
}

std::uint64_t register_value(const StateVector& state, const RegisterLayout& layout,
                             Register reg) {
    if (layout.width() != state.width()) {
        throw std::invalid_argument("register_value: layout width does not match state width");
    }
    return extract_register(state.dominant_index(), layout, reg);
}

std::uint64_t register_value(const BasisState& state, const RegisterLayout& layout,
                             Register reg) {
    if (layout.width() != state.width) {
        throw std::invalid_argument("register_value: layout width does not match state width");
    }
    return extract_register(state.bits, layout, reg);
}

std::string format_bits(std::uint64_t value, QubitIndex width) {
    std::string s(width, '0');
    for (QubitIndex i = 0; i < width; ++i) {
        if ((value >> i) & 1) {
            s[width - 1 - i] = '1';
        }
    }
    return s;
}

MeasurementResult measure_register(const StateVector& state, const RegisterLayout& layout,
                                   Register reg, std::uint64_t shots, std::uint64_t seed) {
    check_measure_args(state.width(), layout, shots);
    const QubitIndex reg_width = layout.register_size(reg);

    // Marginal distribution of the register over all basis states.
    std::map<std::uint64_t, double> marginal;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        double p = std::norm(state[i]);
        if (p > 0.0) {
            marginal[extract_register(i, layout, reg)] += p;
        }
    }

    std::mt19937_64 rng(seed);
    std::map<std::string, std::uint64_t> histogram;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        double r = uniform_unit(rng) * state.squared_norm();
        std::uint64_t outcome = marginal.rbegin()->first;  // fallback soaks up rounding spill
        double cumulative = 0.0;
        for (const auto& [value, p] : marginal) {
            cumulative += p;
            if (r < cumulative) {
                outcome = value;
                break;
            }
        }
        ++histogram[format_bits(outcome, reg_width)];
    }
    return histogram_to_result(std::move(histogram));
}

MeasurementResult measure_register(const BasisState& state, const RegisterLayout& layout,
                                   Register reg, std::uint64_t shots, std::uint64_t seed) {
    check_measure_args(state.width, layout, shots);
    (void)seed;  // the distribution is a point mass; every shot lands on it
    const std::uint64_t value = extract_register(state.bits, layout, reg);
    std::map<std::string, std::uint64_t> histogram{
        {format_bits(value, layout.register_size(reg)), shots}};
    return histogram_to_result(std::move(histogram));
}

}  // namespace qjaccard
