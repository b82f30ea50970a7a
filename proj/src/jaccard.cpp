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

#include "qjaccard/jaccard.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qjaccard {

QubitIndex counter_width(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("counter_width: vector length must be at least 1");
    }
    return static_cast<QubitIndex>(std::bit_width(n));
}

CounterSpec CounterSpec::for_input_length(std::size_t n) {
    return CounterSpec{static_cast<QubitIndex>(n), counter_width(n)};
}

RegisterLayout layout_for_input_length(std::size_t n) {
    CounterSpec spec = CounterSpec::for_input_length(n);
    return RegisterLayout{spec.n, spec.n, spec.m};
}

namespace {

void check_equal_lengths(const BitVector& x, const BitVector& y) {
    if (x.length() != y.length()) {
        throw std::invalid_argument("input vectors must have equal length (" +
                                    std::to_string(x.length()) + " vs " +
                                    std::to_string(y.length()) + ")");
    }
}

void append_counting_loop(Circuit& circuit, const std::vector<QubitIndex>& counter,
                          auto&& extra_controls_for) {
    const QubitIndex n = circuit.layout().n_x;
    for (QubitIndex i = 0; i < n; ++i) {
        std::vector<QubitIndex> extra = extra_controls_for(i);
        circuit.append(build_controlled_increment(extra, counter));
    }
}

}  // namespace

std::vector<GateOp> build_state_prep(const BitVector& x, const BitVector& y,
                                     const RegisterLayout& layout) {
    check_equal_lengths(x, y);
    if (x.length() != layout.n_x) {
        throw std::invalid_argument("build_state_prep: vector length " +
                                    std::to_string(x.length()) +
                                    " does not match layout register size " +
                                    std::to_string(layout.n_x));
    }
    std::vector<GateOp> gates;
    for (QubitIndex i = 0; i < layout.n_x; ++i) {
        if (x.bit(i)) {
            gates.push_back(make_x(layout.x_qubit(i)));
        }
    }
    for (QubitIndex i = 0; i < layout.n_y; ++i) {
        if (y.bit(i)) {
            gates.push_back(make_x(layout.y_qubit(i)));
        }
    }
    return gates;
}

std::vector<GateOp> build_controlled_increment(std::span<const QubitIndex> extra_controls,
                                               std::span<const QubitIndex> counter_qubits) {
    for (QubitIndex c : extra_controls) {
        if (std::find(counter_qubits.begin(), counter_qubits.end(), c) != counter_qubits.end()) {
            throw std::invalid_argument("build_controlled_increment: control qubit " +
                                        std::to_string(c) + " overlaps the counter register");
        }
    }
    const std::size_t m = counter_qubits.size();
    std::vector<GateOp> gates;
    gates.reserve(m);
    for (std::size_t k = m; k-- > 0;) {
        std::vector<QubitIndex> controls(extra_controls.begin(), extra_controls.end());
        controls.insert(controls.end(), counter_qubits.begin(), counter_qubits.begin() + k);
        if (controls.empty()) {
            gates.push_back(make_x(counter_qubits[k]));
        } else {
            gates.push_back(make_mcx(std::move(controls), counter_qubits[k]));
        }
    }
    return gates;
}

Circuit build_intersection_circuit(const BitVector& x, const BitVector& y) {
    check_equal_lengths(x, y);
    Circuit circuit(layout_for_input_length(x.length()), Register::Counter);
    circuit.append(build_state_prep(x, y, circuit.layout()));
    const std::vector<QubitIndex> counter = circuit.layout().counter_qubits();
    append_counting_loop(circuit, counter, [&](QubitIndex i) {
        return std::vector<QubitIndex>{circuit.layout().x_qubit(i), circuit.layout().y_qubit(i)};
    });
    return circuit;
}

Circuit build_union_circuit(const BitVector& x, const BitVector& y) {
    check_equal_lengths(x, y);
    Circuit circuit = build_intersection_circuit(x, y);
    const RegisterLayout& layout = circuit.layout();
    // y_i <- x_i XOR y_i, so a second counting pass over y adds exactly the
    // positions where the vectors differ.
    for (QubitIndex i = 0; i < layout.n_y; ++i) {
        circuit.append(make_cx(layout.x_qubit(i), layout.y_qubit(i)));
    }
    const std::vector<QubitIndex> counter = layout.counter_qubits();
    append_counting_loop(circuit, counter, [&](QubitIndex i) {
        return std::vector<QubitIndex>{layout.y_qubit(i)};
    });
    return circuit;
}

namespace {

std::uint64_t run_counter(const Circuit& circuit, Backend backend) {
    if (backend == Backend::Dense) {
        StateVector state = run_dense(circuit);
        return register_value(state, circuit.layout(), circuit.measured_register());
    }
    BasisState state = run_basis(circuit);
    return register_value(state, circuit.layout(), circuit.measured_register());
}

}  // namespace

JaccardResult run_jaccard(const BitVector& x, const BitVector& y, Backend backend) {
    check_equal_lengths(x, y);
    JaccardResult result;
    result.intersection_count = run_counter(build_intersection_circuit(x, y), backend);
    result.union_count = run_counter(build_union_circuit(x, y), backend);
    if (result.union_count != 0) {
        result.value = make_fraction(result.intersection_count, result.union_count);
    }
    return result;
}

}  // namespace qjaccard
