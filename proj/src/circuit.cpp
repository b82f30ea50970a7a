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

#include "qjaccard/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qjaccard {

GateOp make_x(QubitIndex target) {
    return PauliX{target};
}

GateOp make_cx(QubitIndex control, QubitIndex target) {
    return make_mcx({control}, target);
}

GateOp make_mcx(std::vector<QubitIndex> controls, QubitIndex target) {
    if (controls.empty()) {
        throw std::invalid_argument("make_mcx: controlled gate needs at least one control");
    }
    std::sort(controls.begin(), controls.end());
    if (std::adjacent_find(controls.begin(), controls.end()) != controls.end()) {
        throw std::invalid_argument("make_mcx: duplicate control qubit");
    }
    if (std::binary_search(controls.begin(), controls.end(), target)) {
        throw std::invalid_argument("make_mcx: target qubit " + std::to_string(target) +
                                    " is also a control");
    }
    return ControlledX{std::move(controls), target};
}

QubitIndex target_of(const GateOp& gate) {
    return std::visit([](const auto& g) { return g.target; }, gate);
}

std::span<const QubitIndex> controls_of(const GateOp& gate) {
    if (const auto* cx = std::get_if<ControlledX>(&gate)) {
        return cx->controls;
    }
    return {};
}

void check_gate(const GateOp& gate, QubitIndex width) {
    auto check = [width](QubitIndex q) {
        if (q >= width) {
            throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                        " out of range for width " + std::to_string(width));
        }
    };
    check(target_of(gate));
    for (QubitIndex c : controls_of(gate)) {
        check(c);
    }
}

std::string register_name(Register reg) {
    switch (reg) {
        case Register::X:
            return "x";
        case Register::Y:
            return "y";
        case Register::Counter:
            return "c";
    }
    throw std::invalid_argument("register_name: unknown register");
}

namespace {

QubitIndex checked_offset(QubitIndex i, QubitIndex size, QubitIndex base, const char* reg) {
    if (i >= size) {
        throw std::out_of_range(std::string(reg) + " register index " + std::to_string(i) +
                                " out of range (size " + std::to_string(size) + ")");
    }
    return base + i;
}

}  // namespace

QubitIndex RegisterLayout::x_qubit(QubitIndex i) const {
    return checked_offset(i, n_x, 0, "x");
}

QubitIndex RegisterLayout::y_qubit(QubitIndex i) const {
    return checked_offset(i, n_y, n_x, "y");
}

QubitIndex RegisterLayout::counter_qubit(QubitIndex j) const {
    return checked_offset(j, n_c, n_x + n_y, "counter");
}

QubitIndex RegisterLayout::register_size(Register reg) const {
    switch (reg) {
        case Register::X:
            return n_x;
        case Register::Y:
            return n_y;
        case Register::Counter:
            return n_c;
    }
    throw std::invalid_argument("register_size: unknown register");
}

QubitIndex RegisterLayout::register_qubit(Register reg, QubitIndex i) const {
    switch (reg) {
        case Register::X:
            return x_qubit(i);
        case Register::Y:
            return y_qubit(i);
        case Register::Counter:
            return counter_qubit(i);
    }
    throw std::invalid_argument("register_qubit: unknown register");
}

std::vector<QubitIndex> RegisterLayout::counter_qubits() const {
    std::vector<QubitIndex> qubits(n_c);
    for (QubitIndex j = 0; j < n_c; ++j) {
        qubits[j] = counter_qubit(j);
    }
    return qubits;
}

void Circuit::append(GateOp gate) {
    check_gate(gate, width());
    gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const GateOp> gates) {
    for (const GateOp& gate : gates) {
        append(gate);
    }
}

}  // namespace qjaccard
