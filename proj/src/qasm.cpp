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

#include "qjaccard/qasm.hpp"

#include <sstream>

namespace qjaccard {

namespace {

// qelib1 names for controlled X by control count; anything past c4x has no
// qelib1 spelling.
const char* controlled_x_name(std::size_t num_controls) {
    switch (num_controls) {
        case 1:
            return "cx";
        case 2:
            return "ccx";
        case 3:
            return "c3x";
        case 4:
            return "c4x";
        default:
            return nullptr;
    }
}

std::string operand(const RegisterLayout& layout, QubitIndex q) {
    if (q < layout.n_x) {
        return "x[" + std::to_string(q) + "]";
    }
    if (q < layout.n_x + layout.n_y) {
        return "y[" + std::to_string(q - layout.n_x) + "]";
    }
    return "c[" + std::to_string(q - layout.n_x - layout.n_y) + "]";
}

std::string describe_gate(const RegisterLayout& layout, const ControlledX& gate) {
    std::string s = "controls ";
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
        s += (i == 0 ? "" : ",") + operand(layout, gate.controls[i]);
    }
    s += " target " + operand(layout, gate.target);
    return s;
}

}  // namespace

CircuitStats circuit_stats(const Circuit& circuit) {
    CircuitStats stats;
    stats.width = circuit.width();
    for (const GateOp& gate : circuit.gates()) {
        ++stats.total_gates;
        if (std::holds_alternative<PauliX>(gate)) {
            ++stats.x_gates;
            continue;
        }
        const auto& cx = std::get<ControlledX>(gate);
        if (cx.controls.size() == 1) {
            ++stats.cx_gates;
        } else {
            ++stats.mcx_gates[static_cast<QubitIndex>(cx.controls.size())];
        }
    }
    return stats;
}

std::string to_qasm(const Circuit& circuit) {
    const RegisterLayout& layout = circuit.layout();
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg x[" << layout.n_x << "];\n";
    out << "qreg y[" << layout.n_y << "];\n";
    out << "qreg c[" << layout.n_c << "];\n";
    const QubitIndex out_width = layout.register_size(circuit.measured_register());
    out << "creg out[" << out_width << "];\n";

    for (const GateOp& gate : circuit.gates()) {
        if (const auto* x = std::get_if<PauliX>(&gate)) {
            out << "x " << operand(layout, x->target) << ";\n";
            continue;
        }
        const auto& cx = std::get<ControlledX>(gate);
        const char* name = controlled_x_name(cx.controls.size());
        if (name == nullptr) {
            throw ExportError("to_qasm: controlled X with " +
                              std::to_string(cx.controls.size()) + " controls (" +
                              describe_gate(layout, cx) +
                              ") has no qelib1 gate; qelib1 stops at c4x. "
                              "Simulate with the dense or basis backend instead.");
        }
        out << name << " ";
        for (QubitIndex c : cx.controls) {  // already ascending
            out << operand(layout, c) << ",";
        }
        out << operand(layout, cx.target) << ";\n";
    }

    const std::string reg = register_name(circuit.measured_register());
    for (QubitIndex j = 0; j < out_width; ++j) {
        out << "measure " << reg << "[" << j << "] -> out[" << j << "];\n";
    }
    return out.str();
}

}  // namespace qjaccard
