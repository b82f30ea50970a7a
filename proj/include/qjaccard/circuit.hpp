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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qjaccard {

using QubitIndex = std::uint32_t;

/// Bit flip on one qubit.
struct PauliX {
    QubitIndex target;

    bool operator==(const PauliX&) const = default;
};

/// Flips `target` iff every control qubit is 1. One control is a CNOT,
/// two or more a multi-controlled NOT. Controls are kept sorted ascending
/// so circuits serialize canonically.
struct ControlledX {
    std::vector<QubitIndex> controls;
    QubitIndex target;

    bool operator==(const ControlledX&) const = default;
};

using GateOp = std::variant<PauliX, ControlledX>;

/// Gate constructors. These validate that the target is not also a control
/// and that controls are distinct; width checks happen on circuit append or
/// gate application.
GateOp make_x(QubitIndex target);
GateOp make_cx(QubitIndex control, QubitIndex target);
GateOp make_mcx(std::vector<QubitIndex> controls, QubitIndex target);

QubitIndex target_of(const GateOp& gate);
std::span<const QubitIndex> controls_of(const GateOp& gate);

/// Throws std::invalid_argument if any qubit index is >= width.
void check_gate(const GateOp& gate, QubitIndex width);

/// The three registers every circuit here is laid out over: the two input
/// registers and the counter that accumulates the popcount.
enum class Register { X, Y, Counter };

std::string register_name(Register reg);

/// Maps per-register element indices onto global qubits. The registers are
/// contiguous and disjoint: x_i -> i, y_i -> n_x + i, c_j -> n_x + n_y + j,
/// covering exactly [0, width). Global qubit j is bit j of a basis index.
struct RegisterLayout {
    QubitIndex n_x = 0;
    QubitIndex n_y = 0;
    QubitIndex n_c = 0;

    QubitIndex width() const { return n_x + n_y + n_c; }

    QubitIndex x_qubit(QubitIndex i) const;
    QubitIndex y_qubit(QubitIndex i) const;
    QubitIndex counter_qubit(QubitIndex j) const;

    QubitIndex register_size(Register reg) const;
    QubitIndex register_qubit(Register reg, QubitIndex i) const;

    /// Counter qubits in ascending significance, c_0 first.
    std::vector<QubitIndex> counter_qubits() const;

    bool operator==(const RegisterLayout&) const = default;
};

/// Ordered gate list over a register layout, measured at circuit end.
class Circuit {
  public:
    explicit Circuit(RegisterLayout layout, Register measured = Register::Counter)
        : layout_(layout), measured_(measured) {}

    /// Appends a gate after validating its indices against the layout width.
    void append(GateOp gate);
    void append(std::span<const GateOp> gates);

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    Register measured_register() const { return measured_; }
    QubitIndex width() const { return layout_.width(); }

  private:
    RegisterLayout layout_;
    std::vector<GateOp> gates_;
    Register measured_;
};

}  // namespace qjaccard
