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
#include <map>
#include <stdexcept>
#include <string>

#include "qjaccard/circuit.hpp"

namespace qjaccard {

/// Circuit contains a gate the OpenQASM 2.0 / qelib1 gate set cannot name.
class ExportError : public std::runtime_error {
  public:
    explicit ExportError(const std::string& message) : std::runtime_error(message) {}
};

/// Gate census of a circuit.
struct CircuitStats {
    std::uint64_t x_gates = 0;                       // plain X
    std::uint64_t cx_gates = 0;                      // single-control X
    std::map<QubitIndex, std::uint64_t> mcx_gates;   // control count (>= 2) -> gate count
    std::uint64_t total_gates = 0;
    QubitIndex width = 0;
};

CircuitStats circuit_stats(const Circuit& circuit);

/// Serializes to OpenQASM 2.0 with qelib1.inc: registers x, y, c, classical
/// register out, one line per gate in circuit order (controls ascending,
/// target last), then measure lines for the measured register.
///
/// qelib1 stops at c4x, so any gate with more than 4 controls raises
/// ExportError; the simulator backends have no such limit.
std::string to_qasm(const Circuit& circuit);

}  // namespace qjaccard
