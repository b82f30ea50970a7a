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
#include <optional>
#include <span>
#include <vector>

#include "qjaccard/bitvector.hpp"
#include "qjaccard/circuit.hpp"
#include "qjaccard/fraction.hpp"
#include "qjaccard/simulator.hpp"

namespace qjaccard {

/// Width of a counter register that can hold any popcount of a length-n
/// vector: floor(log2(n)) + 1, so 2^m - 1 >= n. Requires n >= 1.
QubitIndex counter_width(std::size_t n);

/// Pairing of an input length with its counter width.
struct CounterSpec {
    QubitIndex n = 0;
    QubitIndex m = 0;

    static CounterSpec for_input_length(std::size_t n);

    bool operator==(const CounterSpec&) const = default;
};

/// Three-register layout (x, y, counter) for two length-n inputs.
RegisterLayout layout_for_input_length(std::size_t n);

/// X gates that load the classical inputs into the x and y registers: one
/// gate per set bit, x register first, ascending index within each register.
std::vector<GateOp> build_state_prep(const BitVector& x, const BitVector& y,
                                     const RegisterLayout& layout);

/// Controlled +1 on the counter: m multi-controlled NOTs targeting
/// c_{m-1} down to c_0, where the gate on c_k is controlled by every
/// extra control plus c_0..c_{k-1}. When all extra controls are 1 the
/// counter increments mod 2^m; otherwise it is untouched. Targeting the
/// high bit first means each gate still sees the pre-increment low bits,
/// which is what makes the cascade a binary +1.
std::vector<GateOp> build_controlled_increment(std::span<const QubitIndex> extra_controls,
                                               std::span<const QubitIndex> counter_qubits);

/// Circuit whose counter ends at popcount(x AND y): state prep, then one
/// increment per position i gated on {x_i, y_i}.
Circuit build_intersection_circuit(const BitVector& x, const BitVector& y);

/// Circuit whose counter ends at popcount(x OR y): the full intersection
/// body, a CNOT layer rewriting each y_i to x_i XOR y_i, then one increment
/// per position gated on {y_i} alone. The counter picks up the symmetric
/// difference on top of the intersection count.
Circuit build_union_circuit(const BitVector& x, const BitVector& y);

/// Jaccard similarity decoded from the two counter registers.
struct JaccardResult {
    std::uint64_t intersection_count = 0;           // a
    std::uint64_t union_count = 0;                  // b
    std::optional<Fraction> value;                  // a/b reduced; empty when b == 0
};

/// Builds and runs both circuits on the chosen backend and decodes their
/// counters. An empty union yields an empty value, never a division fault.
JaccardResult run_jaccard(const BitVector& x, const BitVector& y, Backend backend);

}  // namespace qjaccard
