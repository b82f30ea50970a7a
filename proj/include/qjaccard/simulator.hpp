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

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qjaccard/circuit.hpp"

namespace qjaccard {

/// Requested simulation would exceed what the backend can represent.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& message) : std::runtime_error(message) {}
};

/// Default dense width cap: 2^24 amplitudes (~256 MB) is the largest state
/// worth holding in memory here.
inline constexpr QubitIndex kDenseWidthCap = 24;

/// The basis backend packs the whole register set into one 64-bit mask.
inline constexpr QubitIndex kBasisWidthCap = 64;

/// Dense state of `width` qubits: 2^width complex amplitudes. Basis-index
/// bit j is the value of global qubit j (qubit 0 = least-significant bit).
class StateVector {
  public:
    explicit StateVector(QubitIndex width);  // initialized to |0...0>

    QubitIndex width() const { return width_; }
    std::uint64_t dim() const { return std::uint64_t{1} << width_; }

    std::complex<double>& operator[](std::uint64_t index) { return amplitudes_[index]; }
    const std::complex<double>& operator[](std::uint64_t index) const { return amplitudes_[index]; }
    const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }

    /// Sum of squared magnitudes; 1 within 1e-12 for any reachable state.
    double squared_norm() const;

    /// Basis index carrying the largest probability mass.
    std::uint64_t dominant_index() const;

  private:
    QubitIndex width_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Computational basis state: bit j of `bits` is the value of qubit j.
/// Exact stand-in for a StateVector with one unit amplitude, usable far
/// beyond the dense width cap. All gates here permute basis states, so
/// this backend loses nothing.
struct BasisState {
    QubitIndex width = 0;
    std::uint64_t bits = 0;

    bool operator==(const BasisState&) const = default;
};

/// Applies one gate in place. X swaps the amplitude pairs that differ in the
/// target bit; a controlled X swaps only pairs whose control bits are all 1.
void apply_gate(StateVector& state, const GateOp& gate);
void apply_gate(BasisState& state, const GateOp& gate);

enum class Backend { Dense, Basis };

std::string backend_name(Backend backend);

/// Runs the circuit from |0...0>. The dense backend refuses widths above
/// `width_cap` (use the basis backend there); the basis backend refuses
/// widths above 64.
StateVector run_dense(const Circuit& circuit, QubitIndex width_cap = kDenseWidthCap);
BasisState run_basis(const Circuit& circuit);

/// Value currently held in a register, decoded as sum of bit_i * 2^i over the
/// register's qubits. For a dense state this reads the dominant basis state.
std::uint64_t register_value(const StateVector& state, const RegisterLayout& layout, Register reg);
std::uint64_t register_value(const BasisState& state, const RegisterLayout& layout, Register reg);

/// MSB-first rendering of the low `width` bits of `value`.
std::string format_bits(std::uint64_t value, QubitIndex width);

/// Register readout over repeated shots.
struct MeasurementResult {
    std::string bitstring;   // modal outcome, MSB-first
    std::uint64_t value = 0;  // decimal decoding of the modal outcome
    std::map<std::string, std::uint64_t> histogram;  // outcome bitstring -> shot count
};

/// Samples the register `shots` times from the state's probability
/// distribution using a generator seeded with `seed`. Requires shots >= 1.
MeasurementResult measure_register(const StateVector& state, const RegisterLayout& layout,
                                   Register reg, std::uint64_t shots, std::uint64_t seed);
MeasurementResult measure_register(const BasisState& state, const RegisterLayout& layout,
                                   Register reg, std::uint64_t shots, std::uint64_t seed);

}  // namespace qjaccard
