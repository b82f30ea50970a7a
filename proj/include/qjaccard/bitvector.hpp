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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qjaccard {

/// Fixed-length binary vector. Bit i is element x_i; in the printed form the
/// leftmost character is x_{N-1} and the rightmost is x_0.
///
/// Storage is word-packed, so there is no practical length limit (simulation
/// limits are enforced by the backends, not here).
class BitVector {
  public:
    /// All-zero vector of the given length. Length must be >= 1.
    explicit BitVector(std::size_t length);

    /// Parses a string of '0'/'1' characters, leftmost character = x_{N-1}.
    static BitVector parse(std::string_view text);

    /// Builds a vector from the low `length` bits of `bits` (length <= 64).
    static BitVector from_bits(std::size_t length, std::uint64_t bits);

    std::size_t length() const { return length_; }

    bool bit(std::size_t i) const;
    void set_bit(std::size_t i, bool value);

    /// Number of set bits.
    std::size_t popcount() const;

    /// MSB-first string, inverse of parse().
    std::string str() const;

    bool operator==(const BitVector&) const = default;

    /// Bitwise combinations; both operands must have equal length.
    friend BitVector operator&(const BitVector& a, const BitVector& b);
    friend BitVector operator|(const BitVector& a, const BitVector& b);
    friend BitVector operator^(const BitVector& a, const BitVector& b);

  private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;  // bit i lives in words_[i / 64], unused top bits are zero

    static void check_same_length(const BitVector& a, const BitVector& b);
};

}  // namespace qjaccard
