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

#include "qjaccard/bitvector.hpp"
#include "qjaccard/fraction.hpp"

namespace qjaccard {

/// Classical Jaccard computation over two equal-length binary vectors.
/// 0-0 positions contribute to none of the counts.
struct ClassicalJaccard {
    std::uint64_t and_count = 0;  // positions where both bits are 1
    std::uint64_t or_count = 0;   // positions where either bit is 1
    std::uint64_t xor_count = 0;  // positions where exactly one bit is 1
    std::optional<Fraction> ratio;  // and_count / or_count; empty when or_count == 0
};

std::uint64_t popcount_and(const BitVector& x, const BitVector& y);
std::uint64_t popcount_or(const BitVector& x, const BitVector& y);
std::uint64_t popcount_xor(const BitVector& x, const BitVector& y);

ClassicalJaccard jaccard_classical(const BitVector& x, const BitVector& y);

}  // namespace qjaccard
