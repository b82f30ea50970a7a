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
#include <numeric>
#include <stdexcept>
#include <string>

namespace qjaccard {

/// Reduced non-negative rational. Kept exact so similarity values never go
/// through floating point.
struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    bool operator==(const Fraction&) const = default;
};

inline Fraction make_fraction(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("make_fraction: denominator must be nonzero");
    }
    std::uint64_t g = std::gcd(numerator, denominator);
    return Fraction{numerator / g, denominator / g};
}

inline std::string to_string(const Fraction& f) {
    return std::to_string(f.numerator) + "/" + std::to_string(f.denominator);
}

}  // namespace qjaccard
