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

#include "qjaccard/classical.hpp"

namespace qjaccard {

std::uint64_t popcount_and(const BitVector& x, const BitVector& y) {
    return (x & y).popcount();
}

std::uint64_t popcount_or(const BitVector& x, const BitVector& y) {
    return (x | y).popcount();
}

std::uint64_t popcount_xor(const BitVector& x, const BitVector& y) {
    return (x ^ y).popcount();
}

ClassicalJaccard jaccard_classical(const BitVector& x, const BitVector& y) {
    ClassicalJaccard result;
    result.and_count = popcount_and(x, y);
    result.or_count = popcount_or(x, y);
    result.xor_count = popcount_xor(x, y);
    if (result.or_count != 0) {
        result.ratio = make_fraction(result.and_count, result.or_count);
    }
    return result;
}

}  // namespace qjaccard
