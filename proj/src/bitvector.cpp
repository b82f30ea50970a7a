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

#include "qjaccard/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace qjaccard {

BitVector::BitVector(std::size_t length)
    : length_(length), words_((length + 63) / 64, 0) {
    if (length == 0) {
        throw std::invalid_argument("BitVector: length must be at least 1");
    }
}

BitVector BitVector::parse(std::string_view text) {
    BitVector v(text.size());  // rejects empty input
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c != '0' && c != '1') {
            throw std::invalid_argument(
                "BitVector::parse: invalid character '" + std::string(1, c) +
                "' (expected '0' or '1')");
        }
        // leftmost character is the highest-index element
        v.set_bit(text.size() - 1 - pos, c == '1');
    }
    return v;
}

BitVector BitVector::from_bits(std::size_t length, std::uint64_t bits) {
    if (length > 64) {
        throw std::invalid_argument("BitVector::from_bits: length must be <= 64");
    }
    BitVector v(length);
    v.words_[0] = length == 64 ? bits : (bits & ((std::uint64_t{1} << length) - 1));
    return v;
}

bool BitVector::bit(std::size_t i) const {
    if (i >= length_) {
        throw std::out_of_range("BitVector::bit: index out of range");
    }
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set_bit(std::size_t i, bool value) {
    if (i >= length_) {
        throw std::out_of_range("BitVector::set_bit: index out of range");
    }
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (bit(i)) {
            s[length_ - 1 - i] = '1';
        }
    }
    return s;
}

void BitVector::check_same_length(const BitVector& a, const BitVector& b) {
    if (a.length_ != b.length_) {
        throw std::invalid_argument("BitVector: length mismatch (" +
                                    std::to_string(a.length_) + " vs " +
                                    std::to_string(b.length_) + ")");
    }
}

BitVector operator&(const BitVector& a, const BitVector& b) {
    BitVector::check_same_length(a, b);
    BitVector out = a;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        out.words_[w] &= b.words_[w];
    }
    return out;
}

BitVector operator|(const BitVector& a, const BitVector& b) {
    BitVector::check_same_length(a, b);
    BitVector out = a;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        out.words_[w] |= b.words_[w];
    }
    return out;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
    BitVector::check_same_length(a, b);
    BitVector out = a;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        out.words_[w] ^= b.words_[w];
    }
    return out;
}

}  // namespace qjaccard
