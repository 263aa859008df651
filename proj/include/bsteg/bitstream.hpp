// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bsteg {

struct MessageTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptFrame : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered bit sequence consumed three bits at a time, MSB first. A chunk
// read past the last bit is zero-padded.
class BitStream {
public:
    BitStream() = default;

    void push_bit(bool bit) { bits_.push_back(bit); }

    // MSB first.
    void push_byte(std::uint8_t byte) {
        for (int i = 7; i >= 0; --i) bits_.push_back((byte >> i) & 1);
    }

    // Low 3 bits of chunk, MSB first.
    void push_chunk(std::uint8_t chunk) {
        bits_.push_back((chunk >> 2) & 1);
        bits_.push_back((chunk >> 1) & 1);
        bits_.push_back(chunk & 1);
    }

    bool bit(std::size_t i) const { return bits_[i]; }
    std::size_t bit_count() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::size_t chunk_count() const { return (bits_.size() + 2) / 3; }

    std::uint8_t chunk(std::size_t index) const {
        std::uint8_t value = 0;
        for (std::size_t i = index * 3; i < index * 3 + 3; ++i) {
            value = static_cast<std::uint8_t>(value << 1);
            if (i < bits_.size() && bits_[i]) value |= 1;
        }
        return value;
    }

    bool operator==(const BitStream&) const = default;

private:
    std::vector<bool> bits_;
};

// 32-bit big-endian byte-count header followed by the message bytes, each
// MSB first. Throws MessageTooLarge past 2^32 - 1 bytes.
BitStream frame(std::span<const std::uint8_t> message);

// Inverse of frame. Trailing padding bits are ignored. Throws CorruptFrame
// when the stream is shorter than the header or the declared length.
std::vector<std::uint8_t> deframe(const BitStream& bits);

}  // namespace bsteg
