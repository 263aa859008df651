// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/bitstream.hpp"

#include <limits>

namespace bsteg {

BitStream frame(std::span<const std::uint8_t> message) {
    if (message.size() > std::numeric_limits<std::uint32_t>::max())
        throw MessageTooLarge("message exceeds the 32-bit length header");

    const auto length = static_cast<std::uint32_t>(message.size());
    BitStream bits;
    for (int i = 31; i >= 0; --i) bits.push_bit((length >> i) & 1);
    for (std::uint8_t byte : message) bits.push_byte(byte);
    return bits;
}

std::vector<std::uint8_t> deframe(const BitStream& bits) {
    if (bits.bit_count() < 32)
        throw CorruptFrame("stream shorter than the 32-bit length header");

    std::uint32_t length = 0;
    for (std::size_t i = 0; i < 32; ++i)
        length = (length << 1) | static_cast<std::uint32_t>(bits.bit(i));

    if (bits.bit_count() - 32 < static_cast<std::uint64_t>(length) * 8)
        throw CorruptFrame("stream shorter than the declared payload length");

    std::vector<std::uint8_t> message(length);
    for (std::uint32_t i = 0; i < length; ++i) {
        std::uint8_t byte = 0;
        for (std::size_t b = 0; b < 8; ++b)
            byte = static_cast<std::uint8_t>((byte << 1) | int(bits.bit(32 + i * 8 + b)));
        message[i] = byte;
    }
    return message;
}

}  // namespace bsteg
