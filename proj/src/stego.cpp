// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/stego.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bsteg {
namespace {

constexpr std::array<Channel, 3> kScanChannels = {Channel::Red, Channel::Green,
                                                  Channel::Blue};

// The last two pixels of the bottom row are reserved for the parameters and
// the marker (one pixel when the image is a single pixel wide).
bool is_parameter_pixel(const RawImage& image, std::uint32_t x, std::uint32_t y) {
    return y == image.height - 1 && x + 2 >= image.width;
}

// Visits data-channel bytes in the shared scan order: rows top to bottom,
// pixels left to right, channels R,G,B filtered to the set, parameter
// pixels skipped.
template <typename Fn>
void for_each_data_byte(const RawImage& image, const ChannelSet& channels, Fn&& fn) {
    for (std::uint32_t y = 0; y < image.height; ++y) {
        for (std::uint32_t x = 0; x < image.width; ++x) {
            if (is_parameter_pixel(image, x, y)) continue;
            for (Channel c : kScanChannels) {
                if (channels.contains(c)) fn(x, y, c);
            }
        }
    }
}

}  // namespace

ChannelSet channels_of_mode(int mode) {
    switch (mode) {
        case 1: return {true, false, false};
        case 2: return {false, true, false};
        case 3: return {false, false, true};
        case 4: return {true, true, false};
        case 5: return {true, false, true};
        case 6: return {false, true, true};
        case 7: return {true, true, true};
        default:
            throw InvalidMode("brightness mode must be in 1..7, got " +
                              std::to_string(mode));
    }
}

std::uint8_t set_n_lsbs(std::uint8_t value, int n, std::uint8_t bits) {
    assert(n >= 1 && n <= 8);
    const auto mask = static_cast<std::uint8_t>((1u << n) - 1u);
    return static_cast<std::uint8_t>((value & ~mask) | (bits & mask));
}

std::uint8_t lowerbound_of(std::uint8_t upperbound) {
    return set_n_lsbs(upperbound, kBitsPerCarrierByte, 0);
}

std::uint8_t embed_chunk(std::uint8_t carrier, std::uint8_t chunk) {
    return set_n_lsbs(carrier, kBitsPerCarrierByte, chunk);
}

std::uint8_t extract_chunk(std::uint8_t carrier) {
    return static_cast<std::uint8_t>(carrier & 0b111);
}

StegoParams StegoParams::make(int level, int mode, int upperbound) {
    if (level < 1 || level > 254)
        throw InvalidParams("brightness level must be in 1..254, got " +
                            std::to_string(level));
    if (mode < 1 || mode > 7)
        throw InvalidParams("brightness mode must be in 1..7, got " +
                            std::to_string(mode));
    if (upperbound < 0 || upperbound > 255)
        throw InvalidParams("upperbound intensity must be in 0..255, got " +
                            std::to_string(upperbound));
    if (upperbound + level >= 255)
        throw InvalidParams("upperbound + level must stay below 255, got " +
                            std::to_string(upperbound) + " + " + std::to_string(level));

    StegoParams params;
    params.brightness_level = level;
    params.brightness_mode = mode;
    params.upperbound_intensity = upperbound;
    params.lowerbound_intensity = lowerbound_of(static_cast<std::uint8_t>(upperbound));
    return params;
}

void StegoParams::validate() const {
    const StegoParams checked = make(brightness_level, brightness_mode, upperbound_intensity);
    if (checked.lowerbound_intensity != lowerbound_intensity)
        throw InvalidParams("lowerbound " + std::to_string(lowerbound_intensity) +
                            " does not match upperbound " +
                            std::to_string(upperbound_intensity));
}

RawImage preprocess(RawImage image, const StegoParams& params) {
    const ChannelSet channels = params.channels();
    const auto lower = static_cast<std::uint8_t>(params.lowerbound_intensity);
    const auto upper = static_cast<std::uint8_t>(params.upperbound_intensity);
    for_each_data_byte(image, channels, [&](std::uint32_t x, std::uint32_t y, Channel c) {
        const std::uint8_t b = image.byte_at(x, y, c);
        if (b >= lower && b <= upper) image.set_byte(x, y, c, upper);
    });
    return image;
}

std::vector<CarrierPosition> carrier_positions(const RawImage& image,
                                               const StegoParams& params) {
    const ChannelSet channels = params.channels();
    const auto lower = static_cast<std::uint8_t>(params.lowerbound_intensity);
    std::vector<CarrierPosition> positions;
    for_each_data_byte(image, channels, [&](std::uint32_t x, std::uint32_t y, Channel c) {
        if (image.byte_at(x, y, c) < lower) positions.push_back({x, y, c});
    });
    return positions;
}

RawImage brighten(RawImage image, const StegoParams& params) {
    const ChannelSet channels = params.channels();
    const int level = params.brightness_level;
    for_each_data_byte(image, channels, [&](std::uint32_t x, std::uint32_t y, Channel c) {
        const int value = image.byte_at(x, y, c) + level;
        image.set_byte(x, y, c, static_cast<std::uint8_t>(std::min(value, 255)));
    });
    return image;
}

RawImage restore_brightness(RawImage image, const StegoParams& params) {
    const ChannelSet channels = params.channels();
    const int level = params.brightness_level;
    for_each_data_byte(image, channels, [&](std::uint32_t x, std::uint32_t y, Channel c) {
        const int value = image.byte_at(x, y, c) - level;
        image.set_byte(x, y, c, static_cast<std::uint8_t>(std::max(value, 0)));
    });
    return image;
}

RawImage embed_params(RawImage image, const StegoParams& params) {
    if (image.width < 2)
        throw ImageTooSmall("parameter block needs two pixels in the bottom row, image is " +
                            std::to_string(image.width) + " wide");

    const std::uint32_t y = image.height - 1;
    image.set_byte(image.width - 2, y, Channel::Red,
                   static_cast<std::uint8_t>(params.brightness_level));
    image.set_byte(image.width - 2, y, Channel::Green,
                   static_cast<std::uint8_t>(params.brightness_mode));
    image.set_byte(image.width - 2, y, Channel::Blue,
                   static_cast<std::uint8_t>(params.upperbound_intensity));
    image.set_byte(image.width - 1, y, Channel::Red, kStegoMarker[0]);
    image.set_byte(image.width - 1, y, Channel::Green, kStegoMarker[1]);
    image.set_byte(image.width - 1, y, Channel::Blue, kStegoMarker[2]);
    return image;
}

StegoParams extract_params(const RawImage& image) {
    if (image.width < 2)
        throw NotAStegoImage("image too small to hold the parameter block");

    const std::uint32_t y = image.height - 1;
    const bool marked = image.byte_at(image.width - 1, y, Channel::Red) == kStegoMarker[0] &&
                        image.byte_at(image.width - 1, y, Channel::Green) == kStegoMarker[1] &&
                        image.byte_at(image.width - 1, y, Channel::Blue) == kStegoMarker[2];
    if (!marked) throw NotAStegoImage("stego marker not found in the last pixel");

    return StegoParams::make(image.byte_at(image.width - 2, y, Channel::Red),
                             image.byte_at(image.width - 2, y, Channel::Green),
                             image.byte_at(image.width - 2, y, Channel::Blue));
}

RawImage cover(const RawImage& image, const BitStream& payload_bits,
               const StegoParams& params) {
    params.validate();
    if (image.width < 2)
        throw ImageTooSmall("parameter block needs two pixels in the bottom row, image is " +
                            std::to_string(image.width) + " wide");

    RawImage work = preprocess(image, params);

    const std::vector<CarrierPosition> positions = carrier_positions(work, params);
    const std::uint64_t available =
        static_cast<std::uint64_t>(positions.size()) * kBitsPerCarrierByte;
    if (payload_bits.bit_count() > available)
        throw CapacityExceeded(payload_bits.bit_count(), available);

    for (std::size_t i = 0; i < payload_bits.chunk_count(); ++i) {
        const CarrierPosition& pos = positions[i];
        const std::uint8_t carrier = work.byte_at(pos.x, pos.y, pos.channel);
        work.set_byte(pos.x, pos.y, pos.channel,
                      embed_chunk(carrier, payload_bits.chunk(i)));
    }

    work = brighten(std::move(work), params);
    return embed_params(std::move(work), params);
}

UncoverResult uncover(const RawImage& stego) {
    const StegoParams params = extract_params(stego);
    const ChannelSet channels = params.channels();

    BitStream bits;
    for_each_data_byte(stego, channels, [&](std::uint32_t x, std::uint32_t y, Channel c) {
        // Selection and extraction both run on the restored value; a
        // carrier byte never clamped during brightening, so the
        // subtraction recovers it exactly.
        const int restored = stego.byte_at(x, y, c) - params.brightness_level;
        if (restored < params.upperbound_intensity)
            bits.push_chunk(extract_chunk(static_cast<std::uint8_t>(restored & 0xFF)));
    });
    return {std::move(bits), params};
}

}  // namespace bsteg
