// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsteg/bitstream.hpp"
#include "bsteg/image.hpp"

namespace bsteg {

// Intensity-partition LSB embedding.
//
// A data-channel byte carries payload bits only while its value is below
// lowerbound_intensity (the upper bound with its three low bits cleared).
// Preprocessing collapses every byte in [lowerbound, upperbound] to
// upperbound, so after the +brightness_level shift the stego image splits
// into two disjoint bands: carrier bytes stay below
// lowerbound + brightness_level and every other data byte lands at or above
// upperbound + brightness_level. Subtracting the level therefore
// re-identifies the exact carrier set with no reference image.
//
// The three parameters travel inside the stego image itself: the
// second-to-last pixel of the bottom row holds (level, mode, upperbound)
// verbatim in its R,G,B bytes and the last pixel holds a fixed marker.
// Those two pixels are excluded from preprocessing, carrier selection and
// brightening so they arrive unmodified.

struct InvalidMode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImageTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAStegoImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapacityExceeded : std::runtime_error {
    CapacityExceeded(std::uint64_t required, std::uint64_t available)
        : std::runtime_error("capacity exceeded: required " + std::to_string(required) +
                             " bits, available " + std::to_string(available)),
          required_bits(required),
          available_bits(available) {}

    std::uint64_t required_bits;
    std::uint64_t available_bits;
};

// Payload bits carried per carrier byte.
inline constexpr int kBitsPerCarrierByte = 3;

// Marker bytes of the last pixel of a stego image.
inline constexpr std::array<std::uint8_t, 3> kStegoMarker = {0x47, 0x42, 0x31};

struct ChannelSet {
    bool red = false;
    bool green = false;
    bool blue = false;

    bool contains(Channel c) const {
        switch (c) {
            case Channel::Red: return red;
            case Channel::Green: return green;
            case Channel::Blue: return blue;
        }
        return false;
    }

    int count() const { return int(red) + int(green) + int(blue); }

    bool operator==(const ChannelSet&) const = default;
};

// 1 -> {R}, 2 -> {G}, 3 -> {B}, 4 -> {R,G}, 5 -> {R,B}, 6 -> {G,B},
// 7 -> {R,G,B}. Throws InvalidMode outside 1..7.
ChannelSet channels_of_mode(int mode);

// Replaces the low n bits of value with the given pattern, pattern MSB
// landing in bit n-1. The high 8-n bits are preserved.
std::uint8_t set_n_lsbs(std::uint8_t value, int n, std::uint8_t bits);

// upperbound with its three low bits cleared.
std::uint8_t lowerbound_of(std::uint8_t upperbound);

std::uint8_t embed_chunk(std::uint8_t carrier, std::uint8_t chunk);
std::uint8_t extract_chunk(std::uint8_t carrier);

struct StegoParams {
    int brightness_level = 0;
    int brightness_mode = 0;
    int upperbound_intensity = 0;
    int lowerbound_intensity = 0;  // derived

    // Validates level in 1..254, mode in 1..7, upperbound in 0..255 and
    // upperbound + level < 255; derives the lower bound. Throws
    // InvalidParams.
    static StegoParams make(int level, int mode, int upperbound);

    // Re-checks the invariants on an already-built value.
    void validate() const;

    ChannelSet channels() const { return channels_of_mode(brightness_mode); }

    bool operator==(const StegoParams&) const = default;
};

struct CarrierPosition {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    Channel channel = Channel::Red;

    bool operator==(const CarrierPosition&) const = default;
};

// Collapses every data-channel byte in [lowerbound, upperbound] to
// upperbound. Bytes outside the mode's channels and the two parameter
// pixels are untouched.
RawImage preprocess(RawImage image, const StegoParams& params);

// Every data-channel byte position currently below lowerbound_intensity,
// in scan order: rows top to bottom, pixels left to right, channels R,G,B
// restricted to the mode's set, parameter pixels skipped.
std::vector<CarrierPosition> carrier_positions(const RawImage& image,
                                               const StegoParams& params);

// Adds brightness_level to every data-channel byte, clamped at 255.
// Parameter pixels are untouched.
RawImage brighten(RawImage image, const StegoParams& params);

// Subtracts brightness_level, clamped at 0. Exact inverse of brighten on
// bytes that did not clamp.
RawImage restore_brightness(RawImage image, const StegoParams& params);

// Writes (level, mode, upperbound) into pixel (width-2, height-1) and the
// marker into (width-1, height-1). Throws ImageTooSmall when the bottom
// row has fewer than two pixels.
RawImage embed_params(RawImage image, const StegoParams& params);

// Reads the two parameter pixels back. Throws NotAStegoImage when the
// marker is absent, InvalidParams when the stored bytes violate the
// parameter invariants.
StegoParams extract_params(const RawImage& image);

// Full embedding pipeline: preprocess, write successive 3-bit chunks of the
// payload into successive carrier positions, brighten, embed the
// parameters. Dimensions are preserved. Throws CapacityExceeded when the
// payload does not fit and ImageTooSmall for images narrower than two
// pixels.
RawImage cover(const RawImage& image, const BitStream& payload_bits,
               const StegoParams& params);

struct UncoverResult {
    BitStream payload_bits;
    StegoParams params;
};

// Inverse pipeline: extract the parameters, then collect the low 3 bits of
// every data-channel byte whose value minus brightness_level is below
// upperbound_intensity, in the same scan order cover used.
UncoverResult uncover(const RawImage& stego);

}  // namespace bsteg
