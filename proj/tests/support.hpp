// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

// Test-only helpers. The reference builders here are written independently
// of the library code they check.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bsteg/image.hpp"
#include "bsteg/stego.hpp"

namespace testsupport {

inline void put_le16(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
}

inline void put_le32(std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
    v.push_back(static_cast<std::uint8_t>((x >> 8) & 0xFF));
    v.push_back(static_cast<std::uint8_t>((x >> 16) & 0xFF));
    v.push_back(static_cast<std::uint8_t>((x >> 24) & 0xFF));
}

// Canonical 24-bit BMP assembled field by field. Pixel bytes are given
// row-major from the top-left in R,G,B order.
inline std::vector<std::uint8_t> reference_bmp_bytes(std::uint32_t w, std::uint32_t h,
                                                     const std::vector<std::uint8_t>& rgb) {
    const std::uint32_t stride = (w * 3 + 3) / 4 * 4;
    std::vector<std::uint8_t> f;
    f.push_back('B');
    f.push_back('M');
    put_le32(f, 54 + stride * h);  // file size
    put_le32(f, 0);                // reserved
    put_le32(f, 54);               // pixel data offset
    put_le32(f, 40);               // info header size
    put_le32(f, w);
    put_le32(f, h);                // positive height: bottom-up rows
    put_le16(f, 1);                // planes
    put_le16(f, 24);               // bits per pixel
    put_le32(f, 0);                // compression: none
    put_le32(f, stride * h);       // image size
    put_le32(f, 0);                // x pixels per meter
    put_le32(f, 0);                // y pixels per meter
    put_le32(f, 0);                // colors used
    put_le32(f, 0);                // colors important
    for (std::uint32_t y = h; y-- > 0;) {
        for (std::uint32_t x = 0; x < w; ++x) {
            const std::size_t i = (static_cast<std::size_t>(y) * w + x) * 3;
            f.push_back(rgb[i + 2]);  // stored B,G,R
            f.push_back(rgb[i + 1]);
            f.push_back(rgb[i + 0]);
        }
        for (std::uint32_t p = 0; p < stride - w * 3; ++p) f.push_back(0);
    }
    return f;
}

inline bsteg::RawImage random_image(std::mt19937& rng, std::uint32_t w, std::uint32_t h) {
    bsteg::RawImage img(w, h);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& b : img.data) b = static_cast<std::uint8_t>(byte(rng));
    return img;
}

// True when no data-channel byte of the stego image falls in
// [lowerbound+level, upperbound+level). The last two pixels of the bottom
// row hold the parameter block and are skipped.
inline bool partition_holds(const bsteg::RawImage& stego, const bsteg::StegoParams& p) {
    const bsteg::ChannelSet channels = bsteg::channels_of_mode(p.brightness_mode);
    const int gap_lo = p.lowerbound_intensity + p.brightness_level;
    const int gap_hi = p.upperbound_intensity + p.brightness_level;
    for (std::uint32_t y = 0; y < stego.height; ++y) {
        for (std::uint32_t x = 0; x < stego.width; ++x) {
            if (y == stego.height - 1 && x + 2 >= stego.width) continue;
            for (int c = 0; c < 3; ++c) {
                const auto channel = static_cast<bsteg::Channel>(c);
                if (!channels.contains(channel)) continue;
                const int v = stego.byte_at(x, y, channel);
                if (v >= gap_lo && v < gap_hi) return false;
            }
        }
    }
    return true;
}

}  // namespace testsupport
