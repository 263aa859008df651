// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bsteg/image.hpp"

namespace bsteg {

struct BadMagic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Truncated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFormat : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Header fields of an accepted file. Only uncompressed 24-bit bitmaps with
// positive dimensions pass validation; everything else throws above.
struct BmpFileInfo {
    std::uint64_t file_size = 0;    // actual byte count of the input buffer
    std::uint32_t data_offset = 0;  // start of the pixel array
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint16_t bits_per_pixel = 0;
    std::uint32_t compression = 0;
    std::uint32_t row_stride = 0;   // width*3 rounded up to a multiple of 4
};

// Canonical file geometry: 54-byte header, zero-padded bottom-up rows.
std::uint32_t bmp_row_stride(std::uint32_t width);
std::uint64_t bmp_file_size(std::uint32_t width, std::uint32_t height);

// Validates the headers without touching pixel data.
BmpFileInfo parse_bmp_header(std::span<const std::uint8_t> file);

// Accepts any uncompressed 24-bit BMP (larger info headers and a gap before
// the pixel array are tolerated). Bottom-up rows and BGR byte order are
// resolved during decode; top-down files (negative height) are rejected.
RawImage decode_bmp(std::span<const std::uint8_t> file);

// Emits the canonical layout: 14-byte file header, 40-byte info header,
// bottom-up rows padded with zero bytes. decode_bmp(encode_bmp(i)) == i for
// every image, and encode_bmp(decode_bmp(f)) == f for canonical files.
std::vector<std::uint8_t> encode_bmp(const RawImage& image);

}  // namespace bsteg
