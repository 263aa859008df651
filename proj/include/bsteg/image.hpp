// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bsteg {

enum class Channel : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

// Decoded pixel grid. Row-major from the top-left corner, three bytes per
// pixel in R,G,B order. Row padding from the on-disk format is not part of
// this buffer.
struct RawImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> data;

    RawImage() = default;
    RawImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

    std::size_t index_of(std::uint32_t x, std::uint32_t y, Channel c) const {
        return (static_cast<std::size_t>(y) * width + x) * 3 +
               static_cast<std::size_t>(c);
    }

    std::uint8_t byte_at(std::uint32_t x, std::uint32_t y, Channel c) const {
        return data[index_of(x, y, c)];
    }

    void set_byte(std::uint32_t x, std::uint32_t y, Channel c, std::uint8_t v) {
        data[index_of(x, y, c)] = v;
    }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    bool operator==(const RawImage&) const = default;
};

}  // namespace bsteg
