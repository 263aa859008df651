// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/bmp.hpp"

#include <cstring>

namespace bsteg {
namespace {

constexpr std::size_t kFileHeaderSize = 14;
constexpr std::size_t kInfoHeaderSize = 40;
constexpr std::size_t kCanonicalDataOffset = kFileHeaderSize + kInfoHeaderSize;

constexpr std::uint32_t kCompressionNone = 0;  // BI_RGB

std::uint16_t read_le16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (static_cast<std::uint16_t>(p[1]) << 8));
}

std::uint32_t read_le32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::int32_t read_le32s(const std::uint8_t* p) {
    return static_cast<std::int32_t>(read_le32(p));
}

void write_le16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void write_le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

}  // namespace

std::uint32_t bmp_row_stride(std::uint32_t width) {
    return (width * 3u + 3u) & ~3u;
}

std::uint64_t bmp_file_size(std::uint32_t width, std::uint32_t height) {
    return kCanonicalDataOffset +
           static_cast<std::uint64_t>(bmp_row_stride(width)) * height;
}

BmpFileInfo parse_bmp_header(std::span<const std::uint8_t> file) {
    if (file.size() < 2 || file[0] != 'B' || file[1] != 'M')
        throw BadMagic("not a BMP file (missing BM signature)");
    if (file.size() < kCanonicalDataOffset)
        throw Truncated("file shorter than the 54-byte BMP headers");

    BmpFileInfo info;
    info.file_size = file.size();
    info.data_offset = read_le32(file.data() + 10);

    const std::uint32_t info_header_size = read_le32(file.data() + 14);
    if (info_header_size < kInfoHeaderSize)
        throw UnsupportedFormat("info header smaller than BITMAPINFOHEADER");
    if (file.size() < kFileHeaderSize + info_header_size)
        throw Truncated("file shorter than its declared info header");

    const std::int32_t width = read_le32s(file.data() + 18);
    const std::int32_t height = read_le32s(file.data() + 22);
    info.bits_per_pixel = read_le16(file.data() + 28);
    info.compression = read_le32(file.data() + 30);

    if (info.bits_per_pixel != 24)
        throw UnsupportedFormat("only 24 bits per pixel is supported");
    if (info.compression != kCompressionNone)
        throw UnsupportedFormat("compressed BMP files are not supported");
    if (height < 0)
        throw UnsupportedFormat("top-down BMP files are not supported");
    if (width <= 0 || height == 0)
        throw UnsupportedFormat("dimensions must be positive");
    if (info.data_offset < kFileHeaderSize + info_header_size)
        throw UnsupportedFormat("pixel data offset overlaps the headers");

    info.width = static_cast<std::uint32_t>(width);
    info.height = static_cast<std::uint32_t>(height);
    info.row_stride = bmp_row_stride(info.width);

    const std::uint64_t needed =
        info.data_offset + static_cast<std::uint64_t>(info.row_stride) * info.height;
    if (file.size() < needed)
        throw Truncated("pixel array extends past the end of the file");
    return info;
}

RawImage decode_bmp(std::span<const std::uint8_t> file) {
    const BmpFileInfo info = parse_bmp_header(file);

    RawImage image(info.width, info.height);
    const std::uint8_t* pixels = file.data() + info.data_offset;
    for (std::uint32_t y = 0; y < info.height; ++y) {
        // Rows are stored bottom-up on disk.
        const std::uint8_t* row =
            pixels + static_cast<std::size_t>(info.height - 1 - y) * info.row_stride;
        std::uint8_t* dst = image.data.data() + static_cast<std::size_t>(y) * info.width * 3;
        for (std::uint32_t x = 0; x < info.width; ++x) {
            dst[x * 3 + 0] = row[x * 3 + 2];  // B,G,R on disk
            dst[x * 3 + 1] = row[x * 3 + 1];
            dst[x * 3 + 2] = row[x * 3 + 0];
        }
    }
    return image;
}

std::vector<std::uint8_t> encode_bmp(const RawImage& image) {
    const std::uint32_t stride = bmp_row_stride(image.width);
    const std::uint64_t file_size = bmp_file_size(image.width, image.height);

    std::vector<std::uint8_t> out;
    out.reserve(file_size);

    out.push_back('B');
    out.push_back('M');
    write_le32(out, static_cast<std::uint32_t>(file_size));
    write_le32(out, 0);  // reserved
    write_le32(out, kCanonicalDataOffset);

    write_le32(out, kInfoHeaderSize);
    write_le32(out, image.width);
    write_le32(out, image.height);  // positive: bottom-up
    write_le16(out, 1);             // planes
    write_le16(out, 24);
    write_le32(out, kCompressionNone);
    write_le32(out, stride * image.height);
    write_le32(out, 0);  // x pixels per meter
    write_le32(out, 0);  // y pixels per meter
    write_le32(out, 0);  // colors used
    write_le32(out, 0);  // colors important

    const std::uint32_t pad = stride - image.width * 3;
    for (std::uint32_t y = image.height; y-- > 0;) {
        const std::uint8_t* src =
            image.data.data() + static_cast<std::size_t>(y) * image.width * 3;
        for (std::uint32_t x = 0; x < image.width; ++x) {
            out.push_back(src[x * 3 + 2]);
            out.push_back(src[x * 3 + 1]);
            out.push_back(src[x * 3 + 0]);
        }
        out.insert(out.end(), pad, 0);
    }
    return out;
}

}  // namespace bsteg
