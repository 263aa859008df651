// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bsteg/image.hpp"
#include "bsteg/stego.hpp"

namespace bsteg {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Payload bits the image can hold under the given parameters: three per
// carrier byte of the preprocessed image.
std::uint64_t capacity_bits(const RawImage& image, const StegoParams& params);

// Bytes of the whole pixel buffer (all three channels) strictly above the
// threshold.
std::uint64_t intensity_census(const RawImage& image, std::uint8_t threshold);

// Peak signal-to-noise ratio over all pixel bytes, peak 255. Identical
// images yield +infinity. Throws DimensionMismatch.
double psnr(const RawImage& a, const RawImage& b);

// Figures gathered by inspect; fields are present when the corresponding
// input (parameters, threshold, reference image) was supplied.
struct AnalysisReport {
    std::optional<std::uint64_t> capacity_bits;
    std::optional<std::uint64_t> carrier_byte_count;
    std::optional<std::uint64_t> total_data_channel_bytes;
    std::optional<double> psnr_db;
    std::optional<std::uint8_t> census_threshold;
    std::optional<std::uint64_t> census_above_threshold;
};

AnalysisReport analyze(const RawImage& image,
                       const std::optional<StegoParams>& params,
                       std::optional<std::uint8_t> census_threshold,
                       const RawImage* reference);

// One "key: value" line per present field.
std::string render_text(const AnalysisReport& report);

}  // namespace bsteg
