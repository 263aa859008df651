// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bsteg {

std::uint64_t capacity_bits(const RawImage& image, const StegoParams& params) {
    const RawImage prepared = preprocess(image, params);
    return static_cast<std::uint64_t>(carrier_positions(prepared, params).size()) *
           kBitsPerCarrierByte;
}

std::uint64_t intensity_census(const RawImage& image, std::uint8_t threshold) {
    return static_cast<std::uint64_t>(
        std::count_if(image.data.begin(), image.data.end(),
                      [threshold](std::uint8_t b) { return b > threshold; }));
}

double psnr(const RawImage& a, const RawImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("images are " + std::to_string(a.width) + "x" +
                                std::to_string(a.height) + " vs " +
                                std::to_string(b.width) + "x" + std::to_string(b.height));

    std::uint64_t sum_sq = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const int d = int(a.data[i]) - int(b.data[i]);
        sum_sq += static_cast<std::uint64_t>(d) * d;
    }
    if (sum_sq == 0) return std::numeric_limits<double>::infinity();

    const double mse = double(sum_sq) / double(a.data.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

AnalysisReport analyze(const RawImage& image,
                       const std::optional<StegoParams>& params,
                       std::optional<std::uint8_t> census_threshold,
                       const RawImage* reference) {
    AnalysisReport report;
    if (params) {
        const std::uint64_t bits = capacity_bits(image, *params);
        report.capacity_bits = bits;
        report.carrier_byte_count = bits / kBitsPerCarrierByte;

        const ChannelSet channels = params->channels();
        const std::uint64_t reserved_pixels = image.width >= 2 ? 2 : image.width;
        report.total_data_channel_bytes =
            (image.pixel_count() - reserved_pixels) *
            static_cast<std::uint64_t>(channels.count());
    }
    if (census_threshold) {
        report.census_threshold = *census_threshold;
        report.census_above_threshold = intensity_census(image, *census_threshold);
    }
    if (reference) report.psnr_db = psnr(image, *reference);
    return report;
}

std::string render_text(const AnalysisReport& report) {
    std::ostringstream os;
    if (report.capacity_bits) os << "capacity: " << *report.capacity_bits << " bits\n";
    if (report.carrier_byte_count)
        os << "carrier bytes: " << *report.carrier_byte_count << "\n";
    if (report.total_data_channel_bytes)
        os << "data-channel bytes: " << *report.total_data_channel_bytes << "\n";
    if (report.census_above_threshold)
        os << "census above " << int(*report.census_threshold) << ": "
           << *report.census_above_threshold << "\n";
    if (report.psnr_db) {
        os << "PSNR: ";
        if (std::isinf(*report.psnr_db)) {
            os << "inf\n";
        } else {
            os.setf(std::ios::fixed);
            os.precision(2);
            os << *report.psnr_db << " dB\n";
        }
    }
    return os.str();
}

}  // namespace bsteg
