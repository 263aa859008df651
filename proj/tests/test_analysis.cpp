// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/analysis.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support.hpp"

using namespace bsteg;
using testsupport::random_image;

TEST_SUITE("analysis") {

TEST_CASE("capacity of the all-zero fixture") {
    const StegoParams p = StegoParams::make(40, 7, 100);
    CHECK(capacity_bits(RawImage(4, 4, 0), p) == 126);
    CHECK(capacity_bits(RawImage(4, 4, 255), p) == 0);

    const StegoParams red_only = StegoParams::make(40, 1, 100);
    CHECK(capacity_bits(RawImage(4, 4, 0), red_only) == 42);
}

TEST_CASE("capacity never grows when the source gets brighter") {
    std::mt19937 rng(83);
    const StegoParams p = StegoParams::make(40, 7, 100);
    for (int i = 0; i < 20; ++i) {
        const RawImage img = random_image(rng, 12, 12);
        RawImage lifted = img;
        for (auto& b : lifted.data) b = static_cast<std::uint8_t>(std::min(b + 25, 255));
        CHECK(capacity_bits(lifted, p) <= capacity_bits(img, p));
    }
}

TEST_CASE("intensity census fixtures") {
    CHECK(intensity_census(RawImage(2, 2, 255), 244) == 12);
    CHECK(intensity_census(RawImage(2, 2, 255), 255) == 0);
    CHECK(intensity_census(RawImage(4, 4, 0), 0) == 0);
}

TEST_CASE("intensity census is monotone in the threshold") {
    std::mt19937 rng(89);
    const RawImage img = random_image(rng, 16, 16);
    for (int t = 1; t < 256; ++t)
        CHECK(intensity_census(img, std::uint8_t(t)) <=
              intensity_census(img, std::uint8_t(t - 1)));
}

TEST_CASE("psnr of identical images is infinite") {
    std::mt19937 rng(97);
    const RawImage img = random_image(rng, 8, 8);
    CHECK(std::isinf(psnr(img, img)));
}

TEST_CASE("psnr of a uniform +1 shift") {
    const RawImage a(8, 8, 100);
    const RawImage b(8, 8, 101);
    CHECK(psnr(a, b) == doctest::Approx(48.13).epsilon(0.0002));  // within 0.01 dB
}

TEST_CASE("psnr is symmetric") {
    std::mt19937 rng(103);
    const RawImage a = random_image(rng, 8, 8);
    const RawImage b = random_image(rng, 8, 8);
    CHECK(psnr(a, b) == doctest::Approx(psnr(b, a)));
}

TEST_CASE("psnr rejects mismatched dimensions") {
    CHECK_THROWS_AS(psnr(RawImage(2, 2, 0), RawImage(3, 3, 0)), DimensionMismatch);
}

TEST_CASE("analyze fills only what was requested") {
    const RawImage img(4, 4, 0);
    const StegoParams p = StegoParams::make(40, 7, 100);

    const AnalysisReport bare = analyze(img, std::nullopt, std::nullopt, nullptr);
    CHECK_FALSE(bare.capacity_bits.has_value());
    CHECK_FALSE(bare.census_above_threshold.has_value());
    CHECK_FALSE(bare.psnr_db.has_value());

    const AnalysisReport full = analyze(img, p, std::uint8_t(244), &img);
    REQUIRE(full.capacity_bits.has_value());
    CHECK(*full.capacity_bits == 126);
    CHECK(*full.carrier_byte_count == 42);
    CHECK(*full.capacity_bits == 3 * *full.carrier_byte_count);
    CHECK(*full.total_data_channel_bytes == 42);
    CHECK(*full.census_above_threshold == 0);
    CHECK(std::isinf(*full.psnr_db));
}

TEST_CASE("text rendering uses one line per figure") {
    const RawImage img(4, 4, 0);
    const StegoParams p = StegoParams::make(40, 7, 100);
    const std::string text = render_text(analyze(img, p, std::uint8_t(244), &img));
    CHECK(text.find("capacity: 126 bits\n") != std::string::npos);
    CHECK(text.find("carrier bytes: 42\n") != std::string::npos);
    CHECK(text.find("census above 244: 0\n") != std::string::npos);
    CHECK(text.find("PSNR: inf\n") != std::string::npos);
}

}  // TEST_SUITE
