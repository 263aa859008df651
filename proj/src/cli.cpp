// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include "bsteg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsteg/analysis.hpp"
#include "bsteg/bitstream.hpp"
#include "bsteg/bmp.hpp"
#include "bsteg/stego.hpp"

namespace bsteg {
namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed for " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + path);
}

struct CommandConfig {
    std::string input_path;
    std::string output_path;
    std::string text;
    std::string text_file;
    std::string payload_file;
    std::string ref_path;
    int level = 0;
    int mode = 0;
    int upper = 0;
    int census = -1;
    bool as_text = false;
    bool json = false;
    bool have_params = false;
};

int run_cover(const CommandConfig& cfg, std::ostream& out) {
    const StegoParams params = StegoParams::make(cfg.level, cfg.mode, cfg.upper);

    std::vector<std::uint8_t> message;
    if (!cfg.text_file.empty()) {
        message = read_file(cfg.text_file);
    } else if (!cfg.payload_file.empty()) {
        message = read_file(cfg.payload_file);
    } else {
        message.assign(cfg.text.begin(), cfg.text.end());
    }

    const RawImage image = decode_bmp(read_file(cfg.input_path));
    const BitStream bits = frame(message);
    const RawImage stego = cover(image, bits, params);
    write_file(cfg.output_path, encode_bmp(stego));

    out << "capacity: used " << bits.bit_count() << " of "
        << capacity_bits(image, params) << " bits\n";
    return exit_code::ok;
}

int run_uncover(const CommandConfig& cfg, std::ostream& out) {
    const RawImage stego = decode_bmp(read_file(cfg.input_path));
    const UncoverResult result = uncover(stego);
    const std::vector<std::uint8_t> message = deframe(result.payload_bits);

    if (cfg.as_text) {
        out.write(reinterpret_cast<const char*>(message.data()),
                  static_cast<std::streamsize>(message.size()));
    } else {
        write_file(cfg.output_path, message);
    }
    return exit_code::ok;
}

int run_inspect(const CommandConfig& cfg, std::ostream& out) {
    const RawImage image = decode_bmp(read_file(cfg.input_path));

    std::optional<StegoParams> params;
    if (cfg.have_params) params = StegoParams::make(cfg.level, cfg.mode, cfg.upper);

    std::optional<std::uint8_t> census;
    if (cfg.census >= 0) census = static_cast<std::uint8_t>(cfg.census);

    std::optional<RawImage> reference;
    if (!cfg.ref_path.empty()) reference = decode_bmp(read_file(cfg.ref_path));

    const AnalysisReport report =
        analyze(image, params, census, reference ? &*reference : nullptr);

    if (cfg.json) {
        nlohmann::ordered_json j;
        j["width"] = image.width;
        j["height"] = image.height;
        if (report.capacity_bits) j["capacity_bits"] = *report.capacity_bits;
        if (report.carrier_byte_count)
            j["carrier_byte_count"] = *report.carrier_byte_count;
        if (report.total_data_channel_bytes)
            j["total_data_channel_bytes"] = *report.total_data_channel_bytes;
        if (report.census_threshold) {
            j["census_threshold"] = *report.census_threshold;
            j["census_above_threshold"] = *report.census_above_threshold;
        }
        if (report.psnr_db) {
            if (std::isinf(*report.psnr_db))
                j["psnr_db"] = "inf";
            else
                j["psnr_db"] = *report.psnr_db;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "size: " << image.width << "x" << image.height << "\n"
            << render_text(report);
    }
    return exit_code::ok;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hide and recover byte payloads in uncompressed 24-bit BMP images"};
    app.name("bsteg");
    app.require_subcommand(1);

    CommandConfig cfg;

    CLI::App* cover_cmd = app.add_subcommand("cover", "embed a payload into a BMP image");
    cover_cmd->add_option("--in", cfg.input_path, "carrier BMP")->required();
    cover_cmd->add_option("--out", cfg.output_path, "stego BMP to write")->required();
    auto* text_opt = cover_cmd->add_option("--text", cfg.text, "inline message text");
    auto* text_file_opt =
        cover_cmd->add_option("--text-file", cfg.text_file, "message file (read as bytes)");
    auto* payload_opt =
        cover_cmd->add_option("--payload-file", cfg.payload_file, "binary payload file");
    text_opt->excludes(text_file_opt)->excludes(payload_opt);
    text_file_opt->excludes(payload_opt);
    cover_cmd->add_option("--level", cfg.level, "brightness level, 1..254")->required();
    cover_cmd->add_option("--mode", cfg.mode, "channel mode, 1..7")->required();
    cover_cmd->add_option("--upper", cfg.upper, "upperbound intensity, 0..255")->required();

    CLI::App* uncover_cmd =
        app.add_subcommand("uncover", "recover the payload from a stego image");
    uncover_cmd->add_option("--in", cfg.input_path, "stego BMP")->required();
    auto* out_opt = uncover_cmd->add_option("--out", cfg.output_path, "payload file to write");
    auto* as_text_opt =
        uncover_cmd->add_flag("--as-text", cfg.as_text, "print the payload to stdout");
    out_opt->excludes(as_text_opt);

    CLI::App* inspect_cmd =
        app.add_subcommand("inspect", "report capacity, census and PSNR figures");
    inspect_cmd->add_option("--in", cfg.input_path, "BMP to inspect")->required();
    auto* level_opt = inspect_cmd->add_option("--level", cfg.level, "brightness level");
    auto* mode_opt = inspect_cmd->add_option("--mode", cfg.mode, "channel mode");
    auto* upper_opt = inspect_cmd->add_option("--upper", cfg.upper, "upperbound intensity");
    level_opt->needs(mode_opt)->needs(upper_opt);
    mode_opt->needs(level_opt)->needs(upper_opt);
    upper_opt->needs(level_opt)->needs(mode_opt);
    inspect_cmd->add_option("--census", cfg.census, "count bytes above this threshold")
        ->check(CLI::Range(0, 255));
    inspect_cmd->add_option("--ref", cfg.ref_path, "reference BMP for PSNR");
    inspect_cmd->add_flag("--json", cfg.json, "machine-readable output");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (cover_cmd->parsed()) {
            if (text_opt->count() + text_file_opt->count() + payload_opt->count() != 1) {
                err << "error: exactly one of --text, --text-file, --payload-file is required\n";
                return exit_code::usage;
            }
            return run_cover(cfg, out);
        }
        if (uncover_cmd->parsed()) {
            if (out_opt->count() + as_text_opt->count() != 1) {
                err << "error: exactly one of --out, --as-text is required\n";
                return exit_code::usage;
            }
            return run_uncover(cfg, out);
        }
        cfg.have_params = level_opt->count() > 0;
        return run_inspect(cfg, out);
    } catch (const CapacityExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::capacity;
    } catch (const MessageTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::capacity;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::params;
    } catch (const InvalidMode& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::params;
    } catch (const NotAStegoImage& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::not_stego;
    } catch (const CorruptFrame& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::not_stego;
    } catch (const std::exception& e) {
        // BMP format violations and file I/O failures land here.
        err << "error: " << e.what() << "\n";
        return exit_code::format;
    }
}

}  // namespace bsteg
