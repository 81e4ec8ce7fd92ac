#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aitv/aicv.hpp"
#include "aitv/aifr.hpp"
#include "aitv/evaluation.hpp"

namespace aitv {

// Complete, serializable description of one run. A manifest (plus the same
// build) reproduces a run bit-for-bit; every command writes its resolved
// manifest next to its outputs.
struct RunManifest {
    std::string model = "aicv";  // "aicv" | "aifr"
    std::string input;           // PNG path
    bool grayscale = false;      // force luminance conversion
    int phases = 1;              // aicv: M memberships, 2^M regions
    int regions = 2;             // aifr: N memberships
    double alpha = 0.5;
    double lambda = 2.0;
    double nu = 10.0;            // aifr only
    double c = 1e-8;
    double tau0 = 0.125;
    double beta = 1.0;
    double delta = 0.9999;
    double mu = 7.5e-5;
    double tol_inner = 1e-6;
    int max_inner = 300;
    double tol_outer = 0.0;      // 0 = auto (aicv: 1e-6 / 1e-4 four-phase; aifr: 1e-4)
    int max_outer = 0;           // 0 = auto (aicv: 20, aifr: 40)
    std::string noise;           // "" or "spin:<level>" / "rvin:<level>"
    std::uint64_t seed = 0;
    std::string init = "auto";   // auto | circle | twin | random
    double init_radius = 0.0;    // 0 = variant default
    std::string gt;              // optional ground-truth JSON (from synth)
    std::string reference;       // optional clean image for a second PSNR
    std::string out = ".";
};

// Throws config_error naming the offending field.
void validate(const RunManifest& m);

RunManifest manifest_from_json_file(const std::string& path);
std::string manifest_to_json_string(const RunManifest& m);  // resolved, stable key order

std::optional<NoiseSpec> parse_noise(const std::string& text, std::uint64_t seed);

AicvConfig aicv_config_from(const RunManifest& m);
AifrConfig aifr_config_from(const RunManifest& m);

} // namespace aitv
