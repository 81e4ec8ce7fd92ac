#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aitv/evaluation.hpp"
#include "aitv/manifest.hpp"

namespace aitv {

struct SegmentOutcome {
    SegmentationResult result;
    std::optional<double> dice_value;      // when ground truth was supplied
    double psnr_vs_input = 0.0;            // reconstruction vs the (possibly noisy) input
    std::optional<double> psnr_vs_reference;
};

// Runs one manifest end to end and writes, under m.out: labels.png,
// reconstruction.png, membership_<k>.png per field, result.json, trace.csv
// (outer_iter, objective, max_relerr, wall_ms) and manifest.json (resolved).
SegmentOutcome cmd_segment(const RunManifest& m);

// Writes corrupted.png and manifest.json under out_dir.
void cmd_corrupt(const std::string& input, const NoiseSpec& spec, bool grayscale,
                 const std::string& out_dir);

struct SweepAxes {
    std::vector<double> alphas;
    NoiseKind kind = NoiseKind::Spin;
    std::vector<double> levels;
    std::vector<std::uint64_t> seeds;
};

struct SweepCell {
    double alpha = 0.0;
    double level = 0.0;
    std::uint64_t seed = 0;
    bool ok = false;
    double dice_value = 0.0;
    std::string error;
};

struct SweepResult {
    std::vector<SweepCell> cells;
    // means[i][j]: alpha i, level j; NaN marks cells where every seed failed
    std::vector<std::vector<double>> means;
};

// Grid run over alphas x levels x seeds on one base manifest. Cells run
// concurrently up to the AITV_THREADS budget; failed cells are marked ERR in
// summary.csv and the sweep continues. Writes summary.csv (rows = model/alpha,
// columns = noise levels, cells = mean DICE over seeds), cells.csv (raw rows)
// and per-cell run directories.
SweepResult cmd_sweep(const RunManifest& base, const SweepAxes& axes);

struct SynthArgs {
    SyntheticSpec spec;
    std::string out = ".";
};

// Writes image.png, labels.png and gt.json under out.
void cmd_synth(const SynthArgs& args);

GroundTruth load_ground_truth(const std::string& gt_json_path);

// Thread budget for concurrent cells: AITV_THREADS when set, otherwise the
// hardware concurrency, never more than jobs.
int thread_budget(int jobs);

// Full command-line front end (verbs: segment, corrupt, sweep, synth).
// Returns the process exit code: 0 ok, 1 I/O, 2 config, 3 solver.
int run_cli(int argc, char** argv);

} // namespace aitv
