#pragma once

#include <cstdint>

#include "aitv/aicv.hpp"

namespace aitv {

enum class NoiseKind { Spin, Rvin };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::Spin;
    double level = 0.0;  // fraction of corrupted positions, in [0,1]
    std::uint64_t seed = 0;
};

// Replaces exactly floor(level * m * n) positions per channel, sampled
// without replacement from a generator seeded by spec.seed. SPIN writes a
// fair-coin 0 or 1, RVIN an independent uniform [0,1] draw. Color channels
// are corrupted independently (fresh positions per channel).
Image corrupt(const Image& f, const NoiseSpec& spec);

struct GroundTruth {
    LabelMap labels;      // region index in {1..N}
    Constants constants;  // per region, per channel
};

enum class DiceMode { ForegroundOnly, MeanAll };

// Per-label DICE 2|A ∩ A'| / (|A| + |A'|) after matching segmentation labels
// to ground-truth labels by nearest constants (Euclidean across channels,
// greedy unique assignment). ForegroundOnly evaluates one ground-truth label
// (default 2, the first shape in make_synthetic's conventions); MeanAll
// averages over all ground-truth labels. A label empty on both sides counts
// as 1, empty on exactly one side as 0.
double dice(const LabelMap& seg, const Constants& seg_constants, const GroundTruth& gt,
            DiceMode mode, int foreground_label = 2);

// Piecewise-constant assembly: pixel with label ell gets constants[ell-1],
// per channel.
Image reconstruct(const LabelMap& labels, const Constants& constants);

// 10 log10(C*m*n / sum of squared per-channel errors), C the channel count.
// Identical inputs return +inf (file writers spell it "inf").
double psnr(const Image& recon, const Image& original);

enum class Geometry { Disk, Quadrants, Rings, Square, Blobs };

// Disk: background (label 1) + centered disk (label 2), 2 constants.
// Quadrants: four axis quadrants, labels 1..4 row-major, 4 constants.
// Rings: background (label 1) + N-1 concentric bands from the center out
// (labels 2..N), any N >= 2 constants.
// Square: background (label 1) + centered axis-aligned square (label 2),
// 2 constants; radius is the half side.
// Blobs: background (label 1) + N-1 disjoint disks (labels 2..N) at fixed
// canvas fractions, 3 or 4 constants.
// constants[region][channel]; 1 channel = grayscale, 3 = color.
struct SyntheticSpec {
    int rows = 0;
    int cols = 0;
    Geometry geometry = Geometry::Disk;
    Constants constants;
    double radius = 0.0;  // Disk/Square size; 0 picks min(rows, cols)/4
};

struct Synthetic {
    Image image;
    GroundTruth gt;
};

// Exact piecewise-constant image plus its label field. Rejects specs whose
// geometry/constants disagree or that leave any region empty.
Synthetic make_synthetic(const SyntheticSpec& spec);

} // namespace aitv
