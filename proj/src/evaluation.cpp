#include "aitv/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "aitv/errors.hpp"
#include "aitv/rng.hpp"

namespace aitv {

namespace {

// floor(level * pixels) with a relative nudge: the decimal levels users write
// (0.3, 0.15, ...) are not exact doubles, and the raw product can land one ulp
// under the integer the decimal means.
std::size_t corrupt_count(double level, std::size_t pixels) {
    const double exact = level * static_cast<double>(pixels);
    const double nudged = exact + 1e-9 * std::max(1.0, exact);
    auto k = static_cast<std::size_t>(nudged);
    return std::min(k, pixels);
}

void check_same_shape(const Image& a, const Image& b, const char* what) {
    if (a.channels() != b.channels() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(what) + " needs matching images");
}

} // namespace

Image corrupt(const Image& f, const NoiseSpec& spec) {
    if (!(spec.level >= 0.0 && spec.level <= 1.0))
        throw std::invalid_argument("noise level must lie in [0,1], got " +
                                    std::to_string(spec.level));
    Image g = f;
    const std::size_t n = f.ch.empty() ? 0 : f.ch[0].size();
    const std::size_t k = corrupt_count(spec.level, n);
    std::mt19937_64 rng(spec.seed);
    std::vector<std::size_t> idx(n);
    for (auto& channel : g.ch) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t j = t + bounded(rng, n - t);
            std::swap(idx[t], idx[j]);
            channel.v[idx[t]] = spec.kind == NoiseKind::Spin
                                    ? static_cast<double>(bounded(rng, 2))
                                    : uniform01(rng);
        }
    }
    return g;
}

double dice(const LabelMap& seg, const Constants& seg_constants, const GroundTruth& gt,
            DiceMode mode, int foreground_label) {
    if (seg.rows != gt.labels.rows || seg.cols != gt.labels.cols)
        throw std::invalid_argument("dice needs label fields of one shape");
    const int n_gt = static_cast<int>(gt.constants.size());
    const int n_seg = static_cast<int>(seg_constants.size());
    if (n_gt < 1 || n_seg < 1)
        throw std::invalid_argument("dice needs at least one region per side");

    // Greedy nearest-constant assignment: repeatedly take the closest
    // still-unmatched (gt, seg) pair.
    std::vector<int> seg_for_gt(n_gt, 0);  // seg label assigned to gt label, 0 = none
    std::vector<bool> gt_done(n_gt, false), seg_done(n_seg, false);
    const int rounds = std::min(n_gt, n_seg);
    for (int r = 0; r < rounds; ++r) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (int i = 0; i < n_gt; ++i) {
            if (gt_done[i]) continue;
            for (int j = 0; j < n_seg; ++j) {
                if (seg_done[j]) continue;
                if (gt.constants[i].size() != seg_constants[j].size())
                    throw std::invalid_argument("dice constants disagree on channels");
                double d = 0.0;
                for (std::size_t ch = 0; ch < gt.constants[i].size(); ++ch) {
                    const double e = gt.constants[i][ch] - seg_constants[j][ch];
                    d += e * e;
                }
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        gt_done[bi] = true;
        seg_done[bj] = true;
        seg_for_gt[bi] = bj + 1;
    }

    auto label_dice = [&](int gt_label) {
        const int seg_label = seg_for_gt[gt_label - 1];
        std::size_t a = 0, b = 0, both = 0;
        for (std::size_t i = 0; i < seg.size(); ++i) {
            const bool in_a = gt.labels.v[i] == gt_label;
            const bool in_b = seg_label != 0 && seg.v[i] == seg_label;
            a += in_a;
            b += in_b;
            both += in_a && in_b;
        }
        if (a + b == 0) return 1.0;
        return 2.0 * static_cast<double>(both) / static_cast<double>(a + b);
    };

    if (mode == DiceMode::ForegroundOnly) {
        if (foreground_label < 1 || foreground_label > n_gt)
            throw std::invalid_argument("foreground label out of range");
        return label_dice(foreground_label);
    }
    double sum = 0.0;
    for (int ell = 1; ell <= n_gt; ++ell) sum += label_dice(ell);
    return sum / static_cast<double>(n_gt);
}

Image reconstruct(const LabelMap& labels, const Constants& constants) {
    if (constants.empty()) throw std::invalid_argument("reconstruct needs constants");
    const int n = static_cast<int>(constants.size());
    const auto channels = constants[0].size();
    for (const auto& c : constants)
        if (c.size() != channels)
            throw std::invalid_argument("reconstruct constants disagree on channels");
    Image out;
    for (std::size_t ch = 0; ch < channels; ++ch)
        out.ch.emplace_back(labels.rows, labels.cols, 0.0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int ell = labels.v[i];
        if (ell < 1 || ell > n)
            throw std::invalid_argument("label " + std::to_string(ell) +
                                        " has no constant");
        for (std::size_t ch = 0; ch < channels; ++ch)
            out.ch[ch].v[i] = constants[ell - 1][ch];
    }
    return out;
}

double psnr(const Image& recon, const Image& original) {
    check_same_shape(recon, original, "psnr");
    double err = 0.0;
    for (int ch = 0; ch < recon.channels(); ++ch)
        for (std::size_t i = 0; i < recon.ch[ch].size(); ++i) {
            const double d = recon.ch[ch].v[i] - original.ch[ch].v[i];
            err += d * d;
        }
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    const double cmn = static_cast<double>(recon.channels()) *
                       static_cast<double>(recon.ch[0].size());
    return 10.0 * std::log10(cmn / err);
}

Synthetic make_synthetic(const SyntheticSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1)
        throw config_error("synthetic canvas must be at least 1x1");
    if (spec.constants.empty()) throw config_error("synthetic needs region constants");
    const auto channels = spec.constants[0].size();
    if (channels != 1 && channels != 3)
        throw config_error("synthetic constants need 1 or 3 channels");
    for (const auto& region : spec.constants) {
        if (region.size() != channels)
            throw config_error("synthetic constants disagree on channels");
        for (double v : region)
            if (!(v >= 0.0 && v <= 1.0))
                throw config_error("synthetic constants must lie in [0,1]");
    }
    const int n = static_cast<int>(spec.constants.size());
    const double ci = (spec.rows - 1) / 2.0, cj = (spec.cols - 1) / 2.0;

    LabelMap labels(spec.rows, spec.cols);
    switch (spec.geometry) {
    case Geometry::Disk: {
        if (n != 2) throw config_error("disk geometry needs exactly 2 regions");
        if (spec.radius < 0.0) throw config_error("disk radius must be nonnegative");
        const double r = spec.radius > 0.0 ? spec.radius
                                           : std::min(spec.rows, spec.cols) / 4.0;
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.cols; ++j)
                labels(i, j) =
                    (i - ci) * (i - ci) + (j - cj) * (j - cj) <= r * r ? 2 : 1;
        break;
    }
    case Geometry::Quadrants: {
        if (n != 4) throw config_error("quadrant geometry needs exactly 4 regions");
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.cols; ++j)
                labels(i, j) = 1 + (i >= spec.rows / 2 ? 2 : 0) + (j >= spec.cols / 2);
        break;
    }
    case Geometry::Rings: {
        if (n < 2) throw config_error("ring geometry needs at least 2 regions");
        const double outer = std::min(spec.rows, spec.cols) / 2.0 - 2.0;
        if (outer <= 0.0) throw config_error("canvas too small for rings");
        const double band = outer / (n - 1);
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.cols; ++j) {
                const double d =
                    std::sqrt((i - ci) * (i - ci) + (j - cj) * (j - cj));
                labels(i, j) =
                    d >= outer ? 1 : 2 + std::min(n - 2, static_cast<int>(d / band));
            }
        break;
    }
    case Geometry::Square: {
        if (n != 2) throw config_error("square geometry needs exactly 2 regions");
        if (spec.radius < 0.0) throw config_error("square half side must be nonnegative");
        const double h = spec.radius > 0.0 ? spec.radius
                                           : std::min(spec.rows, spec.cols) / 4.0;
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.cols; ++j)
                labels(i, j) =
                    std::abs(i - ci) <= h && std::abs(j - cj) <= h ? 2 : 1;
        break;
    }
    case Geometry::Blobs: {
        if (n != 3 && n != 4)
            throw config_error("blob geometry needs 3 or 4 regions");
        // Anchor fractions keep the disks disjoint on any square-ish canvas.
        constexpr double fy[] = {0.30, 0.30, 0.69};
        constexpr double fx[] = {0.30, 0.69, 0.495};
        constexpr double fr[] = {0.15, 0.15, 0.18};
        const double scale = std::min(spec.rows, spec.cols);
        labels.v.assign(labels.v.size(), 1);
        for (int k = 0; k < n - 1; ++k) {
            const double cy = fy[k] * spec.rows, cx = fx[k] * spec.cols;
            const double r = fr[k] * scale;
            for (int i = 0; i < spec.rows; ++i)
                for (int j = 0; j < spec.cols; ++j)
                    if ((i - cy) * (i - cy) + (j - cx) * (j - cx) <= r * r)
                        labels(i, j) = 2 + k;
        }
        break;
    }
    }

    std::vector<int> count(n + 1, 0);
    for (int v : labels.v) ++count[v];
    for (int ell = 1; ell <= n; ++ell)
        if (count[ell] == 0)
            throw config_error("synthetic region " + std::to_string(ell) + " is empty");

    Synthetic out;
    out.gt.constants = spec.constants;
    out.image = reconstruct(labels, spec.constants);
    out.gt.labels = std::move(labels);
    return out;
}

} // namespace aitv
