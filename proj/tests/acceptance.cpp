// Acceptance gate: one self-contained check per release criterion, each
// printing exactly one PASS/FAIL line. Run with no arguments for the full
// battery or with criterion numbers (e.g. "acceptance 4 6") for a subset.
// The exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "aitv/aicv.hpp"
#include "aitv/aifr.hpp"
#include "aitv/evaluation.hpp"
#include "aitv/gradient.hpp"
#include "aitv/regularizer.hpp"
#include "aitv/rng.hpp"

#include "support.hpp"

namespace {

using namespace aitv;

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct Outcome {
    bool pass = false;
    std::string name;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. adjoint identity of the periodic difference operator

Outcome criterion1() {
    constexpr double kTol = 1e-10;
    constexpr double kBudgetS = 1.0;
    const double t0 = now_s();
    std::mt19937_64 rng(41);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 1 + static_cast<int>(bounded(rng, 32));
        const int c = 1 + static_cast<int>(bounded(rng, 32));
        const ScalarField u = testsupport::rand_field(rng, r, c, -1.0, 1.0);
        GradientField p(r, c);
        for (auto& x : p.x.v) x = 2.0 * uniform01(rng) - 1.0;
        for (auto& x : p.y.v) x = 2.0 * uniform01(rng) - 1.0;
        const double lhs = inner_y(grad(u), p);
        const double rhs = inner_x(u, grad_adjoint(p));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    const double dt = now_s() - t0;
    Outcome o;
    o.name = "adjoint identity";
    o.pass = worst <= kTol && dt < kBudgetS;
    o.detail = fmt("max |<Du,p> - <u,D'p>| = %.2e over 100 instances, %.2f s", worst, dt);
    return o;
}

// ---------------------------------------------------------------------------
// 2. subgradient inequality of the isotropic seminorm

Outcome criterion2() {
    constexpr double kSlack = -1e-10;
    std::mt19937_64 rng(42);
    double worst = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 1 + static_cast<int>(bounded(rng, 32));
        const int c = 1 + static_cast<int>(bounded(rng, 32));
        const ScalarField u = testsupport::rand_field(rng, r, c);
        ScalarField v = testsupport::rand_field(rng, r, c);
        // odd trials probe near u, where the inequality is tight
        if (trial % 2 == 1)
            for (std::size_t i = 0; i < v.size(); ++i)
                v.v[i] = u.v[i] + 1e-3 * (v.v[i] - 0.5);
        const GradientField q = isotropic_subgradient(u);
        ScalarField diff(r, c);
        for (std::size_t i = 0; i < diff.size(); ++i) diff.v[i] = v.v[i] - u.v[i];
        const double slack = norm_l21(grad(v)) - norm_l21(grad(u)) -
                             inner_x(grad_adjoint(q), diff);
        worst = std::min(worst, slack);
    }
    Outcome o;
    o.name = "isotropic subgradient inequality";
    o.pass = worst >= kSlack;
    o.detail = fmt("min slack = %.2e over 100 pairs", worst);
    return o;
}

// ---------------------------------------------------------------------------
// 3. region algebra: partition of unity and affine coefficients

Outcome criterion3() {
    constexpr double kTol = 1e-12;
    std::mt19937_64 rng(43);
    double worst_sum = 0.0, worst_coeff = 0.0;

    for (int m = 1; m <= 3; ++m) {
        const RegionCode code{m};
        const int r = 5, c = 7;
        MembershipStack u;
        for (int k = 0; k < m; ++k) u.push_back(testsupport::rand_field(rng, r, c));

        ScalarField sum(r, c);
        for (int ell = 1; ell <= code.num_regions(); ++ell) {
            const ScalarField R = region_indicator(code, ell, u);
            for (std::size_t i = 0; i < sum.size(); ++i) sum.v[i] += R.v[i];
        }
        for (double s : sum.v) worst_sum = std::max(worst_sum, std::abs(s - 1.0));

        Image f(testsupport::rand_field(rng, r, c));
        Constants cs;
        for (int ell = 0; ell < code.num_regions(); ++ell) cs.push_back({uniform01(rng)});
        const std::vector<ScalarField> fid = fidelity_fields(f, cs);

        for (int k = 1; k <= m; ++k) {
            const ScalarField lib = linear_coefficient(code, k, fid, u);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    double expect = 0.0;
                    if (m == 1) {
                        expect = fid[0](i, j) - fid[1](i, j);
                    } else if (m == 2) {
                        const double w = u[2 - k](i, j);  // the other membership
                        if (k == 1)
                            expect = (fid[0](i, j) - fid[2](i, j)) * w +
                                     (fid[1](i, j) - fid[3](i, j)) * (1.0 - w);
                        else
                            expect = (fid[0](i, j) - fid[1](i, j)) * w +
                                     (fid[2](i, j) - fid[3](i, j)) * (1.0 - w);
                    } else {
                        // affine finite difference: bump u_k by one at this pixel
                        for (int ell = 1; ell <= code.num_regions(); ++ell) {
                            double base = 1.0, bumped = 1.0;
                            for (int kk = 1; kk <= m; ++kk) {
                                const double x = u[kk - 1](i, j);
                                base *= code.factor(ell, kk, x);
                                bumped *= code.factor(ell, kk, kk == k ? x + 1.0 : x);
                            }
                            expect += fid[ell - 1](i, j) * (bumped - base);
                        }
                    }
                    worst_coeff = std::max(worst_coeff, std::abs(lib(i, j) - expect));
                }
        }
    }
    Outcome o;
    o.name = "region algebra";
    o.pass = worst_sum <= kTol && worst_coeff <= kTol;
    o.detail = fmt("partition defect %.2e, coefficient defect %.2e", worst_sum, worst_coeff);
    return o;
}

// ---------------------------------------------------------------------------
// 4. inner-solver optimality against a projected-subgradient oracle

Outcome criterion4() {
    constexpr double kRelTol = 1e-5;
    constexpr double kBudgetS = 30.0;
    const double t0 = now_s();
    std::mt19937_64 rng(44);
    const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    double worst_rel = -1e300;
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 16, c = 16;
        const ScalarField lin = testsupport::rand_field(rng, r, c, -2.0, 2.0);
        const ScalarField anchor = testsupport::rand_field(rng, r, c);
        const GradientField q = testsupport::rand_unit_q(rng, r, c);
        const double alpha = alphas[bounded(rng, 5)];
        const bool coupled = trial >= 10;
        const double nu = coupled ? 2.5 * (1 + bounded(rng, 3)) : 0.0;
        ScalarField s;
        if (coupled) s = testsupport::rand_field(rng, r, c);
        const Subproblem sub = make_subproblem(lin, anchor, q, alpha, 1e-8, nu, s);

        PdhglsParams tight;
        tight.inner_tol = 1e-10;
        tight.max_inner_iters = 20000;
        ScalarField start = anchor;
        for (auto& x : start.v) x = std::clamp(x, 0.0, 1.0);
        const ScalarField sol = pdhgls_solve(sub, start, tight);
        const double obj = subproblem_objective(sub, sol);

        const testsupport::PgReference ref =
            testsupport::reference_projected_gradient(sub, 6000);
        const double rel = (obj - ref.objective) / std::max(1.0, std::abs(ref.objective));
        worst_rel = std::max(worst_rel, rel);
    }
    const double dt = now_s() - t0;
    Outcome o;
    o.name = "inner-solver optimality";
    o.pass = worst_rel <= kRelTol && dt < kBudgetS;
    o.detail = fmt("worst relative excess %.2e over 20 subproblems, %.1f s", worst_rel, dt);
    return o;
}

// ---------------------------------------------------------------------------
// 5. per-iteration descent bound on tracked runs

Image noisy_synthetic(const Synthetic& s, NoiseKind kind, double level,
                      std::uint64_t seed) {
    if (level <= 0.0) return s.image;
    return corrupt(s.image, NoiseSpec{kind, level, seed});
}

struct DescentStats {
    int transitions = 0;
    double min_margin = 1e300;
    int violations = 0;
};

void check_descent(const SegmentationResult& res, double c, DescentStats& st) {
    constexpr double kSlack = 1e-8;
    for (int t = 1; t <= res.outer_iterations; ++t) {
        const double drop = res.objective_trace[t - 1] - res.objective_trace[t];
        const double bound = 2.0 * c * res.step_sq_trace[t - 1];
        const double margin = drop - bound;
        st.min_margin = std::min(st.min_margin, margin);
        if (margin < -kSlack) ++st.violations;
        ++st.transitions;
    }
}

Outcome criterion5() {
    DescentStats st;
    const Constants gray2 = {{0.2}, {0.8}};
    const Constants color4 = {{0.9, 0.1, 0.1}, {0.1, 0.9, 0.1}, {0.1, 0.1, 0.9}, {0.9, 0.9, 0.1}};
    const Constants gray3 = {{0.1}, {0.5}, {0.9}};

    const Synthetic disk48 = make_synthetic({48, 48, Geometry::Disk, gray2, 0.0});
    const Synthetic quad40 = make_synthetic({40, 40, Geometry::Quadrants, color4, 0.0});
    const Synthetic ring32 = make_synthetic({32, 32, Geometry::Rings, gray3, 0.0});

    int configs = 0;
    auto run_cv = [&](const Image& f, int phases, double alpha, double lambda) {
        AicvConfig cfg;
        cfg.num_phases = phases;
        cfg.alpha = alpha;
        cfg.lambda = lambda;
        check_descent(segment(f, cfg), cfg.c, st);
        ++configs;
    };
    auto run_fr = [&](const Image& f, int regions, double alpha, double lambda, double nu) {
        AifrConfig cfg;
        cfg.num_regions = regions;
        cfg.alpha = alpha;
        cfg.lambda = lambda;
        cfg.nu = nu;
        check_descent(segment_fr(f, cfg), cfg.c, st);
        ++configs;
    };

    run_cv(disk48.image, 1, 0.5, 2.0);
    run_cv(noisy_synthetic(disk48, NoiseKind::Spin, 0.5, 3), 1, 0.0, 2.0);
    run_cv(quad40.image, 2, 0.75, 2.25);
    run_cv(noisy_synthetic(disk48, NoiseKind::Rvin, 0.4, 11), 1, 1.0, 2.0);
    run_fr(noisy_synthetic(disk48, NoiseKind::Rvin, 0.3, 7), 2, 0.25, 2.0, 10.0);
    run_fr(quad40.image, 4, 0.5, 2.25, 5.0);
    run_fr(ring32.image, 3, 1.0, 2.0, 10.0);

    Outcome o;
    o.name = "outer descent bound";
    o.pass = st.violations == 0 && configs >= 6;
    o.detail = fmt("%d violations over %d transitions in %d runs, min margin %.2e",
                   st.violations, st.transitions, configs, st.min_margin);
    return o;
}

// ---------------------------------------------------------------------------
// 6. noiseless two-region segmentation across the alpha grid

Outcome criterion6() {
    constexpr double kDice = 0.999;
    constexpr double kRefTol = 0.001;
    constexpr double kBudgetPerRunS = 60.0;
    const Synthetic s = make_synthetic({128, 128, Geometry::Square, {{0.2}, {0.8}}, 0.0});
    // published noiseless DICE per alpha, multiphase then fuzzy
    const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    const double ref_cv[] = {1.0, 1.0, 1.0, 1.0, 1.0};
    const double ref_fr[] = {0.9992, 0.9995, 0.9998, 1.0, 1.0};
    double min_dice = 1.0, max_dev = 0.0, max_run = 0.0;
    for (int a = 0; a < 5; ++a) {
        {
            AicvConfig cfg;
            cfg.alpha = alphas[a];
            cfg.lambda = 2.0;
            const double t0 = now_s();
            const SegmentationResult res = segment(s.image, cfg);
            max_run = std::max(max_run, now_s() - t0);
            const double d = dice(res.labels, res.constants, s.gt, DiceMode::ForegroundOnly);
            min_dice = std::min(min_dice, d);
            max_dev = std::max(max_dev, std::abs(d - ref_cv[a]));
        }
        {
            AifrConfig cfg;
            cfg.alpha = alphas[a];
            cfg.lambda = 2.0;
            const double t0 = now_s();
            const SegmentationResult res = segment_fr(s.image, cfg);
            max_run = std::max(max_run, now_s() - t0);
            const double d = dice(res.labels, res.constants, s.gt, DiceMode::ForegroundOnly);
            min_dice = std::min(min_dice, d);
            max_dev = std::max(max_dev, std::abs(d - ref_fr[a]));
        }
    }
    Outcome o;
    o.name = "noiseless segmentation";
    o.pass = min_dice >= kDice && max_dev <= kRefTol && max_run < kBudgetPerRunS;
    o.detail = fmt("min DICE %.5f over 10 runs, max drift from published %.4f, "
                   "slowest run %.1f s",
                   min_dice, max_dev, max_run);
    return o;
}

// ---------------------------------------------------------------------------
// 7. impulse-noise robustness ordering across alpha

Outcome criterion7() {
    constexpr double kBudgetS = 600.0;
    const double t0 = now_s();
    const Synthetic s = make_synthetic({128, 128, Geometry::Square, {{0.2}, {0.8}}, 0.0});
    const std::uint64_t seeds[] = {201, 202, 203, 204, 205};

    auto mean_cv = [&](double alpha, double level) {
        double sum = 0.0;
        for (std::uint64_t seed : seeds) {
            AicvConfig cfg;
            cfg.alpha = alpha;
            cfg.lambda = 2.0;
            const Image f = corrupt(s.image, NoiseSpec{NoiseKind::Spin, level, seed});
            const SegmentationResult res = segment(f, cfg);
            sum += dice(res.labels, res.constants, s.gt, DiceMode::ForegroundOnly);
        }
        return sum / 5.0;
    };
    auto mean_fr = [&](double alpha, double level) {
        double sum = 0.0;
        for (std::uint64_t seed : seeds) {
            AifrConfig cfg;
            cfg.alpha = alpha;
            cfg.lambda = 2.0;
            const Image f = corrupt(s.image, NoiseSpec{NoiseKind::Spin, level, seed});
            const SegmentationResult res = segment_fr(f, cfg);
            sum += dice(res.labels, res.constants, s.gt, DiceMode::ForegroundOnly);
        }
        return sum / 5.0;
    };

    const double cv0 = mean_cv(0.0, 0.7);
    const double cv5 = mean_cv(0.5, 0.7);
    const double fr0 = mean_fr(0.0, 0.6);
    const double fr5 = mean_fr(0.5, 0.6);
    const double dt = now_s() - t0;

    Outcome o;
    o.name = "noise-robustness ordering";
    o.pass = cv5 >= cv0 + 0.005 && cv0 >= 0.90 && cv5 >= 0.90 && fr5 >= fr0 + 0.01 &&
             dt < kBudgetS;
    o.detail = fmt("70%% SPIN CV: %.4f (a=0.5) vs %.4f (a=0); "
                   "60%% SPIN FR: %.4f vs %.4f; %.0f s",
                   cv5, cv0, fr5, fr0, dt);
    return o;
}

// ---------------------------------------------------------------------------
// 8. four-phase color segmentation

Outcome criterion8() {
    constexpr double kDice = 0.99;
    constexpr double kBudgetS = 300.0;
    const double t0 = now_s();
    const Constants color4 = {{0.1, 0.1, 0.1}, {0.9, 0.1, 0.1}, {0.1, 0.9, 0.1}, {0.1, 0.1, 0.9}};
    const Synthetic s = make_synthetic({100, 100, Geometry::Blobs, color4, 0.0});

    AicvConfig cv;
    cv.num_phases = 2;
    cv.alpha = 0.5;
    cv.lambda = 2.25;
    cv.max_outer_iters = 40;
    cv.pdhgls.max_inner_iters = 1000;
    cv.init.radius = 38.0;
    const SegmentationResult rc = segment(s.image, cv);
    const double dice_cv = dice(rc.labels, rc.constants, s.gt, DiceMode::MeanAll);

    AifrConfig fr;
    fr.num_regions = 4;
    fr.alpha = 0.5;
    fr.lambda = 2.25;
    fr.nu = 5.0;
    fr.max_outer_iters = 160;
    fr.pdhgls.max_inner_iters = 1000;
    const SegmentationResult rf = segment_fr(s.image, fr);
    const double dice_fr = dice(rf.labels, rf.constants, s.gt, DiceMode::MeanAll);

    const double dt = now_s() - t0;
    Outcome o;
    o.name = "four-phase color";
    o.pass = dice_cv >= kDice && dice_fr >= kDice && dt < kBudgetS;
    o.detail = fmt("mean DICE %.4f (multiphase) / %.4f (fuzzy), %.0f s", dice_cv, dice_fr, dt);
    return o;
}

// ---------------------------------------------------------------------------
// 9. closed-form constants against a golden-section oracle

Outcome criterion9() {
    constexpr double kTol = 1e-6;
    std::mt19937_64 rng(49);
    double worst = 0.0;
    bool zero_mass_ok = true;
    int instances = 0;

    auto oracle = [](const ScalarField& w, const ScalarField& f) {
        return testsupport::golden_section(
            [&](double c) {
                double s = 0.0;
                for (std::size_t i = 0; i < w.size(); ++i)
                    s += w.v[i] * (f.v[i] - c) * (f.v[i] - c);
                return s;
            },
            0.0, 1.0, 1e-10);
    };

    // fuzzy means: independent weight fields, gray and color
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 8, c = 8;
        const int channels = trial % 4 == 3 ? 3 : 1;
        Image f;
        for (int ch = 0; ch < channels; ++ch)
            f.ch.push_back(testsupport::rand_field(rng, r, c));
        MembershipStack u = {testsupport::rand_field(rng, r, c),
                             testsupport::rand_field(rng, r, c)};
        const Constants cs = update_constants_fr(f, u);
        for (int ell = 0; ell < 2; ++ell)
            for (int ch = 0; ch < channels; ++ch) {
                worst = std::max(worst, std::abs(cs[ell][ch] - oracle(u[ell], f.ch[ch])));
                ++instances;
            }
    }

    // multiphase means: complementary region weights u and 1 - u
    const RegionCode code{1};
    for (int trial = 0; trial < 5; ++trial) {
        const int r = 6, c = 9;
        Image f(testsupport::rand_field(rng, r, c));
        MembershipStack u = {testsupport::rand_field(rng, r, c)};
        const Constants cs = update_constants(f, u, code);
        ScalarField comp(r, c);
        for (std::size_t i = 0; i < comp.size(); ++i) comp.v[i] = 1.0 - u[0].v[i];
        worst = std::max(worst, std::abs(cs[0][0] - oracle(u[0], f.ch[0])));
        worst = std::max(worst, std::abs(cs[1][0] - oracle(comp, f.ch[0])));
        instances += 2;
    }

    // zero-mass regions must come back exactly zero
    for (int trial = 0; trial < 5; ++trial) {
        const int r = 4, c = 4;
        Image f(testsupport::rand_field(rng, r, c));
        MembershipStack u = {ScalarField(r, c)};  // all zeros: region 1 empty
        const Constants cs = update_constants(f, u, code);
        if (cs[0][0] != 0.0) zero_mass_ok = false;
        MembershipStack uf = {ScalarField(r, c), testsupport::rand_field(rng, r, c)};
        const Constants cf = update_constants_fr(f, uf);
        if (cf[0][0] != 0.0) zero_mass_ok = false;
        instances += 2;
    }

    Outcome o;
    o.name = "closed-form constants";
    o.pass = worst <= kTol && zero_mass_ok;
    o.detail = fmt("max |closed-form - golden section| = %.2e over %d instances, "
                   "zero-mass %s", worst, instances, zero_mass_ok ? "exact" : "WRONG");
    return o;
}

// ---------------------------------------------------------------------------
// 10. metric oracles: hand-computed DICE/PSNR values, corruption determinism

Outcome criterion10() {
    bool ok = true;
    std::string why;

    // DICE on a 20x20 field: ground truth marks the first 60 pixels as region 2,
    // the segmentation overlaps on 30 of them and adds 10 strays.
    {
        GroundTruth gt;
        gt.labels = LabelMap(20, 20);
        for (int i = 0; i < 60; ++i) gt.labels.v[i] = 2;
        gt.constants = {{0.2}, {0.8}};
        LabelMap seg(20, 20);
        for (int i = 0; i < 30; ++i) seg.v[i] = 2;
        for (int i = 60; i < 70; ++i) seg.v[i] = 2;
        const double fg = dice(seg, gt.constants, gt, DiceMode::ForegroundOnly);
        const double mean = dice(seg, gt.constants, gt, DiceMode::MeanAll);
        if (fg != 0.6) { ok = false; why = fmt("fg dice %.17g != 0.6", fg); }
        const double expect = 0.5 * (0.6 + 660.0 / 700.0);
        if (mean != expect) { ok = false; why = fmt("mean dice %.17g", mean); }
    }

    // PSNR with binary-exact errors: 0.5 everywhere and 0.25 per color channel.
    if (ok) {
        ScalarField a(2, 2), b(2, 2);
        for (auto& x : b.v) x = 0.5;
        const double p = psnr(Image(a), Image(b));
        if (p != 10.0 * std::log10(4.0)) { ok = false; why = fmt("psnr %.17g", p); }
        Image ca, cb;
        for (int ch = 0; ch < 3; ++ch) {
            ca.ch.emplace_back(1, 1);
            cb.ch.emplace_back(1, 1);
            cb.ch.back().v[0] = 0.25;
        }
        const double pc = psnr(ca, cb);
        if (pc != 10.0 * std::log10(16.0)) { ok = false; why = fmt("color psnr %.17g", pc); }
        ScalarField same(3, 3);
        if (!std::isinf(psnr(Image(same), Image(same)))) { ok = false; why = "psnr(0) finite"; }
    }

    // corruption: exact count, value law, and seed determinism
    if (ok) {
        ScalarField half(100, 100);
        for (auto& x : half.v) x = 0.5;
        const Image f(half);
        const Image g1 = corrupt(f, {NoiseKind::Spin, 0.3, 5});
        const Image g2 = corrupt(f, {NoiseKind::Spin, 0.3, 5});
        const Image g3 = corrupt(f, {NoiseKind::Spin, 0.3, 6});
        int changed = 0;
        bool binary = true;
        bool identical = true, differs = false;
        for (std::size_t i = 0; i < half.size(); ++i) {
            if (g1.ch[0].v[i] != 0.5) {
                ++changed;
                if (g1.ch[0].v[i] != 0.0 && g1.ch[0].v[i] != 1.0) binary = false;
            }
            if (g1.ch[0].v[i] != g2.ch[0].v[i]) identical = false;
            if (g1.ch[0].v[i] != g3.ch[0].v[i]) differs = true;
        }
        if (changed != 3000) { ok = false; why = fmt("%d pixels changed, want 3000", changed); }
        if (!binary) { ok = false; why = "spin wrote a non-binary value"; }
        if (!identical) { ok = false; why = "same seed gave different noise"; }
        if (!differs) { ok = false; why = "different seeds gave identical noise"; }

        ScalarField half2(20, 20);
        for (auto& x : half2.v) x = 0.5;
        const Image r1 = corrupt(Image(half2), {NoiseKind::Rvin, 0.3, 5});
        int rchanged = 0;
        bool in_range = true;
        for (std::size_t i = 0; i < half2.size(); ++i)
            if (r1.ch[0].v[i] != 0.5) {
                ++rchanged;
                if (r1.ch[0].v[i] < 0.0 || r1.ch[0].v[i] >= 1.0) in_range = false;
            }
        if (rchanged != 120) { ok = false; why = fmt("rvin changed %d, want 120", rchanged); }
        if (!in_range) { ok = false; why = "rvin value out of [0,1)"; }
    }

    Outcome o;
    o.name = "metric oracles";
    o.pass = ok;
    o.detail = ok ? "hand-computed DICE/PSNR exact, corruption deterministic with exact counts"
                  : why;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int n = 1; n <= 10; ++n) which.push_back(n);

    Outcome (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8,
                             criterion9, criterion10};
    int failures = 0;
    for (int n : which) {
        if (n < 1 || n > 10) {
            std::printf("criterion %d: no such criterion\n", n);
            ++failures;
            continue;
        }
        const Outcome o = checks[n - 1]();
        std::printf("criterion %d: %s - %s (%s)\n", n, o.pass ? "PASS" : "FAIL",
                    o.name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
