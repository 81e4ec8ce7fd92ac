#include "aitv/aifr.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "aitv/errors.hpp"
#include "aitv/regularizer.hpp"

namespace aitv {

Constants update_constants_fr(const Image& f, const MembershipStack& u) {
    if (u.empty()) throw std::invalid_argument("constants update needs memberships");
    Constants c(u.size(), std::vector<double>(f.channels(), 0.0));
    for (std::size_t ell = 0; ell < u.size(); ++ell) {
        if (u[ell].rows != f.rows() || u[ell].cols != f.cols())
            throw std::invalid_argument("membership shape does not match the image");
        double mass = 0.0;
        for (double t : u[ell].v) mass += t;
        if (mass == 0.0) continue;
        for (int ch = 0; ch < f.channels(); ++ch) {
            double num = 0.0;
            const auto& fc = f.ch[ch].v;
            for (std::size_t i = 0; i < u[ell].size(); ++i) num += fc[i] * u[ell].v[i];
            c[ell][ch] = num / mass;
        }
    }
    return c;
}

double aifr_objective(const Image& f, const MembershipStack& u, const Constants& c,
                      double alpha, double lambda, double nu) {
    for (const auto& ul : u)
        if (!in_unit_interval(ul)) return std::numeric_limits<double>::infinity();
    double val = 0.0;
    for (const auto& ul : u) val += aitv_value(ul, alpha);
    const auto fields = fidelity_fields(f, c);
    for (std::size_t ell = 0; ell < u.size(); ++ell)
        val += lambda * inner_x(fields[ell], u[ell]);
    double coupling = 0.0;
    for (std::size_t i = 0; i < u[0].size(); ++i) {
        double s = -1.0;
        for (const auto& ul : u) s += ul.v[i];
        coupling += s * s;
    }
    return val + 0.5 * nu * coupling;
}

LabelMap postprocess_argmax(const MembershipStack& u) {
    if (u.empty()) throw std::invalid_argument("postprocess needs at least one membership");
    LabelMap labels(u[0].rows, u[0].cols);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int arg = 0;
        double best = u[0].v[i];
        for (std::size_t ell = 1; ell < u.size(); ++ell)
            if (u[ell].v[i] > best) {
                best = u[ell].v[i];
                arg = static_cast<int>(ell);
            }
        labels.v[i] = arg + 1;
    }
    return labels;
}

SegmentationResult segment_fr(const Image& f, const AifrConfig& cfg) {
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
        throw config_error("alpha must lie in [0,1], got " + std::to_string(cfg.alpha));
    if (!(cfg.lambda > 0.0))
        throw config_error("lambda must be positive, got " + std::to_string(cfg.lambda));
    if (!(cfg.c > 0.0))
        throw config_error("c must be positive, got " + std::to_string(cfg.c));
    if (cfg.num_regions < 2)
        throw config_error("fuzzy-region model needs at least two regions, got " +
                           std::to_string(cfg.num_regions));
    if (!(cfg.nu > 0.0))
        throw config_error("nu must be positive, got " + std::to_string(cfg.nu));
    if (!(cfg.outer_tol > 0.0)) throw config_error("outer_tol must be positive");
    if (cfg.max_outer_iters < 1) throw config_error("max_outer_iters must be positive");
    validate(cfg.pdhgls);
    validate_image(f, true);

    InitKind kind = cfg.init.kind;
    if (kind == InitKind::Auto)
        kind = cfg.num_regions == 2   ? InitKind::SingleCircle
               : cfg.num_regions == 4 ? InitKind::TwinCircles
                                      : InitKind::RandomNormalized;
    const bool complement = kind == InitKind::SingleCircle && cfg.num_regions == 2;

    SegmentationResult res;
    MembershipStack u =
        make_init(f.rows(), f.cols(), cfg.num_regions, complement, cfg.init, kind);
    Constants c = update_constants_fr(f, u);
    res.objective_trace.push_back(
        aifr_objective(f, u, c, cfg.alpha, cfg.lambda, cfg.nu));

    const int n = cfg.num_regions;
    for (int t = 0; t < cfg.max_outer_iters; ++t) {
        const auto t0 = std::chrono::steady_clock::now();
        const MembershipStack u_old = u;
        const auto fields = fidelity_fields(f, c);
        for (int ell = 0; ell < n; ++ell) {
            const GradientField q = isotropic_subgradient(u[ell]);
            ScalarField lin = fields[ell];
            for (auto& x : lin.v) x *= cfg.lambda;
            ScalarField s(f.rows(), f.cols(), 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == ell) continue;
                for (std::size_t i = 0; i < s.size(); ++i) s.v[i] += u[j].v[i];
            }
            const Subproblem sub = make_subproblem(std::move(lin), u[ell], q,
                                                   cfg.alpha, cfg.c, cfg.nu, s);
            u[ell] = solve_guarded(sub, u[ell], cfg.pdhgls);
        }
        c = update_constants_fr(f, u);

        double max_rel = 0.0, step_sq = 0.0;
        for (int ell = 0; ell < n; ++ell) {
            max_rel = std::max(max_rel, relerr(u[ell], u_old[ell]));
            for (std::size_t i = 0; i < u[ell].size(); ++i) {
                const double d = u[ell].v[i] - u_old[ell].v[i];
                step_sq += d * d;
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        res.objective_trace.push_back(
            aifr_objective(f, u, c, cfg.alpha, cfg.lambda, cfg.nu));
        res.relerr_trace.push_back(max_rel);
        res.step_sq_trace.push_back(step_sq);
        res.wall_ms_trace.push_back(
            std::chrono::duration<double, std::milli>(t1 - t0).count());
        res.outer_iterations = t + 1;
        if (max_rel < cfg.outer_tol) {
            res.converged = true;
            break;
        }
    }

    res.memberships = std::move(u);
    res.constants = std::move(c);
    res.labels = postprocess_argmax(res.memberships);
    return res;
}

} // namespace aitv
