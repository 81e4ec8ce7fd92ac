#pragma once

#include <cstdint>
#include <vector>

#include "aitv/pdhgls.hpp"
#include "aitv/regions.hpp"

namespace aitv {

enum class InitKind { Auto, SingleCircle, TwinCircles, RandomNormalized, UserMask };

// Membership initialization. Auto resolves to: single centered circle for the
// two-phase models (the fuzzy two-region variant adds the complement field),
// twin circles for the four-phase models, seeded random-normalized fields
// otherwise. Twin circles fill two fields with the circles themselves and
// four fields with their product indicators (both, left only, right only,
// neither).
struct InitPolicy {
    InitKind kind = InitKind::Auto;
    double radius = 0.0;    // 0 picks the variant default: 10 single, 30 twin
    int shift = 5;          // twin-circles horizontal center offset in pixels
    std::uint64_t seed = 0; // random-normalized draws
    MembershipStack masks;  // user-mask
};

struct LabelMap {
    int rows = 0;
    int cols = 0;
    std::vector<int> v;  // region index in {1..N}

    LabelMap() = default;
    LabelMap(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 1) {}

    int& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }
    std::size_t size() const { return v.size(); }
};

struct AicvConfig {
    int num_phases = 1;    // M memberships, 2^M regions
    double alpha = 0.5;    // in [0,1]
    double lambda = 2.0;   // fidelity weight, > 0
    double c = 1e-8;       // strong convexity of the DCA split
    double outer_tol = 0.0;  // 0 = auto: 1e-6, or 1e-4 for the four-phase model
    int max_outer_iters = 20;
    PdhglsParams pdhgls;
    InitPolicy init;
};

struct SegmentationResult {
    MembershipStack memberships;  // relaxed fields in [0,1]
    Constants constants;          // per region, per channel
    LabelMap labels;              // postprocessed region index per pixel
    std::vector<double> objective_trace;  // F at t = 0..T
    std::vector<double> relerr_trace;     // stopping quantity, t = 1..T
    std::vector<double> step_sq_trace;    // sum_k ||u_k^t - u_k^{t+1}||^2, t = 1..T
    std::vector<double> wall_ms_trace;    // per outer iteration, t = 1..T
    int outer_iterations = 0;
    bool converged = false;
};

// Builds the initial membership stack. complement_pair only applies to
// SingleCircle with num_fields == 2 (fuzzy two-region: u2 = 1 - u1).
MembershipStack make_init(int rows, int cols, int num_fields, bool complement_pair,
                          const InitPolicy& policy, InitKind resolved_kind);

// c_ell = <f, R_ell> / <1, R_ell> per channel, 0 on exactly zero mass.
Constants update_constants(const Image& f, const MembershipStack& u, const RegionCode& code);

// F = sum_k (||D u_k||_1 - alpha ||D u_k||_{2,1}) + lambda sum_ell <f_ell(c), R_ell(u)>,
// +inf when any membership leaves [0,1].
double aicv_objective(const Image& f, const MembershipStack& u, const Constants& c,
                      const RegionCode& code, double alpha, double lambda);

// Threshold each u_k at 0.5 (>= 0.5 rounds up) and map the bit pattern to the
// region whose factors match: a pixel with u_k >= 0.5 belongs to regions that
// include the factor u_k.
LabelMap postprocess_binary(const MembershipStack& u);

// Inner solve with a descent guard. The candidate replaces the anchor only
// when it improves the subproblem objective by c*||cand - anchor||^2, the
// margin an exact convex solve always clears; that keeps the outer objective
// monotone even when the inner stop fires early. A rejected candidate is
// retried with the relative-error stop disabled so the full iteration budget
// runs (the step-size collapse of the linesearch can fire that stop at a
// point far above the subproblem minimum), then once more with ten times the
// budget; if every attempt is rejected the anchor itself comes back.
ScalarField solve_guarded(const Subproblem& sub, const ScalarField& anchor,
                          const PdhglsParams& params);

// Full alternating run: per outer iteration, a Gauss-Seidel sweep of DCA
// linearized subproblems over the M memberships (each solved by PDHGLS with a
// cold-started dual), then the closed-form constants update. Input must be a
// 1- or 3-channel image scaled to [0,1].
SegmentationResult segment(const Image& f, const AicvConfig& cfg);

} // namespace aitv
