#pragma once

#include "aitv/aicv.hpp"

namespace aitv {

struct AifrConfig {
    int num_regions = 2;   // N memberships, any N >= 2
    double alpha = 0.5;
    double lambda = 2.0;
    double nu = 10.0;      // sum-to-one coupling weight, > 0
    double c = 1e-8;
    double outer_tol = 1e-4;  // per-membership relative errors, all below
    int max_outer_iters = 40;
    PdhglsParams pdhgls;
    InitPolicy init;
};

// c_ell = <f, u_ell> / <1, u_ell> per channel, 0 on exactly zero mass.
Constants update_constants_fr(const Image& f, const MembershipStack& u);

// F = sum_ell (||D u_ell||_1 - alpha ||D u_ell||_{2,1}) + lambda sum_ell <f_ell(c), u_ell>
//     + (nu/2) ||sum_ell u_ell - 1||^2,  +inf on infeasible memberships.
double aifr_objective(const Image& f, const MembershipStack& u, const Constants& c,
                      double alpha, double lambda, double nu);

// Per pixel, the index of the maximal membership; ties take the smallest index.
LabelMap postprocess_argmax(const MembershipStack& u);

// Fuzzy-region run: N memberships updated sequentially per outer iteration
// (the coupling residual s sees fresh earlier fields and stale later ones),
// then the constants update. Memberships are never renormalized during the
// iterations; only the quadratic penalty enforces the sum-to-one constraint.
SegmentationResult segment_fr(const Image& f, const AifrConfig& cfg);

} // namespace aitv
