#pragma once

#include <functional>
#include <limits>

#include "aitv/gradient.hpp"

namespace aitv {

// Convex inner problem solved once per phase and outer iteration:
//
//   min_{u in [0,1]}  ||Du||_1 - alpha <Du, q>_Y + <linear_field, u>_X
//                     + c ||u||^2 - 2c <u, anchor>_X
//                     + (nu/2) ||s + u - 1||^2
//
// where q (the isotropic-term subgradient) and anchor (the previous outer
// iterate) are fixed by the surrounding difference-of-convex step. The
// linear_field carries the fidelity weight already multiplied in. nu and the
// residual s of the other memberships only appear in the fuzzy-region model;
// the multiphase model uses nu = 0 and an all-zero s.
struct Subproblem {
    ScalarField linear_field;
    ScalarField dca_anchor;
    GradientField q_field;      // pixelwise Euclidean norm <= 1
    double aitv_weight = 0.0;   // alpha
    double strong_convexity = 0.0;  // c > 0
    double coupling_weight = 0.0;   // nu >= 0
    ScalarField coupling_residual;  // s; all-zero when nu == 0

    // linear_field - alpha * grad_adjoint(q): the constant part of the smooth
    // gradient, folded once at construction so inner iterations reuse it.
    ScalarField linear_total;
};

// Validates shapes, c > 0, nu >= 0, alpha in [0,1], |q| <= 1 pixelwise, and
// precomputes linear_total. Pass an empty s only together with nu == 0.
Subproblem make_subproblem(ScalarField linear_field, ScalarField anchor, GradientField q,
                           double alpha, double c, double nu = 0.0, ScalarField s = {});

double subproblem_objective(const Subproblem& sub, const ScalarField& u);

struct PdhglsParams {
    double tau0 = 0.125;         // initial primal step, 1/8 <= 1/||D||^2
    double beta = 1.0;           // dual/primal ratio, sigma = beta * tau
    double delta = 0.9999;       // linesearch acceptance factor, in (0,1)
    double mu = 7.5e-5;          // step shrink multiplier, in (0,1)
    double inner_tol = 1e-6;     // relative-error stop on successive u
    int max_inner_iters = 300;
    // mu collapses tau so fast that real runs shrink at most twice; the cap
    // only turns a pathological configuration into a clean error.
    int max_shrinks = 60;
};

void validate(const PdhglsParams& p);

struct PdhglsState {
    ScalarField u;
    GradientField p;
    ScalarField adj_p;  // grad_adjoint(p), kept in sync incrementally
    double tau = 0.125;
    double theta = 1.0;
    int iteration = 0;
    double last_relerr = std::numeric_limits<double>::infinity();
};

PdhglsState make_state(ScalarField u, GradientField p, double tau, double theta = 1.0);

// One primal update at step tau:
//   clip_[0,1]( (2c*anchor + u/tau + nu*(1-s) - (linear_total + D^T p)) / (2c + 1/tau + nu) )
ScalarField primal_step(const PdhglsState& st, const Subproblem& sub, double tau);

// Projected dual ascent p <- Proj_P(p + sigma * D u_bar), with P the unit box
// on every scalar entry of both components (the dual ball of ||.||_1).
GradientField dual_step(const GradientField& p, const ScalarField& u_bar, double sigma);

// One accepted iteration: primal step at the current tau, then the dual
// linesearch: starting from tau' = tau * sqrt(1 + theta), shrink tau' by mu
// until sqrt(beta) * tau' * ||(Dx^T dpx, Dy^T dpy)||_Y <= delta * ||dp||_Y
// holds for the candidate dual step. Throws solver_error past max_shrinks.
void linesearch_iterate(PdhglsState& st, const Subproblem& sub, const PdhglsParams& params);

struct PdhglsTraceRow {
    int iteration;
    double tau;
    double relerr;
    double objective;
};
using PdhglsTraceSink = std::function<void(const PdhglsTraceRow&)>;

// Runs linesearch_iterate from u_init (feasible) and a zero dual until
// relerr(u^{n+1}, u^n) < inner_tol on a step taken at tau >= tau0, or the
// iteration cap. The tau condition keeps shrink-recovery iterations, whose
// tiny steps look stationary at any distance from the solution, from ending
// the solve early. The objective in the trace is only evaluated when a sink
// is attached.
ScalarField pdhgls_solve(const Subproblem& sub, const ScalarField& u_init,
                         const PdhglsParams& params, const PdhglsTraceSink& trace = {});

} // namespace aitv
