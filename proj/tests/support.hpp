#pragma once

// Shared helpers for the test suite: seeded random fields and independent
// reference oracles (explicit operator matrices, golden-section line
// minimization, projected subgradient descent). The oracles deliberately
// avoid the library's own solver paths.

#include <cmath>
#include <random>
#include <vector>

#include "aitv/field.hpp"
#include "aitv/gradient.hpp"
#include "aitv/pdhgls.hpp"
#include "aitv/rng.hpp"

namespace testsupport {

inline aitv::ScalarField rand_field(std::mt19937_64& rng, int r, int c,
                                    double lo = 0.0, double hi = 1.0) {
    aitv::ScalarField f(r, c);
    for (auto& x : f.v) x = lo + (hi - lo) * aitv::uniform01(rng);
    return f;
}

// Random pixelwise direction with |q|_2 <= 1: zero with probability ~0.2,
// otherwise a unit vector at a uniform angle.
inline aitv::GradientField rand_unit_q(std::mt19937_64& rng, int r, int c) {
    aitv::GradientField q(r, c);
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        if (aitv::uniform01(rng) < 0.2) continue;
        const double ang = 2.0 * M_PI * aitv::uniform01(rng);
        q.x.v[i] = std::cos(ang);
        q.y.v[i] = std::sin(ang);
    }
    return q;
}

// Dense (mn x mn) matrices for the two gradient components, built directly
// from the stencil definition (not from the library operator).
struct DenseOp {
    int n = 0;  // square matrix dimension
    std::vector<double> a;  // row-major
    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

inline DenseOp dense_dx(int rows, int cols) {
    DenseOp op;
    op.n = rows * cols;
    op.a.assign(static_cast<std::size_t>(op.n) * op.n, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int r = i * cols + j;
            op.at(r, i * cols + (j + 1) % cols) += 1.0;
            op.at(r, i * cols + j) -= 1.0;
        }
    return op;
}

inline DenseOp dense_dy(int rows, int cols) {
    DenseOp op;
    op.n = rows * cols;
    op.a.assign(static_cast<std::size_t>(op.n) * op.n, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int r = i * cols + j;
            op.at(r, ((i + 1) % rows) * cols + j) += 1.0;
            op.at(r, i * cols + j) -= 1.0;
        }
    return op;
}

inline std::vector<double> apply(const DenseOp& op, const std::vector<double>& x) {
    std::vector<double> y(op.n, 0.0);
    for (int r = 0; r < op.n; ++r)
        for (int c = 0; c < op.n; ++c) y[r] += op.at(r, c) * x[c];
    return y;
}

inline std::vector<double> apply_transpose(const DenseOp& op, const std::vector<double>& x) {
    std::vector<double> y(op.n, 0.0);
    for (int r = 0; r < op.n; ++r)
        for (int c = 0; c < op.n; ++c) y[c] += op.at(r, c) * x[r];
    return y;
}

// Golden-section minimization of a unimodal scalar function on [lo, hi].
template <typename F>
double golden_section(F f, double lo, double hi, double tol = 1e-10) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - g * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + g * (b - a); f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

struct PgReference {
    aitv::ScalarField u;
    double objective = 0.0;
};

// Projected subgradient descent on the subproblem objective with a ladder of
// fixed step sizes, tracking the best objective seen. Independent of the
// primal-dual solver: no dual variable, no linesearch, plain full
// subgradients with sign(0) = 0.
inline PgReference reference_projected_gradient(
    const aitv::Subproblem& sub, int iters_per_stage = 20000,
    std::vector<double> steps = {1e-2, 1e-3, 1e-4}) {
    using aitv::ScalarField;
    const double c = sub.strong_convexity;
    const double nu = sub.coupling_weight;
    const double alpha = sub.aitv_weight;

    ScalarField x = sub.dca_anchor;
    for (auto& t : x.v) t = std::min(1.0, std::max(0.0, t));

    PgReference best;
    best.u = x;
    best.objective = aitv::subproblem_objective(sub, x);

    const aitv::ScalarField aq = aitv::grad_adjoint(sub.q_field);

    for (double step : steps) {
        x = best.u;
        for (int it = 0; it < iters_per_stage; ++it) {
            aitv::GradientField d = aitv::grad(x);
            for (auto& t : d.x.v) t = (t > 0.0) - (t < 0.0);
            for (auto& t : d.y.v) t = (t > 0.0) - (t < 0.0);
            ScalarField g = aitv::grad_adjoint(d);
            for (std::size_t i = 0; i < g.size(); ++i) {
                g.v[i] += sub.linear_field.v[i] - alpha * aq.v[i] +
                          2.0 * c * (x.v[i] - sub.dca_anchor.v[i]);
                if (nu > 0.0)
                    g.v[i] += nu * (sub.coupling_residual.v[i] + x.v[i] - 1.0);
            }
            for (std::size_t i = 0; i < x.size(); ++i)
                x.v[i] = std::min(1.0, std::max(0.0, x.v[i] - step * g.v[i]));
            const double obj = aitv::subproblem_objective(sub, x);
            if (obj < best.objective) {
                best.objective = obj;
                best.u = x;
            }
        }
    }
    return best;
}

} // namespace testsupport
