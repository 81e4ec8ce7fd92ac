#pragma once

#include "aitv/field.hpp"

namespace aitv {

// Pair of same-shaped fields holding the two components of a discrete
// gradient, or a dual variable living in Y = X x X.
struct GradientField {
    ScalarField x, y;

    GradientField() = default;
    GradientField(int r, int c, double fill = 0.0) : x(r, c, fill), y(r, c, fill) {}
    GradientField(ScalarField gx, ScalarField gy);

    bool same_shape(const GradientField& o) const {
        return x.same_shape(o.x) && y.same_shape(o.y);
    }
};

// Forward differences with periodic wrap:
//   (Dx u)(i,j) = u(i,j+1) - u(i,j), the last column wrapping to the first;
//   (Dy u)(i,j) = u(i+1,j) - u(i,j), the last row wrapping to the first.
GradientField grad(const ScalarField& u);

// Exact adjoint of grad under the Euclidean pairings on X and Y
// (the negative periodic divergence). Split per component because the
// linesearch bound needs the two adjoint images separately.
ScalarField grad_adjoint_x(const ScalarField& px);
ScalarField grad_adjoint_y(const ScalarField& py);
ScalarField grad_adjoint(const GradientField& p);

double norm_l1(const GradientField& p);   // sum of |px| + |py|
double norm_l21(const GradientField& p);  // sum of sqrt(px^2 + py^2)
double norm_y(const GradientField& p);    // sqrt(sum of px^2 + py^2)
double inner_y(const GradientField& p, const GradientField& q);

} // namespace aitv
