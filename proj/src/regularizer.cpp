#include "aitv/regularizer.hpp"

#include <cmath>
#include <string>

namespace aitv {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1], got " + std::to_string(alpha));
}

double aitv_value(const GradientField& du, double alpha) {
    check_alpha(alpha);
    return norm_l1(du) - alpha * norm_l21(du);
}

double aitv_value(const ScalarField& u, double alpha) {
    return aitv_value(grad(u), alpha);
}

GradientField isotropic_subgradient(const GradientField& du) {
    GradientField q(du.x.rows, du.x.cols);
    for (std::size_t i = 0; i < du.x.size(); ++i) {
        const double gx = du.x.v[i], gy = du.y.v[i];
        const double mag = std::sqrt(gx * gx + gy * gy);
        if (mag == 0.0) continue;  // q stays (0,0) at exactly vanishing gradients
        q.x.v[i] = gx / mag;
        q.y.v[i] = gy / mag;
    }
    return q;
}

GradientField isotropic_subgradient(const ScalarField& u) {
    return isotropic_subgradient(grad(u));
}

} // namespace aitv
