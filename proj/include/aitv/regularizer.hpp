#pragma once

#include "aitv/gradient.hpp"

namespace aitv {

// Throws std::invalid_argument when alpha lies outside [0,1].
void check_alpha(double alpha);

// ||Du||_1 - alpha * ||Du||_{2,1}. Nonnegative for alpha in [0,1] because
// ||p||_{2,1} <= ||p||_1 pointwise.
double aitv_value(const GradientField& du, double alpha);
double aitv_value(const ScalarField& u, double alpha);

// Pixelwise unit direction q = Du / |Du|_2, with q = (0,0) wherever the
// gradient vanishes exactly (valid subgradient choice for ||D(.)||_{2,1};
// the zero test is exact on purpose, finite differences of box-constrained
// fields hit 0 exactly and an epsilon would perturb valid subgradients).
GradientField isotropic_subgradient(const GradientField& du);
GradientField isotropic_subgradient(const ScalarField& u);

} // namespace aitv
