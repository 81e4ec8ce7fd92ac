#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace aitv {

// Dense m-by-n real field, row-major. Internal indices are 0-based; the
// usual math notation (i,j) with 1-based indices maps to operator()(i-1, j-1).
struct ScalarField {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    ScalarField() = default;
    ScalarField(int r, int c, double fill = 0.0) : rows(r), cols(c) {
        if (r <= 0 || c <= 0)
            throw std::invalid_argument("ScalarField: dimensions must be positive");
        v.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill);
    }

    double& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }

    std::size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
    bool same_shape(const ScalarField& o) const { return rows == o.rows && cols == o.cols; }
};

void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what);

bool all_finite(const ScalarField& u);
bool in_unit_interval(const ScalarField& u);

double inner_x(const ScalarField& a, const ScalarField& b);
double norm_x_sq(const ScalarField& a);
double norm_x(const ScalarField& a);

// ||a - b||_X / max(||a||_X, ||b||_X, eps) with eps the double machine epsilon.
double relerr(const ScalarField& a, const ScalarField& b);

} // namespace aitv
