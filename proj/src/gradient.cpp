#include "aitv/gradient.hpp"

#include <cmath>

namespace aitv {

GradientField::GradientField(ScalarField gx, ScalarField gy)
    : x(std::move(gx)), y(std::move(gy)) {
    require_same_shape(x, y, "GradientField");
}

GradientField grad(const ScalarField& u) {
    const int m = u.rows, n = u.cols;
    GradientField g(m, n);
    for (int i = 0; i < m; ++i) {
        const double* row = &u.v[static_cast<std::size_t>(i) * n];
        double* gx = &g.x.v[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n - 1; ++j) gx[j] = row[j + 1] - row[j];
        gx[n - 1] = row[0] - row[n - 1];
    }
    for (int i = 0; i < m - 1; ++i) {
        const double* row = &u.v[static_cast<std::size_t>(i) * n];
        const double* next = row + n;
        double* gy = &g.y.v[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) gy[j] = next[j] - row[j];
    }
    {
        const double* last = &u.v[static_cast<std::size_t>(m - 1) * n];
        const double* first = &u.v[0];
        double* gy = &g.y.v[static_cast<std::size_t>(m - 1) * n];
        for (int j = 0; j < n; ++j) gy[j] = first[j] - last[j];
    }
    return g;
}

ScalarField grad_adjoint_x(const ScalarField& px) {
    // <Dx u, p> = sum u(i,j) (p(i,j-1) - p(i,j)) with periodic wrap.
    const int m = px.rows, n = px.cols;
    ScalarField a(m, n);
    for (int i = 0; i < m; ++i) {
        const double* p = &px.v[static_cast<std::size_t>(i) * n];
        double* out = &a.v[static_cast<std::size_t>(i) * n];
        out[0] = p[n - 1] - p[0];
        for (int j = 1; j < n; ++j) out[j] = p[j - 1] - p[j];
    }
    return a;
}

ScalarField grad_adjoint_y(const ScalarField& py) {
    const int m = py.rows, n = py.cols;
    ScalarField a(m, n);
    {
        const double* last = &py.v[static_cast<std::size_t>(m - 1) * n];
        const double* first = &py.v[0];
        double* out = &a.v[0];
        for (int j = 0; j < n; ++j) out[j] = last[j] - first[j];
    }
    for (int i = 1; i < m; ++i) {
        const double* prev = &py.v[static_cast<std::size_t>(i - 1) * n];
        const double* cur = prev + n;
        double* out = &a.v[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) out[j] = prev[j] - cur[j];
    }
    return a;
}

ScalarField grad_adjoint(const GradientField& p) {
    ScalarField a = grad_adjoint_x(p.x);
    const ScalarField b = grad_adjoint_y(p.y);
    for (std::size_t i = 0; i < a.size(); ++i) a.v[i] += b.v[i];
    return a;
}

double norm_l1(const GradientField& p) {
    double s = 0.0;
    for (double x : p.x.v) s += std::abs(x);
    for (double y : p.y.v) s += std::abs(y);
    return s;
}

double norm_l21(const GradientField& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.x.size(); ++i)
        s += std::sqrt(p.x.v[i] * p.x.v[i] + p.y.v[i] * p.y.v[i]);
    return s;
}

double norm_y(const GradientField& p) {
    return std::sqrt(norm_x_sq(p.x) + norm_x_sq(p.y));
}

double inner_y(const GradientField& p, const GradientField& q) {
    return inner_x(p.x, q.x) + inner_x(p.y, q.y);
}

} // namespace aitv
