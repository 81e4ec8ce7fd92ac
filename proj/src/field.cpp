#include "aitv/field.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace aitv {

void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": field dimensions disagree (" +
                                    std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                    " vs " + std::to_string(b.rows) + "x" +
                                    std::to_string(b.cols) + ")");
}

bool all_finite(const ScalarField& u) {
    for (double x : u.v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool in_unit_interval(const ScalarField& u) {
    for (double x : u.v)
        if (!(x >= 0.0 && x <= 1.0)) return false;
    return true;
}

double inner_x(const ScalarField& a, const ScalarField& b) {
    require_same_shape(a, b, "inner_x");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

double norm_x_sq(const ScalarField& a) {
    double s = 0.0;
    for (double x : a.v) s += x * x;
    return s;
}

double norm_x(const ScalarField& a) { return std::sqrt(norm_x_sq(a)); }

double relerr(const ScalarField& a, const ScalarField& b) {
    require_same_shape(a, b, "relerr");
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.v[i] - b.v[i];
        diff += d * d;
    }
    const double denom = std::max({norm_x(a), norm_x(b),
                                   std::numeric_limits<double>::epsilon()});
    return std::sqrt(diff) / denom;
}

} // namespace aitv
