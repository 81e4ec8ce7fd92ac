#pragma once

#include <vector>

#include "aitv/field.hpp"

namespace aitv {

using MembershipStack = std::vector<ScalarField>;

// constants[ell][channel]: one channel for grayscale, three for color.
using Constants = std::vector<std::vector<double>>;

// A 1- or 3-channel image with all channels the same shape.
struct Image {
    std::vector<ScalarField> ch;

    Image() = default;
    explicit Image(ScalarField gray) { ch.push_back(std::move(gray)); }

    int rows() const { return ch.empty() ? 0 : ch.front().rows; }
    int cols() const { return ch.empty() ? 0 : ch.front().cols; }
    int channels() const { return static_cast<int>(ch.size()); }
    bool grayscale() const { return ch.size() == 1; }
};

void validate_image(const Image& f, bool require_unit_range);

// Binary region coding for the multiphase model: region ell in {1..2^M}
// factors as a product over phases k of u_k or (1 - u_k). Factor k takes
// (1 - u_k) exactly when bit (M - k) of (ell - 1) is set, i.e. the binary
// expansion of (ell - 1) is read most-significant digit first. Region 1 is
// the product of all u_k, region 2^M the product of all (1 - u_k).
struct RegionCode {
    int num_phases = 1;

    // M is capped at 8: the indicator expansion sums over 2^M regions, so
    // costs grow exponentially and anything beyond 8 is a config mistake.
    explicit RegionCode(int m);

    int num_regions() const { return 1 << num_phases; }

    bool complemented(int ell, int k) const {  // 1-based ell and k
        return ((ell - 1) >> (num_phases - k)) & 1;
    }
    double factor(int ell, int k, double uk) const {
        return complemented(ell, k) ? 1.0 - uk : uk;
    }
    double sign(int ell, int k) const { return complemented(ell, k) ? -1.0 : 1.0; }
};

// Entrywise product over k of u_k or (1-u_k) per the region's bit pattern.
ScalarField region_indicator(const RegionCode& code, int ell, const MembershipStack& u);

// f_ell(c) per region: (f - c_ell)^2 elementwise, summed over channels for
// color images. All entries nonnegative.
std::vector<ScalarField> fidelity_fields(const Image& f, const Constants& c);

// The exact coefficient of u_k in sum_ell <f_ell, R_ell(u)>, which is affine
// in each u_k: r_k = sum_ell s_k(ell) * f_ell * prod_{j != k} factor_j(ell),
// with s_k(ell) = +1 when region ell includes the factor u_k and -1 when it
// includes (1 - u_k). Within a Gauss-Seidel sweep the caller passes the stack
// holding fresh u_{<k} and stale u_{>k}.
ScalarField linear_coefficient(const RegionCode& code, int k,
                               const std::vector<ScalarField>& fid,
                               const MembershipStack& u);

} // namespace aitv
