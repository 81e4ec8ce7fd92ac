#include "aitv/regions.hpp"

#include <string>

namespace aitv {

void validate_image(const Image& f, bool require_unit_range) {
    if (f.ch.size() != 1 && f.ch.size() != 3)
        throw std::invalid_argument("image must have 1 or 3 channels, got " +
                                    std::to_string(f.ch.size()));
    for (const auto& c : f.ch) {
        require_same_shape(f.ch.front(), c, "image channels");
        if (!all_finite(c)) throw std::invalid_argument("image contains non-finite values");
        if (require_unit_range && !in_unit_interval(c))
            throw std::invalid_argument("image values must lie in [0,1]");
    }
}

RegionCode::RegionCode(int m) : num_phases(m) {
    if (m < 1 || m > 8)
        throw std::invalid_argument("phase count must lie in 1..8, got " + std::to_string(m));
}

namespace {

void check_stack(const RegionCode& code, const MembershipStack& u, const char* what) {
    if (static_cast<int>(u.size()) != code.num_phases)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(code.num_phases) + " memberships, got " +
                                    std::to_string(u.size()));
    for (const auto& f : u) require_same_shape(u.front(), f, what);
}

} // namespace

ScalarField region_indicator(const RegionCode& code, int ell, const MembershipStack& u) {
    check_stack(code, u, "region_indicator");
    if (ell < 1 || ell > code.num_regions())
        throw std::invalid_argument("region index out of range");
    ScalarField r(u.front().rows, u.front().cols, 1.0);
    for (int k = 1; k <= code.num_phases; ++k) {
        const bool comp = code.complemented(ell, k);
        const auto& uk = u[k - 1].v;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.v[i] *= comp ? 1.0 - uk[i] : uk[i];
    }
    return r;
}

std::vector<ScalarField> fidelity_fields(const Image& f, const Constants& c) {
    validate_image(f, false);
    std::vector<ScalarField> fid;
    fid.reserve(c.size());
    for (const auto& cl : c) {
        if (cl.size() != f.ch.size())
            throw std::invalid_argument("constants must carry one value per channel");
        ScalarField g(f.rows(), f.cols(), 0.0);
        for (std::size_t ch = 0; ch < f.ch.size(); ++ch) {
            const auto& fc = f.ch[ch].v;
            const double cv = cl[ch];
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double d = fc[i] - cv;
                g.v[i] += d * d;
            }
        }
        fid.push_back(std::move(g));
    }
    return fid;
}

ScalarField linear_coefficient(const RegionCode& code, int k,
                               const std::vector<ScalarField>& fid,
                               const MembershipStack& u) {
    check_stack(code, u, "linear_coefficient");
    if (k < 1 || k > code.num_phases)
        throw std::invalid_argument("phase index out of range");
    if (static_cast<int>(fid.size()) != code.num_regions())
        throw std::invalid_argument("fidelity fields must cover every region");

    const int rows = u.front().rows, cols = u.front().cols;
    ScalarField r(rows, cols, 0.0);
    ScalarField prod(rows, cols);
    for (int ell = 1; ell <= code.num_regions(); ++ell) {
        require_same_shape(fid[ell - 1], r, "linear_coefficient");
        const double s = code.sign(ell, k);
        for (auto& x : prod.v) x = 1.0;
        for (int j = 1; j <= code.num_phases; ++j) {
            if (j == k) continue;
            const bool comp = code.complemented(ell, j);
            const auto& uj = u[j - 1].v;
            for (std::size_t i = 0; i < prod.size(); ++i)
                prod.v[i] *= comp ? 1.0 - uj[i] : uj[i];
        }
        const auto& fl = fid[ell - 1].v;
        for (std::size_t i = 0; i < r.size(); ++i) r.v[i] += s * fl[i] * prod.v[i];
    }
    return r;
}

} // namespace aitv
