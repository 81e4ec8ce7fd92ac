#include <cmath>

#include <doctest.h>

#include "aitv/regularizer.hpp"
#include "support.hpp"

using namespace aitv;

TEST_CASE("constant fields have zero regularizer value") {
    ScalarField u(4, 4, 0.3);
    for (double a : {0.0, 0.25, 0.5, 1.0}) CHECK(aitv_value(u, a) == 0.0);
}

TEST_CASE("axis-aligned gradients reduce to a scaled anisotropic value") {
    ScalarField u(6, 6, 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 2; j < 4; ++j) u(i, j) = 1.0;  // vertical stripe
    GradientField g = grad(u);
    for (double y : g.y.v) CHECK(y == 0.0);
    for (double a : {0.0, 0.3, 0.7, 1.0})
        CHECK(aitv_value(u, a) == doctest::Approx((1.0 - a) * norm_l1(g)).epsilon(1e-14));
}

TEST_CASE("hand value for a single diagonal gradient pixel") {
    GradientField g(4, 4, 0.0);
    g.x(1, 1) = 1.0;
    g.y(1, 1) = 1.0;
    CHECK(aitv_value(g, 0.5) == doctest::Approx(2.0 - 0.5 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("alpha zero gives the plain anisotropic value exactly") {
    std::mt19937_64 rng(71);
    ScalarField u = testsupport::rand_field(rng, 9, 5);
    CHECK(aitv_value(u, 0.0) == norm_l1(grad(u)));
}

TEST_CASE("value is nonincreasing in alpha and nonnegative") {
    std::mt19937_64 rng(72);
    ScalarField u = testsupport::rand_field(rng, 8, 8);
    double prev = aitv_value(u, 0.0);
    for (double a : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        const double val = aitv_value(u, a);
        CHECK(val <= prev + 1e-14);
        CHECK(val >= -1e-14);
        prev = val;
    }
}

TEST_CASE("alpha outside [0,1] is rejected") {
    ScalarField u(2, 2, 0.0);
    CHECK_THROWS_AS(aitv_value(u, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(aitv_value(u, 1.0001), std::invalid_argument);
}

TEST_CASE("subgradient of a constant field is zero") {
    ScalarField u(5, 5, 0.9);
    GradientField q = isotropic_subgradient(u);
    for (double x : q.x.v) CHECK(x == 0.0);
    for (double y : q.y.v) CHECK(y == 0.0);
}

TEST_CASE("subgradient pixels are unit vectors or exactly zero") {
    std::mt19937_64 rng(73);
    ScalarField u = testsupport::rand_field(rng, 7, 9);
    u(3, 3) = u(3, 4);  // plant at least one chance of a zero difference
    GradientField q = isotropic_subgradient(u);
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        const double n = std::hypot(q.x.v[i], q.y.v[i]);
        const bool zero = q.x.v[i] == 0.0 && q.y.v[i] == 0.0;
        CHECK((zero || std::abs(n - 1.0) <= 1e-14));
    }
}

TEST_CASE("subgradient hand evaluation on a two-row step") {
    ScalarField u(2, 2);
    u(0, 0) = 0; u(0, 1) = 0;
    u(1, 0) = 1; u(1, 1) = 1;
    GradientField q = isotropic_subgradient(u);
    // Gradient is (0, +1) on the top row and (0, -1) on the bottom (wrap).
    CHECK(q.x(0, 0) == 0.0);
    CHECK(q.x(1, 1) == 0.0);
    CHECK(q.y(0, 0) == 1.0);
    CHECK(q.y(0, 1) == 1.0);
    CHECK(q.y(1, 0) == -1.0);
    CHECK(q.y(1, 1) == -1.0);
}

TEST_CASE("convexity inequality for the isotropic term") {
    // ||Dv||_{2,1} >= ||Du||_{2,1} + <D^T q(u), v - u>, 100 random pairs.
    std::mt19937_64 rng(74);
    for (int t = 0; t < 100; ++t) {
        const int r = 2 + static_cast<int>(bounded(rng, 23));
        const int c = 2 + static_cast<int>(bounded(rng, 23));
        ScalarField u = testsupport::rand_field(rng, r, c);
        ScalarField v = testsupport::rand_field(rng, r, c);
        const GradientField q = isotropic_subgradient(u);
        ScalarField diff(r, c);
        for (std::size_t i = 0; i < diff.size(); ++i) diff.v[i] = v.v[i] - u.v[i];
        const double lhs = norm_l21(grad(v));
        const double rhs = norm_l21(grad(u)) + inner_x(grad_adjoint(q), diff);
        CHECK(lhs - rhs >= -1e-10);
    }
}
