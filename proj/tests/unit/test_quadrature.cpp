#include <doctest.h>

#include "bergstab/annulus.hpp"
#include "bergstab/kernels.hpp"
#include "bergstab/quadrature.hpp"
#include "test_support.hpp"

using namespace bergstab;

TEST_CASE("polar quadrature integrates areas exactly enough") {
    PolarQuadrature disc = PolarQuadrature::disc(0.5, 200, 200);
    CHECK(std::abs(disc.area() - kPi * 0.25) < 1e-12);
    Complex one = disc.integrate([](Complex) { return Complex{1.0, 0.0}; });
    CHECK(std::abs(one.real() - kPi * 0.25) < 1e-12);

    double rho = std::exp(-kPi);
    PolarQuadrature ann = PolarQuadrature::annulus(rho, 400, 400);
    CHECK(std::abs(ann.area() - kPi * (1.0 - rho * rho)) < 1e-4);
}

TEST_CASE("radius-1/2 disc kernel reproduces constants") {
    auto kernel = [](Complex z, Complex w) { return disc_kernel_radius(0.5, z, w); };
    auto f = [](Complex) { return Complex{1.0, 0.0}; };
    double res = reproducing_check(kernel, f, Complex{0.0, 0.0},
                                   PolarQuadrature::disc(0.5, 400, 400));
    CHECK(res <= 1e-6);
}

TEST_CASE("mean-value identity reproduces the square of zeta^2") {
    // (f(z))^2 for f = zeta^2 is recovered by integrating against the
    // radius-1/2 disc kernel; the integrand is zeta^4.
    auto kernel = [](Complex z, Complex w) { return disc_kernel_radius(0.5, z, w); };
    auto f = [](Complex zeta) { return zeta * zeta * zeta * zeta; };
    double res = reproducing_check(kernel, f, Complex{0.1, 0.0},
                                   PolarQuadrature::disc(0.5, 400, 400));
    CHECK(res <= 1e-6);
}

TEST_CASE("annulus kernel reproduces zeta^-1 and zeta^3") {
    double rho = std::exp(-kPi);
    auto kernel = [rho](Complex z, Complex w) { return annulus_kernel_oracle(rho, z, w, 60); };
    PolarQuadrature quad = PolarQuadrature::annulus(rho, 400, 400);

    auto f1 = [](Complex zeta) { return 1.0 / zeta; };
    CHECK(reproducing_check(kernel, f1, Complex{0.5, 0.0}, quad) <= 1e-6);

    auto f3 = [](Complex zeta) { return zeta * zeta * zeta; };
    CHECK(reproducing_check(kernel, f3, Complex{0.3, 0.2}, quad) <= 2e-5);

    // Constants exercise the lowest-mode norm pi (1 - rho^2) directly.
    auto f0 = [](Complex) { return Complex{1.0, 0.0}; };
    CHECK(reproducing_check(kernel, f0, Complex{0.4, 0.1}, quad) <= 1e-4);
}
