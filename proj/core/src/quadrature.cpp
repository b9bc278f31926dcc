#include "bergstab/quadrature.hpp"

#include <cmath>

#include "bergstab/errors.hpp"
#include "bergstab/kernels.hpp"

namespace bergstab {

PolarQuadrature PolarQuadrature::disc(double radius, int n_r, int n_theta) {
    if (!(radius > 0.0) || n_r < 1 || n_theta < 1)
        throw ConfigError("disc quadrature requires radius > 0 and positive node counts");
    PolarQuadrature q;
    double hr = radius / n_r;
    for (int i = 0; i < n_r; ++i) {
        double r = (i + 0.5) * hr;
        q.radii_.push_back(r);
        q.rweights_.push_back(r * hr);
    }
    double ht = 2.0 * kPi / n_theta;
    for (int j = 0; j < n_theta; ++j) q.thetas_.push_back((j + 0.5) * ht);
    q.theta_weight_ = ht;
    return q;
}

PolarQuadrature PolarQuadrature::annulus(double rho, int n_r, int n_theta) {
    if (!(rho > 0.0 && rho < 1.0) || n_r < 1 || n_theta < 1)
        throw ConfigError("annulus quadrature requires 0 < rho < 1 and positive node counts");
    PolarQuadrature q;
    double hu = -std::log(rho) / n_r;
    for (int i = 0; i < n_r; ++i) {
        double u = std::log(rho) + (i + 0.5) * hu;
        double r = std::exp(u);
        q.radii_.push_back(r);
        q.rweights_.push_back(r * r * hu); // r dr = e^{2u} du
    }
    double ht = 2.0 * kPi / n_theta;
    for (int j = 0; j < n_theta; ++j) q.thetas_.push_back((j + 0.5) * ht);
    q.theta_weight_ = ht;
    return q;
}

PolarQuadrature PolarQuadrature::centered_at(Complex center) const {
    PolarQuadrature q = *this;
    q.center_ = center;
    return q;
}

double PolarQuadrature::area() const {
    double s = 0.0;
    for (double w : rweights_) s += w;
    return s * theta_weight_ * static_cast<double>(thetas_.size());
}

double reproducing_check(const std::function<Complex(Complex, Complex)>& kernel,
                         const std::function<Complex(Complex)>& f, Complex z,
                         const PolarQuadrature& quad) {
    Complex integral = quad.integrate([&](Complex zeta) { return kernel(z, zeta) * f(zeta); });
    return std::abs(f(z) - integral);
}

} // namespace bergstab
