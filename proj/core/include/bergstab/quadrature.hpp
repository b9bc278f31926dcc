#pragma once

#include <functional>
#include <vector>

#include "bergstab/models.hpp"
#include "bergstab/reduction.hpp"

namespace bergstab {

/// Tensor-product midpoint rule in polar coordinates.  Discs use uniform
/// radial nodes; annuli use nodes uniform in log r, which integrates the
/// n = -1 basis mode exactly and keeps the rule accurate near the inner
/// boundary.
class PolarQuadrature {
public:
    static PolarQuadrature disc(double radius, int n_r, int n_theta);
    static PolarQuadrature annulus(double rho, int n_r, int n_theta);

    /// Offset all nodes by a center (for discs realized away from 0).
    PolarQuadrature centered_at(Complex center) const;

    std::size_t node_count() const { return radii_.size() * thetas_.size(); }
    double area() const;

    /// Sum of f(zeta) * weight over all nodes (compensated).
    template <class F>
    Complex integrate(F&& f) const {
        reduction::NeumaierAccumulator re, im;
        for (std::size_t i = 0; i < radii_.size(); ++i) {
            for (std::size_t j = 0; j < thetas_.size(); ++j) {
                Complex zeta = center_ + radii_[i] * Complex{std::cos(thetas_[j]),
                                                             std::sin(thetas_[j])};
                Complex v = f(zeta);
                double wgt = rweights_[i] * theta_weight_;
                re.add(v.real() * wgt);
                im.add(v.imag() * wgt);
            }
        }
        return {re.value(), im.value()};
    }

private:
    Complex center_{0.0, 0.0};
    std::vector<double> radii_;
    std::vector<double> rweights_; // include the r dr Jacobian
    std::vector<double> thetas_;
    double theta_weight_ = 0.0;
};

/// Reproducing-property residual |f(z) - integral K(z, .) f dA| over the
/// quadrature domain.
double reproducing_check(const std::function<Complex(Complex, Complex)>& kernel,
                         const std::function<Complex(Complex)>& f, Complex z,
                         const PolarQuadrature& quad);

} // namespace bergstab
