#pragma once

#include "bergstab/models.hpp"

namespace bergstab {

/// Bergman kernel of the annulus {rho < |zeta| < 1} by the orthonormal
/// monomial basis, truncated to |n| <= n_max.  Norms are
/// ||zeta^n||^2 = pi (1 - rho^{2n+2})/(n+1) for n != -1 and 2 pi log(1/rho)
/// for n = -1.  Terms with n <= -2 are evaluated through the bounded ratio
/// rho^2/(z conj(w)) so nothing overflows for small rho.
Complex annulus_kernel_oracle(double rho, Complex z, Complex w, int n_max);

/// Modulus of the annulus uniformized by <w -> lambda w>:
/// rho = exp(-2 pi^2 / log lambda).
double annulus_modulus_from_multiplier(double lambda);

/// Covering map p(z) = exp(2 pi i Log z / log lambda) from the upper
/// half-plane onto that annulus, and its derivative.
Complex annulus_covering_map(double lambda, Complex z);
Complex annulus_covering_map_derivative(double lambda, Complex z);

/// Pull-back of the annulus kernel through the covering map:
/// K(p(z), p(w)) p'(z) conj(p'(w)).  Independent reference value for the
/// cyclic quotient kernel series.
Complex annulus_pullback_oracle(double lambda, const ModelPoint& z, const ModelPoint& w,
                                int n_max);

} // namespace bergstab
