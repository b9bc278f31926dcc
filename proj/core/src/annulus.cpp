#include "bergstab/annulus.hpp"

#include <cmath>

#include "bergstab/errors.hpp"
#include "bergstab/kernels.hpp"

namespace bergstab {

Complex annulus_kernel_oracle(double rho, Complex z, Complex w, int n_max) {
    if (!(rho > 0.0 && rho < 1.0))
        throw NumericError("annulus modulus must satisfy 0 < rho < 1");
    if (n_max < 1) throw NumericError("annulus kernel truncation must be >= 1");
    double az = std::abs(z), aw = std::abs(w);
    if (!(az > rho && az < 1.0 && aw > rho && aw < 1.0))
        throw NumericError("annulus kernel evaluated outside the annulus");

    Complex u = z * std::conj(w);

    Complex sum{0.0, 0.0};
    Complex upow{1.0, 0.0};
    for (int n = 0; n <= n_max; ++n) {
        double norm_sq = kPi * (1.0 - std::pow(rho, 2 * n + 2)) / (n + 1);
        sum += upow / norm_sq;
        upow *= u;
    }

    sum += 1.0 / (u * 2.0 * kPi * std::log(1.0 / rho)); // n = -1

    // n = -k, k >= 2:  (k-1) (rho^2/u)^k / (pi rho^2 (1 - rho^{2k-2}))
    Complex v = rho * rho / u;
    Complex vpow = v * v;
    for (int k = 2; k <= n_max; ++k) {
        double denom = kPi * rho * rho * (1.0 - std::pow(rho, 2 * k - 2));
        sum += static_cast<double>(k - 1) * vpow / denom;
        vpow *= v;
    }
    return sum;
}

double annulus_modulus_from_multiplier(double lambda) {
    if (!(lambda > 1.0)) throw NumericError("cyclic multiplier must satisfy lambda > 1");
    return std::exp(-2.0 * kPi * kPi / std::log(lambda));
}

Complex annulus_covering_map(double lambda, Complex z) {
    Complex log_z = std::log(z); // principal branch, fine on the upper half-plane
    return std::exp(Complex{0.0, 2.0 * kPi} * log_z / std::log(lambda));
}

Complex annulus_covering_map_derivative(double lambda, Complex z) {
    return annulus_covering_map(lambda, z) * Complex{0.0, 2.0 * kPi} /
           (z * std::log(lambda));
}

Complex annulus_pullback_oracle(double lambda, const ModelPoint& z, const ModelPoint& w,
                                int n_max) {
    require_same_model(z.model, Model::halfplane, "annulus_pullback_oracle");
    require_same_model(w.model, Model::halfplane, "annulus_pullback_oracle");
    double rho = annulus_modulus_from_multiplier(lambda);
    Complex pz = annulus_covering_map(lambda, z.value);
    Complex pw = annulus_covering_map(lambda, w.value);
    return annulus_kernel_oracle(rho, pz, pw, n_max) *
           annulus_covering_map_derivative(lambda, z.value) *
           std::conj(annulus_covering_map_derivative(lambda, w.value));
}

} // namespace bergstab
