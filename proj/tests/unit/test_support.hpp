#pragma once

#include <cmath>
#include <random>

#include "bergstab/enumeration.hpp"

namespace bergstab::testing {

inline std::mt19937_64 rng(unsigned seed = 20240611u) { return std::mt19937_64{seed}; }

inline Complex random_disc_point(std::mt19937_64& gen, double max_abs = 0.9) {
    std::uniform_real_distribution<double> radial(0.0, max_abs);
    std::uniform_real_distribution<double> angular(0.0, 2.0 * 3.14159265358979323846);
    double r = radial(gen), t = angular(gen);
    return {r * std::cos(t), r * std::sin(t)};
}

inline Complex random_halfplane_point(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(0.1, 4.0);
    return {re(gen), im(gen)};
}

// Random disc automorphism (a, b; conj(b), conj(a)) with |a|^2 - |b|^2 = 1.
inline MoebiusMap random_disc_map(std::mt19937_64& gen, double max_t = 1.5) {
    std::uniform_real_distribution<double> t_dist(0.0, max_t);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    double t = t_dist(gen), alpha = ang(gen), beta = ang(gen);
    Complex a = std::cosh(t) * Complex{std::cos(alpha), std::sin(alpha)};
    Complex b = std::sinh(t) * Complex{std::cos(beta), std::sin(beta)};
    return MoebiusMap::create(a, b, std::conj(b), std::conj(a), Model::disc);
}

inline MoebiusMap random_halfplane_map(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    do {
        a = entry(gen);
        b = entry(gen);
        c = entry(gen);
        d = a == 0.0 ? 1.0 : (1.0 + b * c) / a;
    } while (std::abs(a) < 0.2 || std::abs(a * d - b * c) < 1e-6);
    return MoebiusMap::create(a, b, c, d, Model::halfplane);
}

// Multiplier-lambda scaling of the half-plane, w -> lambda w.
inline MoebiusMap scaling_map(double lambda) {
    double s = std::sqrt(lambda);
    return MoebiusMap::create(s, 0.0, 0.0, 1.0 / s, Model::halfplane);
}

inline GroupSpec cyclic_scaling_group(double lambda) {
    GroupSpec g;
    g.model = Model::halfplane;
    g.generators.push_back(scaling_map(lambda));
    g.asserted_free_discrete = true;
    g.asserted_convergence_type = true;
    return g;
}

// Two hyperbolic translations of the disc with orthogonal axes and
// separated isometric circles (|b/a| = s > 1/sqrt(2)).
inline GroupSpec schottky_group(double s = 0.8) {
    GroupSpec g;
    g.model = Model::disc;
    g.generators.push_back(MoebiusMap::create(1.0, s, s, 1.0, Model::disc));
    g.generators.push_back(
        MoebiusMap::create(1.0, Complex{0.0, s}, Complex{0.0, -s}, 1.0, Model::disc));
    g.asserted_free_discrete = true;
    g.asserted_convergence_type = true;
    return g;
}

} // namespace bergstab::testing
