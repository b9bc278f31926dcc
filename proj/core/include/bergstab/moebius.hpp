#pragma once

#include <array>

#include "bergstab/models.hpp"

namespace bergstab {

/// Determinant-normalized 2x2 complex matrix acting on one model of the
/// hyperbolic plane.  A matrix and its negation describe the same map and
/// compare equal.
class MoebiusMap {
public:
    /// Normalizes det to 1 and verifies that the map preserves its model.
    static MoebiusMap create(Complex a, Complex b, Complex c, Complex d, Model model);
    static MoebiusMap identity(Model model);

    Complex a() const { return e_[0]; }
    Complex b() const { return e_[1]; }
    Complex c() const { return e_[2]; }
    Complex d() const { return e_[3]; }
    Model model() const { return model_; }

    MoebiusMap inverse() const;
    bool is_identity(double tol = 1e-10) const;

    /// Sign-insensitive comparison: min over +/- of the entrywise max difference.
    bool same_map(const MoebiusMap& other, double tol = 1e-10) const;

    friend MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

private:
    MoebiusMap(std::array<Complex, 4> e, Model m) : e_(e), model_(m) {}
    static MoebiusMap unchecked(Complex a, Complex b, Complex c, Complex d, Model m);

    std::array<Complex, 4> e_;
    Model model_;
};

/// Matrix product, renormalized to det 1.  Models must agree.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

/// (a z + b) / (c z + d).  Throws NumericError if the denominator vanishes,
/// which cannot happen for a model-preserving map at an interior point.
ModelPoint apply(const MoebiusMap& m, const ModelPoint& p);
Complex apply_raw(const MoebiusMap& m, Complex z);

/// 1 / (c z + d)^2 under the det = 1 normalization.
Complex derivative(const MoebiusMap& m, const ModelPoint& p);
Complex derivative_raw(const MoebiusMap& m, Complex z);

/// Hyperbolic distance for the metric of curvature -1 whose disc form is
/// 4|dz|^2/(1-|z|^2)^2.  Half-plane points are measured through the Cayley
/// transform.
double hyp_distance(const ModelPoint& p, const ModelPoint& q);

/// Cayley transform: half-plane -> disc sends i to 0, and its inverse.
ModelPoint cayley_to_disc(const ModelPoint& p);
ModelPoint cayley_to_halfplane(const ModelPoint& p);
Complex cayley_to_disc_raw(Complex z);
Complex cayley_to_halfplane_raw(Complex u);

/// Conjugate a map to the other model: m_disc = C m C^{-1}.
MoebiusMap cayley_map_to_disc(const MoebiusMap& m);
MoebiusMap cayley_map_to_halfplane(const MoebiusMap& m);

/// Euclidean radius r with B_eucl(0, r) = B_hyp(0, tau); inverse of
/// tau = log((1+r)/(1-r)).  Requires tau >= 0.
double radius_from_tau(double tau);
double tau_from_radius(double r);

/// Bergman kernel function of the hyperbolic ball B_hyp(0, tau) at its
/// center; equals the Euclidean-disc value 1/(pi r(tau)^2).  Requires tau > 0.
double ball_kernel_center(double tau);

/// Automorphism of the model taking z to the reference point (0 for the
/// disc, i for the half-plane).
MoebiusMap centering_map(const ModelPoint& z);

} // namespace bergstab
