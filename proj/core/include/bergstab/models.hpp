#pragma once

#include <complex>
#include <string>

#include "bergstab/errors.hpp"

namespace bergstab {

using Complex = std::complex<double>;

/// Conformal models of the hyperbolic plane supported by the library.
enum class Model { disc, halfplane };

inline const char* model_name(Model m) {
    return m == Model::disc ? "disc" : "halfplane";
}

/// A point together with the model it lives in.  Disc points must satisfy
/// |z| < 1, half-plane points Im z > 0.
struct ModelPoint {
    Complex value{0.0, 0.0};
    Model model = Model::disc;

    bool interior() const {
        if (model == Model::disc) return std::abs(value) < 1.0;
        return value.imag() > 0.0;
    }
};

inline ModelPoint disc_point(Complex z) {
    ModelPoint p{z, Model::disc};
    if (!p.interior())
        throw ConfigError("disc point must satisfy |z| < 1, got |z| = " +
                          std::to_string(std::abs(z)));
    return p;
}

inline ModelPoint halfplane_point(Complex z) {
    ModelPoint p{z, Model::halfplane};
    if (!p.interior())
        throw ConfigError("half-plane point must satisfy Im z > 0, got Im z = " +
                          std::to_string(z.imag()));
    return p;
}

inline void require_same_model(Model a, Model b, const char* what) {
    if (a != b)
        throw ModelMismatchError(std::string(what) + ": model mismatch (" +
                                 model_name(a) + " vs " + model_name(b) + ")");
}

/// Hyperbolic ball: center plus nonnegative hyperbolic radius.
struct HypBall {
    ModelPoint center;
    double radius_hyp = 0.0;

    HypBall(ModelPoint c, double r) : center(c), radius_hyp(r) {
        if (!(r >= 0.0)) throw ConfigError("hyperbolic ball radius must be >= 0");
    }
};

// 1 - |z|^2 without cancellation near the boundary.
inline double one_minus_sq(double abs_z) { return (1.0 - abs_z) * (1.0 + abs_z); }

} // namespace bergstab
