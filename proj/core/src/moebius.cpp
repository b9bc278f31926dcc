#include "bergstab/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bergstab {

namespace {

constexpr double kShapeTol = 1e-12;
constexpr double kProbeTol = 1e-10;

double max_entry_diff(const MoebiusMap& m1, const MoebiusMap& m2, int sign) {
    double s = static_cast<double>(sign);
    double d = 0.0;
    d = std::max(d, std::abs(m1.a() - s * m2.a()));
    d = std::max(d, std::abs(m1.b() - s * m2.b()));
    d = std::max(d, std::abs(m1.c() - s * m2.c()));
    d = std::max(d, std::abs(m1.d() - s * m2.d()));
    return d;
}

// Exact algebraic shape: SL(2,R) for the half-plane, SU(1,1) for the disc.
// Both shapes are stable under the global sign flip.
bool matches_model_shape(Complex a, Complex b, Complex c, Complex d, Model model) {
    if (model == Model::halfplane) {
        return std::abs(a.imag()) <= kShapeTol && std::abs(b.imag()) <= kShapeTol &&
               std::abs(c.imag()) <= kShapeTol && std::abs(d.imag()) <= kShapeTol;
    }
    return std::abs(d - std::conj(a)) <= kShapeTol && std::abs(c - std::conj(b)) <= kShapeTol;
}

bool probe_preserves_model(const MoebiusMap& m) {
    // The pole -d/c of a model-preserving map cannot lie inside the model.
    if (std::abs(m.c()) > 1e-14) {
        Complex pole = -m.d() / m.c();
        if (m.model() == Model::disc && std::abs(pole) < 1.0 - kProbeTol) return false;
        if (m.model() == Model::halfplane && pole.imag() > kProbeTol) return false;
    }
    static const Complex disc_probes[3] = {{0.9, 0.0}, {-0.45, 0.78}, {-0.45, -0.78}};
    static const Complex half_probes[3] = {{0.0, 1.0}, {8.0, 0.5}, {-8.0, 0.5}};
    const Complex* probes = m.model() == Model::disc ? disc_probes : half_probes;
    for (int i = 0; i < 3; ++i) {
        Complex w = apply_raw(m, probes[i]);
        if (m.model() == Model::disc) {
            if (std::abs(w) >= 1.0 + kProbeTol) return false;
        } else {
            if (w.imag() <= -kProbeTol) return false;
        }
    }
    return true;
}

} // namespace

MoebiusMap MoebiusMap::unchecked(Complex a, Complex b, Complex c, Complex d, Model m) {
    return MoebiusMap({a, b, c, d}, m);
}

MoebiusMap MoebiusMap::create(Complex a, Complex b, Complex c, Complex d, Model model) {
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-14)
        throw ConfigError("Moebius matrix is singular (|det| < 1e-14)");
    Complex s = std::sqrt(det);
    MoebiusMap m({a / s, b / s, c / s, d / s}, model);
    if (!matches_model_shape(m.a(), m.b(), m.c(), m.d(), model) && !probe_preserves_model(m))
        throw ModelMismatchError(std::string("matrix does not preserve the ") +
                                 model_name(model) + " model");
    return m;
}

MoebiusMap MoebiusMap::identity(Model model) {
    return MoebiusMap({Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                       Complex{1.0, 0.0}},
                      model);
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap({e_[3], -e_[1], -e_[2], e_[0]}, model_);
}

bool MoebiusMap::is_identity(double tol) const {
    return same_map(identity(model_), tol);
}

bool MoebiusMap::same_map(const MoebiusMap& other, double tol) const {
    if (model_ != other.model_) return false;
    return std::min(max_entry_diff(*this, other, +1), max_entry_diff(*this, other, -1)) <= tol;
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    require_same_model(m1.model(), m2.model(), "compose");
    Complex a = m1.a() * m2.a() + m1.b() * m2.c();
    Complex b = m1.a() * m2.b() + m1.b() * m2.d();
    Complex c = m1.c() * m2.a() + m1.d() * m2.c();
    Complex d = m1.c() * m2.b() + m1.d() * m2.d();
    // The product of det-1 matrices has det 1; recomputing a*d - b*c here
    // would cancel catastrophically for large entries, so leave the rounding
    // drift (O(eps) per factor) alone.
    return MoebiusMap::unchecked(a, b, c, d, m1.model());
}

Complex apply_raw(const MoebiusMap& m, Complex z) {
    Complex denom = m.c() * z + m.d();
    if (std::abs(denom) < 1e-300)
        throw NumericError("Moebius map sends the point to infinity; model invariant violated");
    return (m.a() * z + m.b()) / denom;
}

ModelPoint apply(const MoebiusMap& m, const ModelPoint& p) {
    require_same_model(m.model(), p.model, "apply");
    return ModelPoint{apply_raw(m, p.value), p.model};
}

Complex derivative_raw(const MoebiusMap& m, Complex z) {
    Complex denom = m.c() * z + m.d();
    if (std::abs(denom) < 1e-300)
        throw NumericError("Moebius derivative undefined: point maps to infinity");
    return 1.0 / (denom * denom);
}

Complex derivative(const MoebiusMap& m, const ModelPoint& p) {
    require_same_model(m.model(), p.model, "derivative");
    return derivative_raw(m, p.value);
}

double hyp_distance(const ModelPoint& p, const ModelPoint& q) {
    require_same_model(p.model, q.model, "hyp_distance");
    // d = log((1+delta)^2 / (1-delta^2)) with 1-delta^2 computed exactly:
    //   disc:       (1-|p|^2)(1-|q|^2) / |1 - conj(q) p|^2
    //   half-plane: 4 Im(p) Im(q) / |p - conj(q)|^2
    // which stays accurate when the points are far apart (delta -> 1).
    double delta, one_minus_delta_sq;
    if (p.model == Model::disc) {
        double den = std::norm(1.0 - std::conj(q.value) * p.value);
        delta = std::abs(p.value - q.value) / std::sqrt(den);
        one_minus_delta_sq =
            one_minus_sq(std::abs(p.value)) * one_minus_sq(std::abs(q.value)) / den;
    } else {
        double den = std::norm(p.value - std::conj(q.value));
        delta = std::abs(p.value - q.value) / std::sqrt(den);
        one_minus_delta_sq = 4.0 * p.value.imag() * q.value.imag() / den;
    }
    if (!(one_minus_delta_sq > 0.0)) return std::numeric_limits<double>::infinity();
    if (delta == 0.0) return 0.0;
    return 2.0 * std::log1p(delta) - std::log(one_minus_delta_sq);
}

Complex cayley_to_disc_raw(Complex z) {
    return (z - Complex{0.0, 1.0}) / (z + Complex{0.0, 1.0});
}

Complex cayley_to_halfplane_raw(Complex u) {
    return Complex{0.0, 1.0} * (1.0 + u) / (1.0 - u);
}

ModelPoint cayley_to_disc(const ModelPoint& p) {
    require_same_model(p.model, Model::halfplane, "cayley_to_disc");
    return ModelPoint{cayley_to_disc_raw(p.value), Model::disc};
}

ModelPoint cayley_to_halfplane(const ModelPoint& p) {
    require_same_model(p.model, Model::disc, "cayley_to_halfplane");
    return ModelPoint{cayley_to_halfplane_raw(p.value), Model::halfplane};
}

namespace {

// Cayley matrix C with C(i) = 0, det 1, and its inverse.
const Complex kCa{0.5, -0.5}, kCb{-0.5, -0.5}, kCc{0.5, -0.5}, kCd{0.5, 0.5};

std::array<Complex, 4> conjugate_entries(const MoebiusMap& m, bool to_disc) {
    // to_disc:  C m C^{-1};  to_halfplane:  C^{-1} m C.
    Complex pa = to_disc ? kCa : kCd, pb = to_disc ? kCb : -kCb;
    Complex pc = to_disc ? kCc : -kCc, pd = to_disc ? kCd : kCa;
    Complex qa = to_disc ? kCd : kCa, qb = to_disc ? -kCb : kCb;
    Complex qc = to_disc ? -kCc : kCc, qd = to_disc ? kCa : kCd;
    Complex ta = pa * m.a() + pb * m.c(), tb = pa * m.b() + pb * m.d();
    Complex tc = pc * m.a() + pd * m.c(), td = pc * m.b() + pd * m.d();
    return {ta * qa + tb * qc, ta * qb + tb * qd, tc * qa + td * qc, tc * qb + td * qd};
}

} // namespace

MoebiusMap cayley_map_to_disc(const MoebiusMap& m) {
    require_same_model(m.model(), Model::halfplane, "cayley_map_to_disc");
    auto e = conjugate_entries(m, true);
    return MoebiusMap::create(e[0], e[1], e[2], e[3], Model::disc);
}

MoebiusMap cayley_map_to_halfplane(const MoebiusMap& m) {
    require_same_model(m.model(), Model::disc, "cayley_map_to_halfplane");
    auto e = conjugate_entries(m, false);
    return MoebiusMap::create(e[0], e[1], e[2], e[3], Model::halfplane);
}

double radius_from_tau(double tau) {
    if (!(tau >= 0.0)) throw NumericError("radius_from_tau requires tau >= 0");
    return std::tanh(0.5 * tau);
}

double tau_from_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw NumericError("tau_from_radius requires 0 <= r < 1");
    return 2.0 * std::atanh(r);
}

double ball_kernel_center(double tau) {
    if (!(tau > 0.0)) throw NumericError("ball_kernel_center requires tau > 0");
    double em1 = std::expm1(tau);
    double ratio = (em1 + 2.0) / em1; // (e^tau + 1) / (e^tau - 1)
    constexpr double pi = 3.14159265358979323846;
    return ratio * ratio / pi;
}

MoebiusMap centering_map(const ModelPoint& z) {
    if (!z.interior()) throw NumericError("centering_map requires an interior point");
    if (z.model == Model::disc) {
        return MoebiusMap::create(1.0, -z.value, -std::conj(z.value), 1.0, Model::disc);
    }
    double x = z.value.real(), y = z.value.imag();
    double sy = std::sqrt(y);
    return MoebiusMap::create(1.0 / sy, -x / sy, 0.0, sy, Model::halfplane);
}

} // namespace bergstab
