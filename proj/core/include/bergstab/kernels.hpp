#pragma once

#include <functional>

#include "bergstab/enumeration.hpp"

namespace bergstab {

inline constexpr double kPi = 3.14159265358979323846;

/// Bergman kernel function of the unit disc, 1/(pi (1 - z conj(w))^2),
/// normalized so that the squared L2 norm of a holomorphic coefficient
/// function is its plain Euclidean L2 integral.
Complex disc_kernel(Complex z, Complex w);

/// Kernel of the Euclidean disc of radius r: r^2/(pi (r^2 - z conj(w))^2).
Complex disc_kernel_radius(double r, Complex z, Complex w);

/// Kernel of the upper half-plane, -1/(pi (z - conj(w))^2).
Complex halfplane_kernel(Complex z, Complex w);

enum class ClosurePolicy { raw_ball, inversion_closed, right_coset_closed };

struct SeriesOptions {
    int max_len = 12;
    double tol = 1e-10;
    ClosurePolicy policy = ClosurePolicy::raw_ball;
    Word coset_word;                 // gamma_0 for right_coset_closed
    std::size_t cap = 10'000'000;
    int workers = 0;                 // 0 = read BERGSTAB_WORKERS
};

struct TruncationInfo {
    int max_len = 0;
    ClosurePolicy policy = ClosurePolicy::raw_ball;
    std::size_t terms_used = 0;
    bool decay_warning = false;
};

struct KernelValue {
    Complex value{0.0, 0.0};
    double tail_estimate = 0.0;
    TruncationInfo truncation;
};

struct GreenValue {
    double value = 0.0;
    double tail_estimate = 0.0;
    std::size_t terms_used = 0;
};

/// Truncated orbit sums over one subgroup of a Fuchsian group: the
/// pulled-back Bergman kernel Q(z, w) = sum K(z, gamma w) conj(gamma'(w))
/// and the Green function sum of -log of Moebius pseudo-distances.
///
/// The evaluator owns the predicate-filtered member list (optionally closed
/// under inversion or under right multiplication by a fixed subgroup
/// element) and the geometric tail data fitted from the displacement
/// shells.  Evaluations are pure and safe to share across threads.
class QuotientSeries {
public:
    QuotientSeries(const GroupSpec& g, MembershipPredicate pred, SeriesOptions opts);
    QuotientSeries(const GroupSpec& g, const EnumerationBall& ball, MembershipPredicate pred,
                   SeriesOptions opts);

    KernelValue kernel(const ModelPoint& z, const ModelPoint& w) const;
    GreenValue green(const ModelPoint& z, const ModelPoint& w) const;

    Model model() const { return model_; }
    const std::vector<BallElement>& members() const { return members_; }
    double fitted_ratio() const { return fitted_ratio_; }
    bool decay_warning() const { return decay_warning_; }

    /// Extrapolated sum of displacements beyond the truncation length.
    double displacement_tail() const { return displacement_tail_; }

private:
    Model model_;
    SeriesOptions opts_;
    std::vector<BallElement> members_;
    double fitted_ratio_ = 0.0;
    double displacement_tail_ = 0.0;
    bool decay_warning_ = false;
    int workers_ = 1;
};

KernelValue quotient_kernel_series(const GroupSpec& g, const MembershipPredicate& pred,
                                   const ModelPoint& z, const ModelPoint& w,
                                   const SeriesOptions& opts);

GreenValue green_series(const GroupSpec& g, const MembershipPredicate& pred,
                        const ModelPoint& z, const ModelPoint& w, const SeriesOptions& opts);

/// Pointwise hyperbolic norm of the kernel form on the diagonal:
/// K(z,z) (1-|z|^2)^2/4 on the disc, K(z,z) (Im z)^2 on the half-plane.
/// Rejects diagonal values with negative real part or a sizable imaginary
/// part (a symptom of truncation failure).
double hyp_norm_diag(Complex k_diag, const ModelPoint& z);

struct FdOptions {
    double h = 1e-3;
    bool richardson = true;
};

/// Bergman metric coefficient d^2 log K(z,z) / dz dzbar by 9-point central
/// differences in (Re z, Im z); 2/(1-|z|^2)^2 for the disc kernel.
double bergman_metric_fd(const std::function<Complex(Complex, Complex)>& kernel,
                         const ModelPoint& z, const FdOptions& fd = {});

/// Residual of the mixed-derivative identity linking the kernel and the
/// Green function: |Q(z,w) + (2/pi) d_z d_wbar g(z,w)| with the derivative
/// taken by central differences of the Green series.
double schiffer_check(const GroupSpec& g, const MembershipPredicate& pred, const ModelPoint& z,
                      const ModelPoint& w, double h, const SeriesOptions& opts);

} // namespace bergstab
