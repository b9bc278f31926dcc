#pragma once

#include "bergstab/config.hpp"
#include "bergstab/fuchsian.hpp"

namespace bergstab {

/// Exact rational, reduced, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    Rational minus_integer(long long k) const; // this - k, exact
};

/// Truncated stability error between one tower level and the top:
/// the orbit sum over level-j members outside the top subgroup, and the
/// termwise bound sum(1-|gamma(0)|^2) / (pi (1-|z|)^2 (1-|w|)^2) over the
/// same index set plus a geometric tail.
struct StabilityError {
    Complex e_j{0.0, 0.0};
    double bound = 0.0;
    std::size_t terms = 0;
};

/// Level-j members outside the top subgroup, shared across evaluation
/// points so the filtering pass over the ball runs once per level.
struct StabilityIndexSet {
    std::vector<const BallElement*> members; // pointers into the ball
    double weight_sum = 0.0;                 // sum of 1 - |gamma(0)|^2
    double tail_displacement = 0.0;          // geometric tail beyond the ball
};

StabilityIndexSet stability_index_set(const GroupSpec& g_disc, const EnumerationBall& ball,
                                      const TowerSpec& t, int j);

StabilityError stability_error(const StabilityIndexSet& set, Complex z, Complex w,
                               int workers = 0);
StabilityError stability_error(const GroupSpec& g_disc, const EnumerationBall& ball,
                               const TowerSpec& t, int j, Complex z, Complex w,
                               int workers = 0);

/// One-term version of the bound behind the stability error:
/// |K(z, gamma w) conj(gamma'(w))| <= (1-|gamma(0)|^2)/(pi (1-|z|)^2 (1-|w|)^2).
bool termwise_ej_inequality(const MoebiusMap& gamma_disc, Complex z, Complex w);

/// Right-hand side of the effective deviation bound for compact quotients:
/// (12 * 3^(2/3) / pi) (g-1)^(1/3) e^(-tau/3), valid for tau >= log 3,
/// genus >= 2.
double effective_bound_rhs(long long genus, double tau);
double effective_constant();            // 12 * 3^(2/3)
double effective_constant_recomputed(); // 18 * 4 * (6*4)^(-1/3)

/// Hyperbolic-ball comparison bound: e^tau / (pi (e^tau - 1)^2), an upper
/// bound for the deviation of the quotient kernel's hyperbolic norm from
/// 1/(4 pi) at injectivity radius tau.
double upper_bound_31(double tau);

struct GenusBookkeeping {
    long long g_j = 0;
    Rational ratio; // g_j / index
};

/// Covering-genus arithmetic: g_j = index (g-1) + 1, exactly, with
/// g_j/index - (g-1) = 1/index as exact rationals.
GenusBookkeeping genus_bookkeeping(long long g, long long index);

struct SemicontinuityCheck {
    double margin = 0.0; // ball-kernel value minus quotient diagonal
    double tail = 0.0;   // series tail at the evaluation point
    double tau = 0.0;
    bool certified = false; // injectivity radius certified (advisory otherwise)
};

/// Upper-semicontinuity margin at z: kernel of the hyperbolic ball
/// B(z, tau_j(z)) minus Q_j(z, z).  Must be >= -2 tails.
SemicontinuityCheck semicontinuity_check(const GroupSpec& g_disc, const EnumerationBall& ball,
                                         const MembershipPredicate& pred, Complex z,
                                         const SeriesOptions& opts);

struct L2DifferenceCheck {
    double lhs = 0.0;   // integral over B_j of |K_disc(., w) - Q_j(., w)|^2
    double rhs = 0.0;   // 2(K_B(w,w) - K_disc(w,w)) + 2(K_B(w,w) - Q_j(w,w))
    double slack = 0.0; // quadrature + tail allowance
    bool resolution_ok = true;
    double tau = 0.0;
};

/// L2 comparison of the top kernel and a level kernel over the injectivity
/// ball, with a Richardson-style quadrature slack estimate.
L2DifferenceCheck l2_difference_check(const GroupSpec& g_disc, const EnumerationBall& ball,
                                      const TowerSpec& t, int j, Complex w,
                                      int n_r = 400, int n_theta = 400);

struct TowerReportRow {
    int j = 0;
    TowerIndex index;
    double tau = 0.0;
    bool tau_certified = false;
    double sup_grid_error = 0.0;
    double ej_bound = 0.0;
    double hyp_norm_deviation = 0.0;
    double tail = 0.0;
    std::size_t terms_used = 0;
};

struct TowerReport {
    std::vector<TowerReportRow> rows;
    std::string config_hash;
    int max_len = 0;
    double tol = 0.0;
    ClosurePolicy policy = ClosurePolicy::raw_ball;
    GridSpec grid;
    Complex basepoint{0.0, 0.0};
    std::string top_label;
};

/// Per-level stability experiment over the config's grid; deterministic
/// given the config.
TowerReport run_tower_report(const ExperimentConfig& cfg);

} // namespace bergstab
