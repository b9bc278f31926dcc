#pragma once

#include "bergstab/enumeration.hpp"

namespace bergstab {

struct InjectivityRadius {
    double tau = 0.0;
    bool certified = false;
};

/// Half the minimal displacement of x over nonidentity predicate members
/// found within word length max_len.  Certified only for rank-1 groups,
/// where displacement grows monotonically with the power; otherwise the
/// returned value is an upper bound attained on the enumerated ball.
/// Returns tau = +inf (uncertified) when no member shows up.
InjectivityRadius injectivity_radius(const GroupSpec& g, const MembershipPredicate& pred,
                                     const ModelPoint& x, int max_len);
InjectivityRadius injectivity_radius(const GroupSpec& g, const EnumerationBall& ball,
                                     const MembershipPredicate& pred, const ModelPoint& x);

/// Ball-truncated Dirichlet domain test: strict inequality
/// d(z, x) < d(z, gamma x) against every enumerated nonidentity member.
/// Equality at the boundary counts as outside.
bool dirichlet_contains(const GroupSpec& g, const MembershipPredicate& pred,
                        const ModelPoint& x, const ModelPoint& z, int max_len);

struct ConvergenceDiagnostic {
    std::vector<double> partial_sums; // S_l over nonidentity words of length <= l
    std::vector<double> increments;   // per length shell
    double fitted_ratio = 0.0;        // geometric ratio of the shell increments
    bool likely_convergent = false;
};

/// Partial sums of sum(1 - |gamma(0)|) with a least-squares exponential fit
/// to the shell increments.
ConvergenceDiagnostic convergence_diagnostic(const GroupSpec& g, int max_len,
                                             const EnumerationOptions& opts = {});
ConvergenceDiagnostic convergence_diagnostic(const EnumerationBall& ball);

struct ShellFit {
    double ratio = 0.0;        // geometric decay per unit word length
    bool decay_warning = false; // last three populated shells stopped decaying
};

/// Least-squares exponential fit to positive shell increments
/// (increments[l-1] is the length-l shell sum).
ShellFit fit_shell_decay(const std::vector<double>& increments);

/// Extrapolated sum over lengths > horizon, geometric from the last
/// populated shell.
double geometric_tail(const std::vector<double>& increments, int horizon, double ratio);

/// 1 - |gamma(z)| for a disc-model map, computed cancellation-free.
double disc_displacement_at(const MoebiusMap& m, Complex z);

/// Hyperbolic distance d(x, m x), with the boundary-sensitive pieces taken
/// from the matrix entries so far translates keep full precision.
double displacement_distance(const MoebiusMap& m, const ModelPoint& x);

/// Two-sided displacement comparison for disc-model maps:
///   (1-|z|^2)(1-|g(0)|)/4  <=  1-|g(z)|  <=  4(1-|g(0)|)/(1-|z|^2).
bool displacement_sandwich_holds(const MoebiusMap& m, Complex z, double slack = 1e-9);

} // namespace bergstab
