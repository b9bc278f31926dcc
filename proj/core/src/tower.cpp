#include "bergstab/tower.hpp"

#include <cmath>
#include <numeric>

#include "bergstab/errors.hpp"
#include "bergstab/quadrature.hpp"
#include "bergstab/reduction.hpp"

namespace bergstab {

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw NumericError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

Rational Rational::minus_integer(long long k) const {
    return Rational::make(num - k * den, den);
}

namespace {

double ej_bound_constant(Complex z, Complex w) {
    double dz = 1.0 - std::abs(z), dw = 1.0 - std::abs(w);
    return 1.0 / (kPi * dz * dz * dw * dw);
}

// (1 - |gamma(0)|^2) from the stored displacement 1 - |gamma(0)|.
double one_minus_origin_sq(double displacement) {
    return displacement * (2.0 - displacement);
}

} // namespace

bool termwise_ej_inequality(const MoebiusMap& gamma_disc, Complex z, Complex w) {
    Complex gw = apply_raw(gamma_disc, w);
    Complex term = disc_kernel(z, gw) * std::conj(derivative_raw(gamma_disc, w));
    double rhs = ej_bound_constant(z, w) * one_minus_origin_sq(disc_displacement(gamma_disc));
    return std::abs(term) <= rhs * (1.0 + 1e-9);
}

StabilityIndexSet stability_index_set(const GroupSpec& g_disc, const EnumerationBall& ball,
                                      const TowerSpec& t, int j) {
    require_same_model(g_disc.model, Model::disc, "stability_index_set");
    int rank = g_disc.rank();

    StabilityIndexSet set;
    std::vector<double> shell_sums(static_cast<std::size_t>(ball.max_len), 0.0);
    for (const BallElement& e : ball.elements) {
        if (e.word.empty()) continue;
        if (!tower_member(t, j, e.word, rank)) continue;
        if (top_member(t, e.word, rank)) continue;
        set.members.push_back(&e);
        set.weight_sum += one_minus_origin_sq(e.displacement);
        shell_sums[e.word.length() - 1] += e.displacement;
    }

    // Tail extrapolated from the last populated shell of this index set with
    // the whole-group decay ratio; an empty truncated set reports no tail.
    if (!set.members.empty()) {
        std::vector<double> full_increments;
        for (int l = 1; l <= ball.max_len; ++l)
            full_increments.push_back(ball.shell_displacement_sum(l));
        double ratio = fit_shell_decay(full_increments).ratio;
        set.tail_displacement = geometric_tail(shell_sums, ball.max_len, ratio);
    }
    return set;
}

StabilityError stability_error(const StabilityIndexSet& set, Complex z, Complex w,
                               int workers) {
    const double c = ej_bound_constant(z, w);
    for (const BallElement* e : set.members) {
        if (!termwise_ej_inequality(e->map, z, w))
            throw NumericError("termwise stability bound violated; inputs are inconsistent");
    }

    int wk = workers > 0 ? workers : reduction::env_worker_count();
    Complex e_j = reduction::deterministic_sum(set.members.size(), wk, [&](std::size_t i) {
        const BallElement& e = *set.members[i];
        Complex gw = apply_raw(e.map, w);
        return disc_kernel(z, gw) * std::conj(derivative_raw(e.map, w));
    });

    StabilityError out;
    out.e_j = e_j;
    // 1 - |g0|^2 <= 2 (1 - |g0|) on the tail, inflated 2x.
    out.bound = c * (set.weight_sum + 4.0 * set.tail_displacement);
    out.terms = set.members.size();
    return out;
}

StabilityError stability_error(const GroupSpec& g_disc, const EnumerationBall& ball,
                               const TowerSpec& t, int j, Complex z, Complex w, int workers) {
    return stability_error(stability_index_set(g_disc, ball, t, j), z, w, workers);
}

double effective_constant() { return 12.0 * std::cbrt(9.0); }

double effective_constant_recomputed() { return 18.0 * 4.0 / std::cbrt(24.0); }

double effective_bound_rhs(long long genus, double tau) {
    if (genus < 2) throw NumericError("effective bound requires genus >= 2");
    if (tau < std::log(3.0) - 1e-12)
        throw NumericError("effective bound is stated only for tau >= log 3");
    double c = effective_constant();
    if (std::abs(c - effective_constant_recomputed()) > 1e-14 * c)
        throw NumericError("effective constant self-check failed");
    return c / kPi * std::cbrt(static_cast<double>(genus - 1)) * std::exp(-tau / 3.0);
}

double upper_bound_31(double tau) {
    if (!(tau > 0.0)) throw NumericError("upper_bound_31 requires tau > 0");
    double em = std::expm1(tau);
    return (em + 1.0) / (kPi * em * em);
}

GenusBookkeeping genus_bookkeeping(long long g, long long index) {
    if (g < 2) throw NumericError("genus bookkeeping requires g >= 2");
    if (index < 1) throw NumericError("genus bookkeeping requires index >= 1");
    GenusBookkeeping out;
    out.g_j = index * (g - 1) + 1;
    out.ratio = Rational::make(out.g_j, index);
    if (!(out.ratio.minus_integer(g - 1) == Rational::make(1, index)))
        throw NumericError("genus identity violated");
    return out;
}

namespace {

// Kernel of the hyperbolic ball B(z, tau) at its own center, via the
// centering automorphism: ball_kernel_center(tau) |phi'(z)|^2.
double ball_kernel_at(Complex z, double tau) {
    double f = one_minus_sq(std::abs(z));
    if (std::isinf(tau)) return 1.0 / (kPi * f * f);
    return ball_kernel_center(tau) / (f * f);
}

} // namespace

SemicontinuityCheck semicontinuity_check(const GroupSpec& g_disc, const EnumerationBall& ball,
                                         const MembershipPredicate& pred, Complex z,
                                         const SeriesOptions& opts) {
    require_same_model(g_disc.model, Model::disc, "semicontinuity_check");
    ModelPoint zp{z, Model::disc};
    InjectivityRadius tau = injectivity_radius(g_disc, ball, pred, zp);

    QuotientSeries series(g_disc, ball, pred, opts);
    KernelValue q = series.kernel(zp, zp);

    SemicontinuityCheck out;
    out.tau = tau.tau;
    out.certified = tau.certified;
    out.margin = ball_kernel_at(z, tau.tau) - q.value.real();
    out.tail = q.tail_estimate;
    return out;
}

L2DifferenceCheck l2_difference_check(const GroupSpec& g_disc, const EnumerationBall& ball,
                                      const TowerSpec& t, int j, Complex w, int n_r,
                                      int n_theta) {
    require_same_model(g_disc.model, Model::disc, "l2_difference_check");
    if (t.kind != TowerKind::cyclic_powers)
        throw ConfigError("l2_difference_check supports cyclic towers only");
    int rank = g_disc.rank();
    MembershipPredicate pred = level_predicate(t, j, rank);
    ModelPoint wp{w, Model::disc};

    InjectivityRadius tau = injectivity_radius(g_disc, ball, pred, wp);
    if (!std::isfinite(tau.tau))
        throw NumericError("l2_difference_check: no subgroup member in the enumerated ball");

    // Euclidean realization of the hyperbolic ball B(w, tau).
    double r = radius_from_tau(tau.tau);
    double denom = 1.0 - r * r * std::norm(w);
    Complex center = w * (1.0 - r * r) / denom;
    double radius = r * one_minus_sq(std::abs(w)) / denom;

    // Orbit data for the fixed second argument.
    std::vector<Complex> images, dconj;
    for (const BallElement& e : ball.elements) {
        if (!pred(e.word)) continue;
        images.push_back(apply_raw(e.map, w));
        dconj.push_back(std::conj(derivative_raw(e.map, w)));
    }
    auto q_at = [&](Complex zeta) {
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i < images.size(); ++i)
            s += disc_kernel(zeta, images[i]) * dconj[i];
        return s;
    };
    auto integrand = [&](Complex zeta) {
        Complex diff = disc_kernel(zeta, w) - q_at(zeta);
        return Complex{std::norm(diff), 0.0};
    };

    double lhs_fine =
        PolarQuadrature::disc(radius, n_r, n_theta).centered_at(center).integrate(integrand)
            .real();
    double lhs_coarse = PolarQuadrature::disc(radius, n_r / 2, n_theta / 2)
                            .centered_at(center)
                            .integrate(integrand)
                            .real();

    QuotientSeries series(g_disc, ball, pred, SeriesOptions{});
    KernelValue q_ww = series.kernel(wp, wp);
    double k_ball = ball_kernel_at(w, tau.tau);
    double k_disc = disc_kernel(w, w).real();

    L2DifferenceCheck out;
    out.tau = tau.tau;
    out.lhs = lhs_fine;
    out.rhs = 2.0 * (k_ball - k_disc) + 2.0 * (k_ball - q_ww.value.real());
    double quad_slack = std::abs(lhs_fine - lhs_coarse) / 3.0 * 2.0;
    double area = kPi * radius * radius;
    double tail_slack =
        q_ww.tail_estimate * (2.0 * std::sqrt(std::max(lhs_fine, 0.0) * area) +
                              q_ww.tail_estimate * area) +
        2.0 * q_ww.tail_estimate;
    out.slack = quad_slack + tail_slack;
    out.resolution_ok = out.slack <= 0.1 * std::max(out.rhs, 1e-300);
    return out;
}

TowerReport run_tower_report(const ExperimentConfig& cfg) {
    if (!cfg.tower) throw ConfigError("tower report requires a [tower] section");
    GroupSpec g = cfg.group.to_disc();
    const TowerSpec& t = *cfg.tower;
    int rank = g.rank();
    t.validate(rank);

    EnumerationBall ball =
        enumerate_ball(g, cfg.series.max_len, EnumerationOptions{cfg.series.cap, false, 0.0});

    SeriesOptions opts = cfg.series;
    MembershipPredicate top = top_predicate(t, rank);
    QuotientSeries top_series(g, ball, top, opts);

    std::vector<Complex> zs = cfg.grid.first_axis();
    std::vector<Complex> ws = cfg.grid.second_axis();
    Complex base = cfg.basepoint;

    std::vector<Complex> diag_points = zs;
    for (Complex w : ws) {
        bool dup = false;
        for (Complex z : diag_points) dup = dup || std::abs(z - w) < 1e-15;
        if (!dup) diag_points.push_back(w);
    }

    TowerReport report;
    report.config_hash = cfg.config_hash;
    report.max_len = cfg.series.max_len;
    report.tol = cfg.series.tol;
    report.policy = cfg.series.policy;
    report.grid = cfg.grid;
    report.basepoint = base;
    report.top_label = t.top == TowerTop::trivial ? "trivial" : "commutator";

    for (int j = 1; j <= t.levels(); ++j) {
        MembershipPredicate pred = level_predicate(t, j, rank);
        QuotientSeries level_series(g, ball, pred, opts);
        StabilityIndexSet ej_set = stability_index_set(g, ball, t, j);

        TowerReportRow row;
        row.j = j;
        row.index = tower_index(t, j, rank);
        InjectivityRadius tau =
            injectivity_radius(g, pred, ModelPoint{base, Model::disc}, cfg.series.max_len);
        row.tau = tau.tau;
        row.tau_certified = tau.certified;
        row.terms_used = level_series.members().size();

        for (Complex z : zs) {
            for (Complex w : ws) {
                ModelPoint zp{z, Model::disc}, wp{w, Model::disc};
                KernelValue qj = level_series.kernel(zp, wp);
                KernelValue qt = top_series.kernel(zp, wp);
                StabilityError ej = stability_error(ej_set, z, w, opts.workers);

                double diff = std::abs(qj.value - qt.value);
                // Same enumeration ball on both sides: the partition
                // identity Q_j = Q_top + E_j holds to rounding.
                if (std::abs(qj.value - qt.value - ej.e_j) >
                    1e-12 * std::max(1.0, std::abs(qj.value)))
                    throw NumericError("stability partition identity violated");

                row.sup_grid_error = std::max(row.sup_grid_error, diff);
                row.ej_bound = std::max(row.ej_bound, ej.bound);
                row.tail = std::max(row.tail, qj.tail_estimate + qt.tail_estimate);
            }
        }

        for (Complex p : diag_points) {
            ModelPoint pp{p, Model::disc};
            double hj = hyp_norm_diag(level_series.kernel(pp, pp).value, pp);
            double ht = hyp_norm_diag(top_series.kernel(pp, pp).value, pp);
            row.hyp_norm_deviation =
                std::max(row.hyp_norm_deviation, 4.0 * kPi * std::abs(hj - ht));
        }

        report.rows.push_back(row);
    }
    return report;
}

} // namespace bergstab
