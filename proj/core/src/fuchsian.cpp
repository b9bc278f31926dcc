#include "bergstab/fuchsian.hpp"

#include <cmath>
#include <limits>

#include "bergstab/errors.hpp"

namespace bergstab {

namespace {

InjectivityRadius rank1_certified(const GroupSpec& g, const MembershipPredicate& pred,
                                  const ModelPoint& x, int max_len) {
    MoebiusMap power = MoebiusMap::identity(g.model);
    Word word;
    for (int n = 1; n <= max_len; ++n) {
        power = compose(power, g.generators[0]);
        word = word.append(Letter{0, 1});
        if (pred(word))
            return {0.5 * displacement_distance(power, x), true};
    }
    return {std::numeric_limits<double>::infinity(), false};
}

} // namespace

InjectivityRadius injectivity_radius(const GroupSpec& g, const MembershipPredicate& pred,
                                     const ModelPoint& x, int max_len) {
    g.validate();
    require_same_model(g.model, x.model, "injectivity_radius");
    if (max_len < 1) throw ConfigError("injectivity_radius requires max_len >= 1");
    if (g.rank() == 1) return rank1_certified(g, pred, x, max_len);
    EnumerationBall ball = enumerate_ball(g, max_len);
    return injectivity_radius(g, ball, pred, x);
}

InjectivityRadius injectivity_radius(const GroupSpec& g, const EnumerationBall& ball,
                                     const MembershipPredicate& pred, const ModelPoint& x) {
    require_same_model(g.model, x.model, "injectivity_radius");
    double best = std::numeric_limits<double>::infinity();
    for (const BallElement& e : ball.elements) {
        if (e.word.empty() || !pred(e.word)) continue;
        best = std::min(best, displacement_distance(e.map, x));
    }
    if (!std::isfinite(best)) return {best, false};
    return {0.5 * best, g.rank() == 1};
}

bool dirichlet_contains(const GroupSpec& g, const MembershipPredicate& pred,
                        const ModelPoint& x, const ModelPoint& z, int max_len) {
    g.validate();
    require_same_model(x.model, z.model, "dirichlet_contains");
    require_same_model(g.model, x.model, "dirichlet_contains");
    if (max_len < 1) throw ConfigError("dirichlet_contains requires max_len >= 1");
    EnumerationBall ball = enumerate_ball(g, max_len);
    double base = hyp_distance(z, x);
    for (const BallElement& e : ball.elements) {
        if (e.word.empty() || !pred(e.word)) continue;
        if (!(base < hyp_distance(z, apply(e.map, x)))) return false;
    }
    return true;
}

ShellFit fit_shell_decay(const std::vector<double>& increments) {
    ShellFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        if (increments[i] <= 0.0) continue;
        double x = static_cast<double>(i + 1), y = std::log(increments[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n >= 2 && n * sxx - sx * sx > 0)
        fit.ratio = std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));

    std::vector<double> nz;
    for (double v : increments)
        if (v > 0.0) nz.push_back(v);
    if (nz.size() >= 3) {
        std::size_t k = nz.size();
        fit.decay_warning = nz[k - 1] >= nz[k - 2] && nz[k - 2] >= nz[k - 3];
    }
    return fit;
}

double geometric_tail(const std::vector<double>& increments, int horizon, double ratio) {
    int last = 0;
    double last_sum = 0.0;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        if (increments[i] > 0.0) {
            last = static_cast<int>(i + 1);
            last_sum = increments[i];
        }
    }
    if (last == 0 || ratio <= 0.0) return 0.0;
    double q = std::min(ratio, 0.999);
    return last_sum * std::pow(q, horizon + 1 - last) / (1.0 - q);
}

ConvergenceDiagnostic convergence_diagnostic(const EnumerationBall& ball) {
    ConvergenceDiagnostic diag;
    double running = 0.0;
    for (int l = 1; l <= ball.max_len; ++l) {
        double inc = ball.shell_displacement_sum(l);
        running += inc;
        diag.increments.push_back(inc);
        diag.partial_sums.push_back(running);
    }
    diag.fitted_ratio = fit_shell_decay(diag.increments).ratio;
    diag.likely_convergent = diag.fitted_ratio > 0.0 && diag.fitted_ratio < 1.0;
    return diag;
}

ConvergenceDiagnostic convergence_diagnostic(const GroupSpec& g, int max_len,
                                             const EnumerationOptions& opts) {
    g.validate();
    if (max_len < 1) throw ConfigError("convergence_diagnostic requires max_len >= 1");
    return convergence_diagnostic(enumerate_ball(g, max_len, opts));
}

double disc_displacement_at(const MoebiusMap& m, Complex z) {
    require_same_model(m.model(), Model::disc, "disc_displacement_at");
    Complex num = m.a() * z + m.b();
    Complex den = m.c() * z + m.d();
    double an = std::abs(num), ad = std::abs(den);
    // |den|^2 - |num|^2 = (1 - |z|^2) for normalized disc automorphisms.
    double one_minus_zsq = one_minus_sq(std::abs(z));
    return one_minus_zsq / (ad * (ad + an));
}

double displacement_distance(const MoebiusMap& m, const ModelPoint& x) {
    require_same_model(m.model(), x.model, "displacement_distance");
    Complex q = apply_raw(m, x.value);
    double delta, one_minus_delta_sq;
    if (x.model == Model::disc) {
        double disp = disc_displacement_at(m, x.value); // exact 1 - |m x|
        double den = std::norm(1.0 - std::conj(q) * x.value);
        delta = std::abs(x.value - q) / std::sqrt(den);
        one_minus_delta_sq = one_minus_sq(std::abs(x.value)) * disp * (2.0 - disp) / den;
    } else {
        // Im(m x) = Im x / |c x + d|^2 for real entries with det 1.
        double im_q = x.value.imag() / std::norm(m.c() * x.value + m.d());
        Complex qc{q.real(), im_q};
        double den = std::norm(x.value - std::conj(qc));
        delta = std::abs(x.value - qc) / std::sqrt(den);
        one_minus_delta_sq = 4.0 * x.value.imag() * im_q / den;
    }
    if (!(one_minus_delta_sq > 0.0)) return std::numeric_limits<double>::infinity();
    if (delta == 0.0) return 0.0;
    return 2.0 * std::log1p(delta) - std::log(one_minus_delta_sq);
}

bool displacement_sandwich_holds(const MoebiusMap& m, Complex z, double slack) {
    double disp0 = disc_displacement(m);
    double dispz = disc_displacement_at(m, z);
    double omz = one_minus_sq(std::abs(z));
    double lower = omz * disp0 / 4.0;
    double upper = 4.0 * disp0 / omz;
    return lower <= dispz * (1.0 + slack) && dispz <= upper * (1.0 + slack);
}

} // namespace bergstab
