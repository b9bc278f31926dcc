#include "bergstab/kernels.hpp"

#include <cmath>
#include <unordered_set>

#include "bergstab/errors.hpp"
#include "bergstab/fuchsian.hpp"
#include "bergstab/reduction.hpp"

namespace bergstab {

Complex disc_kernel(Complex z, Complex w) {
    Complex u = 1.0 - z * std::conj(w);
    return 1.0 / (kPi * u * u);
}

Complex disc_kernel_radius(double r, Complex z, Complex w) {
    Complex u = r * r - z * std::conj(w);
    return r * r / (kPi * u * u);
}

Complex halfplane_kernel(Complex z, Complex w) {
    Complex u = z - std::conj(w);
    return -1.0 / (kPi * u * u);
}

namespace {

constexpr double kCosetDisplacementFloor = 1e-18;

Complex cayley_derivative(Complex z) {
    Complex u = z + Complex{0.0, 1.0};
    return Complex{0.0, 2.0} / (u * u);
}

// Per-term magnitude constant for the kernel series in disc moduli,
// 4 / (pi (1-|z|)^2 (1-|w|)^2), transported by the Cayley cocycle for
// half-plane inputs.
double kernel_tail_constant(const ModelPoint& z, const ModelPoint& w) {
    Complex zd = z.model == Model::disc ? z.value : cayley_to_disc_raw(z.value);
    Complex wd = w.model == Model::disc ? w.value : cayley_to_disc_raw(w.value);
    double c = 4.0 / (kPi * std::pow(1.0 - std::abs(zd), 2) * std::pow(1.0 - std::abs(wd), 2));
    if (z.model == Model::halfplane)
        c *= std::abs(cayley_derivative(z.value)) * std::abs(cayley_derivative(w.value));
    return c;
}

// Green terms are bounded by 2 (1+|z|)/(1-|z|) * (1-|gamma(w)|) once the
// terms are small, and 1-|gamma(w)| <= 4 (1-|gamma(0)|)/(1-|w|^2).
double green_tail_constant(const ModelPoint& z, const ModelPoint& w) {
    Complex zd = z.model == Model::disc ? z.value : cayley_to_disc_raw(z.value);
    Complex wd = w.model == Model::disc ? w.value : cayley_to_disc_raw(w.value);
    double az = std::abs(zd), aw = std::abs(wd);
    return 8.0 * (1.0 + az) / ((1.0 - az) * one_minus_sq(aw));
}

} // namespace

QuotientSeries::QuotientSeries(const GroupSpec& g, MembershipPredicate pred, SeriesOptions opts)
    : QuotientSeries(g,
                     enumerate_ball(g, opts.max_len, EnumerationOptions{opts.cap, false, 0.0}),
                     std::move(pred), opts) {}

QuotientSeries::QuotientSeries(const GroupSpec& g, const EnumerationBall& ball,
                               MembershipPredicate pred, SeriesOptions opts)
    : model_(g.model), opts_(opts) {
    g.validate();
    if (!g.asserted_convergence_type)
        throw NumericError("orbit series require a group asserted to be of convergence type");
    const bool pred_identity_only = pred.identity_only;
    opts_.max_len = ball.max_len;
    workers_ = opts_.workers > 0 ? opts_.workers : reduction::env_worker_count();

    std::vector<double> full_increments;
    for (int l = 1; l <= ball.max_len; ++l)
        full_increments.push_back(ball.shell_displacement_sum(l));
    ShellFit full = fit_shell_decay(full_increments);
    fitted_ratio_ = full.ratio;
    decay_warning_ = full.decay_warning;

    for (const BallElement& e : ball.elements)
        if (pred(e.word)) members_.push_back(e);

    if (opts_.policy == ClosurePolicy::inversion_closed ||
        opts_.policy == ClosurePolicy::right_coset_closed) {
        std::unordered_set<Word, WordHash> seen;
        for (const BallElement& e : members_) seen.insert(e.word);

        if (opts_.policy == ClosurePolicy::inversion_closed) {
            std::size_t n = members_.size();
            for (std::size_t i = 0; i < n; ++i) {
                Word inv = members_[i].word.inverse();
                if (seen.insert(inv).second) {
                    MoebiusMap m = members_[i].map.inverse();
                    members_.push_back({inv, m, disc_displacement(m)});
                }
            }
        } else {
            if (opts_.coset_word.empty())
                throw ConfigError("right_coset_closed policy requires a nonempty coset word");
            if (!pred(opts_.coset_word))
                throw ConfigError("coset word must belong to the summed subgroup");
            MoebiusMap g0 = word_to_matrix(g, opts_.coset_word);
            MoebiusMap g0inv = g0.inverse();
            Word w0inv = opts_.coset_word.inverse();
            std::vector<BallElement> queue = members_;
            while (!queue.empty()) {
                BallElement cur = queue.back();
                queue.pop_back();
                for (int dir = 0; dir < 2; ++dir) {
                    Word next = cur.word * (dir == 0 ? opts_.coset_word : w0inv);
                    if (!seen.insert(next).second) continue;
                    MoebiusMap m = compose(cur.map, dir == 0 ? g0 : g0inv);
                    double disp = disc_displacement(m);
                    if (disp < kCosetDisplacementFloor) continue;
                    if (members_.size() >= opts_.cap)
                        throw ResourceCapError("coset closure exceeds the element cap");
                    members_.push_back({next, m, disp});
                    queue.push_back(members_.back());
                }
            }
        }
        std::sort(members_.begin(), members_.end(),
                  [](const BallElement& a, const BallElement& b) { return a.word < b.word; });
    }

    std::size_t max_seen = 0;
    for (const BallElement& e : members_) max_seen = std::max(max_seen, e.word.length());
    std::vector<double> filtered(max_seen, 0.0);
    bool any = false;
    for (const BallElement& e : members_) {
        if (e.word.empty()) continue;
        filtered[e.word.length() - 1] += e.displacement;
        any = true;
    }
    if (pred_identity_only) {
        displacement_tail_ = 0.0; // the subgroup is exhausted by the identity
    } else if (any) {
        displacement_tail_ = geometric_tail(filtered, static_cast<int>(max_seen), fitted_ratio_);
    } else {
        // No nonidentity member enumerated; the whole-group tail beyond the
        // ball dominates the subgroup tail.
        displacement_tail_ = geometric_tail(full_increments, ball.max_len, fitted_ratio_);
    }
}

KernelValue QuotientSeries::kernel(const ModelPoint& z, const ModelPoint& w) const {
    require_same_model(z.model, model_, "quotient_kernel_series");
    require_same_model(w.model, model_, "quotient_kernel_series");
    if (!z.interior() || !w.interior())
        throw NumericError("quotient kernel series requires interior points");

    auto term = [&](std::size_t i) {
        const BallElement& e = members_[i];
        Complex gw = apply_raw(e.map, w.value);
        Complex dgw = std::conj(derivative_raw(e.map, w.value));
        return model_ == Model::disc ? disc_kernel(z.value, gw) * dgw
                                     : halfplane_kernel(z.value, gw) * dgw;
    };
    Complex value = reduction::deterministic_sum(members_.size(), workers_, term);

    KernelValue out;
    out.value = value;
    out.tail_estimate = 2.0 * kernel_tail_constant(z, w) * displacement_tail_;
    out.truncation = {opts_.max_len, opts_.policy, members_.size(), decay_warning_};
    return out;
}

GreenValue QuotientSeries::green(const ModelPoint& z, const ModelPoint& w) const {
    require_same_model(z.model, model_, "green_series");
    require_same_model(w.model, model_, "green_series");
    if (!z.interior() || !w.interior())
        throw NumericError("green series requires interior points");

    auto pseudo = [&](std::size_t i) {
        Complex gw = apply_raw(members_[i].map, w.value);
        if (model_ == Model::disc)
            return std::abs((z.value - gw) / (1.0 - std::conj(gw) * z.value));
        return std::abs((z.value - gw) / (z.value - std::conj(gw)));
    };
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (pseudo(i) < 1e-8)
            throw SingularityError("green series: z lies in the enumerated orbit of w");
    }
    double value = reduction::deterministic_sum_real(
        members_.size(), workers_, [&](std::size_t i) { return -std::log(pseudo(i)); });

    GreenValue out;
    out.value = value;
    out.tail_estimate = 2.0 * green_tail_constant(z, w) * displacement_tail_;
    out.terms_used = members_.size();
    return out;
}

KernelValue quotient_kernel_series(const GroupSpec& g, const MembershipPredicate& pred,
                                   const ModelPoint& z, const ModelPoint& w,
                                   const SeriesOptions& opts) {
    return QuotientSeries(g, pred, opts).kernel(z, w);
}

GreenValue green_series(const GroupSpec& g, const MembershipPredicate& pred,
                        const ModelPoint& z, const ModelPoint& w, const SeriesOptions& opts) {
    return QuotientSeries(g, pred, opts).green(z, w);
}

double hyp_norm_diag(Complex k_diag, const ModelPoint& z) {
    if (std::abs(k_diag.imag()) > 1e-8 * (1.0 + std::abs(k_diag.real())))
        throw NumericError("hyp_norm_diag: diagonal kernel value is not real");
    if (k_diag.real() < 0.0)
        throw NumericError("hyp_norm_diag: negative diagonal signals truncation failure");
    if (z.model == Model::disc) {
        double f = one_minus_sq(std::abs(z.value));
        return k_diag.real() * f * f / 4.0;
    }
    double y = z.value.imag();
    return k_diag.real() * y * y;
}

double bergman_metric_fd(const std::function<Complex(Complex, Complex)>& kernel,
                         const ModelPoint& z, const FdOptions& fd) {
    auto logk = [&](double x, double y) {
        Complex p{x, y};
        Complex k = kernel(p, p);
        if (!(k.real() > 0.0) || std::abs(k.imag()) > 1e-6 * (1.0 + std::abs(k.real())))
            throw NumericError("bergman_metric_fd: kernel not positive on the stencil");
        return std::log(k.real());
    };
    double x0 = z.value.real(), y0 = z.value.imag();
    auto lap9 = [&](double h) {
        double edges = logk(x0 + h, y0) + logk(x0 - h, y0) + logk(x0, y0 + h) + logk(x0, y0 - h);
        double corners = logk(x0 + h, y0 + h) + logk(x0 + h, y0 - h) + logk(x0 - h, y0 + h) +
                         logk(x0 - h, y0 - h);
        return (4.0 * edges + corners - 20.0 * logk(x0, y0)) / (6.0 * h * h);
    };
    double lap = fd.richardson ? (4.0 * lap9(fd.h / 2.0) - lap9(fd.h)) / 3.0 : lap9(fd.h);
    return lap / 4.0;
}

double schiffer_check(const GroupSpec& g, const MembershipPredicate& pred, const ModelPoint& z,
                      const ModelPoint& w, double h, const SeriesOptions& opts) {
    QuotientSeries series(g, pred, opts);
    Complex q = series.kernel(z, w).value;
    Model model = g.model;
    auto gr = [&](double x, double y, double u, double v) {
        return series.green(ModelPoint{{x, y}, model}, ModelPoint{{u, v}, model}).value;
    };
    double x = z.value.real(), y = z.value.imag();
    double u = w.value.real(), v = w.value.imag();
    double h2 = 4.0 * h * h;
    double dxu = (gr(x + h, y, u + h, v) - gr(x + h, y, u - h, v) - gr(x - h, y, u + h, v) +
                  gr(x - h, y, u - h, v)) / h2;
    double dyv = (gr(x, y + h, u, v + h) - gr(x, y + h, u, v - h) - gr(x, y - h, u, v + h) +
                  gr(x, y - h, u, v - h)) / h2;
    double dxv = (gr(x + h, y, u, v + h) - gr(x + h, y, u, v - h) - gr(x - h, y, u, v + h) +
                  gr(x - h, y, u, v - h)) / h2;
    double dyu = (gr(x, y + h, u + h, v) - gr(x, y + h, u - h, v) - gr(x, y - h, u + h, v) +
                  gr(x, y - h, u - h, v)) / h2;
    Complex mixed = 0.25 * Complex{dxu + dyv, dxv - dyu};
    return std::abs(q - (-2.0 / kPi) * mixed);
}

} // namespace bergstab
