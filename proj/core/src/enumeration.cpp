#include "bergstab/enumeration.hpp"

#include <cmath>

#include "bergstab/errors.hpp"

namespace bergstab {

double disc_displacement(const MoebiusMap& m) {
    if (m.model() == Model::disc) {
        // Normalized disc automorphisms satisfy |d|^2 - |b|^2 = 1, so
        // 1 - |b/d| = 1 / (|d| (|d| + |b|)) without cancellation.
        double ad = std::abs(m.d()), ab = std::abs(m.b());
        return 1.0 / (ad * (ad + ab));
    }
    // gamma(i) = ((ac + bd) + i) / (c^2 + d^2) for real entries with det 1;
    // the exact imaginary part keeps 1 - |C(gamma(i))| accurate far out.
    double a = m.a().real(), b = m.b().real(), c = m.c().real(), d = m.d().real();
    double denom = c * c + d * d;
    Complex q{(a * c + b * d) / denom, 1.0 / denom};
    double plus = std::abs(q + Complex{0.0, 1.0});
    double minus = std::abs(q - Complex{0.0, 1.0});
    return 4.0 * q.imag() / (plus * (plus + minus));
}

double EnumerationBall::shell_displacement_sum(int len) const {
    double s = 0.0;
    for (std::size_t i = shell_begin(len); i < shell_end(len); ++i)
        s += elements[i].displacement;
    return s;
}

unsigned long long reduced_word_count(int rank, int max_len) {
    if (max_len < 0) throw ConfigError("word length bound must be >= 0");
    unsigned long long r = static_cast<unsigned long long>(rank);
    if (r == 1) return 2ull * static_cast<unsigned long long>(max_len) + 1ull;
    // 1 + 2r ((2r-1)^L - 1)/(2r-2), accumulated shell by shell to avoid overflow
    unsigned long long total = 1, shell = 2 * r;
    for (int l = 1; l <= max_len; ++l) {
        if (total > ~0ull - shell) throw ResourceCapError("reduced word count overflows");
        total += shell;
        if (shell > (~0ull) / (2 * r - 1)) throw ResourceCapError("reduced word count overflows");
        shell *= 2 * r - 1;
    }
    return total;
}

MoebiusMap word_to_matrix(const GroupSpec& g, const Word& w) {
    MoebiusMap m = MoebiusMap::identity(g.model);
    for (const Letter& l : w.letters()) {
        if (l.gen >= g.rank())
            throw ConfigError("word references generator index beyond rank");
        const MoebiusMap& gen = g.generators[static_cast<std::size_t>(l.gen)];
        m = compose(m, l.sign > 0 ? gen : gen.inverse());
    }
    return m;
}

EnumerationBall enumerate_ball(const GroupSpec& g, int max_len, const EnumerationOptions& opts) {
    g.validate();
    if (max_len < 0) throw ConfigError("enumerate_ball requires max_len >= 0");

    const int rank = g.rank();
    const int letter_count = 2 * rank;

    std::vector<MoebiusMap> letter_maps;
    letter_maps.reserve(static_cast<std::size_t>(letter_count));
    for (int i = 0; i < rank; ++i) {
        letter_maps.push_back(g.generators[static_cast<std::size_t>(i)]);
        letter_maps.push_back(g.generators[static_cast<std::size_t>(i)].inverse());
    }

    // Worst-case growth of the displacement under one extra letter, used by
    // the optional subtree pruning.
    double growth = 1.0;
    if (opts.prune) {
        for (const MoebiusMap& lm : letter_maps) {
            double disp = disc_displacement(lm);
            growth = std::max(growth, 4.0 / (disp * (2.0 - disp)));
        }
    }

    EnumerationBall ball;
    ball.max_len = max_len;
    ball.shell_offsets.assign(static_cast<std::size_t>(max_len) + 2, 0);

    ball.elements.push_back({Word{}, MoebiusMap::identity(g.model), 1.0});
    ball.shell_offsets[1] = 1;

    for (int len = 1; len <= max_len; ++len) {
        std::size_t begin = ball.shell_begin(len - 1), end = ball.shell_end(len - 1);
        for (std::size_t pi = begin; pi < end; ++pi) {
            if (opts.prune && len > 1) {
                double remaining = static_cast<double>(max_len - len + 1);
                if (ball.elements[pi].displacement * std::pow(growth, remaining) <
                    opts.prune_tol) {
                    ball.pruned = true;
                    continue;
                }
            }
            for (int code = 0; code < letter_count; ++code) {
                Letter l{code / 2, code % 2 == 0 ? 1 : -1};
                const Word& pw = ball.elements[pi].word;
                if (!pw.empty() && pw.letters().back().inverse_of(l)) continue;
                if (ball.elements.size() >= opts.cap)
                    throw ResourceCapError(
                        "enumeration would exceed the element cap of " +
                        std::to_string(opts.cap));
                MoebiusMap m = compose(ball.elements[pi].map,
                                       letter_maps[static_cast<std::size_t>(code)]);
                ball.elements.push_back({pw.append(l), m, disc_displacement(m)});
            }
        }
        ball.shell_offsets[static_cast<std::size_t>(len) + 1] = ball.elements.size();
    }
    return ball;
}

} // namespace bergstab
