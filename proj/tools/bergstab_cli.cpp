// Command-line front end: kernel/green evaluation, tower stability
// experiments, injectivity radii, ball enumeration, and the effective
// bound calculator.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bergstab/annulus.hpp"
#include "bergstab/config.hpp"
#include "bergstab/errors.hpp"
#include "bergstab/report.hpp"
#include "bergstab/tower.hpp"

namespace {

using namespace bergstab;

struct CommonArgs {
    std::string config_path;
    std::string z_arg, w_arg;
    std::string level;
    std::string out_path;
    std::string format = "both";
    int max_word_length = -1;
    double tol = -1.0;
};

Complex parse_complex_arg(const std::string& s, const char* what) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw ConfigError(std::string(what) + ": expected RE,IM, got '" + s + "'");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + ": malformed number in '" + s + "'");
    }
}

ExperimentConfig load_with_overrides(const CommonArgs& args) {
    ExperimentConfig cfg = load_config(args.config_path);
    if (args.max_word_length >= 0) cfg.series.max_len = args.max_word_length;
    if (args.tol > 0.0) cfg.series.tol = args.tol;
    if (!args.level.empty()) cfg.level = args.level;
    if ((cfg.group.asserted_free_discrete || cfg.group.asserted_convergence_type) &&
        !cfg.bundled) {
        std::cerr << "note: config asserts freeness/discreteness or convergence type; "
                     "these assertions are trusted, not verified\n";
    }
    return cfg;
}

ModelPoint point_in_group_model(const ExperimentConfig& cfg, Complex v) {
    return cfg.group.model == Model::disc ? disc_point(v) : halfplane_point(v);
}

void write_value_record(const ExperimentConfig& cfg, const std::string& path,
                        const std::string& kind, Complex z, Complex w, Complex value,
                        double tail, std::size_t terms) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    const char* policy = cfg.series.policy == ClosurePolicy::raw_ball ? "raw_ball"
                         : cfg.series.policy == ClosurePolicy::inversion_closed
                             ? "inversion_closed"
                             : "right_coset_closed";
    out << kind << "\n";
    out << "config_hash " << cfg.config_hash << "\n";
    out << "level " << cfg.level << "\n";
    out << "z " << format_full(z.real()) << "," << format_full(z.imag()) << "\n";
    out << "w " << format_full(w.real()) << "," << format_full(w.imag()) << "\n";
    out << "value " << format_full(value.real()) << "," << format_full(value.imag()) << "\n";
    out << "tail " << format_full(tail) << "\n";
    out << "terms_used " << terms << "\n";
    out << "max_len " << cfg.series.max_len << "\n";
    out << "policy " << policy << "\n";
}

int cmd_kernel(const CommonArgs& args) {
    ExperimentConfig cfg = load_with_overrides(args);
    Complex zv = parse_complex_arg(args.z_arg, "--z");
    Complex wv = parse_complex_arg(args.w_arg, "--w");
    ModelPoint z = point_in_group_model(cfg, zv), w = point_in_group_model(cfg, wv);

    QuotientSeries series(cfg.group, predicate_for_level(cfg, cfg.level), cfg.series);
    KernelValue k = series.kernel(z, w);
    if (k.truncation.decay_warning)
        std::cerr << "warning: shell increments stopped decaying; series may diverge\n";

    std::cout << "Q(z,w) = " << format_short(k.value.real()) << " + "
              << format_short(k.value.imag()) << "i\n";
    std::cout << "tail <= " << format_short(k.tail_estimate)
              << "  terms_used = " << k.truncation.terms_used
              << "  max_len = " << k.truncation.max_len << "\n";
    if (!args.out_path.empty())
        write_value_record(cfg, args.out_path, "kernel_value", zv, wv, k.value,
                           k.tail_estimate, k.truncation.terms_used);
    return 0;
}

int cmd_green(const CommonArgs& args) {
    ExperimentConfig cfg = load_with_overrides(args);
    Complex zv = parse_complex_arg(args.z_arg, "--z");
    Complex wv = parse_complex_arg(args.w_arg, "--w");
    ModelPoint z = point_in_group_model(cfg, zv), w = point_in_group_model(cfg, wv);

    QuotientSeries series(cfg.group, predicate_for_level(cfg, cfg.level), cfg.series);
    GreenValue gv = series.green(z, w);

    std::cout << "g(z,w) = " << format_short(gv.value) << "\n";
    std::cout << "tail <= " << format_short(gv.tail_estimate)
              << "  terms_used = " << gv.terms_used << "\n";
    if (!args.out_path.empty())
        write_value_record(cfg, args.out_path, "green_value", zv, wv,
                           Complex{gv.value, 0.0}, gv.tail_estimate, gv.terms_used);
    return 0;
}

int cmd_tower(const CommonArgs& args) {
    ExperimentConfig cfg = load_with_overrides(args);
    TowerReport report = run_tower_report(cfg);

    std::string base = args.out_path.empty() ? "tower_report" : args.out_path;
    if (args.format == "csv" || args.format == "both") {
        std::ofstream out(base + ".csv", std::ios::binary);
        if (!out) throw ConfigError("cannot open output file '" + base + ".csv'");
        write_tower_csv(report, out);
    }
    if (args.format == "record" || args.format == "both") {
        std::ofstream out(base + ".record", std::ios::binary);
        if (!out) throw ConfigError("cannot open output file '" + base + ".record'");
        write_tower_record(report, out);
    }

    for (const TowerReportRow& row : report.rows) {
        std::cout << "level " << row.j << ": index " << format_index(row.index)
                  << "  tau " << format_short(row.tau) << (row.tau_certified ? "" : " (heuristic)")
                  << "  sup|Q_j - Q_top| " << format_short(row.sup_grid_error)
                  << "  bound " << format_short(row.ej_bound) << "  terms "
                  << row.terms_used << "\n";
    }
    return 0;
}

int cmd_tau(const CommonArgs& args) {
    ExperimentConfig cfg = load_with_overrides(args);
    Complex zv = parse_complex_arg(args.z_arg, "--z");
    ModelPoint x = point_in_group_model(cfg, zv);
    InjectivityRadius tau = injectivity_radius(cfg.group, predicate_for_level(cfg, cfg.level),
                                               x, cfg.series.max_len);
    std::cout << "tau = " << format_short(tau.tau) << "  certified = "
              << (tau.certified ? "true" : "false") << "\n";
    return 0;
}

int cmd_enumerate(const CommonArgs& args) {
    ExperimentConfig cfg = load_with_overrides(args);
    EnumerationBall ball = enumerate_ball(cfg.group, cfg.series.max_len,
                                          EnumerationOptions{cfg.series.cap, false, 0.0});
    std::cout << "count = " << ball.size() << "\n";
    for (int l = 0; l <= ball.max_len; ++l) {
        std::cout << "length " << l << ": " << (ball.shell_end(l) - ball.shell_begin(l))
                  << " words, displacement sum " << format_short(ball.shell_displacement_sum(l))
                  << "\n";
    }
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file '" + args.out_path + "'");
        out << "# config_hash=" << cfg.config_hash << " max_len=" << cfg.series.max_len
            << "\n";
        out << "length,words,displacement_sum\n";
        for (int l = 0; l <= ball.max_len; ++l)
            out << l << "," << (ball.shell_end(l) - ball.shell_begin(l)) << ","
                << format_full(ball.shell_displacement_sum(l)) << "\n";
    }
    return 0;
}

int cmd_effective(long long genus, double tau) {
    double rhs = effective_bound_rhs(genus, tau);
    std::cout << "effective bound rhs = " << format_short(rhs) << "\n";
    std::cout << "valid for genus >= 2 and tau >= log 3 = "
              << format_short(std::log(3.0)) << "\n";
    return 0;
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    check("disc kernel at origin = 1/pi",
          std::abs(disc_kernel(0.0, 0.0).real() - 1.0 / kPi) < 1e-15);
    check("hyperbolic norm of disc kernel = 1/(4 pi)",
          std::abs(hyp_norm_diag(disc_kernel(0.3, 0.3), disc_point(0.3)) - 0.25 / kPi) < 1e-15);
    check("ball kernel matches 1/(pi r^2)",
          std::abs(ball_kernel_center(2.0) -
                   1.0 / (kPi * std::pow(radius_from_tau(2.0), 2))) < 1e-13);
    check("effective constant identity",
          std::abs(effective_constant() - effective_constant_recomputed()) < 1e-13);
    check("distance disc(0, 1/2) = log 3",
          std::abs(hyp_distance(disc_point(0.0), disc_point(0.5)) - std::log(3.0)) < 1e-14);
    check("cayley round trip",
          std::abs(cayley_to_halfplane_raw(cayley_to_disc_raw(Complex{0.3, 1.7})) -
                   Complex{0.3, 1.7}) < 1e-14);
    check("annulus modulus for lambda = e^{2 pi}",
          std::abs(annulus_modulus_from_multiplier(std::exp(2.0 * kPi)) - std::exp(-kPi)) <
              1e-15);
    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernels, Green functions, and tower stability on quotients of the "
                 "hyperbolic plane"};
    app.require_subcommand(1);

    CommonArgs args;
    long long genus = 2;
    double tau_arg = 0.0;

    auto add_common = [&](CLI::App* sub, bool needs_z, bool needs_w) {
        sub->add_option("--config", args.config_path, "experiment config file")
            ->required();
        if (needs_z) sub->add_option("--z", args.z_arg, "point RE,IM")->required();
        if (needs_w) sub->add_option("--w", args.w_arg, "point RE,IM")->required();
        sub->add_option("--level", args.level, "subgroup: base, top, or level number");
        sub->add_option("--max-word-length", args.max_word_length, "truncation length");
        sub->add_option("--tol", args.tol, "tail tolerance");
        sub->add_option("--out", args.out_path, "machine-readable output path");
    };

    CLI::App* kernel = app.add_subcommand("kernel", "quotient Bergman kernel Q(z,w)");
    add_common(kernel, true, true);
    CLI::App* green = app.add_subcommand("green", "Green function g(z,w)");
    add_common(green, true, true);
    CLI::App* tower = app.add_subcommand("tower", "tower stability report");
    add_common(tower, false, false);
    tower->add_option("--format", args.format, "csv, record, or both")
        ->check(CLI::IsMember({"csv", "record", "both"}));
    CLI::App* tau = app.add_subcommand("tau", "injectivity radius at a point");
    add_common(tau, true, false);
    CLI::App* enumerate = app.add_subcommand("enumerate", "word-ball census");
    add_common(enumerate, false, false);
    CLI::App* effective = app.add_subcommand("effective", "effective deviation bound");
    effective->add_option("--genus", genus, "base genus (>= 2)")->required();
    effective->add_option("--tau", tau_arg, "injectivity radius")->required();
    CLI::App* selftest = app.add_subcommand("selftest", "built-in identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (kernel->parsed()) return cmd_kernel(args);
        if (green->parsed()) return cmd_green(args);
        if (tower->parsed()) return cmd_tower(args);
        if (tau->parsed()) return cmd_tau(args);
        if (enumerate->parsed()) return cmd_enumerate(args);
        if (effective->parsed()) return cmd_effective(genus, tau_arg);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const ResourceCapError& e) {
        std::cerr << "{\"error\":\"resource_cap\",\"code\":4,\"message\":\"" << e.what()
                  << "\"}\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "{\"error\":\"config\",\"code\":2,\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "{\"error\":\"numeric\",\"code\":3,\"message\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"internal\",\"code\":1,\"message\":\"" << e.what() << "\"}\n";
        return 1;
    }
    return 0;
}
