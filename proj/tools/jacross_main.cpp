// Command-line surface: space catalog dumps, single Jacobi evaluations, and
// the identity / cut-locus / spectral-sum verification runs with CSV output.
//
// Exit codes: 0 pass, 1 tolerance failure, 2 usage or domain error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacross/asymptotics.hpp"
#include "jacross/gamma.hpp"
#include "jacross/jacobi.hpp"
#include "jacross/quadrature.hpp"
#include "jacross/spaces.hpp"

namespace {

using namespace jacross;

// 17 significant digits: enough for the printed value to re-read to the
// exact binary double.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open CSV output file '" + path + "'");
    }
    return out;
}

int finish(bool passed, double err, double tol) {
    if (passed) {
        std::printf("RESULT: PASS\n");
        return 0;
    }
    std::printf("RESULT: FAIL rel_err=%s tol=%s\n", fmt(err).c_str(), fmt(tol).c_str());
    return 1;
}

std::vector<std::int64_t> parse_schedule(const std::string& text) {
    std::vector<std::int64_t> schedule;
    if (text.rfind("geo:", 0) == 0) {
        const std::string body = text.substr(4);
        const auto c1 = body.find(':');
        const auto c2 = body.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw std::invalid_argument("geometric schedule must be geo:start:factor:count");
        }
        const std::int64_t start = std::stoll(body.substr(0, c1));
        const double factor = std::stod(body.substr(c1 + 1, c2 - c1 - 1));
        const std::int64_t count = std::stoll(body.substr(c2 + 1));
        if (start < 1 || count < 1 || !(factor > 1.0)) {
            throw std::invalid_argument("geometric schedule needs start >= 1, factor > 1, count >= 1");
        }
        for (std::int64_t i = 0; i < count; ++i) {
            schedule.push_back(static_cast<std::int64_t>(
                std::llround(static_cast<double>(start) * std::pow(factor, static_cast<double>(i)))));
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            const auto comma = text.find(',', pos);
            const std::string item =
                text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            schedule.push_back(std::stoll(item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (schedule.empty()) {
        throw std::invalid_argument("empty m-schedule");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw std::invalid_argument("m-schedule must be strictly increasing");
        }
    }
    if (schedule.front() < 1) {
        throw std::invalid_argument("m-schedule entries must be positive");
    }
    return schedule;
}

void print_report(const ConvergenceReport& report) {
    std::printf("%12s %24s %24s %14s\n", "m", "lhs", "target", "rel_err");
    for (const auto& entry : report.entries) {
        std::printf("%12lld %24.16g %24.16g %14.6g\n", static_cast<long long>(entry.m),
                    entry.lhs, entry.target, entry.rel_err);
    }
    if (report.fitted_rate) {
        std::printf("fitted rate: %.4f\n", *report.fitted_rate);
    }
}

void write_report_csv(const std::string& path, const ConvergenceReport& report) {
    auto out = open_csv(path);
    out << "m,lhs,target,rel_error\n";
    for (const auto& entry : report.entries) {
        out << entry.m << ',' << fmt(entry.lhs) << ',' << fmt(entry.target) << ','
            << fmt(entry.rel_err) << '\n';
    }
}

struct Options {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<std::string> space;
    double x = 0.0;
    std::int64_t degree = 0;
    std::int64_t max_degree = 50;
    std::int64_t nodes = 64;
    std::string schedule_text;
    std::string target_text;
    double t_max = 0.0;
    std::int64_t steps = 8;
    std::optional<double> tol;
    std::optional<std::string> csv;
};

JacobiParams resolve_params(const Options& opt, bool allow_space) {
    const bool have_pair = opt.alpha.has_value() || opt.beta.has_value();
    if (opt.space && have_pair) {
        throw std::invalid_argument("give either --space or --alpha/--beta, not both");
    }
    if (opt.space) {
        if (!allow_space) {
            throw std::invalid_argument("--space is not accepted here");
        }
        return space_params(parse_space(*opt.space)).jacobi;
    }
    if (!opt.alpha || !opt.beta) {
        throw std::invalid_argument("missing --alpha/--beta (or --space)");
    }
    return {*opt.alpha, *opt.beta};
}

int run_spaces() {
    const SymmetricSpace catalog[] = {
        SymmetricSpace::sphere(1),
        SymmetricSpace::sphere(2),
        SymmetricSpace::sphere(3),
        SymmetricSpace::complex_projective(2),
        SymmetricSpace::complex_projective(3),
        SymmetricSpace::quaternionic_projective(2),
        SymmetricSpace::quaternionic_projective(3),
        SymmetricSpace::cayley_plane(),
    };
    std::printf("%-10s %4s %4s %4s %10s %8s %7s %7s %4s %14s %14s\n", "space", "d", "p", "q",
                "L", "omega", "alpha", "beta", "k", "nu(N)", "volume");
    for (const auto& space : catalog) {
        const SpaceParams sp = space_params(space);
        std::string k = "-";
        std::string nu = "-";
        if (sp.cut_locus) {
            k = std::to_string(sp.cut_locus->codim);
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.8g", sp.cut_locus->measure);
            nu = buf;
        }
        std::printf("%-10s %4d %4d %4d %10.8g %8.4g %7.3g %7.3g %4s %14s %14.8g\n",
                    space.name().c_str(), sp.dim, sp.p, sp.q, sp.diameter, sp.omega,
                    sp.jacobi.alpha(), sp.jacobi.beta(), k.c_str(), nu.c_str(), volume(space));
    }
    std::printf("RESULT: PASS\n");
    return 0;
}

int run_eval(const Options& opt) {
    const JacobiParams params = resolve_params(opt, false);
    const double value = jacobi_eval(params, opt.degree, opt.x);
    std::printf("P(alpha=%s, beta=%s, degree=%lld, x=%s) = %s\n", fmt(params.alpha()).c_str(),
                fmt(params.beta()).c_str(), static_cast<long long>(opt.degree),
                fmt(opt.x).c_str(), fmt(value).c_str());
    std::printf("RESULT: PASS\n");
    return 0;
}

int run_verify_identity(const Options& opt) {
    const JacobiParams params = resolve_params(opt, true);
    const auto schedule = parse_schedule(opt.schedule_text);
    const double tol = opt.tol.value_or(0.02);
    const ConvergenceReport report = verify_identity(params, opt.x, schedule, tol);
    print_report(report);
    if (opt.csv) write_report_csv(*opt.csv, report);
    return finish(report.passed, report.entries.back().rel_err, tol);
}

int run_verify_cutlocus(const Options& opt) {
    if (!opt.space) throw std::invalid_argument("missing --space");
    const SymmetricSpace space = parse_space(*opt.space);
    const auto schedule = parse_schedule(opt.schedule_text);
    const double tol = opt.tol.value_or(0.005);
    const ConvergenceReport report = verify_cutlocus(space, schedule, tol);
    print_report(report);
    if (opt.csv) write_report_csv(*opt.csv, report);
    return finish(report.passed, report.entries.back().rel_err, tol);
}

int run_kuznecov(const Options& opt) {
    if (!opt.space) throw std::invalid_argument("missing --space");
    const SymmetricSpace space = parse_space(*opt.space);
    SumTarget target = SumTarget::cut_locus();
    if (opt.target_text.rfind("sphere:", 0) == 0) {
        target = SumTarget::distance_sphere(std::stod(opt.target_text.substr(7)));
    } else if (opt.target_text != "cutlocus") {
        throw std::invalid_argument("--target must be sphere:<r> or cutlocus");
    }
    if (!(opt.t_max > 0.0)) throw std::invalid_argument("--t-max must be positive");
    if (opt.steps < 1) throw std::invalid_argument("--steps must be >= 1");
    const double tol = opt.tol.value_or(0.05);

    std::ofstream csv;
    if (opt.csv) {
        csv = open_csv(*opt.csv);
        csv << "T,empirical,predicted,ratio\n";
    }
    std::printf("%18s %20s %20s %12s\n", "T", "empirical", "predicted", "ratio");
    double final_ratio = 0.0;
    for (std::int64_t i = 1; i <= opt.steps; ++i) {
        const double T = opt.t_max * static_cast<double>(i) / static_cast<double>(opt.steps);
        const KuznecovResult r = kuznecov_sum(space, target, T);
        final_ratio = r.empirical / r.predicted;
        std::printf("%18.10g %20.12g %20.12g %12.8g\n", T, r.empirical, r.predicted,
                    final_ratio);
        if (csv.is_open()) {
            csv << fmt(T) << ',' << fmt(r.empirical) << ',' << fmt(r.predicted) << ','
                << fmt(final_ratio) << '\n';
        }
    }
    const double err = std::abs(final_ratio - 1.0);
    return finish(err <= tol, err, tol);
}

int run_orthogonality(const Options& opt) {
    const JacobiParams params = resolve_params(opt, false);
    const double tol = opt.tol.value_or(1e-10);
    const std::int64_t dim = opt.max_degree + 1;
    const QuadratureRule rule = gauss_jacobi(params, opt.nodes);
    std::vector<std::vector<double>> values(rule.nodes.size());
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        values[k] = orthonormal_eval_all(params, opt.max_degree, rule.nodes[k]);
    }
    std::ofstream csv;
    if (opt.csv) {
        csv = open_csv(*opt.csv);
        csv << "i,j,gram_entry,abs_error\n";
    }
    double worst = 0.0;
    for (std::int64_t i = 0; i < dim; ++i) {
        for (std::int64_t j = 0; j < dim; ++j) {
            double entry = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                entry += rule.weights[k] * values[k][static_cast<std::size_t>(i)] *
                         values[k][static_cast<std::size_t>(j)];
            }
            const double err = std::abs(entry - (i == j ? 1.0 : 0.0));
            if (err > worst) worst = err;
            if (csv.is_open()) {
                csv << i << ',' << j << ',' << fmt(entry) << ',' << fmt(err) << '\n';
            }
        }
    }
    std::printf("Gram matrix through degree %lld with %lld nodes: max |G - I| = %s\n",
                static_cast<long long>(opt.max_degree), static_cast<long long>(opt.nodes),
                fmt(worst).c_str());
    return finish(worst <= tol, worst, tol);
}

int run_normalization(const Options& opt) {
    if (!opt.space) throw std::invalid_argument("missing --space");
    const SymmetricSpace space = parse_space(*opt.space);
    const SpaceParams sp = space_params(space);
    const double tol = opt.tol.value_or(1e-8);
    const double prefactor = pushforward_prefactor(space);
    double worst = 0.0;
    for (std::int64_t ell = 0; ell <= opt.max_degree; ++ell) {
        const QuadratureRule rule = gauss_jacobi(sp.jacobi, ell + 1);
        const double c = normalizing_constant(space, ell);
        const double integral = integrate(rule, [&](double x) {
            const double phi = c * jacobi_eval(sp.jacobi, ell, x);
            return phi * phi * prefactor;
        });
        const double err = std::abs(integral - 1.0);
        if (err > worst) worst = err;
    }
    std::printf("norm of the radial eigenfunctions of %s through degree %lld: max |error| = %s\n",
                space.name().c_str(), static_cast<long long>(opt.max_degree),
                fmt(worst).c_str());
    return finish(worst <= tol, worst, tol);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi polynomials and spectral sums on compact rank-one symmetric spaces"};
    app.require_subcommand(1);
    Options opt;

    auto* spaces_cmd = app.add_subcommand("spaces", "print the space catalog");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one Jacobi polynomial");
    eval_cmd->add_option("--alpha", opt.alpha)->required();
    eval_cmd->add_option("--beta", opt.beta)->required();
    eval_cmd->add_option("--degree", opt.degree)->required();
    eval_cmd->add_option("--x", opt.x)->required();

    auto* vi_cmd = app.add_subcommand("verify-identity", "check the Cesaro-mean identity");
    vi_cmd->add_option("--space", opt.space);
    vi_cmd->add_option("--alpha", opt.alpha);
    vi_cmd->add_option("--beta", opt.beta);
    vi_cmd->add_option("--x", opt.x)->required();
    vi_cmd->add_option("--m-schedule", opt.schedule_text)->required();
    vi_cmd->add_option("--tol", opt.tol);
    vi_cmd->add_option("--csv", opt.csv);

    auto* vc_cmd = app.add_subcommand("verify-cutlocus", "check the cut-locus limit");
    vc_cmd->add_option("--space", opt.space)->required();
    vc_cmd->add_option("--m-schedule", opt.schedule_text)->required();
    vc_cmd->add_option("--tol", opt.tol);
    vc_cmd->add_option("--csv", opt.csv);

    auto* kz_cmd = app.add_subcommand("kuznecov", "spectral sum against its predicted growth");
    kz_cmd->add_option("--space", opt.space)->required();
    kz_cmd->add_option("--target", opt.target_text)->required();
    kz_cmd->add_option("--t-max", opt.t_max)->required();
    kz_cmd->add_option("--steps", opt.steps);
    kz_cmd->add_option("--tol", opt.tol);
    kz_cmd->add_option("--csv", opt.csv);

    auto* og_cmd = app.add_subcommand("orthogonality", "Gram matrix under Gauss-Jacobi quadrature");
    og_cmd->add_option("--alpha", opt.alpha)->required();
    og_cmd->add_option("--beta", opt.beta)->required();
    og_cmd->add_option("--max-degree", opt.max_degree);
    og_cmd->add_option("--nodes", opt.nodes);
    og_cmd->add_option("--tol", opt.tol);
    og_cmd->add_option("--csv", opt.csv);

    auto* nm_cmd = app.add_subcommand("normalization", "unit-norm check of radial eigenfunctions");
    nm_cmd->add_option("--space", opt.space)->required();
    nm_cmd->add_option("--max-degree", opt.max_degree);
    nm_cmd->add_option("--tol", opt.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }

    try {
        if (spaces_cmd->parsed()) return run_spaces();
        if (eval_cmd->parsed()) return run_eval(opt);
        if (vi_cmd->parsed()) return run_verify_identity(opt);
        if (vc_cmd->parsed()) return run_verify_cutlocus(opt);
        if (kz_cmd->parsed()) return run_kuznecov(opt);
        if (og_cmd->parsed()) return run_orthogonality(opt);
        if (nm_cmd->parsed()) return run_normalization(opt);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }
    return 2;
}
