#include "jacross/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jacross/gamma.hpp"
#include "jacross/summation.hpp"

namespace jacross {

namespace {

constexpr double kPi = std::numbers::pi;

void require_schedule(std::span<const std::int64_t> schedule) {
    if (schedule.empty()) {
        throw std::invalid_argument("schedule must be non-empty");
    }
    std::int64_t prev = 0;
    for (const std::int64_t m : schedule) {
        if (m <= prev) {
            throw std::invalid_argument("schedule must be strictly increasing and positive");
        }
        prev = m;
    }
}

void require_tolerance(double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
}

// Accumulates the identity summands in increasing l and reports the Cesaro
// value at every scheduled checkpoint. identity_lhs and verify_identity both
// run through here, so a standalone evaluation at m is bit-identical to the
// m-th checkpoint of a longer scan.
template <typename Callback>
void identity_scan(const JacobiParams& params, double x,
                   std::span<const std::int64_t> schedule, Callback&& report) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("identity sum: requires |x| < 1 (the limit diverges at the endpoints)");
    }
    const double prefactor = std::exp2(params.alpha() + params.beta() + 1.0);
    CompensatedSum sum;
    OrthonormalSequence seq(params, x);
    std::size_t next = 0;
    const std::int64_t last = schedule.back();
    for (std::int64_t ell = 0; ell <= last; ++ell) {
        const double p = seq.next();
        sum.add(p * p);
        while (next < schedule.size() && schedule[next] == ell) {
            report(ell, prefactor * sum.value() / static_cast<double>(ell));
            ++next;
        }
    }
}

double power_int(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

// One term of the cut-locus sum, as a Gamma ratio of half-integer arguments.
// The log differences are paired numerator-to-denominator so nearby
// arguments cancel; for the complex projective family they cancel exactly
// and the term reduces to the integer 2l + alpha + beta + 1 times exp(0).
double cutlocus_term(const JacobiParams& params, std::int64_t ell) {
    const double a = params.alpha();
    const double b = params.beta();
    const double l = static_cast<double>(ell);
    const double log_ratio = (log_gamma(l + a + b + 1.0) - log_gamma(l + a + 1.0)) +
                             (log_gamma(l + b + 1.0) - log_gamma(l + 1.0));
    return (2.0 * l + a + b + 1.0) * std::exp(log_ratio);
}

SpaceParams require_projective(const SymmetricSpace& space, const char* what) {
    SpaceParams sp = space_params(space);
    if (!sp.cut_locus) {
        throw std::invalid_argument(std::string(what) +
                                    ": not supported on spheres (no cut-locus data)");
    }
    return sp;
}

template <typename Callback>
void cutlocus_scan(const SymmetricSpace& space, std::span<const std::int64_t> schedule,
                   Callback&& report) {
    const SpaceParams sp = require_projective(space, "cutlocus_sum");
    const int k = sp.cut_locus->codim;
    CompensatedSum sum;
    std::size_t next = 0;
    const std::int64_t last = schedule.back();
    for (std::int64_t ell = 0; ell <= last; ++ell) {
        sum.add(cutlocus_term(sp.jacobi, ell));
        while (next < schedule.size() && schedule[next] == ell) {
            // rescale by m^-k only at the checkpoint, never per term
            report(ell, sum.value() / power_int(static_cast<double>(ell), k));
            ++next;
        }
    }
}

std::optional<double> fit_rate_if_possible(const ConvergenceReport& report) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& entry : report.entries) {
        if (entry.rel_err > 0.0 && std::isfinite(entry.rel_err)) {
            xs.push_back(std::log(static_cast<double>(entry.m)));
            ys.push_back(std::log(entry.rel_err));
        }
    }
    if (xs.size() < 3) return std::nullopt;
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(xs.size());
    mean_y /= static_cast<double>(xs.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    return sxy / sxx;
}

ConvergenceReport build_report(std::vector<ConvergenceEntry> entries, double tol) {
    ConvergenceReport report;
    report.entries = std::move(entries);
    report.tolerance = tol;
    report.passed = report.entries.back().rel_err <= tol;
    report.fitted_rate = fit_rate_if_possible(report);
    return report;
}

} // namespace

double identity_lhs(const JacobiParams& params, std::int64_t m, double x) {
    if (m < 1) {
        throw std::invalid_argument("identity_lhs: m must be >= 1");
    }
    const std::int64_t schedule[] = {m};
    double out = 0.0;
    identity_scan(params, x, schedule, [&out](std::int64_t, double value) { out = value; });
    return out;
}

double identity_rhs(const JacobiParams& params, double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("identity_rhs: requires |x| < 1");
    }
    const double a = params.alpha();
    const double b = params.beta();
    return std::exp2(a + b + 1.0) /
           (kPi * std::pow(1.0 - x, a + 0.5) * std::pow(1.0 + x, b + 0.5));
}

ConvergenceReport verify_identity(const JacobiParams& params, double x,
                                  std::span<const std::int64_t> schedule, double tol) {
    require_schedule(schedule);
    require_tolerance(tol);
    const double target = identity_rhs(params, x);
    std::vector<ConvergenceEntry> entries;
    entries.reserve(schedule.size());
    identity_scan(params, x, schedule, [&entries, target](std::int64_t m, double lhs) {
        entries.push_back({m, lhs, target, std::abs(lhs - target) / std::abs(target)});
    });
    return build_report(std::move(entries), tol);
}

double cutlocus_sum(const SymmetricSpace& space, std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("cutlocus_sum: m must be >= 1");
    }
    const std::int64_t schedule[] = {m};
    double out = 0.0;
    cutlocus_scan(space, schedule, [&out](std::int64_t, double value) { out = value; });
    return out;
}

ConvergenceReport verify_cutlocus(const SymmetricSpace& space,
                                  std::span<const std::int64_t> schedule, double tol) {
    require_schedule(schedule);
    require_tolerance(tol);
    const SpaceParams sp = require_projective(space, "verify_cutlocus");
    const double target = 2.0 / sp.cut_locus->codim;
    std::vector<ConvergenceEntry> entries;
    entries.reserve(schedule.size());
    cutlocus_scan(space, schedule, [&entries, target](std::int64_t m, double lhs) {
        entries.push_back({m, lhs, target, std::abs(lhs - target) / std::abs(target)});
    });
    return build_report(std::move(entries), tol);
}

KuznecovResult kuznecov_sum(const SymmetricSpace& space, const SumTarget& target, double T) {
    if (!(T > 0.0)) {
        throw std::domain_error("kuznecov_sum: threshold T must be positive");
    }
    const SpaceParams sp = space_params(space);
    double x_target = 0.0;
    double codim = 0.0;
    double measure = 0.0;
    if (target.kind() == SumTarget::Kind::DistanceSphere) {
        x_target = std::cos(2.0 * sp.omega * target.radius());
        codim = 1.0;
        measure = area(space, target.radius()); // validates the radius
    } else {
        const SpaceParams proj = require_projective(space, "kuznecov_sum (cut locus)");
        x_target = -1.0;
        codim = static_cast<double>(proj.cut_locus->codim);
        measure = proj.cut_locus->measure;
    }

    const std::int64_t ell_max = max_degree_below(space, T).value(); // T > 0 includes l = 0
    const double scale = 1.0 / pushforward_prefactor(space);         // c_l^2 h_l
    CompensatedSum sum;
    OrthonormalSequence seq(sp.jacobi, x_target);
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        const double p = seq.next();
        sum.add(p * p);
    }
    const double empirical = scale * sum.value();
    const double predicted =
        std::exp(0.5 * codim * std::log(T / (4.0 * kPi)) - log_gamma(0.5 * codim + 1.0)) /
        measure;
    return {empirical, predicted};
}

double fit_rate(const ConvergenceReport& report) {
    const auto rate = fit_rate_if_possible(report);
    if (!rate) {
        throw std::invalid_argument(
            "fit_rate: needs at least three entries with nonzero error");
    }
    return *rate;
}

} // namespace jacross
