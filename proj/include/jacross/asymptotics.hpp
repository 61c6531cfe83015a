#ifndef JACROSS_ASYMPTOTICS_HPP
#define JACROSS_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jacross/jacobi.hpp"
#include "jacross/spaces.hpp"

namespace jacross {

struct ConvergenceEntry {
    std::int64_t m;
    double lhs;
    double target;
    double rel_err; // |lhs - target| / |target|
};

/// Partial-sum evaluations along a schedule of m values, with the fitted
/// log-log slope of the error when at least three entries have nonzero
/// error. passed reflects the final entry against the tolerance.
struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    std::optional<double> fitted_rate;
    double tolerance = 0.0;
    bool passed = false;
};

/// Which submanifold a spectral sum integrates over: a distance sphere of
/// radius r, or the cut locus (projective families only).
class SumTarget {
  public:
    enum class Kind { DistanceSphere, CutLocus };

    static SumTarget distance_sphere(double radius) { return {Kind::DistanceSphere, radius}; }
    static SumTarget cut_locus() { return {Kind::CutLocus, 0.0}; }

    Kind kind() const { return kind_; }
    double radius() const { return radius_; }

  private:
    SumTarget(Kind kind, double radius) : kind_(kind), radius_(radius) {}

    Kind kind_;
    double radius_;
};

struct KuznecovResult {
    double empirical;
    double predicted;
};

/// Cesaro mean (1/m) sum_{l=0}^{m} of the weighted squared Jacobi values
/// whose limit is identity_rhs. Each summand is evaluated as
/// 2^(alpha+beta+1) ptilde_l(x)^2, so the sum stays bounded for any m;
/// accumulation is compensated and runs in increasing l, making results
/// bit-reproducible. Requires |x| < 1 and m >= 1.
double identity_lhs(const JacobiParams& params, std::int64_t m, double x);

/// The limit density 2^(alpha+beta+1) / (pi (1-x)^(alpha+1/2) (1+x)^(beta+1/2)).
double identity_rhs(const JacobiParams& params, double x);

/// Pairs identity_lhs along the schedule against identity_rhs.
ConvergenceReport verify_identity(const JacobiParams& params, double x,
                                  std::span<const std::int64_t> schedule, double tol);

/// (1/m^k) sum_{l=0}^{m} of the cut-locus Gamma-ratio terms; the limit is
/// 2/k. Defined for the projective families only.
double cutlocus_sum(const SymmetricSpace& space, std::int64_t m);

/// Pairs cutlocus_sum along the schedule against 2/k.
ConvergenceReport verify_cutlocus(const SymmetricSpace& space,
                                  std::span<const std::int64_t> schedule, double tol);

/// Spectral partial sum of squared radial Fourier coefficients of the
/// target's surface measure, next to its predicted power-law value
/// T^(k/2) / ((4 pi)^(k/2) Gamma(k/2 + 1) nu(N)). The sum runs over
/// eigenvalues strictly below T.
KuznecovResult kuznecov_sum(const SymmetricSpace& space, const SumTarget& target, double T);

/// Least-squares slope of log(rel_err) against log(m) over the entries with
/// nonzero error; requires at least three such entries.
double fit_rate(const ConvergenceReport& report);

} // namespace jacross

#endif
