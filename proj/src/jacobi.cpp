#include "jacross/jacobi.hpp"

#include <cmath>
#include <stdexcept>

#include "jacross/gamma.hpp"

namespace jacross {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_degree(std::int64_t ell) {
    if (ell < 0) {
        throw std::domain_error("jacobi: degree must be non-negative");
    }
}

double jacobi_first(const JacobiParams& p, double x) {
    return 0.5 * (p.alpha() - p.beta() + (p.alpha() + p.beta() + 2.0) * x);
}

// One step of the classical degree recurrence: given P_{k-1} and P_{k-2},
// produce P_k (k >= 2).
double jacobi_step(const JacobiParams& p, std::int64_t k, double x, double pm1, double pm2) {
    const double a = p.alpha();
    const double b = p.beta();
    const double apb = a + b;
    const double kk = static_cast<double>(k);
    const double c1 = 2.0 * kk * (kk + apb) * (2.0 * kk + apb - 2.0);
    const double c2 = (2.0 * kk + apb - 1.0) * (a * a - b * b);
    const double c3 = (2.0 * kk + apb - 2.0) * (2.0 * kk + apb - 1.0) * (2.0 * kk + apb);
    const double c4 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * (2.0 * kk + apb);
    return ((c2 + c3 * x) * pm1 - c4 * pm2) / c1;
}

} // namespace

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw std::domain_error("JacobiParams: alpha and beta must be > -1");
    }
}

double jacobi_eval(const JacobiParams& params, std::int64_t ell, double x) {
    require_degree(ell);
    if (ell == 0) return 1.0;
    double pm2 = 1.0;
    double pm1 = jacobi_first(params, x);
    for (std::int64_t k = 2; k <= ell; ++k) {
        const double pk = jacobi_step(params, k, x, pm1, pm2);
        pm2 = pm1;
        pm1 = pk;
    }
    return pm1;
}

std::vector<double> jacobi_eval_all(const JacobiParams& params, std::int64_t m, double x) {
    require_degree(m);
    std::vector<double> out(static_cast<std::size_t>(m) + 1);
    out[0] = 1.0;
    if (m == 0) return out;
    out[1] = jacobi_first(params, x);
    for (std::int64_t k = 2; k <= m; ++k) {
        out[static_cast<std::size_t>(k)] =
            jacobi_step(params, k, x, out[static_cast<std::size_t>(k - 1)],
                        out[static_cast<std::size_t>(k - 2)]);
    }
    return out;
}

double log_jacobi_norm_sq(const JacobiParams& params, std::int64_t ell) {
    require_degree(ell);
    const double a = params.alpha();
    const double b = params.beta();
    if (ell == 0) {
        // (2l+a+b+1) Gamma(l+a+b+1) -> Gamma(a+b+2) at l = 0; this is exact
        // for every parameter pair and is the finite limit in the
        // a + b + 1 = 0 case, where the generic expression reads 0 * inf.
        return (a + b + 1.0) * kLn2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
               log_gamma(a + b + 2.0);
    }
    const double l = static_cast<double>(ell);
    return (a + b + 1.0) * kLn2 + log_gamma(l + a + 1.0) + log_gamma(l + b + 1.0) -
           log_gamma(l + 1.0) - log_gamma(l + a + b + 1.0) -
           std::log(2.0 * l + a + b + 1.0);
}

double jacobi_norm_sq(const JacobiParams& params, std::int64_t ell) {
    return std::exp(log_jacobi_norm_sq(params, ell));
}

double weight_mass(const JacobiParams& params) {
    const double a = params.alpha();
    const double b = params.beta();
    return std::exp((a + b + 1.0) * kLn2 + log_beta(a + 1.0, b + 1.0));
}

double recurrence_diag(const JacobiParams& params, std::int64_t k) {
    require_degree(k);
    const double a = params.alpha();
    const double b = params.beta();
    if (k == 0) {
        return (b - a) / (a + b + 2.0);
    }
    const double s = 2.0 * static_cast<double>(k) + a + b;
    return (b * b - a * a) / (s * (s + 2.0));
}

double recurrence_offdiag_sq(const JacobiParams& params, std::int64_t k) {
    if (k < 1) {
        throw std::domain_error("recurrence_offdiag_sq: index must be >= 1");
    }
    const double a = params.alpha();
    const double b = params.beta();
    if (k == 1) {
        const double s = a + b + 2.0;
        return 4.0 * (a + 1.0) * (b + 1.0) / (s * s * (s + 1.0));
    }
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + a + b;
    return 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) /
           (s * s * (s + 1.0) * (s - 1.0));
}

OrthonormalSequence::OrthonormalSequence(const JacobiParams& params, double x)
    : params_(params), x_(x) {}

double OrthonormalSequence::next() {
    if (degree_ == 0) {
        cur_ = 1.0 / std::sqrt(weight_mass(params_));
        degree_ = 1;
        return cur_;
    }
    if (degree_ == 1) {
        const double sb = std::sqrt(recurrence_offdiag_sq(params_, 1));
        prev_ = cur_;
        cur_ = (x_ - recurrence_diag(params_, 0)) * prev_ / sb;
        offdiag_cur_ = sb;
        degree_ = 2;
        return cur_;
    }
    const std::int64_t k = degree_;
    const double sb = std::sqrt(recurrence_offdiag_sq(params_, k));
    const double next_val =
        ((x_ - recurrence_diag(params_, k - 1)) * cur_ - offdiag_cur_ * prev_) / sb;
    prev_ = cur_;
    cur_ = next_val;
    offdiag_cur_ = sb;
    ++degree_;
    return cur_;
}

std::vector<double> orthonormal_eval_all(const JacobiParams& params, std::int64_t m, double x) {
    require_degree(m);
    std::vector<double> out(static_cast<std::size_t>(m) + 1);
    OrthonormalSequence seq(params, x);
    for (std::int64_t k = 0; k <= m; ++k) {
        out[static_cast<std::size_t>(k)] = seq.next();
    }
    return out;
}

double jacobi_deriv(const JacobiParams& params, std::int64_t ell, double x) {
    require_degree(ell);
    if (ell == 0) return 0.0;
    const double s = static_cast<double>(ell) + params.alpha() + params.beta() + 1.0;
    const JacobiParams shifted(params.alpha() + 1.0, params.beta() + 1.0);
    return 0.5 * s * jacobi_eval(shifted, ell - 1, x);
}

double ode_residual(const JacobiParams& params, std::int64_t ell, double x) {
    require_degree(ell);
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("ode_residual: requires |x| < 1");
    }
    const double a = params.alpha();
    const double b = params.beta();
    const double l = static_cast<double>(ell);
    const double y = jacobi_eval(params, ell, x);
    const double yp = jacobi_deriv(params, ell, x);
    double ypp = 0.0;
    if (ell >= 2) {
        const JacobiParams shifted2(a + 2.0, b + 2.0);
        ypp = 0.25 * (l + a + b + 1.0) * (l + a + b + 2.0) *
              jacobi_eval(shifted2, ell - 2, x);
    }
    return (1.0 - x * x) * ypp + (b - a - (a + b + 2.0) * x) * yp +
           l * (l + a + b + 1.0) * y;
}

} // namespace jacross
