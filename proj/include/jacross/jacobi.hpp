#ifndef JACROSS_JACOBI_HPP
#define JACROSS_JACOBI_HPP

#include <cstdint>
#include <vector>

namespace jacross {

/// The Jacobi parameter pair (alpha, beta). Construction rejects
/// parameters with alpha <= -1 or beta <= -1.
class JacobiParams {
  public:
    JacobiParams(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

  private:
    double alpha_;
    double beta_;
};

/// P_ell^(alpha,beta)(x) by the degree recurrence. Stable on [-1, 1].
double jacobi_eval(const JacobiParams& params, std::int64_t ell, double x);

/// P_0(x), ..., P_m(x) in one recurrence pass.
std::vector<double> jacobi_eval_all(const JacobiParams& params, std::int64_t m, double x);

/// Squared L2 norm h_ell of P_ell against the weight (1-x)^alpha (1+x)^beta.
/// The ell = 0 value is the total weight mass, which also covers the
/// alpha + beta + 1 = 0 degeneracy by continuity.
double jacobi_norm_sq(const JacobiParams& params, std::int64_t ell);

/// ln h_ell; safe for degrees where h_ell itself would under/overflow.
double log_jacobi_norm_sq(const JacobiParams& params, std::int64_t ell);

/// Orthonormal values ptilde_0(x), ..., ptilde_m(x), where
/// ptilde_ell = P_ell / sqrt(h_ell), computed by a normalized recurrence
/// that stays bounded for any m (no Gamma-ratio blowup).
std::vector<double> orthonormal_eval_all(const JacobiParams& params, std::int64_t m, double x);

/// d/dx P_ell^(alpha,beta)(x) via the parameter-shift identity.
double jacobi_deriv(const JacobiParams& params, std::int64_t ell, double x);

/// Residual of the Jacobi differential equation at y = P_ell:
/// (1-x^2) y'' + (beta - alpha - (alpha+beta+2) x) y' + ell (ell+alpha+beta+1) y.
/// Requires |x| < 1.
double ode_residual(const JacobiParams& params, std::int64_t ell, double x);

/// Total mass of the weight: integral of (1-x)^alpha (1+x)^beta over [-1, 1].
double weight_mass(const JacobiParams& params);

/// Coefficients of the monic three-term recurrence
///   pi_{k+1}(x) = (x - a_k) pi_k(x) - b_k pi_{k-1}(x)
/// for the Jacobi weight. recurrence_offdiag_sq is b_k (k >= 1), always > 0.
double recurrence_diag(const JacobiParams& params, std::int64_t k);
double recurrence_offdiag_sq(const JacobiParams& params, std::int64_t k);

/// Streams ptilde_0(x), ptilde_1(x), ... for a fixed x; next() returns the
/// value at the current degree and advances. Used wherever long orthonormal
/// sums must run without materializing the whole sequence.
class OrthonormalSequence {
  public:
    OrthonormalSequence(const JacobiParams& params, double x);

    double next();
    std::int64_t degree() const { return degree_; }

  private:
    JacobiParams params_;
    double x_;
    std::int64_t degree_ = 0;
    double prev_ = 0.0;
    double cur_ = 0.0;
    double offdiag_cur_ = 0.0; // sqrt(b_k) for the most recent step
};

} // namespace jacross

#endif
