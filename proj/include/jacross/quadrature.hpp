#ifndef JACROSS_QUADRATURE_HPP
#define JACROSS_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "jacross/jacobi.hpp"

namespace jacross {

/// A Gauss-Jacobi rule: n nodes strictly inside (-1, 1) in increasing order
/// with positive weights summing to the total weight mass. Exact for
/// polynomials of degree <= 2n - 1 against (1-x)^alpha (1+x)^beta dx.
struct QuadratureRule {
    JacobiParams params;
    std::int64_t n;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Builds the n-point rule (1 <= n <= 2048) by eigen-decomposition of the
/// symmetric tridiagonal recurrence matrix; nodes get one Newton polish step
/// against the recurrence-evaluated orthonormal polynomial.
QuadratureRule gauss_jacobi(const JacobiParams& params, std::int64_t n);

/// Weighted sum over the rule's nodes.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

} // namespace jacross

#endif
