#include "jacross/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jacross/summation.hpp"

namespace jacross {

namespace {

constexpr std::int64_t kMaxNodes = 2048;
constexpr double kOffdiagTol = 1e-15;
constexpr int kMaxQLIterations = 50;

// Implicit-shift QL on a symmetric tridiagonal matrix, simultaneously
// rotating the first row of the eigenvector matrix. d holds the diagonal,
// e the subdiagonal (e[i] couples rows i and i+1), z starts as the first
// unit vector. On return d[j] is the j-th eigenvalue (unsorted) and z[j]
// the first component of its normalized eigenvector.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    if (n == 1) return;
    e[static_cast<std::size_t>(n - 1)] = 0.0;
    for (std::int64_t l = 0; l < n; ++l) {
        int iterations = 0;
        std::int64_t m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double scale = std::abs(d[static_cast<std::size_t>(m)]) +
                                     std::abs(d[static_cast<std::size_t>(m + 1)]);
                const double off = std::abs(e[static_cast<std::size_t>(m)]);
                if (off <= kOffdiagTol * scale || off < 1e-300) break;
            }
            if (m != l) {
                if (iterations++ == kMaxQLIterations) {
                    throw std::runtime_error(
                        "gauss_jacobi: tridiagonal QL failed to converge");
                }
                double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                           (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                    e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                std::int64_t i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[static_cast<std::size_t>(i)];
                    const double b = c * e[static_cast<std::size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<std::size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        // rotation annihilated early; drop the shift and retry
                        d[static_cast<std::size_t>(i + 1)] -= p;
                        e[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<std::size_t>(i + 1)] - p;
                    r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<std::size_t>(i + 1)] = g + p;
                    g = c * r - b;
                    f = z[static_cast<std::size_t>(i + 1)];
                    z[static_cast<std::size_t>(i + 1)] = s * z[static_cast<std::size_t>(i)] + c * f;
                    z[static_cast<std::size_t>(i)] = c * z[static_cast<std::size_t>(i)] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<std::size_t>(l)] -= p;
                e[static_cast<std::size_t>(l)] = g;
                e[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

// Orthonormal value and derivative at degree n via the recurrence; used for
// the Newton polish of each node.
void orthonormal_value_deriv(const JacobiParams& params, std::int64_t n, double x,
                             double& value, double& deriv) {
    double pk = 1.0 / std::sqrt(weight_mass(params));
    double dk = 0.0;
    if (n == 0) {
        value = pk;
        deriv = dk;
        return;
    }
    double sb_prev = std::sqrt(recurrence_offdiag_sq(params, 1));
    double pk1 = (x - recurrence_diag(params, 0)) * pk / sb_prev;
    double dk1 = pk / sb_prev;
    for (std::int64_t k = 1; k < n; ++k) {
        const double a = recurrence_diag(params, k);
        const double sb = std::sqrt(recurrence_offdiag_sq(params, k + 1));
        const double pk2 = ((x - a) * pk1 - sb_prev * pk) / sb;
        const double dk2 = ((x - a) * dk1 + pk1 - sb_prev * dk) / sb;
        pk = pk1;
        dk = dk1;
        pk1 = pk2;
        dk1 = dk2;
        sb_prev = sb;
    }
    value = pk1;
    deriv = dk1;
}

} // namespace

QuadratureRule gauss_jacobi(const JacobiParams& params, std::int64_t n) {
    if (n < 1 || n > kMaxNodes) {
        throw std::domain_error("gauss_jacobi: node count must be in [1, 2048]");
    }
    const double mass = weight_mass(params);
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    z[0] = 1.0;
    for (std::int64_t k = 0; k < n; ++k) {
        d[static_cast<std::size_t>(k)] = recurrence_diag(params, k);
    }
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        e[static_cast<std::size_t>(k)] = std::sqrt(recurrence_offdiag_sq(params, k + 1));
    }
    tridiagonal_ql(d, e, z);

    QuadratureRule rule{params, n, {}, {}};
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    for (std::size_t i = 0; i < order.size(); ++i) {
        double node = d[order[i]];
        double value = 0.0;
        double deriv = 0.0;
        orthonormal_value_deriv(params, n, node, value, deriv);
        if (deriv != 0.0) {
            const double polished = node - value / deriv;
            if (polished > -1.0 && polished < 1.0) node = polished;
        }
        rule.nodes[i] = node;
        rule.weights[i] = mass * z[order[i]] * z[order[i]];
    }
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    CompensatedSum sum;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum.add(rule.weights[i] * f(rule.nodes[i]));
    }
    return sum.value();
}

} // namespace jacross
