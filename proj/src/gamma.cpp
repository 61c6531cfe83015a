#include "jacross/gamma.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace jacross {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLogTwoPi = 0.91893853320467274178;

// zeta(k) - 1 for k = 2, 3, ..., 56.
constexpr double kZetaMinusOne[] = {
    6.44934066848226436472e-1,
    2.02056903159594285400e-1,
    8.23232337111381915160e-2,
    3.69277551433699263314e-2,
    1.73430619844491397145e-2,
    8.34927738192282683980e-3,
    4.07735619794433937869e-3,
    2.00839282608221441785e-3,
    9.94575127818085337146e-4,
    4.94188604119464558702e-4,
    2.46086553308048298638e-4,
    1.22713347578489146752e-4,
    6.12481350587048292585e-5,
    3.05882363070204935517e-5,
    1.52822594086518717326e-5,
    7.63719763789976227360e-6,
    3.81729326499983985646e-6,
    1.90821271655393892566e-6,
    9.53962033872796113152e-7,
    4.76932986787806463117e-7,
    2.38450502727732990004e-7,
    1.19219925965311073068e-7,
    5.96081890512594796124e-8,
    2.98035035146522801861e-8,
    1.49015548283650412347e-8,
    7.45071178983542949198e-9,
    3.72533402478845705482e-9,
    1.86265972351304900640e-9,
    9.31327432419668182872e-10,
    4.65662906503378407299e-10,
    2.32831183367650549200e-10,
    1.16415501727005197759e-10,
    5.82077208790270088924e-11,
    2.91038504449709968693e-11,
    1.45519218910419842359e-11,
    7.27595983505748101452e-12,
    3.63797954737865119024e-12,
    1.81898965030706594758e-12,
    9.09494784026388928253e-13,
    4.54747378304215402680e-13,
    2.27373684582465251523e-13,
    1.13686840768022784935e-13,
    5.68434198762758560928e-14,
    2.84217097688930185546e-14,
    1.42108548280316067698e-14,
    7.10542739521085271288e-15,
    3.55271369133711367330e-15,
    1.77635684357912032747e-15,
    8.88178421093081590310e-16,
    4.44089210314381336420e-16,
    2.22044605079804198400e-16,
    1.11022302514106613372e-16,
    5.55111512484548124372e-17,
    2.77555756213612417258e-17,
    1.38777878097252327628e-17,
};

// B_{2k} / (2k (2k-1)), k = 1..8; the Stirling correction coefficients.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// ln Gamma(2 + t) = t (1 - gamma) + sum_{k>=2} (-1)^k (zeta(k)-1) t^k / k,
// valid for |t| <= 1 (radius of convergence is 2). Every term is
// proportional to t, so the result is relatively accurate even as t -> 0.
double log_gamma_near_two(double t) {
    double sum = 0.0;
    double comp = 0.0;
    double power = -t; // (-t)^k, starting at k = 1
    for (std::size_t i = 0; i < sizeof(kZetaMinusOne) / sizeof(double); ++i) {
        power *= -t;
        const int k = static_cast<int>(i) + 2;
        const double term = kZetaMinusOne[i] * power / k;
        const double t2 = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t2) + term;
        } else {
            comp += (term - t2) + sum;
        }
        sum = t2;
        if (std::abs(term) < 1e-20 * (std::abs(sum) + 1e-30)) break;
    }
    return t * (1.0 - kEulerGamma) + (sum + comp);
}

// Stirling expansion, reliable for x >= 8.
double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double u = inv * inv;
    double corr = kStirling[7];
    for (int i = 6; i >= 0; --i) {
        corr = corr * u + kStirling[i];
    }
    corr *= inv;
    return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + corr;
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        // Gamma(x) = Gamma(x + 2) / (x (x + 1))
        return log_gamma_near_two(x) - std::log(x) - std::log1p(x);
    }
    if (x < 1.5) {
        // Gamma(x) = Gamma(x + 1) / x with x + 1 near 2
        const double t = x - 1.0;
        return log_gamma_near_two(t) - std::log1p(t);
    }
    if (x <= 3.0) {
        return log_gamma_near_two(x - 2.0);
    }
    if (x < 8.0) {
        double y = x;
        double product = 1.0;
        while (y < 8.0) {
            product *= y;
            y += 1.0;
        }
        return log_gamma_stirling(y) - std::log(product);
    }
    return log_gamma_stirling(x);
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

} // namespace jacross
