#ifndef JACROSS_GAMMA_HPP
#define JACROSS_GAMMA_HPP

namespace jacross {

/// Natural log of the Gamma function for x > 0.
///
/// Built from a Stirling series for large arguments, an upward shift for
/// mid-range ones, and a zeta series around the zeros at x = 1 and x = 2 so
/// the result keeps full relative accuracy where ln(Gamma) itself is tiny.
/// Relative error stays below 1e-14 on [1e-3, 1e7].
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b), for a, b > 0.
double log_beta(double a, double b);

} // namespace jacross

#endif
