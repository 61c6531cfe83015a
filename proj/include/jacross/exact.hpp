#ifndef JACROSS_EXACT_HPP
#define JACROSS_EXACT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jacross/jacobi.hpp"

namespace jacross {

/// Exact rational arithmetic on 128-bit integers, always kept reduced with a
/// positive denominator. Arithmetic that would overflow throws
/// std::overflow_error; the small degrees handled by the Rodrigues oracle
/// stay far from the limit.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    Rational operator/(const Rational& other) const;
    Rational operator-() const;

    bool operator==(const Rational& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const Rational& other) const { return !(*this == other); }

    bool is_zero() const { return num_ == 0; }
    double to_double() const;
    std::string to_string() const;

    /// Numerator/denominator narrowed to 64 bits; throws if they do not fit.
    std::int64_t numerator() const;
    std::int64_t denominator() const;

    /// Reconstructs the small-denominator rational exactly equal to the
    /// double x, trying denominators 1..max_den. Throws std::invalid_argument
    /// if none matches.
    static Rational from_double(double x, std::int64_t max_den = 64);

  private:
    Rational(__int128 num, __int128 den, bool already_reduced);
    static Rational make(__int128 num, __int128 den);

    __int128 num_;
    __int128 den_;
};

/// A polynomial with exact rational coefficients, lowest power first.
class ExactPolynomial {
  public:
    explicit ExactPolynomial(std::vector<Rational> coefficients);

    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& coefficient(std::int64_t power) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

  private:
    std::vector<Rational> coefficients_;
};

/// P_ell^(alpha,beta) with exact rational coefficients, expanded from the
/// Rodrigues derivative by the Leibniz rule. Serves as the independent
/// oracle for the floating-point evaluators. Supports ell <= 12 and
/// parameters exactly representable as small rationals.
ExactPolynomial rodrigues_exact(const JacobiParams& params, std::int64_t ell);
ExactPolynomial rodrigues_exact(const Rational& alpha, const Rational& beta, std::int64_t ell);

} // namespace jacross

#endif
