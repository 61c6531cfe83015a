#include "jacross/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jacross {

namespace {

__int128 checked_mul(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("Rational: 128-bit overflow");
    }
    return out;
}

__int128 checked_add(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("Rational: 128-bit overflow");
    }
    return out;
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    __int128 u = neg ? -v : v;
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

} // namespace

Rational::Rational(__int128 num, __int128 den, bool) : num_(num), den_(den) {}

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return Rational(static_cast<__int128>(0), static_cast<__int128>(1), true);
    }
    const __int128 g = gcd128(num, den);
    return Rational(num / g, den / g, true);
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(make(static_cast<__int128>(num), static_cast<__int128>(den))) {}

Rational Rational::operator+(const Rational& other) const {
    return make(checked_add(checked_mul(num_, other.den_), checked_mul(other.num_, den_)),
                checked_mul(den_, other.den_));
}

Rational Rational::operator-(const Rational& other) const { return *this + (-other); }

Rational Rational::operator*(const Rational& other) const {
    // cross-reduce first to keep intermediates small
    const __int128 g1 = gcd128(num_, other.den_);
    const __int128 g2 = gcd128(other.num_, den_);
    return make(checked_mul(num_ / g1, other.num_ / g2),
                checked_mul(den_ / g2, other.den_ / g1));
}

Rational Rational::operator/(const Rational& other) const {
    if (other.num_ == 0) {
        throw std::invalid_argument("Rational: division by zero");
    }
    return make(checked_mul(num_, other.den_), checked_mul(den_, other.num_));
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

double Rational::to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
}

std::string Rational::to_string() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

std::int64_t Rational::numerator() const {
    if (num_ > std::numeric_limits<std::int64_t>::max() ||
        num_ < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("Rational: numerator exceeds 64 bits");
    }
    return static_cast<std::int64_t>(num_);
}

std::int64_t Rational::denominator() const {
    if (den_ > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("Rational: denominator exceeds 64 bits");
    }
    return static_cast<std::int64_t>(den_);
}

Rational Rational::from_double(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("Rational::from_double: non-finite value");
    }
    for (std::int64_t q = 1; q <= max_den; ++q) {
        const long double scaled = static_cast<long double>(x) * static_cast<long double>(q);
        const long double rounded = std::roundl(scaled);
        if (std::abs(rounded) > 9.0e15L) continue;
        const auto p = static_cast<std::int64_t>(rounded);
        if (static_cast<double>(static_cast<long double>(p) / static_cast<long double>(q)) == x) {
            return Rational(p, q);
        }
    }
    throw std::invalid_argument("Rational::from_double: not a small exact rational");
}

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("ExactPolynomial: empty coefficient list");
    }
    if (coefficients_.size() > 1 && coefficients_.back().is_zero()) {
        throw std::invalid_argument("ExactPolynomial: zero leading coefficient");
    }
}

const Rational& ExactPolynomial::coefficient(std::int64_t power) const {
    if (power < 0 || power > degree()) {
        throw std::out_of_range("ExactPolynomial: power out of range");
    }
    return coefficients_[static_cast<std::size_t>(power)];
}

Rational ExactPolynomial::eval(const Rational& x) const {
    Rational acc = coefficients_.back();
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double ExactPolynomial::eval(double x) const {
    double acc = coefficients_.back().to_double();
    for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

namespace {

constexpr std::int64_t kMaxRodriguesDegree = 12;

Rational falling_factorial(const Rational& top, std::int64_t count) {
    Rational acc = 1;
    for (std::int64_t i = 0; i < count; ++i) {
        acc = acc * (top - Rational(i));
    }
    return acc;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    std::int64_t acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

} // namespace

ExactPolynomial rodrigues_exact(const Rational& alpha, const Rational& beta, std::int64_t ell) {
    if (ell < 0 || ell > kMaxRodriguesDegree) {
        throw std::invalid_argument(
            "rodrigues_exact: degree must be in [0, 12]; exact coefficients grow "
            "factorially beyond that");
    }
    // Leibniz expansion of the ell-th derivative of (1-x)^(ell+a) (1+x)^(ell+b),
    // divided through by the weight:
    //   P_ell = (-1)^ell / (2^ell ell!) *
    //           sum_j (-1)^j C(ell,j) fall(ell+a, j) fall(ell+b, ell-j)
    //                  (1-x)^(ell-j) (1+x)^j
    std::vector<Rational> total(static_cast<std::size_t>(ell) + 1, Rational(0));
    Rational lead = 1; // (-1)^ell / (2^ell ell!)
    for (std::int64_t i = 1; i <= ell; ++i) {
        lead = lead / Rational(-2 * i);
    }
    for (std::int64_t j = 0; j <= ell; ++j) {
        Rational scale = lead * Rational(binomial(ell, j)) *
                         falling_factorial(alpha + Rational(ell), j) *
                         falling_factorial(beta + Rational(ell), ell - j);
        if ((j % 2) != 0) scale = -scale;
        if (scale.is_zero()) continue;
        // expand (1-x)^(ell-j) (1+x)^j
        for (std::int64_t u = 0; u <= ell - j; ++u) {
            const std::int64_t cu = binomial(ell - j, u);
            for (std::int64_t v = 0; v <= j; ++v) {
                const std::int64_t cv = binomial(j, v);
                Rational term = scale * Rational((u % 2 != 0) ? -cu * cv : cu * cv);
                auto& slot = total[static_cast<std::size_t>(u + v)];
                slot = slot + term;
            }
        }
    }
    return ExactPolynomial(std::move(total));
}

ExactPolynomial rodrigues_exact(const JacobiParams& params, std::int64_t ell) {
    Rational alpha;
    Rational beta;
    try {
        alpha = Rational::from_double(params.alpha());
        beta = Rational::from_double(params.beta());
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "rodrigues_exact: parameters must be exact small rationals");
    }
    return rodrigues_exact(alpha, beta, ell);
}

} // namespace jacross
