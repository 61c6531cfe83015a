#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "jacross/jacobi.hpp"
#include "jacross/quadrature.hpp"
#include "oracles.hpp"

using namespace jacross;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<JacobiParams>& test_params() {
    static const std::vector<JacobiParams> params = {
        {0.0, 0.0}, {1.0, 0.0}, {3.0, 1.0}, {7.0, 3.0}, {-0.5, -0.5}};
    return params;
}

} // namespace

TEST_CASE("classical small rules come out exactly") {
    const QuadratureRule mid = gauss_jacobi(JacobiParams(0.0, 0.0), 1);
    REQUIRE(mid.nodes.size() == 1);
    CHECK(mid.nodes[0] == 0.0);
    CHECK(mid.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const QuadratureRule legendre2 = gauss_jacobi(JacobiParams(0.0, 0.0), 2);
    REQUIRE(legendre2.nodes.size() == 2);
    CHECK(legendre2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(legendre2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(legendre2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(legendre2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    const QuadratureRule cheb3 = gauss_jacobi(JacobiParams(-0.5, -0.5), 3);
    REQUIRE(cheb3.nodes.size() == 3);
    CHECK(cheb3.nodes[0] == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(std::abs(cheb3.nodes[1]) < 1e-15);
    CHECK(cheb3.nodes[2] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    for (const double w : cheb3.weights) {
        CHECK(w == doctest::Approx(kPi / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("rules are exact on every moment they promise") {
    for (const auto& params : test_params()) {
        const double mass = weight_mass(params);
        for (const std::int64_t n : {std::int64_t{1}, std::int64_t{2}, std::int64_t{8},
                                     std::int64_t{64}}) {
            const QuadratureRule rule = gauss_jacobi(params, n);
            const auto moments =
                oracles::weighted_moments(params.alpha(), params.beta(), mass,
                                          static_cast<int>(2 * n));
            for (std::int64_t j = 0; j <= 2 * n - 1; ++j) {
                const double computed = integrate(rule, [j](double x) {
                    double powed = 1.0;
                    for (std::int64_t i = 0; i < j; ++i) powed *= x;
                    return powed;
                });
                const double target = static_cast<double>(moments[static_cast<std::size_t>(j)]);
                // moments that vanish by symmetry are judged against the
                // absolute-sum scale of the quadrature form instead
                const double abs_scale = integrate(rule, [j](double x) {
                    double powed = 1.0;
                    for (std::int64_t i = 0; i < j; ++i) powed *= std::abs(x);
                    return powed;
                });
                CHECK(std::abs(computed - target) <=
                      1e-12 * std::max(std::abs(target), abs_scale));
            }
        }
    }
}

TEST_CASE("structural invariants of the generated rules") {
    for (const auto& params : test_params()) {
        const double mass = weight_mass(params);
        for (const std::int64_t n : {std::int64_t{1}, std::int64_t{2}, std::int64_t{8},
                                     std::int64_t{64}, std::int64_t{257}, std::int64_t{2048}}) {
            const QuadratureRule rule = gauss_jacobi(params, n);
            REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
            double total = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                CHECK(rule.weights[i] > 0.0);
                CHECK(rule.nodes[i] > -1.0);
                CHECK(rule.nodes[i] < 1.0);
                if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                total += rule.weights[i];
            }
            CHECK(std::abs(total - mass) <= 1e-12 * mass);
        }
    }
}

TEST_CASE("consecutive rules interlace strictly") {
    for (const auto& params : test_params()) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            const QuadratureRule coarse = gauss_jacobi(params, n);
            const QuadratureRule fine = gauss_jacobi(params, n + 1);
            for (std::int64_t i = 0; i < n; ++i) {
                CHECK(coarse.nodes[static_cast<std::size_t>(i)] >
                      fine.nodes[static_cast<std::size_t>(i)]);
                CHECK(coarse.nodes[static_cast<std::size_t>(i)] <
                      fine.nodes[static_cast<std::size_t>(i + 1)]);
            }
        }
    }
}

TEST_CASE("the Gram matrix of orthonormal values is the identity") {
    constexpr std::int64_t degree = 50;
    for (const auto& params : test_params()) {
        const QuadratureRule rule = gauss_jacobi(params, degree + 1);
        std::vector<std::vector<double>> values(rule.nodes.size());
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            values[k] = orthonormal_eval_all(params, degree, rule.nodes[k]);
        }
        double worst = 0.0;
        for (std::int64_t i = 0; i <= degree; ++i) {
            for (std::int64_t j = i; j <= degree; ++j) {
                double entry = 0.0;
                for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                    entry += rule.weights[k] * values[k][static_cast<std::size_t>(i)] *
                             values[k][static_cast<std::size_t>(j)];
                }
                worst = std::max(worst, std::abs(entry - (i == j ? 1.0 : 0.0)));
            }
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("integrate reproduces the quoted examples") {
    const QuadratureRule rule = gauss_jacobi(JacobiParams(0.0, 0.0), 2);
    CHECK(integrate(rule, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(integrate(rule, [](double x) { return x * x; }) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    const JacobiParams cp(1.0, 0.0);
    const QuadratureRule rule3 = gauss_jacobi(cp, 3);
    const double cross = integrate(rule3, [&cp](double x) {
        return jacobi_eval(cp, 2, x) * jacobi_eval(cp, 3, x);
    });
    CHECK(std::abs(cross) <= 1e-12);
}

TEST_CASE("node count limits") {
    CHECK_THROWS_AS(gauss_jacobi(JacobiParams(0.0, 0.0), 0), std::domain_error);
    CHECK_THROWS_AS(gauss_jacobi(JacobiParams(0.0, 0.0), 2049), std::domain_error);
}
