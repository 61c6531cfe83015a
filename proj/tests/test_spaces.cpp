#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "jacross/gamma.hpp"
#include "jacross/quadrature.hpp"
#include "jacross/spaces.hpp"
#include "oracles.hpp"

using namespace jacross;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SymmetricSpace> catalog() {
    return {SymmetricSpace::sphere(1),
            SymmetricSpace::sphere(2),
            SymmetricSpace::sphere(3),
            SymmetricSpace::complex_projective(2),
            SymmetricSpace::complex_projective(3),
            SymmetricSpace::quaternionic_projective(2),
            SymmetricSpace::quaternionic_projective(3),
            SymmetricSpace::cayley_plane()};
}

} // namespace

TEST_CASE("construction bounds") {
    CHECK_THROWS_AS(SymmetricSpace::sphere(0), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpace::complex_projective(1), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpace::quaternionic_projective(1), std::invalid_argument);
    CHECK_NOTHROW(SymmetricSpace::sphere(1));
}

TEST_CASE("catalog rows carry the tabulated data") {
    const SpaceParams s2 = space_params(SymmetricSpace::sphere(2));
    CHECK(s2.dim == 2);
    CHECK(s2.p == 0);
    CHECK(s2.q == 1);
    CHECK(s2.diameter == kPi);
    CHECK(s2.omega == 0.5);
    CHECK(s2.jacobi.alpha() == 0.0);
    CHECK(s2.jacobi.beta() == 0.0);
    CHECK(!s2.cut_locus.has_value());

    const SpaceParams cp2 = space_params(SymmetricSpace::complex_projective(2));
    CHECK(cp2.dim == 4);
    CHECK(cp2.p == 2);
    CHECK(cp2.q == 1);
    CHECK(cp2.diameter == kPi / 2.0);
    CHECK(cp2.omega == 1.0);
    CHECK(cp2.jacobi.alpha() == 1.0);
    CHECK(cp2.jacobi.beta() == 0.0);
    REQUIRE(cp2.cut_locus.has_value());
    CHECK(cp2.cut_locus->codim == 2);
    CHECK(cp2.cut_locus->measure == doctest::Approx(kPi).epsilon(1e-14));

    const SpaceParams hp2 = space_params(SymmetricSpace::quaternionic_projective(2));
    CHECK(hp2.dim == 8);
    CHECK(hp2.jacobi.alpha() == 3.0);
    CHECK(hp2.jacobi.beta() == 1.0);
    REQUIRE(hp2.cut_locus.has_value());
    CHECK(hp2.cut_locus->codim == 4);
    CHECK(hp2.cut_locus->measure == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));

    const SpaceParams cap = space_params(SymmetricSpace::cayley_plane());
    CHECK(cap.dim == 16);
    CHECK(cap.p == 8);
    CHECK(cap.q == 7);
    CHECK(cap.jacobi.alpha() == 7.0);
    CHECK(cap.jacobi.beta() == 3.0);
    REQUIRE(cap.cut_locus.has_value());
    CHECK(cap.cut_locus->codim == 8);
    // pi^4 Gamma(4) / Gamma(8) = pi^4 / 840
    CHECK(cap.cut_locus->measure ==
          doctest::Approx(std::pow(kPi, 4) / 840.0).epsilon(1e-14));

    const SpaceParams s1 = space_params(SymmetricSpace::sphere(1));
    CHECK(s1.jacobi.alpha() == -0.5);
    CHECK(s1.jacobi.beta() == -0.5);
}

TEST_CASE("parameter relations round-trip exactly") {
    for (const auto& space : catalog()) {
        const SpaceParams sp = space_params(space);
        CHECK(sp.jacobi.alpha() == (sp.p + sp.q - 1) / 2.0);
        CHECK(sp.jacobi.beta() == (sp.q - 1) / 2.0);
        CHECK(2.0 * (sp.jacobi.alpha() - sp.jacobi.beta()) == static_cast<double>(sp.p));
        CHECK(2.0 * sp.jacobi.beta() + 1.0 == static_cast<double>(sp.q));
        CHECK(sp.omega == doctest::Approx(kPi / (2.0 * sp.diameter)).epsilon(1e-16));
        CHECK(sp.cut_locus.has_value() == !space.is_sphere());
    }
}

TEST_CASE("space names parse back to themselves") {
    for (const auto& space : catalog()) {
        CHECK(parse_space(space.name()) == space);
    }
    CHECK_THROWS_AS(parse_space("torus:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("cp:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("cp:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("sphere"), std::invalid_argument);
}

TEST_CASE("distance-sphere areas") {
    CHECK(area(SymmetricSpace::sphere(2), kPi / 2.0) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(area(SymmetricSpace::sphere(1), 0.77) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(area(SymmetricSpace::complex_projective(2), kPi / 4.0) ==
          doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    // great spheres on the unit n-sphere: A(pi/2) is the (n-1)-sphere area
    CHECK(area(SymmetricSpace::sphere(3), kPi / 2.0) ==
          doctest::Approx(4.0 * kPi).epsilon(1e-13));
    CHECK_THROWS_AS(area(SymmetricSpace::sphere(2), 0.0), std::domain_error);
    CHECK_THROWS_AS(area(SymmetricSpace::sphere(2), kPi), std::domain_error);
    CHECK_THROWS_AS(area(SymmetricSpace::complex_projective(2), 1.6), std::domain_error);
}

TEST_CASE("closed-form volumes") {
    CHECK(volume(SymmetricSpace::sphere(1)) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(volume(SymmetricSpace::sphere(2)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(volume(SymmetricSpace::sphere(3)) ==
          doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
    CHECK(volume(SymmetricSpace::complex_projective(2)) ==
          doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    CHECK(volume(SymmetricSpace::quaternionic_projective(2)) ==
          doctest::Approx(std::pow(kPi, 4) / 120.0).epsilon(1e-14));
    CHECK(volume(SymmetricSpace::cayley_plane()) ==
          doctest::Approx(6.0 * std::pow(kPi, 8) / 39916800.0).epsilon(1e-14));
}

TEST_CASE("volumes agree with adaptive integration of the area") {
    for (const auto& space : catalog()) {
        const SpaceParams sp = space_params(space);
        const double numeric = oracles::adaptive_simpson(
            [&space](double r) { return area(space, r); }, 1e-12, sp.diameter - 1e-12, 1e-14);
        CHECK(numeric == doctest::Approx(volume(space)).epsilon(1e-10));
    }
}

TEST_CASE("eigenvalues and the degree cutoff") {
    CHECK(eigenvalue(SymmetricSpace::sphere(2), 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eigenvalue(SymmetricSpace::cayley_plane(), 0) == 0.0);
    CHECK(eigenvalue(SymmetricSpace::complex_projective(2), 1) ==
          doctest::Approx(12.0).epsilon(1e-15));
    // circle spectrum is ell^2
    for (std::int64_t ell = 0; ell <= 20; ++ell) {
        CHECK(eigenvalue(SymmetricSpace::sphere(1), ell) ==
              doctest::Approx(static_cast<double>(ell * ell)).epsilon(1e-14));
    }
    for (const auto& space : catalog()) {
        for (std::int64_t ell = 0; ell < 100; ++ell) {
            CHECK(eigenvalue(space, ell) < eigenvalue(space, ell + 1));
        }
        // growth is quadratic: the ratio to 4 omega^2 l^2 deviates by exactly
        // (alpha + beta + 1) / l
        const SpaceParams sp = space_params(space);
        const double s = sp.jacobi.alpha() + sp.jacobi.beta() + 1.0;
        const double l = 1e4;
        const double ratio =
            eigenvalue(space, 10000) / (4.0 * sp.omega * sp.omega * l * l);
        CHECK(ratio - 1.0 == doctest::Approx(s / l).epsilon(1e-10));
        if (s <= 10.0) {
            CHECK(std::abs(ratio - 1.0) <= 1e-3);
        }
    }

    CHECK(max_degree_below(SymmetricSpace::sphere(1), 10.0).value() == 3);
    CHECK(max_degree_below(SymmetricSpace::sphere(1), 9.0).value() == 2);
    CHECK(!max_degree_below(SymmetricSpace::cayley_plane(), 0.0).has_value());
    CHECK(!max_degree_below(SymmetricSpace::sphere(2), -5.0).has_value());
    CHECK(max_degree_below(SymmetricSpace::sphere(2), 1e-9).value() == 0);
    // strictness at an exact eigenvalue for every family
    for (const auto& space : catalog()) {
        const double lambda = eigenvalue(space, 7);
        CHECK(max_degree_below(space, lambda).value() == 6);
        CHECK(max_degree_below(space, std::nextafter(lambda, 1e300)).value() == 7);
    }
}

TEST_CASE("normalizing constants") {
    CHECK(normalizing_constant(SymmetricSpace::sphere(2), 0) ==
          doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-14));
    CHECK(normalizing_constant(SymmetricSpace::sphere(1), 0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    CHECK(normalizing_constant(SymmetricSpace::complex_projective(2), 0) ==
          doctest::Approx(std::sqrt(2.0) / kPi).epsilon(1e-14));
    for (const auto& space : catalog()) {
        CHECK(normalizing_constant(space, 0) ==
              doctest::Approx(1.0 / std::sqrt(volume(space))).epsilon(1e-13));
        for (std::int64_t ell = 0; ell <= 100; ell += 9) {
            CHECK(normalizing_constant(space, ell) > 0.0);
        }
    }
}

TEST_CASE("radial eigenfunctions") {
    for (const auto& space : catalog()) {
        const double expected = 1.0 / std::sqrt(volume(space));
        for (const double r : {0.0, 0.3, 1.0}) {
            CHECK(radial_eigenfunction(space, 0, r) ==
                  doctest::Approx(expected).epsilon(1e-13));
        }
    }
    for (const double r : {0.2, 1.1, 2.7}) {
        CHECK(radial_eigenfunction(SymmetricSpace::sphere(2), 1, r) ==
              doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * std::cos(r)).epsilon(1e-13));
        CHECK(radial_eigenfunction(SymmetricSpace::sphere(1), 2, r) ==
              doctest::Approx(std::sqrt(1.0 / kPi) * std::cos(2.0 * r)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(radial_eigenfunction(SymmetricSpace::sphere(2), 1, -0.1),
                    std::domain_error);
    CHECK_THROWS_AS(radial_eigenfunction(SymmetricSpace::complex_projective(2), 1, 2.0),
                    std::domain_error);
}

TEST_CASE("pushforward density values") {
    CHECK(pushforward_density(SymmetricSpace::sphere(2), -0.4) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(pushforward_density(SymmetricSpace::sphere(2), 0.8) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(pushforward_density(SymmetricSpace::sphere(1), 0.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pushforward_density(SymmetricSpace::complex_projective(2), 0.0) ==
          doctest::Approx(kPi * kPi / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(pushforward_density(SymmetricSpace::sphere(2), 1.0), std::domain_error);
}

TEST_CASE("pushforward mass equals the volume") {
    // with the matching weight the non-weight factor is a constant, so a
    // one-node rule already integrates it exactly
    for (const auto& space : catalog()) {
        const SpaceParams sp = space_params(space);
        const double mass = pushforward_prefactor(space) * weight_mass(sp.jacobi);
        CHECK(mass == doctest::Approx(volume(space)).epsilon(1e-10));
    }
}

TEST_CASE("pushforward moments match radial integrals") {
    const int powers[] = {0, 1, 2, 5};
    for (const auto& space : catalog()) {
        const SpaceParams sp = space_params(space);
        const QuadratureRule rule = gauss_jacobi(sp.jacobi, 4);
        const double prefactor = pushforward_prefactor(space);
        for (const int j : powers) {
            const auto f = [j](double x) {
                double out = 1.0;
                for (int i = 0; i < j; ++i) out *= x;
                return out;
            };
            const double via_rule = prefactor * integrate(rule, f);
            const double via_radial = oracles::adaptive_simpson(
                [&](double r) { return f(std::cos(2.0 * sp.omega * r)) * area(space, r); },
                1e-10, sp.diameter - 1e-10, 1e-13);
            CHECK(std::abs(via_rule - via_radial) <=
                  1e-9 * std::max(std::abs(via_rule), 1e-3 * volume(space)));
        }
    }
}

TEST_CASE("radial eigenfunctions have unit norm under the raw radial integral") {
    // the same statement the substitution-based check makes, but integrated
    // in r with the test-side integrator
    const SymmetricSpace spaces[] = {
        SymmetricSpace::sphere(3), SymmetricSpace::complex_projective(2),
        SymmetricSpace::quaternionic_projective(2), SymmetricSpace::cayley_plane()};
    for (const auto& space : spaces) {
        const SpaceParams sp = space_params(space);
        for (const std::int64_t ell : {std::int64_t{1}, std::int64_t{5}}) {
            const double integral = oracles::adaptive_simpson(
                [&](double r) {
                    const double phi = radial_eigenfunction(space, ell, r);
                    return phi * phi * area(space, r);
                },
                1e-10, sp.diameter - 1e-10, 1e-13);
            CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("cut measures tie to volumes for the complex family") {
    for (int n = 2; n <= 4; ++n) {
        const SymmetricSpace space = SymmetricSpace::complex_projective(n);
        const SpaceParams sp = space_params(space);
        REQUIRE(sp.cut_locus.has_value());
        // pi^(n-1) / Gamma(n)
        double expected = 1.0;
        for (int i = 1; i < n; ++i) expected *= kPi / i;
        CHECK(sp.cut_locus->measure == doctest::Approx(expected).epsilon(1e-13));
        CHECK(volume(space) ==
              doctest::Approx(kPi * sp.cut_locus->measure / n).epsilon(1e-12));
    }
}
