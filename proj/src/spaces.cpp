#include "jacross/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jacross/gamma.hpp"

namespace jacross {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = 0.69314718055994530942;

double log_pi() { return std::log(kPi); }

struct TableRow {
    int dim;
    int p;
    int q;
    double diameter;
};

TableRow table_row(const SymmetricSpace& space) {
    switch (space.family()) {
    case SpaceFamily::Sphere:
        return {space.n(), 0, space.n() - 1, kPi};
    case SpaceFamily::ComplexProjective:
        return {2 * space.n(), 2 * space.n() - 2, 1, kPi / 2.0};
    case SpaceFamily::QuaternionicProjective:
        return {4 * space.n(), 4 * space.n() - 4, 3, kPi / 2.0};
    case SpaceFamily::CayleyPlane:
        return {16, 8, 7, kPi / 2.0};
    }
    throw std::logic_error("unreachable");
}

std::optional<CutLocusData> cut_locus_data(const SymmetricSpace& space) {
    const double n = static_cast<double>(space.n());
    switch (space.family()) {
    case SpaceFamily::Sphere:
        return std::nullopt;
    case SpaceFamily::ComplexProjective:
        return CutLocusData{2, std::exp((n - 1.0) * log_pi() - log_gamma(n))};
    case SpaceFamily::QuaternionicProjective:
        return CutLocusData{4, std::exp(2.0 * (n - 1.0) * log_pi() - log_gamma(2.0 * n))};
    case SpaceFamily::CayleyPlane:
        return CutLocusData{8, std::exp(4.0 * log_pi() + log_gamma(4.0) - log_gamma(8.0))};
    }
    throw std::logic_error("unreachable");
}

} // namespace

SymmetricSpace SymmetricSpace::sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere: n must be >= 1");
    return {SpaceFamily::Sphere, n};
}

SymmetricSpace SymmetricSpace::complex_projective(int n) {
    if (n < 2) throw std::invalid_argument("complex projective space: n must be >= 2");
    return {SpaceFamily::ComplexProjective, n};
}

SymmetricSpace SymmetricSpace::quaternionic_projective(int n) {
    if (n < 2) throw std::invalid_argument("quaternionic projective space: n must be >= 2");
    return {SpaceFamily::QuaternionicProjective, n};
}

SymmetricSpace SymmetricSpace::cayley_plane() { return {SpaceFamily::CayleyPlane, 2}; }

std::string SymmetricSpace::name() const {
    switch (family_) {
    case SpaceFamily::Sphere:
        return "sphere:" + std::to_string(n_);
    case SpaceFamily::ComplexProjective:
        return "cp:" + std::to_string(n_);
    case SpaceFamily::QuaternionicProjective:
        return "hp:" + std::to_string(n_);
    case SpaceFamily::CayleyPlane:
        return "cap2";
    }
    throw std::logic_error("unreachable");
}

SymmetricSpace parse_space(const std::string& name) {
    if (name == "cap2") return SymmetricSpace::cayley_plane();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string family = name.substr(0, colon);
        const std::string index = name.substr(colon + 1);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(index, &used);
            if (used != index.size()) throw std::invalid_argument(index);
        } catch (const std::exception&) {
            throw std::invalid_argument("unrecognized space '" + name + "'");
        }
        if (family == "sphere") return SymmetricSpace::sphere(n);
        if (family == "cp") return SymmetricSpace::complex_projective(n);
        if (family == "hp") return SymmetricSpace::quaternionic_projective(n);
    }
    throw std::invalid_argument(
        "unrecognized space '" + name + "' (expected sphere:n, cp:n, hp:n, or cap2)");
}

SpaceParams space_params(const SymmetricSpace& space) {
    const TableRow row = table_row(space);
    const double alpha = (row.p + row.q - 1) / 2.0;
    const double beta = (row.q - 1) / 2.0;
    return SpaceParams{
        space,
        row.dim,
        row.p,
        row.q,
        row.diameter,
        kPi / (2.0 * row.diameter),
        JacobiParams(alpha, beta),
        cut_locus_data(space),
    };
}

double area(const SymmetricSpace& space, double r) {
    const SpaceParams sp = space_params(space);
    if (!(r > 0.0) || !(r < sp.diameter)) {
        throw std::domain_error("area: radius must lie strictly between 0 and the diameter");
    }
    const double a = sp.jacobi.alpha();
    const double pq = static_cast<double>(sp.p + sp.q);
    const double prefactor =
        2.0 * std::exp((a + 1.0) * log_pi() - log_gamma(a + 1.0) - pq * std::log(sp.omega));
    return prefactor * std::pow(std::sin(sp.omega * r), pq) *
           std::pow(std::cos(sp.omega * r), static_cast<double>(sp.q));
}

double volume(const SymmetricSpace& space) {
    // integral of the area function over (0, L), reduced to a Beta integral
    const SpaceParams sp = space_params(space);
    const double a = sp.jacobi.alpha();
    const double b = sp.jacobi.beta();
    return std::exp((a + 1.0) * (log_pi() - 2.0 * std::log(sp.omega)) + log_gamma(b + 1.0) -
                    log_gamma(a + b + 2.0));
}

double eigenvalue(const SymmetricSpace& space, std::int64_t ell) {
    if (ell < 0) throw std::domain_error("eigenvalue: degree must be non-negative");
    const SpaceParams sp = space_params(space);
    const double s = sp.jacobi.alpha() + sp.jacobi.beta() + 1.0;
    const double l = static_cast<double>(ell);
    return 4.0 * sp.omega * sp.omega * l * (l + s);
}

std::optional<std::int64_t> max_degree_below(const SymmetricSpace& space, double threshold) {
    if (!(threshold > 0.0)) return std::nullopt;
    const SpaceParams sp = space_params(space);
    const double s = sp.jacobi.alpha() + sp.jacobi.beta() + 1.0;
    const double w2 = 4.0 * sp.omega * sp.omega;
    // solve l (l + s) < threshold / w2 and fix up rounding locally
    const double bound = 0.5 * (-s + std::sqrt(s * s + 4.0 * threshold / w2));
    std::int64_t m = static_cast<std::int64_t>(std::floor(bound));
    if (m < 0) m = 0;
    while (m > 0 && !(eigenvalue(space, m) < threshold)) --m;
    while (eigenvalue(space, m + 1) < threshold) ++m;
    if (!(eigenvalue(space, m) < threshold)) return std::nullopt;
    return m;
}

double normalizing_constant(const SymmetricSpace& space, std::int64_t ell) {
    if (ell < 0) throw std::domain_error("normalizing_constant: degree must be non-negative");
    const SpaceParams sp = space_params(space);
    const double a = sp.jacobi.alpha();
    const double b = sp.jacobi.beta();
    const double log_c_sq = (a + 1.0) * (2.0 * std::log(sp.omega) - log_pi()) +
                            log_gamma(a + 1.0) + (a + b + 1.0) * kLn2 -
                            log_jacobi_norm_sq(sp.jacobi, ell);
    return std::exp(0.5 * log_c_sq);
}

double radial_eigenfunction(const SymmetricSpace& space, std::int64_t ell, double r) {
    const SpaceParams sp = space_params(space);
    if (!(r >= 0.0) || !(r <= sp.diameter)) {
        throw std::domain_error("radial_eigenfunction: radius must lie in [0, diameter]");
    }
    const double x = std::cos(2.0 * sp.omega * r);
    return normalizing_constant(space, ell) * jacobi_eval(sp.jacobi, ell, x);
}

double pushforward_prefactor(const SymmetricSpace& space) {
    const SpaceParams sp = space_params(space);
    const double a = sp.jacobi.alpha();
    const double b = sp.jacobi.beta();
    return std::exp((a + 1.0) * (log_pi() - 2.0 * std::log(sp.omega)) - log_gamma(a + 1.0) -
                    (a + b + 1.0) * kLn2);
}

double pushforward_density(const SymmetricSpace& space, double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("pushforward_density: requires |x| < 1");
    }
    const SpaceParams sp = space_params(space);
    return pushforward_prefactor(space) * std::pow(1.0 - x, sp.jacobi.alpha()) *
           std::pow(1.0 + x, sp.jacobi.beta());
}

} // namespace jacross
