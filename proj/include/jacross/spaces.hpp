#ifndef JACROSS_SPACES_HPP
#define JACROSS_SPACES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "jacross/jacobi.hpp"

namespace jacross {

enum class SpaceFamily {
    Sphere,
    ComplexProjective,
    QuaternionicProjective,
    CayleyPlane,
};

/// One of the compact rank-one symmetric spaces, normalized to minimum
/// sectional curvature 1. Spheres allow n >= 1, the projective families
/// n >= 2, and the Cayley plane is a single space.
class SymmetricSpace {
  public:
    static SymmetricSpace sphere(int n);
    static SymmetricSpace complex_projective(int n);
    static SymmetricSpace quaternionic_projective(int n);
    static SymmetricSpace cayley_plane();

    SpaceFamily family() const { return family_; }
    int n() const { return n_; }
    bool is_sphere() const { return family_ == SpaceFamily::Sphere; }

    /// Compact name: sphere:n, cp:n, hp:n, cap2.
    std::string name() const;

    bool operator==(const SymmetricSpace& other) const = default;

  private:
    SymmetricSpace(SpaceFamily family, int n) : family_(family), n_(n) {}

    SpaceFamily family_;
    int n_;
};

/// Parses the compact space names accepted by the CLI.
SymmetricSpace parse_space(const std::string& name);

struct CutLocusData {
    int codim;      // k
    double measure; // nu(N)
};

/// Every derived constant of a space: real dimension, the (p, q) pair, the
/// diameter L, omega = pi / (2L), the Jacobi parameters
/// alpha = (p+q-1)/2 and beta = (q-1)/2, and (for non-spheres) the cut-locus
/// codimension and measure.
struct SpaceParams {
    SymmetricSpace space;
    int dim;
    int p;
    int q;
    double diameter;
    double omega;
    JacobiParams jacobi;
    std::optional<CutLocusData> cut_locus;
};

SpaceParams space_params(const SymmetricSpace& space);

/// Area of the distance sphere of radius r, for 0 < r < L.
double area(const SymmetricSpace& space, double r);

/// Total Riemannian volume, in closed form via a Beta integral.
double volume(const SymmetricSpace& space);

/// Laplace-Beltrami eigenvalue of the degree-ell radial eigenfunction:
/// 4 omega^2 ell (ell + alpha + beta + 1).
double eigenvalue(const SymmetricSpace& space, std::int64_t ell);

/// Largest m with eigenvalue(m) < threshold (strict); empty when even the
/// zero eigenvalue fails.
std::optional<std::int64_t> max_degree_below(const SymmetricSpace& space, double threshold);

/// The constant making c_ell * P_ell(cos 2 omega r) a unit-norm
/// eigenfunction in L2 of the space.
double normalizing_constant(const SymmetricSpace& space, std::int64_t ell);

/// c_ell * P_ell^(alpha,beta)(cos 2 omega r), for 0 <= r <= L.
double radial_eigenfunction(const SymmetricSpace& space, std::int64_t ell, double r);

/// Density at x of the volume measure pushed forward through
/// x = cos(2 omega rho(u, e)); proportional to the Jacobi weight.
double pushforward_density(const SymmetricSpace& space, double x);

/// The proportionality constant: pushforward_density(x) equals
/// pushforward_prefactor * (1-x)^alpha (1+x)^beta.
double pushforward_prefactor(const SymmetricSpace& space);

} // namespace jacross

#endif
