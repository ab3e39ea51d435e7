#pragma once

#include <stdexcept>

#include "pantsqc/halfplane.hpp"

namespace pantsqc {

/// Thrown for inputs the construction deliberately does not cover
/// (a degenerate source boundary l1 = 0 or l2 = 0).
class UnsupportedCaseError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Boundary lengths of the source Y-piece.  The third boundary is the
/// short one (0 < eps <= 1/2) that gets stretched toward a cusp.
struct YPieceParams {
    double l1 = 1.0;
    double l2 = 1.0;
    double eps = 0.5;

    double eps_star() const { return (2.0 / kPi) * eps; }
    void validate() const;  // throws UnsupportedCaseError / std::domain_error
};

/// Collar about a boundary geodesic: half-width and the length of the
/// equidistant curve (or horocycle) bounding it inside the surface.
struct CollarSpec {
    double width = 0.0;
    double boundary_length = 0.0;
};

/// Half-width arcsinh(1/sinh(l/2)) of the embedded collar.  l > 0.
double collar_width(double l);

/// Reduced collar: width log(2/l) and inner boundary length 1 + l^2/4 for
/// 0 < l < 2; empty (width 0, boundary l) for l >= 2; for l = 0 the collar
/// is the region outside the horocycle of length 1 (infinite width).
CollarSpec reduced_collar(double l);

/// All solved quantities of the right-angled hexagon of Y(l1, l2, eps),
/// placed in the half-plane with side c on the base geodesic and D0 = i.
/// The hexagon lies on the r >= 0 side.  Vertex labels follow the layout:
/// side c = C1..C2 on the base geodesic, sides alpha_i rise from C_i to
/// A_i, sides d_i connect A_i to E_i, side alpha3 = E1..E2 sits on the
/// half-circle of Euclidean radius e^lambda, and the perpendicular from
/// D0 = i meets it at E0 = i e^lambda.  The equidistant curve beta runs at
/// distance w below alpha3 from B1 (on d1) to B2 (on d2); H_i is the foot
/// of the perpendicular from B_i to side c, at arclength eta_i from D0.
/// D_i marks where the straightened hexagon's side c' ends, at arclength
/// delta_i from D0.  Primed points (Ap_i, Bp_i, Cp_i) belong to the
/// degenerate target hexagon drawn in the same chart.
///
/// Immutable after solve_hexagon returns; all operations taking it are
/// pure functions, safe for unrestricted concurrent use.
struct HexagonSolution {
    double l1 = 0.0, l2 = 0.0, eps = 0.0;
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
    double lambda = 0.0;
    double eps1 = 0.0, eps2 = 0.0;
    double c1 = 0.0, c2 = 0.0;
    double cp1 = 0.0, cp2 = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    double eta1 = 0.0, eta2 = 0.0;
    double w = 0.0;
    double kappa = 0.0;   // 1 / cosh(w)
    double a1 = 0.0, a2 = 0.0, a = 0.0;

    // cached transcendentals
    double exp_lambda = 0.0;
    double cosh_w = 0.0, sinh_w = 0.0, tanh_w = 0.0;

    // parameter range of the unit speed equidistant curve beta
    double s1 = 0.0, s2 = 0.0;

    HalfPlanePoint D0, D1, D2;
    HalfPlanePoint C1, C2, Cp1, Cp2;
    HalfPlanePoint A1, A2, Ap1, Ap2;
    HalfPlanePoint E0, E1, E2;
    HalfPlanePoint B1, B2, Bp1, Bp2;
    HalfPlanePoint H1, H2;

    /// Fermi coordinates of z relative to the geodesic carrying alpha3
    /// (r < 0 on the hexagon side, t = 0 under E0).
    FermiCoord alpha3_frame(const HalfPlanePoint& z) const;
};

/// Solve the hexagon/pentagon geometry.  The height lambda is found by
/// bisection on the strictly decreasing split equation
///   arcsinh(cosh(a1)/sinh(lambda)) + arcsinh(cosh(a2)/sinh(lambda)) = eps/2,
/// then every remaining side comes from the pentagon relations
///   sinh(eps_i) sinh(lambda) = cosh(alpha_i),
///   sinh(alpha_i) sinh(c_i)  = cosh(eps_i),
///   sinh(alpha_i) sinh(c'_i) = 1.
HexagonSolution solve_hexagon(const YPieceParams& p);

/// Unit speed point of the equidistant curve, s in [s1, s2].
HalfPlanePoint beta_point(const HexagonSolution& hex, double s);

/// The five pieces the map is assembled from.  Below the equidistant
/// curve the hexagon splits at t = -eta1, 0, eta2 (Fermi t of side c).
enum class Region {
    OuterLeft,
    InnerLeft,
    InnerRight,
    OuterRight,
    Upper,
};

const char* region_name(Region r);

/// Membership test for the closed hexagon, with hyperbolic slack on each
/// of the six supporting geodesics.
bool hexagon_contains(const HexagonSolution& hex, const HalfPlanePoint& z,
                      double slack = 1e-9);

/// Dispatch a hexagon point to its piece.  Points on the equidistant
/// curve count as Upper; points at t = -eta1, 0, eta2 go to the
/// left-adjacent piece.  Throws std::domain_error outside the hexagon.
Region classify_region(const HexagonSolution& hex, const HalfPlanePoint& z);

}  // namespace pantsqc
