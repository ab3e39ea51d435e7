#pragma once

#include <complex>

namespace pantsqc {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Point of the hyperbolic plane in the upper half-plane chart,
/// metric ds^2 = (dx^2 + dy^2) / y^2.  Invariant: y > 0, both finite.
struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;

    std::complex<double> to_complex() const { return {x, y}; }
    static HalfPlanePoint from_complex(std::complex<double> z) {
        return {z.real(), z.imag()};
    }
    bool valid() const;
};

/// Fermi coordinates relative to the base geodesic (the half-circle through
/// i with endpoints -1 and 1): t is signed arclength along it, r is signed
/// distance from it, r > 0 on the side containing i*e.
struct FermiCoord {
    double t = 0.0;
    double r = 0.0;
};

/// Tangent vector (vx, vy) attached at a base point.
struct TangentVector {
    HalfPlanePoint base;
    double vx = 0.0;
    double vy = 0.0;
};

/// Isometry z -> e^s * z.  Axis: positive imaginary axis, displacement |s|.
HalfPlanePoint mobius_up(double s, const HalfPlanePoint& z);

/// Isometry translating by s along the base geodesic (displacement |s|).
HalfPlanePoint mobius_rgh(double s, const HalfPlanePoint& z);
std::complex<double> mobius_rgh(double s, std::complex<double> z);

/// Unit speed parametrization of the base geodesic; base_geodesic(0) = i.
HalfPlanePoint base_geodesic(double t);

/// Hyperbolic distance between two points.  Symmetric, nonnegative,
/// zero iff the points coincide.
double hyp_dist(const HalfPlanePoint& z1, const HalfPlanePoint& z2);

/// Fermi coordinates of z relative to the base geodesic.
FermiCoord fermi_from_uhp(const HalfPlanePoint& z);

/// Inverse of fermi_from_uhp.  Throws std::range_error when |t| + |r| is
/// too large for the intermediate cosh/sinh products to stay finite.
HalfPlanePoint uhp_from_fermi(const FermiCoord& c);

/// Hyperbolic norm |v| / y of a tangent vector at its base point.
double hyp_norm(const TangentVector& v);

}  // namespace pantsqc
