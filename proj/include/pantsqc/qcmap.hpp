#pragma once

#include <complex>

#include "pantsqc/halfplane.hpp"
#include "pantsqc/pants.hpp"

namespace pantsqc {

enum class Sheet { Front, Back };

/// Point of the doubled Y-piece: a hexagon-chart point plus the flag
/// saying which of the two mirror hexagons it lives on.  The map acts
/// identically on both sheets; chart points on the gluing seams are
/// canonicalized to the front sheet.
struct SurfacePoint {
    Sheet sheet = Sheet::Front;
    HalfPlanePoint z;
};

/// Ready-to-evaluate embedding of Y(l1, l2, eps) into the cusped
/// Y(l1, l2, 0).  Immutable after construction; evaluation is pure, so
/// concurrent use is safe.
struct MapAssembly {
    HexagonSolution hex;

    double wedge_angle = 0.0;  // W with sin W = tanh w, cos W = 1/cosh w
    double k_eps = 1.0;        // vertical correction factor 2W/(pi - 2 eps)
    double eps_star = 0.0;     // (2/pi) eps
    double two_a = 0.0;        // height of the straightened curve image
    double rect_top = 0.0;     // 2a (1 + W/eps), top of the log-rectangle
    double cusp_height = 0.0;  // 2a/eps*, height of the cusp-side image
    double exp_eps1 = 0.0;     // scaling of the wedge chart
};

MapAssembly make_assembly(const YPieceParams& p);
MapAssembly make_assembly(HexagonSolution hex);

/// Piecewise straightening of the lower hexagon in Fermi coordinates:
/// the outer strips translate by -+delta_i, the inner strips compress
/// t by (1 - delta_i/eta_i); r is untouched.  Total on the lower piece,
/// continuous at t = -eta1, 0, eta2.
FermiCoord f_beta(const HexagonSolution& hex, const FermiCoord& c);

/// Straightened equidistant curve (the lower piece image of beta),
/// s in [s1, s2].  Its endpoints sit on the verticals x = a1, x = a2.
HalfPlanePoint beta_tilde(const MapAssembly& m, double s);

/// Height of the straightened curve over x in [a1, a2], solved by
/// bisection in the curve parameter (the abscissa is strictly
/// increasing).  Throws std::domain_error outside [a1, a2].
double eval_f(const MapAssembly& m, double x);

/// Vertical renormalization pinning the straightened curve to height 2a:
/// identity below y = a, then y -> a (1 + (y-a)/(f(x)-a)).
HalfPlanePoint g_beta(const MapAssembly& m, double x, double y);

/// Abscissa of the renormalized curve image under the affine change of
/// parameter taking [s1, s2] to [a1, a2]; fixes both endpoints.
double eval_b1(const MapAssembly& m, double x);

/// Shear x -> x + ((y-a)/a)(b1(x) - x) on the band a <= y <= 2a; its
/// inverse below makes the curve image constant speed.
HalfPlanePoint l_beta(const MapAssembly& m, double x, double y);

/// Inverse of l_beta (identity below y = a), solved by safeguarded
/// Newton on the strictly increasing abscissa equation.
HalfPlanePoint h_beta(const MapAssembly& m, double xp, double y);

/// Conformal straightening of the upper piece: the Moebius map
/// n(z) = e^{eps1} (z + e^lambda)/(-z + e^lambda) sends it to a wedge
/// between radii 1 and e^{eps/2}, and the principal logarithm unrolls
/// the wedge onto a rectangle sitting on the line y = 2a.
HalfPlanePoint f_upper(const MapAssembly& m, const HalfPlanePoint& z);
HalfPlanePoint f_upper_inverse(const MapAssembly& m, const HalfPlanePoint& q);

/// Vertical rescale (y - 2a)/k_eps + 2a fixing the line y = 2a and taking
/// the rectangle top to the cusp-side height 2a/eps*.
HalfPlanePoint g_upper(const MapAssembly& m, double x, double y);

/// One piece of the embedding, with the branch pinned by `piece` rather
/// than by classification; each piece formula extends smoothly a little
/// past its seams, which is what finite-difference probes rely on.
HalfPlanePoint phi_piece(const MapAssembly& m, Region piece,
                         const HalfPlanePoint& z);

/// The assembled embedding on hexagon-chart points.
HalfPlanePoint phi_point(const MapAssembly& m, const HalfPlanePoint& z);
HalfPlanePoint phi_inverse_point(const MapAssembly& m, const HalfPlanePoint& q);

SurfacePoint phi(const MapAssembly& m, const SurfacePoint& p);
SurfacePoint phi_inverse(const MapAssembly& m, const SurfacePoint& q);

/// Composite map between reduced Y-pieces with the same l1, l2 and
/// different short boundaries: forward with `from`, then back with `to`
/// through the shared cusped target chart.
SurfacePoint compose_reduced(const MapAssembly& from, const MapAssembly& to,
                             const SurfacePoint& p);
HalfPlanePoint compose_reduced_point(const MapAssembly& from,
                                     const MapAssembly& to,
                                     const HalfPlanePoint& z);

/// Equidistance parameter of the collar-extension target piece:
/// delta = epsbar * sec(arccos(epsbar/(1 + epsbar^2/4))
///                     - (epsbar/eps) arccos(eps/(1 + eps^2/4))),
/// for 0 < epsbar <= eps <= 1/2; equals epsbar when epsbar = eps.
double delta_cor4(double eps, double epsbar);

}  // namespace pantsqc
