#include "pantsqc/pants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pantsqc/rootfind.hpp"

namespace pantsqc {

namespace {

// Difference arcsinh(u) - arcsinh(v) for u >= v > 0 without cancellation:
// log1p of ((u - v) + (sqrt(1+u^2) - sqrt(1+v^2))) / (v + sqrt(1+v^2)),
// with the sqrt difference rationalized.  u - v is passed in directly so
// callers can supply it in an exact form.
double asinh_diff(double u, double v, double u_minus_v) {
    const double su = std::sqrt(1.0 + u * u);
    const double sv = std::sqrt(1.0 + v * v);
    const double num = u_minus_v * (1.0 + (u + v) / (su + sv));
    return std::log1p(num / (v + sv));
}

HalfPlanePoint perpendicular_point(double t, double height) {
    // Point at distance `height` from the base geodesic along the
    // perpendicular at base_geodesic(t); closed form of rgh(t, i e^height).
    const double ch = std::cosh(height);
    const double den = std::cosh(t) * ch - std::sinh(height);
    return {std::sinh(t) * ch / den, 1.0 / den};
}

HalfPlanePoint beta_point_raw(const HexagonSolution& hex, double s) {
    const double u = hex.kappa * s;
    const double den = std::cosh(u) * hex.cosh_w + hex.sinh_w;
    return {hex.exp_lambda * std::sinh(u) * hex.cosh_w / den,
            hex.exp_lambda / den};
}

constexpr double kSeamBias = 1e-12;

}  // namespace

void YPieceParams::validate() const {
    if (!(std::isfinite(l1) && std::isfinite(l2) && std::isfinite(eps))) {
        throw std::domain_error("YPieceParams: non-finite parameter");
    }
    if (l1 == 0.0 || l2 == 0.0) {
        throw UnsupportedCaseError("YPieceParams: degenerate boundary l_i = 0 is not supported");
    }
    if (l1 < 0.0 || l2 < 0.0) {
        throw std::domain_error("YPieceParams: boundary lengths must be positive");
    }
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw std::domain_error("YPieceParams: eps out of range (0, 0.5]");
    }
}

double collar_width(double l) {
    if (!(l > 0.0) || !std::isfinite(l)) {
        throw std::domain_error("collar_width: boundary length must be > 0");
    }
    return std::asinh(1.0 / std::sinh(0.5 * l));
}

CollarSpec reduced_collar(double l) {
    if (l < 0.0 || !std::isfinite(l)) {
        throw std::domain_error("reduced_collar: boundary length must be >= 0");
    }
    if (l == 0.0) {
        // cusp: everything outside the horocycle of length 1
        return {std::numeric_limits<double>::infinity(), 1.0};
    }
    if (l >= 2.0) {
        return {0.0, l};
    }
    return {std::log(2.0 / l), 1.0 + 0.25 * l * l};
}

FermiCoord HexagonSolution::alpha3_frame(const HalfPlanePoint& z) const {
    return fermi_from_uhp({z.x / exp_lambda, z.y / exp_lambda});
}

HexagonSolution solve_hexagon(const YPieceParams& p) {
    p.validate();

    HexagonSolution h;
    h.l1 = p.l1;
    h.l2 = p.l2;
    h.eps = p.eps;
    h.alpha1 = 0.5 * p.l1;
    h.alpha2 = 0.5 * p.l2;
    h.alpha3 = 0.5 * p.eps;

    const double ca1 = std::cosh(h.alpha1);
    const double ca2 = std::cosh(h.alpha2);
    const double sa1 = std::sinh(h.alpha1);
    const double sa2 = std::sinh(h.alpha2);

    // Height of the hexagon: bisection on the split equation, bracketed
    // around the single-term solution, run down to floating point
    // resolution (well below the 1e-14 residual target).
    const double ca_max = std::max(ca1, ca2);
    const double lam_star = std::asinh(ca_max / std::sinh(h.alpha3));
    const auto split_residual = [&](double lam) {
        const double s = std::sinh(lam);
        return std::asinh(ca1 / s) + std::asinh(ca2 / s) - h.alpha3;
    };
    h.lambda = bisect(split_residual, lam_star - 1.0, lam_star + 50.0,
                      1e-15 * std::max(1.0, lam_star));

    const double slam = std::sinh(h.lambda);
    h.eps1 = std::asinh(ca1 / slam);
    h.eps2 = std::asinh(ca2 / slam);

    h.c1 = std::asinh(std::cosh(h.eps1) / sa1);
    h.c2 = std::asinh(std::cosh(h.eps2) / sa2);
    h.cp1 = std::asinh(1.0 / sa1);
    h.cp2 = std::asinh(1.0 / sa2);
    // delta_i = c_i - c'_i, with cosh(eps)-1 = 2 sinh(eps/2)^2 kept exact
    h.delta1 = asinh_diff(std::cosh(h.eps1) / sa1, 1.0 / sa1,
                          2.0 * std::pow(std::sinh(0.5 * h.eps1), 2) / sa1);
    h.delta2 = asinh_diff(std::cosh(h.eps2) / sa2, 1.0 / sa2,
                          2.0 * std::pow(std::sinh(0.5 * h.eps2), 2) / sa2);

    h.w = std::log(2.0 / p.eps);
    // exact given e^w = 2/eps
    h.cosh_w = 1.0 / p.eps + 0.25 * p.eps;
    h.sinh_w = 1.0 / p.eps - 0.25 * p.eps;
    h.tanh_w = (4.0 - p.eps * p.eps) / (4.0 + p.eps * p.eps);
    h.kappa = 1.0 / h.cosh_w;

    h.a1 = -ca1;
    h.a2 = ca2;
    h.a = ca1 + ca2;

    h.exp_lambda = std::exp(h.lambda);
    h.s1 = -h.eps1 * h.cosh_w;
    h.s2 = h.eps2 * h.cosh_w;

    h.D0 = {0.0, 1.0};
    h.E0 = {0.0, h.exp_lambda};
    h.C1 = base_geodesic(-h.c1);
    h.C2 = base_geodesic(h.c2);
    h.D1 = base_geodesic(-h.delta1);
    h.D2 = base_geodesic(h.delta2);
    h.Cp1 = base_geodesic(-h.cp1);
    h.Cp2 = base_geodesic(h.cp2);
    h.A1 = perpendicular_point(-h.c1, h.alpha1);
    h.A2 = perpendicular_point(h.c2, h.alpha2);
    h.Ap1 = {h.a1, sa1};
    h.Ap2 = {h.a2, sa2};

    const HalfPlanePoint e1 = base_geodesic(-h.eps1);
    const HalfPlanePoint e2 = base_geodesic(h.eps2);
    h.E1 = {h.exp_lambda * e1.x, h.exp_lambda * e1.y};
    h.E2 = {h.exp_lambda * e2.x, h.exp_lambda * e2.y};

    h.B1 = beta_point_raw(h, h.s1);
    h.B2 = beta_point_raw(h, h.s2);
    h.eta1 = -fermi_from_uhp(h.B1).t;
    h.eta2 = fermi_from_uhp(h.B2).t;
    h.H1 = base_geodesic(-h.eta1);
    h.H2 = base_geodesic(h.eta2);
    h.Bp1 = mobius_rgh(h.delta1, h.B1);
    h.Bp2 = mobius_rgh(-h.delta2, h.B2);

    return h;
}

HalfPlanePoint beta_point(const HexagonSolution& hex, double s) {
    const double pad = 1e-9 * std::max(1.0, hex.s2 - hex.s1);
    if (s < hex.s1 - pad || s > hex.s2 + pad) {
        throw std::domain_error("beta_point: parameter outside [s1, s2]");
    }
    return beta_point_raw(hex, s);
}

const char* region_name(Region r) {
    switch (r) {
        case Region::OuterLeft: return "outer_left";
        case Region::InnerLeft: return "inner_left";
        case Region::InnerRight: return "inner_right";
        case Region::OuterRight: return "outer_right";
        case Region::Upper: return "upper";
    }
    return "?";
}

bool hexagon_contains(const HexagonSolution& hex, const HalfPlanePoint& z,
                      double slack) {
    if (!z.valid()) return false;
    const FermiCoord base = fermi_from_uhp(z);
    if (base.r < -slack) return false;
    if (base.t < -hex.c1 - slack || base.t > hex.c2 + slack) return false;
    const FermiCoord top = hex.alpha3_frame(z);
    if (top.r > slack) return false;
    if (top.t < -hex.eps1 - slack || top.t > hex.eps2 + slack) return false;
    return true;
}

Region classify_region(const HexagonSolution& hex, const HalfPlanePoint& z) {
    if (!hexagon_contains(hex, z)) {
        throw std::domain_error("classify_region: point outside the hexagon");
    }
    // Points on the equidistant curve itself count as Upper.
    if (hex.alpha3_frame(z).r >= -hex.w - kSeamBias) {
        return Region::Upper;
    }
    const double t = fermi_from_uhp(z).t;
    if (t <= -hex.eta1) return Region::OuterLeft;
    if (t <= 0.0) return Region::InnerLeft;
    if (t <= hex.eta2) return Region::InnerRight;
    return Region::OuterRight;
}

}  // namespace pantsqc
