#include "pantsqc/halfplane.hpp"

#include <cmath>
#include <stdexcept>

namespace pantsqc {

bool HalfPlanePoint::valid() const {
    return std::isfinite(x) && std::isfinite(y) && y > 0.0;
}

HalfPlanePoint mobius_up(double s, const HalfPlanePoint& z) {
    const double f = std::exp(s);
    return {f * z.x, f * z.y};
}

std::complex<double> mobius_rgh(double s, std::complex<double> z) {
    // (cosh(s/2) z + sinh(s/2)) / (sinh(s/2) z + cosh(s/2)), written with
    // tanh so the coefficients stay finite for large |s|.
    const double th = std::tanh(0.5 * s);
    return (z + th) / (th * z + 1.0);
}

HalfPlanePoint mobius_rgh(double s, const HalfPlanePoint& z) {
    return HalfPlanePoint::from_complex(mobius_rgh(s, z.to_complex()));
}

HalfPlanePoint base_geodesic(double t) {
    return {std::tanh(t), 1.0 / std::cosh(t)};
}

double hyp_dist(const HalfPlanePoint& z1, const HalfPlanePoint& z2) {
    const double chord = std::hypot(z1.x - z2.x, z1.y - z2.y);
    return 2.0 * std::asinh(0.5 * chord / std::sqrt(z1.y * z2.y));
}

FermiCoord fermi_from_uhp(const HalfPlanePoint& z) {
    const double x = z.x;
    const double y = z.y;
    // t = arctanh(2x / (x^2 + y^2 + 1)) expanded into a log of a ratio of
    // sums of squares; avoids forming 1 - 2x/(...) by subtraction.
    const double num = (x + 1.0) * (x + 1.0) + y * y;
    const double den = (x - 1.0) * (x - 1.0) + y * y;
    const double t = 0.5 * std::log(num / den);
    const double r = std::asinh((x * x + y * y - 1.0) / (2.0 * y));
    return {t, r};
}

HalfPlanePoint uhp_from_fermi(const FermiCoord& c) {
    if (std::abs(c.t) + std::abs(c.r) > 700.0) {
        throw std::range_error("uhp_from_fermi: coordinates exceed representable range");
    }
    const double ch_r = std::cosh(c.r);
    const double den = std::cosh(c.t) * ch_r - std::sinh(c.r);
    return {std::sinh(c.t) * ch_r / den, 1.0 / den};
}

double hyp_norm(const TangentVector& v) {
    return std::hypot(v.vx, v.vy) / v.base.y;
}

}  // namespace pantsqc
