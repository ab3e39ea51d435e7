#include "pantsqc/qcmap.hpp"

#include <algorithm>
#include <cmath>

#include "pantsqc/rootfind.hpp"

namespace pantsqc {

namespace {

constexpr double kSeamBias = 1e-12;

// Slack accepted on the abscissa domain [a1, a2]; wider than any bracket
// the solvers probe, so interior root finds never trip the domain check.
double domain_pad(const MapAssembly& m) { return 1e-6 * std::max(1.0, m.hex.a); }

double solver_pad(const MapAssembly& m) { return 1e-8 * std::max(1.0, m.hex.a); }

// Curve-parameter solve bracket: the straightened curve extends smoothly a
// hair past its endpoints, which absorbs roundoff on x = a1, a2 targets.
double bracket_pad(const MapAssembly& m) {
    return 1e-7 * (m.hex.s2 - m.hex.s1);
}

bool on_front_seam(const HexagonSolution& hex, const HalfPlanePoint& z) {
    // Gluing seams of the doubled Y-piece: side c and the two sides d_i.
    if (std::abs(fermi_from_uhp(z).r) <= kSeamBias) return true;
    const FermiCoord top = hex.alpha3_frame(z);
    return std::abs(top.t + hex.eps1) <= kSeamBias ||
           std::abs(top.t - hex.eps2) <= kSeamBias;
}

double branch_displacement(const HexagonSolution& hex, Region piece, double t) {
    switch (piece) {
        case Region::OuterLeft: return hex.delta1;
        case Region::InnerLeft: return -(hex.delta1 / hex.eta1) * t;
        case Region::InnerRight: return -(hex.delta2 / hex.eta2) * t;
        case Region::OuterRight: return -hex.delta2;
        case Region::Upper: break;
    }
    throw std::logic_error("branch_displacement: not a lower piece");
}

HalfPlanePoint g_upper_inverse(const MapAssembly& m, const HalfPlanePoint& q) {
    return {q.x, m.k_eps * (q.y - m.two_a) + m.two_a};
}

}  // namespace

MapAssembly make_assembly(const YPieceParams& p) {
    return make_assembly(solve_hexagon(p));
}

MapAssembly make_assembly(HexagonSolution hex) {
    MapAssembly m;
    m.hex = hex;
    m.wedge_angle = std::acos(hex.kappa);
    m.k_eps = 2.0 * m.wedge_angle / (kPi - 2.0 * hex.eps);
    m.eps_star = (2.0 / kPi) * hex.eps;
    m.two_a = 2.0 * hex.a;
    m.rect_top = m.two_a * (1.0 + m.wedge_angle / hex.eps);
    m.cusp_height = m.two_a / m.eps_star;
    m.exp_eps1 = std::exp(hex.eps1);
    return m;
}

FermiCoord f_beta(const HexagonSolution& hex, const FermiCoord& c) {
    double tp;
    if (c.t <= -hex.eta1) {
        tp = c.t + hex.delta1;
    } else if (c.t <= 0.0) {
        tp = (1.0 - hex.delta1 / hex.eta1) * c.t;
    } else if (c.t <= hex.eta2) {
        tp = (1.0 - hex.delta2 / hex.eta2) * c.t;
    } else {
        tp = c.t - hex.delta2;
    }
    return {tp, c.r};
}

HalfPlanePoint beta_tilde(const MapAssembly& m, double s) {
    const HexagonSolution& hex = m.hex;
    const double u = hex.kappa * s;
    const double den = std::cosh(u) * hex.cosh_w + hex.sinh_w;
    const HalfPlanePoint b{hex.exp_lambda * std::sinh(u) * hex.cosh_w / den,
                           hex.exp_lambda / den};
    const double t = fermi_from_uhp(b).t;
    const double disp = t <= 0.0 ? -(hex.delta1 / hex.eta1) * t
                                 : -(hex.delta2 / hex.eta2) * t;
    return mobius_rgh(disp, b);
}

double eval_f(const MapAssembly& m, double x) {
    const HexagonSolution& hex = m.hex;
    if (x < hex.a1 - domain_pad(m) || x > hex.a2 + domain_pad(m)) {
        throw std::domain_error("eval_f: abscissa outside [a1, a2]");
    }
    const double pad = bracket_pad(m);
    const double lo = hex.s1 - pad;
    const double hi = hex.s2 + pad;
    if (x <= beta_tilde(m, lo).x) return beta_tilde(m, lo).y;
    if (x >= beta_tilde(m, hi).x) return beta_tilde(m, hi).y;
    const double s = bisect([&](double t) { return beta_tilde(m, t).x - x; },
                            lo, hi, 1e-13);
    return beta_tilde(m, s).y;
}

HalfPlanePoint g_beta(const MapAssembly& m, double x, double y) {
    const double a = m.hex.a;
    if (y <= a) return {x, y};
    const double fx = eval_f(m, x);
    if (!(fx > a)) {
        throw std::runtime_error("g_beta: curve height at or below y = a");
    }
    return {x, a * (1.0 + (y - a) / (fx - a))};
}

double eval_b1(const MapAssembly& m, double x) {
    const HexagonSolution& hex = m.hex;
    if (x < hex.a1 - domain_pad(m) || x > hex.a2 + domain_pad(m)) {
        throw std::domain_error("eval_b1: abscissa outside [a1, a2]");
    }
    const double s =
        hex.s1 + (x - hex.a1) * (hex.s2 - hex.s1) / (hex.a2 - hex.a1);
    return beta_tilde(m, s).x;
}

HalfPlanePoint l_beta(const MapAssembly& m, double x, double y) {
    const double a = m.hex.a;
    if (y <= a) return {x, y};
    return {x + ((y - a) / a) * (eval_b1(m, x) - x), y};
}

HalfPlanePoint h_beta(const MapAssembly& m, double xp, double y) {
    const double a = m.hex.a;
    if (y <= a) return {xp, y};
    const double c = (y - a) / a;
    const double pad = solver_pad(m);
    const double lo = m.hex.a1 - pad;
    const double hi = m.hex.a2 + pad;
    const auto shear = [&](double x) {
        return x + c * (eval_b1(m, x) - x) - xp;
    };
    const double tol = 1e-13 * std::max(1.0, a);
    const double x = newton_bisect(shear, lo, hi, tol, tol);
    return {x, y};
}

HalfPlanePoint f_upper(const MapAssembly& m, const HalfPlanePoint& z) {
    const HexagonSolution& hex = m.hex;
    const std::complex<double> zc = z.to_complex();
    const std::complex<double> den = hex.exp_lambda - zc;
    if (den == 0.0) {
        throw std::domain_error("f_upper: pole of the wedge chart");
    }
    const std::complex<double> n = m.exp_eps1 * (zc + hex.exp_lambda) / den;
    const std::complex<double> zeta{n.imag(), -n.real()};  // -i n
    if (!(zeta.real() > 0.0)) {
        throw std::domain_error("f_upper: point outside the upper piece chart");
    }
    const std::complex<double> img =
        (m.two_a / hex.eps) * std::log(zeta) +
        std::complex<double>(hex.a1, m.rect_top);
    return HalfPlanePoint::from_complex(img);
}

HalfPlanePoint f_upper_inverse(const MapAssembly& m, const HalfPlanePoint& q) {
    const HexagonSolution& hex = m.hex;
    const std::complex<double> L =
        (std::complex<double>(q.x - hex.a1, q.y - m.rect_top)) *
        (hex.eps / m.two_a);
    const std::complex<double> zeta = std::exp(L);
    const std::complex<double> n{-zeta.imag(), zeta.real()};  // i zeta
    const std::complex<double> z =
        hex.exp_lambda * (n - m.exp_eps1) / (n + m.exp_eps1);
    return HalfPlanePoint::from_complex(z);
}

HalfPlanePoint g_upper(const MapAssembly& m, double x, double y) {
    return {x, (y - m.two_a) / m.k_eps + m.two_a};
}

HalfPlanePoint phi_piece(const MapAssembly& m, Region piece,
                         const HalfPlanePoint& z) {
    if (piece == Region::Upper) {
        const HalfPlanePoint r = f_upper(m, z);
        return g_upper(m, r.x, r.y);
    }
    const double t = fermi_from_uhp(z).t;
    const HalfPlanePoint z1 = mobius_rgh(branch_displacement(m.hex, piece, t), z);
    const HalfPlanePoint z2 = g_beta(m, z1.x, z1.y);
    return h_beta(m, z2.x, z2.y);
}

HalfPlanePoint phi_point(const MapAssembly& m, const HalfPlanePoint& z) {
    return phi_piece(m, classify_region(m.hex, z), z);
}

HalfPlanePoint phi_inverse_point(const MapAssembly& m, const HalfPlanePoint& q) {
    const HexagonSolution& hex = m.hex;
    if (q.y >= m.two_a - 1e-11) {
        if (q.y > m.cusp_height + 1e-9 * std::max(1.0, m.cusp_height)) {
            throw std::domain_error("phi_inverse: point above the cusp-side image");
        }
        return f_upper_inverse(m, g_upper_inverse(m, q));
    }
    // undo the constant-speed shear, then the vertical renormalization
    const HalfPlanePoint z1 = l_beta(m, q.x, q.y);
    double y0 = z1.y;
    if (z1.y > hex.a) {
        const double fx = eval_f(m, z1.x);
        y0 = hex.a + (z1.y - hex.a) * (fx - hex.a) / hex.a;
    }
    const HalfPlanePoint z0{z1.x, y0};
    const double tp = fermi_from_uhp(z0).t;
    const double bp1 = -hex.eta1 + hex.delta1;
    const double bp2 = hex.eta2 - hex.delta2;
    double disp;
    if (tp <= bp1) {
        disp = -hex.delta1;
    } else if (tp <= 0.0) {
        disp = tp * hex.delta1 / (hex.eta1 - hex.delta1);
    } else if (tp <= bp2) {
        disp = tp * hex.delta2 / (hex.eta2 - hex.delta2);
    } else {
        disp = hex.delta2;
    }
    return mobius_rgh(disp, z0);
}

SurfacePoint phi(const MapAssembly& m, const SurfacePoint& p) {
    const Sheet sheet = on_front_seam(m.hex, p.z) ? Sheet::Front : p.sheet;
    return {sheet, phi_point(m, p.z)};
}

SurfacePoint phi_inverse(const MapAssembly& m, const SurfacePoint& q) {
    const HalfPlanePoint z = phi_inverse_point(m, q.z);
    const Sheet sheet = on_front_seam(m.hex, z) ? Sheet::Front : q.sheet;
    return {sheet, z};
}

HalfPlanePoint compose_reduced_point(const MapAssembly& from,
                                     const MapAssembly& to,
                                     const HalfPlanePoint& z) {
    return phi_inverse_point(to, phi_point(from, z));
}

SurfacePoint compose_reduced(const MapAssembly& from, const MapAssembly& to,
                             const SurfacePoint& p) {
    return phi_inverse(to, phi(from, p));
}

double delta_cor4(double eps, double epsbar) {
    if (!(epsbar > 0.0 && epsbar <= eps && eps <= 0.5)) {
        throw std::domain_error("delta_cor4: need 0 < epsbar <= eps <= 1/2");
    }
    const double brace =
        std::acos(epsbar / (1.0 + 0.25 * epsbar * epsbar)) -
        (epsbar / eps) * std::acos(eps / (1.0 + 0.25 * eps * eps));
    return epsbar / std::cos(brace);
}

}  // namespace pantsqc
