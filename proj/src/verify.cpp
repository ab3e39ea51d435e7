#include "pantsqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pantsqc {

namespace {

constexpr double kSeamMargin = 1e-4;

struct Jacobian {
    double ux, uy, vx, vy;
    HalfPlanePoint img;
};

Jacobian numeric_jacobian(const PlanarMap& map, const HalfPlanePoint& z,
                          double h) {
    const HalfPlanePoint fxp = map({z.x + h, z.y});
    const HalfPlanePoint fxm = map({z.x - h, z.y});
    const HalfPlanePoint fyp = map({z.x, z.y + h});
    const HalfPlanePoint fym = map({z.x, z.y - h});
    Jacobian j;
    j.ux = (fxp.x - fxm.x) / (2.0 * h);
    j.uy = (fyp.x - fym.x) / (2.0 * h);
    j.vx = (fxp.y - fxm.y) / (2.0 * h);
    j.vy = (fyp.y - fym.y) / (2.0 * h);
    j.img = map(z);
    return j;
}

double fd_step(const HalfPlanePoint& z) {
    return 1e-6 * std::max(1.0, std::hypot(z.x, z.y));
}

ClaimResult upper_claim(std::string id, double measured, double bound,
                        double slack, long n) {
    ClaimResult c;
    c.claim = std::move(id);
    c.kind = ClaimKind::UpperBound;
    c.measured = measured;
    c.bound = bound;
    c.slack = slack;
    c.n_samples = n;
    c.pass = measured <= bound + slack;
    return c;
}

ClaimResult lower_claim(std::string id, double measured, double bound,
                        double slack, long n) {
    ClaimResult c;
    c.claim = std::move(id);
    c.kind = ClaimKind::LowerBound;
    c.measured = measured;
    c.bound = bound;
    c.slack = slack;
    c.n_samples = n;
    c.pass = measured >= bound - slack;
    return c;
}

ClaimResult equality_claim(std::string id, double measured, double target,
                           double slack, long n) {
    ClaimResult c;
    c.claim = std::move(id);
    c.kind = ClaimKind::Equality;
    c.measured = measured;
    c.bound = target;
    c.slack = slack;
    c.n_samples = n;
    c.pass = std::abs(measured - target) <= slack;
    return c;
}

double piece_displacement(const HexagonSolution& hex, Region piece, double t) {
    switch (piece) {
        case Region::OuterLeft: return hex.delta1;
        case Region::InnerLeft: return -(hex.delta1 / hex.eta1) * t;
        case Region::InnerRight: return -(hex.delta2 / hex.eta2) * t;
        case Region::OuterRight: return -hex.delta2;
        case Region::Upper: break;
    }
    return 0.0;
}

// Covering bound for the Fermi height of hexagon points: the distance to
// the base geodesic is convex along geodesics, so its maximum over the
// hexagon sits at a vertex of the top side.
double fermi_height_bound(const HexagonSolution& hex) {
    return std::asinh(std::sinh(hex.lambda) * std::cosh(0.5 * hex.eps));
}

bool lower_sample_ok(const HexagonSolution& hex, Region piece,
                     const HalfPlanePoint& z, double t) {
    if (!hexagon_contains(hex, z, 0.0)) return false;
    const FermiCoord top = hex.alpha3_frame(z);
    if (top.r > -hex.w - kSeamMargin) return false;  // equidistant-curve seam
    // keep solver probes clear of the d-side images; the margin shrinks
    // with the side split so heavily lopsided hexagons stay samplable
    const double m1 = std::min(kSeamMargin, 0.25 * hex.eps1);
    const double m2 = std::min(kSeamMargin, 0.25 * hex.eps2);
    if (top.t < -hex.eps1 + m1 || top.t > hex.eps2 - m2) {
        return false;
    }
    // kink of the vertical renormalization at height a
    const HalfPlanePoint z1 =
        mobius_rgh(piece_displacement(hex, piece, t), z);
    const double ya_margin = std::max(kSeamMargin, 12.0 * fd_step(z1));
    if (std::abs(z1.y - hex.a) < ya_margin) return false;
    return true;
}

}  // namespace

double halton(std::uint64_t index, std::uint32_t base) {
    double f = 1.0;
    double r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

BeltramiSample numeric_beltrami(const PlanarMap& map, const HalfPlanePoint& z,
                                double h) {
    const Jacobian j = numeric_jacobian(map, z, h);
    const double re_z = 0.5 * (j.ux + j.vy);
    const double im_z = 0.5 * (j.vx - j.uy);
    const double re_zb = 0.5 * (j.ux - j.vy);
    const double im_zb = 0.5 * (j.vx + j.uy);
    const double mu = std::hypot(re_zb, im_zb) / std::hypot(re_z, im_z);
    if (!(mu < 1.0)) {
        throw std::runtime_error("numeric_beltrami: |mu| >= 1 (degenerate or orientation reversing)");
    }
    BeltramiSample s;
    s.z = z;
    s.mu_abs = mu;
    s.q = (1.0 + mu) / (1.0 - mu);
    s.jac[0][0] = j.ux;
    s.jac[0][1] = j.uy;
    s.jac[1][0] = j.vx;
    s.jac[1][1] = j.vy;
    return s;
}

double length_distortion(const PlanarMap& map, const HalfPlanePoint& z,
                         double vx, double vy, double h) {
    const Jacobian j = numeric_jacobian(map, z, h);
    const double wx = j.ux * vx + j.uy * vy;
    const double wy = j.vx * vx + j.vy * vy;
    const double norm_in = std::hypot(vx, vy) / z.y;
    const double norm_out = std::hypot(wx, wy) / j.img.y;
    if (!(norm_in > 0.0)) {
        throw std::domain_error("length_distortion: zero direction");
    }
    if (!(norm_out > 0.0)) {
        throw std::runtime_error("length_distortion: degenerate Jacobian");
    }
    return norm_out / norm_in;
}

double max_length_distortion(const PlanarMap& map, const HalfPlanePoint& z,
                             double h) {
    const Jacobian j = numeric_jacobian(map, z, h);
    const double e = 0.5 * (j.ux + j.vy);
    const double f = 0.5 * (j.ux - j.vy);
    const double g = 0.5 * (j.vx + j.uy);
    const double k = 0.5 * (j.vx - j.uy);
    const double s_max = std::hypot(e, k) + std::hypot(f, g);
    const double s_min = std::abs(std::hypot(e, k) - std::hypot(f, g));
    const double scale = z.y / j.img.y;  // hyperbolic norm conversion
    if (!(s_min > 0.0)) {
        throw std::runtime_error("max_length_distortion: degenerate Jacobian");
    }
    return std::max(s_max * scale, 1.0 / (s_min * scale));
}

bool VerificationReport::all_pass() const {
    for (const auto& c : claims) {
        if (!c.pass) return false;
    }
    return true;
}

const ClaimResult* VerificationReport::find(const std::string& claim_id) const {
    for (const auto& c : claims) {
        if (c.claim == claim_id) return &c;
    }
    return nullptr;
}

std::vector<HalfPlanePoint> sample_piece(const HexagonSolution& hex,
                                         Region piece, int want) {
    std::vector<HalfPlanePoint> out;
    out.reserve(static_cast<std::size_t>(want));
    if (piece == Region::Upper) {
        const double t_lo = -hex.eps1 + std::min(1e-6 * hex.eps, 0.25 * hex.eps1);
        const double t_hi = hex.eps2 - std::min(1e-6 * hex.eps, 0.25 * hex.eps2);
        const double r_lo = -hex.w + kSeamMargin;
        const double r_hi = -1e-6;
        std::uint64_t i = 1;
        while (static_cast<int>(out.size()) < want) {
            const double t = t_lo + (t_hi - t_lo) * halton(i, 2);
            const double r = r_lo + (r_hi - r_lo) * halton(i, 3);
            ++i;
            const HalfPlanePoint zu = uhp_from_fermi({t, r});
            out.push_back({zu.x * hex.exp_lambda, zu.y * hex.exp_lambda});
        }
        return out;
    }

    double t_lo = 0.0, t_hi = 0.0;
    switch (piece) {
        case Region::OuterLeft: t_lo = -hex.c1; t_hi = -hex.eta1; break;
        case Region::InnerLeft: t_lo = -hex.eta1; t_hi = 0.0; break;
        case Region::InnerRight: t_lo = 0.0; t_hi = hex.eta2; break;
        case Region::OuterRight: t_lo = hex.eta2; t_hi = hex.c2; break;
        case Region::Upper: break;
    }
    const double t_margin =
        std::min(kSeamMargin, 0.25 * (t_hi - t_lo));  // thin inner strips
    t_lo += t_margin;
    t_hi -= t_margin;
    const double r_max = fermi_height_bound(hex);
    std::uint64_t i = 1;
    const std::uint64_t budget = 20000ULL * static_cast<std::uint64_t>(want);
    while (static_cast<int>(out.size()) < want && i < budget) {
        const double t = t_lo + (t_hi - t_lo) * halton(i, 2);
        const double r = 1e-6 + r_max * halton(i, 3);
        ++i;
        HalfPlanePoint z;
        try {
            z = uhp_from_fermi({t, r});
        } catch (const std::range_error&) {
            continue;
        }
        if (lower_sample_ok(hex, piece, z, t)) out.push_back(z);
    }
    if (static_cast<int>(out.size()) < want) {
        throw std::runtime_error("sample_piece: rejection sampling starved");
    }
    return out;
}

std::vector<HalfPlanePoint> sample_reduced_kernel(const HexagonSolution& hex,
                                                  int want) {
    std::vector<HalfPlanePoint> out;
    out.reserve(static_cast<std::size_t>(want));
    const double r_max = fermi_height_bound(hex);
    const double sw1 = hex.l1 < 2.0 ? std::sinh(std::log(2.0 / hex.l1)) : -1.0;
    const double sw2 = hex.l2 < 2.0 ? std::sinh(std::log(2.0 / hex.l2)) : -1.0;
    std::uint64_t i = 1;
    const std::uint64_t budget = 50000ULL * static_cast<std::uint64_t>(want);
    while (static_cast<int>(out.size()) < want && i < budget) {
        const double t = -hex.c1 + (hex.c1 + hex.c2) * halton(i, 2);
        const double r = 1e-6 + r_max * halton(i, 3);
        ++i;
        // stay a margin away from the piece breakpoints
        if (std::abs(t + hex.eta1) < kSeamMargin || std::abs(t) < kSeamMargin ||
            std::abs(t - hex.eta2) < kSeamMargin) {
            continue;
        }
        HalfPlanePoint z;
        try {
            z = uhp_from_fermi({t, r});
        } catch (const std::range_error&) {
            continue;
        }
        const double cr = std::cosh(r);
        if (sw1 > 0.0 && std::abs(std::sinh(t + hex.c1)) * cr < sw1) continue;
        if (sw2 > 0.0 && std::abs(std::sinh(t - hex.c2)) * cr < sw2) continue;
        Region piece;
        if (t <= -hex.eta1) piece = Region::OuterLeft;
        else if (t <= 0.0) piece = Region::InnerLeft;
        else if (t <= hex.eta2) piece = Region::InnerRight;
        else piece = Region::OuterRight;
        if (lower_sample_ok(hex, piece, z, t)) out.push_back(z);
    }
    if (static_cast<int>(out.size()) < want) {
        throw std::runtime_error("sample_reduced_kernel: rejection sampling starved");
    }
    return out;
}

VerificationReport check_theorem1(const YPieceParams& p, int n_samples,
                                  std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    VerificationReport rep;
    rep.suite = "theorem1";
    rep.params = p;
    rep.seed = seed;

    const struct {
        Region piece;
        double share;
    } alloc[] = {{Region::OuterLeft, 0.25},
                 {Region::InnerLeft, 0.10},
                 {Region::InnerRight, 0.10},
                 {Region::OuterRight, 0.25},
                 {Region::Upper, 0.30}};
    double max_q = 1.0;
    double min_q = std::numeric_limits<double>::infinity();
    long total = 0;
    for (const auto& a : alloc) {
        const int want = std::max(1, static_cast<int>(a.share * n_samples));
        const auto pts = sample_piece(m.hex, a.piece, want);
        const PlanarMap map = [&m, piece = a.piece](const HalfPlanePoint& z) {
            return phi_piece(m, piece, z);
        };
        for (const auto& z : pts) {
            const BeltramiSample s = numeric_beltrami(map, z, fd_step(z));
            max_q = std::max(max_q, s.q);
            min_q = std::min(min_q, s.q);
            ++total;
        }
    }
    const double eps2 = p.eps * p.eps;
    rep.claims.push_back(
        upper_claim("theorem1.q.max", max_q, 1.0 + 2.0 * eps2, 1e-5, total));
    rep.claims.push_back(lower_claim("theorem1.q.min", min_q, 1.0, 0.0, total));
    return rep;
}

VerificationReport check_lemma1(const YPieceParams& p, int n,
                                std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    const HexagonSolution& hex = m.hex;
    VerificationReport rep;
    rep.suite = "lemma1";
    rep.params = p;
    rep.seed = seed;

    const double h = 1e-6;
    const double two_a = m.two_a;
    const double eps2 = p.eps * p.eps;

    double f_min = std::numeric_limits<double>::infinity();
    double f_max = -f_min;
    double fp_max = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x =
            hex.a1 + (hex.a2 - hex.a1) * (i + 0.5) / static_cast<double>(n);
        f_min = std::min(f_min, eval_f(m, x));
        f_max = std::max(f_max, eval_f(m, x));
        const double fp = (eval_f(m, x + h) - eval_f(m, x - h)) / (2.0 * h);
        fp_max = std::max(fp_max, std::abs(fp));
    }
    const double height_slack = 1e-9 * std::max(1.0, two_a);
    rep.claims.push_back(lower_claim("lemma1.i.f.min", f_min,
                                     two_a * (1.0 - eps2 / 8.0), height_slack, n));
    rep.claims.push_back(upper_claim("lemma1.i.f.max", f_max,
                                     two_a * (1.0 + eps2 / 6.0), height_slack, n));
    rep.claims.push_back(upper_claim("lemma1.ii.abs_fprime.max", fp_max,
                                     (4.0 / 15.0) * eps2, 1e-5, n));

    double bt_min = std::numeric_limits<double>::infinity();
    double bt_max = -bt_min;
    for (int i = 0; i < n; ++i) {
        const double s = (hex.s1 + 2.0 * h) +
                         (hex.s2 - hex.s1 - 4.0 * h) * (i + 0.5) / static_cast<double>(n);
        const double d =
            (beta_tilde(m, s + h).x - beta_tilde(m, s - h).x) / (2.0 * h);
        bt_min = std::min(bt_min, d);
        bt_max = std::max(bt_max, d);
    }
    rep.claims.push_back(lower_claim("lemma1.iii.abscissa_speed.min", bt_min,
                                     two_a * (1.0 - eps2 / 2.0), 1e-5, n));
    rep.claims.push_back(upper_claim("lemma1.iii.abscissa_speed.max", bt_max,
                                     two_a * (1.0 + eps2 / 6.0), 1e-5, n));
    return rep;
}

VerificationReport check_section4(const YPieceParams& p, int n,
                                  std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    const HexagonSolution& hex = m.hex;
    VerificationReport rep;
    rep.suite = "section4";
    rep.params = p;
    rep.seed = seed;
    auto& claims = rep.claims;

    const double eps = p.eps;
    const double eps2 = eps * eps;
    const double tight = 1e-10;

    const double lam_ratio =
        std::exp(hex.lambda) / (2.0 * std::sinh(hex.lambda));
    claims.push_back(lower_claim("s4.height_ratio.lower", lam_ratio, 1.0, 0.0, 1));
    claims.push_back(upper_claim("s4.height_ratio.upper", lam_ratio,
                                 1.0 + eps2 / 63.0, tight, 1));

    const double sigma1 =
        (0.5 * eps) / (std::sinh(hex.eps1) + std::sinh(hex.eps2));
    claims.push_back(lower_claim("s4.sigma1.lower", sigma1, 1.0 - eps2 / 24.0,
                                 tight, 1));
    claims.push_back(upper_claim("s4.sigma1.upper", sigma1, 1.0, 0.0, 1));

    const double sigma2 = lam_ratio * sigma1;
    claims.push_back(lower_claim("s4.sigma2.lower", sigma2, 1.0 - eps2 / 24.0,
                                 tight, 1));
    claims.push_back(upper_claim("s4.sigma2.upper", sigma2, 1.0 + eps2 / 63.0,
                                 tight, 1));
    const double height0 = hex.exp_lambda * (eps / 2.0);  // e^(lambda - w)
    claims.push_back(equality_claim("s4.sigma2.identity",
                                    height0 / (m.two_a * sigma2), 1.0, 1e-12, 1));

    const double sx[2] = {lam_ratio * 2.0 / (std::cosh(hex.eps1) + hex.tanh_w),
                          lam_ratio * 2.0 / (std::cosh(hex.eps2) + hex.tanh_w)};
    const double sy[2] = {
        sigma2 / ((std::cosh(hex.eps1) - 1.0) * (0.5 * eps) * hex.cosh_w + 1.0),
        sigma2 / ((std::cosh(hex.eps2) - 1.0) * (0.5 * eps) * hex.cosh_w + 1.0)};
    const double ai[2] = {hex.a1, hex.a2};
    const HalfPlanePoint bi[2] = {hex.B1, hex.B2};
    const double eta[2] = {hex.eta1, hex.eta2};
    const double delta[2] = {hex.delta1, hex.delta2};
    const double eps_i[2] = {hex.eps1, hex.eps2};
    const double alpha_i[2] = {hex.alpha1, hex.alpha2};
    for (int i = 0; i < 2; ++i) {
        const std::string k = std::to_string(i + 1);
        claims.push_back(lower_claim("s4.sigma_x" + k + ".lower", sx[i],
                                     1.0 + eps2 / 6.0, tight, 1));
        claims.push_back(upper_claim("s4.sigma_x" + k + ".upper", sx[i],
                                     1.0 + 2.0 * eps2 / 7.0, tight, 1));
        claims.push_back(equality_claim("s4.sigma_x" + k + ".identity",
                                        bi[i].x / (ai[i] * sx[i]), 1.0, 1e-12, 1));
        claims.push_back(lower_claim("s4.sigma_y" + k + ".lower", sy[i],
                                     1.0 - eps2 / 8.0, tight, 1));
        claims.push_back(upper_claim("s4.sigma_y" + k + ".upper", sy[i],
                                     1.0 + eps2 / 63.0, tight, 1));
        claims.push_back(equality_claim("s4.sigma_y" + k + ".identity",
                                        bi[i].y / (m.two_a * sy[i]), 1.0, 1e-12, 1));

        claims.push_back(lower_claim("s4.eta" + k + ".lower", eta[i],
                                     0.4 * std::abs(ai[i]) / (hex.a * hex.a),
                                     tight, 1));
        claims.push_back(lower_claim("s4.delta" + k + ".nonneg", delta[i], 0.0,
                                     0.0, 1));
        claims.push_back(upper_claim(
            "s4.delta" + k + ".upper", delta[i],
            (std::cosh(eps_i[i]) - 1.0) / std::cosh(alpha_i[i]), tight, 1));
        claims.push_back(upper_claim(
            "s4.delta" + k + ".upper_sigma", delta[i],
            eps2 / (8.0 * sigma1 * sigma1) * std::abs(ai[i]) / (hex.a * hex.a),
            tight, 1));
        claims.push_back(upper_claim("s4.delta_eta" + k + ".upper",
                                     delta[i] / eta[i], eps2 / 3.0, tight, 1));

        const double tanh_eta_formula =
            2.0 * std::abs(ai[i]) * sx[i] /
            (ai[i] * ai[i] * sx[i] * sx[i] +
             4.0 * hex.a * hex.a * sy[i] * sy[i] + 1.0);
        claims.push_back(upper_claim("s4.tanh_eta" + k + ".upper",
                                     std::tanh(eta[i]), 1.0 / 9.0 + eps2 / 16.0,
                                     tight, 1));
        claims.push_back(equality_claim("s4.tanh_eta" + k + ".identity",
                                        std::tanh(eta[i]) / tanh_eta_formula,
                                        1.0, 1e-10, 1));
        const double xy = bi[i].x * bi[i].x + bi[i].y * bi[i].y + 1.0;
        claims.push_back(upper_claim("s4.endpoint_norm" + k + ".upper", xy,
                                     5.0 * (1.0 + eps2 / 6.0) * hex.a * hex.a,
                                     tight, 1));
    }

    // curve slope and height claims, finite differences with h = 1e-6
    const double h = 1e-6;
    double slope_upper_viol = -std::numeric_limits<double>::infinity();
    double slope_lower_margin = std::numeric_limits<double>::infinity();
    double ratio21_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double s =
            2.0 * h + (hex.s2 - 4.0 * h) * (i + 0.5) / static_cast<double>(n);
        const HalfPlanePoint bp = beta_point(hex, s + h);
        const HalfPlanePoint bm = beta_point(hex, s - h);
        const HalfPlanePoint b0 = beta_point(hex, s);
        const double d1 = (bp.x - bm.x) / (2.0 * h);
        const double d2 = (bp.y - bm.y) / (2.0 * h);
        const double slope = d2 / b0.y;
        slope_upper_viol = std::max(
            slope_upper_viol,
            slope + s * (eps2 / 2.0) * (1.0 - (5.0 / 16.0) * eps2));
        slope_lower_margin = std::min(
            slope_lower_margin, slope + (eps / 2.0) * std::sinh(eps / 2.0));
        ratio21_min = std::min(ratio21_min, d2 / d1);
    }
    claims.push_back(upper_claim("s4.curve_slope.upper", slope_upper_viol, 0.0,
                                 1e-5, n));
    claims.push_back(lower_claim("s4.curve_slope.lower", slope_lower_margin,
                                 0.0, 1e-5, n));
    claims.push_back(lower_claim("s4.curve_slope_ratio.lower", ratio21_min,
                                 -(4.0 / 15.0) * eps2, 1e-5, n));

    double b2_min = std::numeric_limits<double>::infinity();
    double b2_max = -b2_min;
    double lift_min = std::numeric_limits<double>::infinity();
    double lift_max = -lift_min;
    for (int i = 0; i < n; ++i) {
        const double s =
            hex.s1 + (hex.s2 - hex.s1) * (i + 0.5) / static_cast<double>(n);
        const double y = beta_point(hex, s).y;
        const double yt = beta_tilde(m, s).y;
        b2_min = std::min(b2_min, y);
        b2_max = std::max(b2_max, y);
        lift_min = std::min(lift_min, yt / y);
        lift_max = std::max(lift_max, yt / y);
    }
    claims.push_back(lower_claim("s4.curve_height.lower", b2_min,
                                 m.two_a * (1.0 - eps2 / 8.0), tight, n));
    claims.push_back(upper_claim("s4.curve_height.max_at_center", b2_max,
                                 height0, 1e-12 * std::max(1.0, height0), n));
    claims.push_back(upper_claim("s4.curve_height.upper", height0,
                                 m.two_a * (1.0 + eps2 / 63.0), tight, 1));
    claims.push_back(lower_claim("s4.straightened_lift.lower", lift_min, 1.0,
                                 1e-10, n));
    claims.push_back(upper_claim("s4.straightened_lift.upper", lift_max,
                                 1.0 + eps2 / 7.0, tight, n));

    const double hx = 1e-6 * std::max(1.0, hex.a);
    double b1p_min = std::numeric_limits<double>::infinity();
    double b1p_max = -b1p_min;
    for (int i = 0; i < n; ++i) {
        const double x = (hex.a1 + 2.0 * hx) +
                         (hex.a2 - hex.a1 - 4.0 * hx) * (i + 0.5) / static_cast<double>(n);
        const double d = (eval_b1(m, x + hx) - eval_b1(m, x - hx)) / (2.0 * hx);
        b1p_min = std::min(b1p_min, d);
        b1p_max = std::max(b1p_max, d);
    }
    const double speed = eps * hex.cosh_w;  // = 1 + eps^2/4
    claims.push_back(equality_claim("s4.curve_speed.identity", speed,
                                    1.0 + eps2 / 4.0, 1e-14, 1));
    claims.push_back(lower_claim("s4.b1prime.lower", b1p_min,
                                 speed * (1.0 - eps2 / 2.0), 1e-5, n));
    claims.push_back(upper_claim("s4.b1prime.upper", b1p_max,
                                 speed * (1.0 + eps2 / 6.0), 1e-5, n));

    claims.push_back(lower_claim("s4.k_eps.lower", m.k_eps, 1.0, 0.0, 1));
    claims.push_back(upper_claim("s4.k_eps.upper", m.k_eps,
                                 1.0 + eps2 * eps * (1.0 + eps) / (6.0 * kPi),
                                 tight, 1));
    claims.push_back(upper_claim("s4.k_eps.upper_coarse", m.k_eps,
                                 1.0 + eps2 / 25.0, tight, 1));
    return rep;
}

VerificationReport check_theorem5(const YPieceParams& p, int n,
                                  std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    const HexagonSolution& hex = m.hex;
    VerificationReport rep;
    rep.suite = "theorem5";
    rep.params = p;
    rep.seed = seed;

    // (ii) the reduced-collar boundary of the short side is the curve at
    // distance log(2/eps); its image must be the height-2a horocycle.
    double height_dev = 0.0;
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    for (int i = 0; i <= n; ++i) {
        const double s =
            hex.s1 + (hex.s2 - hex.s1) * i / static_cast<double>(n);
        const HalfPlanePoint img = phi_point(m, beta_point(hex, s));
        height_dev = std::max(height_dev, std::abs(img.y - m.two_a));
        x_min = std::min(x_min, img.x);
        x_max = std::max(x_max, img.x);
    }
    rep.claims.push_back(upper_claim("t5.ii.image_height_dev.max", height_dev,
                                     0.0, 1e-8, n + 1));
    rep.claims.push_back(equality_claim("t5.ii.horocycle_length",
                                        2.0 * (x_max - x_min) / m.two_a, 1.0,
                                        1e-8, n + 1));
    {
        const int segs = 8192;
        double len = 0.0;
        HalfPlanePoint prev = beta_point(hex, hex.s1);
        for (int i = 1; i <= segs; ++i) {
            const HalfPlanePoint cur = beta_point(
                hex, hex.s1 + (hex.s2 - hex.s1) * i / static_cast<double>(segs));
            len += hyp_dist(prev, cur);
            prev = cur;
        }
        rep.claims.push_back(equality_claim("t5.ii.source_boundary_length",
                                            2.0 * len,
                                            1.0 + 0.25 * p.eps * p.eps, 1e-9,
                                            segs));
    }

    // (iii) worst-direction length distortion over the reduced kernel
    const auto kernel = sample_reduced_kernel(hex, n);
    double dist_max = 1.0;
    for (const auto& z : kernel) {
        const Region piece = classify_region(hex, z);
        const PlanarMap map = [&m, piece](const HalfPlanePoint& q) {
            return phi_piece(m, piece, q);
        };
        dist_max = std::max(dist_max, max_length_distortion(map, z, fd_step(z)));
    }
    rep.claims.push_back(upper_claim("t5.iii.length_distortion.max", dist_max,
                                     1.0 + 2.5 * p.eps * p.eps, 1e-5,
                                     static_cast<long>(kernel.size())));

    // (iv) isometry on the reduced collars of the long boundaries
    const double ls[2] = {p.l1, p.l2};
    for (int i = 0; i < 2; ++i) {
        const std::string id =
            "t5.iv.collar" + std::to_string(i + 1) + ".isometry";
        if (ls[i] >= 2.0) {
            // empty reduced collar, nothing to test
            rep.claims.push_back(upper_claim(id, 0.0, 0.0, 1e-9, 0));
            continue;
        }
        const double wi = std::log(2.0 / ls[i]);
        const double alpha = 0.5 * ls[i];
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i) + 1);
        std::uniform_real_distribution<double> unif(0.001, 0.999);
        const auto collar_point = [&](double u, double d) {
            const double sd = std::sinh(d);
            const double cd = std::cosh(d);
            const double side = i == 0 ? 1.0 : -1.0;  // toward the hexagon
            const double eu = std::exp(u);
            const HalfPlanePoint base{side * eu * sd / cd, eu / cd};
            return mobius_rgh(i == 0 ? -hex.c1 : hex.c2, base);
        };
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const HalfPlanePoint pa =
                collar_point(alpha * unif(rng), wi * unif(rng));
            const HalfPlanePoint pb =
                collar_point(alpha * unif(rng), wi * unif(rng));
            const double before = hyp_dist(pa, pb);
            const double after = hyp_dist(phi_point(m, pa), phi_point(m, pb));
            worst = std::max(worst, std::abs(after - before));
        }
        rep.claims.push_back(upper_claim(id, worst, 0.0, 1e-9, 100));
    }
    return rep;
}

VerificationReport check_boundary_coherence(const YPieceParams& p, int n,
                                            std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    const HexagonSolution& hex = m.hex;
    VerificationReport rep;
    rep.suite = "boundary_coherence";
    rep.params = p;
    rep.seed = seed;

    const HalfPlanePoint unit{0.0, 1.0};
    double sup1 = 0.0;
    double sup2 = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double u1 = hex.alpha1 * i / static_cast<double>(n);
        const HalfPlanePoint src1 =
            mobius_rgh(-hex.c1, mobius_up(hex.alpha1 - u1, unit));
        const HalfPlanePoint ref1 =
            mobius_rgh(-hex.cp1, mobius_up(hex.alpha1 - u1, unit));
        sup1 = std::max(sup1, hyp_dist(phi_point(m, src1), ref1));

        const double u2 = hex.alpha2 * i / static_cast<double>(n);
        const HalfPlanePoint src2 = mobius_rgh(hex.c2, mobius_up(u2, unit));
        const HalfPlanePoint ref2 = mobius_rgh(hex.cp2, mobius_up(u2, unit));
        sup2 = std::max(sup2, hyp_dist(phi_point(m, src2), ref2));
    }
    rep.claims.push_back(upper_claim("coherence.alpha1.sup", sup1, 0.0, 1e-8, n + 1));
    rep.claims.push_back(upper_claim("coherence.alpha2.sup", sup2, 0.0, 1e-8, n + 1));

    // the short boundary: constant-speed horocycle segment at the cusp height
    double sup3 = 0.0;
    double height_dev = 0.0;
    std::vector<double> xs(static_cast<std::size_t>(n) + 1);
    const double du = hex.alpha3 / static_cast<double>(n);
    for (int i = 0; i <= n; ++i) {
        const double u = du * i;
        const HalfPlanePoint g = base_geodesic(hex.eps2 - u);
        const HalfPlanePoint src{hex.exp_lambda * g.x, hex.exp_lambda * g.y};
        const HalfPlanePoint img = phi_point(m, src);
        const HalfPlanePoint ref{hex.a2 - u * m.two_a / p.eps, m.cusp_height};
        sup3 = std::max(sup3, hyp_dist(img, ref));
        height_dev = std::max(height_dev, std::abs(img.y - m.cusp_height));
        xs[static_cast<std::size_t>(i)] = img.x;
    }
    rep.claims.push_back(upper_claim("coherence.gamma3.sup", sup3, 0.0, 1e-8, n + 1));
    rep.claims.push_back(upper_claim("coherence.gamma3.height_dev.max",
                                     height_dev, 0.0, 1e-8, n + 1));
    double len = 0.0;
    double speed_min = std::numeric_limits<double>::infinity();
    double speed_max = -speed_min;
    for (int i = 0; i < n; ++i) {
        const double seg = std::abs(xs[static_cast<std::size_t>(i) + 1] -
                                    xs[static_cast<std::size_t>(i)]) /
                           m.cusp_height;
        len += seg;
        speed_min = std::min(speed_min, seg / du);
        speed_max = std::max(speed_max, seg / du);
    }
    rep.claims.push_back(equality_claim("coherence.gamma3.length", 2.0 * len,
                                        m.eps_star, 1e-9, n));
    rep.claims.push_back(upper_claim("coherence.gamma3.speed_spread",
                                     speed_max - speed_min, 0.0, 1e-8, n));
    return rep;
}

VerificationReport check_seams(const YPieceParams& p, int n,
                               std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    const HexagonSolution& hex = m.hex;
    VerificationReport rep;
    rep.suite = "seams";
    rep.params = p;
    rep.seed = seed;

    const auto euclid = [](const HalfPlanePoint& a, const HalfPlanePoint& b) {
        return std::hypot(a.x - b.x, a.y - b.y);
    };
    const auto seam_sup = [&](double t_seam, Region left, Region right) {
        const double r_top = fermi_from_uhp(t_seam < 0.0   ? hex.B1
                                            : t_seam > 0.0 ? hex.B2
                                                           : beta_point(hex, 0.0))
                                 .r;
        double sup = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double r = (r_top - 2e-9) * i / static_cast<double>(n);
            const HalfPlanePoint z = uhp_from_fermi({t_seam, r});
            sup = std::max(sup, euclid(phi_piece(m, left, z),
                                       phi_piece(m, right, z)));
        }
        return sup;
    };
    rep.claims.push_back(upper_claim("seam.t_minus_eta1.sup",
                                     seam_sup(-hex.eta1, Region::OuterLeft,
                                              Region::InnerLeft),
                                     0.0, 1e-9, n + 1));
    rep.claims.push_back(upper_claim(
        "seam.t_zero.sup",
        seam_sup(0.0, Region::InnerLeft, Region::InnerRight), 0.0, 1e-9, n + 1));
    rep.claims.push_back(upper_claim("seam.t_eta2.sup",
                                     seam_sup(hex.eta2, Region::InnerRight,
                                              Region::OuterRight),
                                     0.0, 1e-9, n + 1));

    double beta_sup = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s =
            hex.s1 + (hex.s2 - hex.s1) * i / static_cast<double>(n);
        const HalfPlanePoint b = beta_point(hex, s);
        const Region lower = fermi_from_uhp(b).t <= 0.0 ? Region::InnerLeft
                                                        : Region::InnerRight;
        beta_sup = std::max(beta_sup, euclid(phi_piece(m, lower, b),
                                             phi_piece(m, Region::Upper, b)));
    }
    rep.claims.push_back(upper_claim("seam.beta.sup", beta_sup, 0.0, 1e-9, n + 1));

    double ya_sup = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x =
            hex.a1 + (hex.a2 - hex.a1) * i / static_cast<double>(n);
        const HalfPlanePoint gb = g_beta(m, x, hex.a);
        const HalfPlanePoint hb = h_beta(m, x, hex.a);
        const HalfPlanePoint lb = l_beta(m, x, hex.a);
        ya_sup = std::max({ya_sup, euclid(gb, {x, hex.a}),
                           euclid(hb, {x, hex.a}), euclid(lb, {x, hex.a})});
    }
    rep.claims.push_back(upper_claim("seam.y_a.sup", ya_sup, 0.0, 1e-12, n + 1));

    // phi / phi-inverse roundtrip over every piece
    double rt_sup = 0.0;
    long rt_n = 0;
    for (Region piece : {Region::OuterLeft, Region::InnerLeft,
                         Region::InnerRight, Region::OuterRight, Region::Upper}) {
        for (const auto& z : sample_piece(hex, piece, 52)) {
            const HalfPlanePoint back = phi_inverse_point(m, phi_point(m, z));
            rt_sup = std::max(rt_sup, euclid(back, z));
            ++rt_n;
        }
    }
    rep.claims.push_back(upper_claim("roundtrip.sup", rt_sup, 0.0, 1e-9, rt_n));
    return rep;
}

VerificationReport check_conformality(const YPieceParams& p, int n,
                                      std::uint64_t seed) {
    const MapAssembly m = make_assembly(p);
    VerificationReport rep;
    rep.suite = "conformality";
    rep.params = p;
    rep.seed = seed;

    const PlanarMap chart = [&m](const HalfPlanePoint& z) {
        return f_upper(m, z);
    };
    double mu_max = 0.0;
    for (const auto& z : sample_piece(m.hex, Region::Upper, n)) {
        mu_max = std::max(mu_max, numeric_beltrami(chart, z, fd_step(z)).mu_abs);
    }
    rep.claims.push_back(upper_claim("conformal.wedge_chart.mu.max", mu_max,
                                     0.0, 1e-6, n));

    // numeric Beltrami against the closed form for triangular linear maps
    double q_err = 0.0;
    double mu_err = 0.0;
    double bound_viol = -std::numeric_limits<double>::infinity();
    const double ds[] = {0.01, 0.1, 0.3};
    const HalfPlanePoint z0{0.3, 1.2};
    for (double d : ds) {
        const PlanarMap diag = [d](const HalfPlanePoint& z) {
            return HalfPlanePoint{z.x, (1.0 - d) * z.y};
        };
        const BeltramiSample s = numeric_beltrami(diag, z0, 1e-6);
        q_err = std::max(q_err, std::abs(s.q - 1.0 / (1.0 - d)));
    }
    const double rhosigma[][2] = {{0.1, 0.05}, {-0.2, 0.1}, {0.05, -0.25}};
    for (const auto& rs : rhosigma) {
        const double rho = rs[0];
        const double sigma = rs[1];
        const PlanarMap tri = [rho, sigma](const HalfPlanePoint& z) {
            return HalfPlanePoint{z.x + rho * z.y, (1.0 + sigma) * z.y};
        };
        const BeltramiSample s = numeric_beltrami(tri, z0, 1e-6);
        const double mu_exact = std::hypot(-sigma, rho) /
                                std::hypot(2.0 + sigma, -rho);
        mu_err = std::max(mu_err, std::abs(s.mu_abs - mu_exact));
        bound_viol = std::max(
            bound_viol, s.q - 1.0 / (1.0 - std::hypot(rho, sigma)));
    }
    rep.claims.push_back(equality_claim("lemma2.diag.q_error.max", q_err, 0.0,
                                        1e-8, 3));
    rep.claims.push_back(equality_claim("lemma2.triangular.mu_error.max",
                                        mu_err, 0.0, 1e-8, 3));
    rep.claims.push_back(upper_claim("lemma2.triangular.q_bound", bound_viol,
                                     0.0, 1e-8, 3));
    return rep;
}

VerificationReport check_cor3(const YPieceParams& p, double epsbar, int n,
                              std::uint64_t seed) {
    const MapAssembly from = make_assembly(p);
    const MapAssembly to = make_assembly(YPieceParams{p.l1, p.l2, epsbar});
    VerificationReport rep;
    rep.suite = "cor3";
    rep.params = p;
    rep.epsbar = epsbar;
    rep.seed = seed;

    const PlanarMap comp = [&](const HalfPlanePoint& z) {
        return compose_reduced_point(from, to, z);
    };
    const HexagonSolution& hb = to.hex;
    double dist_max = 1.0;
    long used = 0;
    for (const auto& z : sample_reduced_kernel(from.hex, n)) {
        // skip samples whose image sits on a seam of the inverse map
        const HalfPlanePoint mid = phi_point(from, z);
        if (std::abs(mid.y - hb.a) < 2.0 * kSeamMargin * std::max(1.0, hb.a)) {
            continue;
        }
        const HalfPlanePoint dst = comp(z);
        const double td = fermi_from_uhp(dst).t;
        if (std::abs(td + hb.eta1) < 2.0 * kSeamMargin ||
            std::abs(td) < 2.0 * kSeamMargin ||
            std::abs(td - hb.eta2) < 2.0 * kSeamMargin) {
            continue;
        }
        if (hb.alpha3_frame(dst).r > -hb.w - 2.0 * kSeamMargin) continue;
        dist_max = std::max(dist_max, max_length_distortion(comp, z, fd_step(z)));
        ++used;
    }
    const double bound = (1.0 + 2.5 * p.eps * p.eps) *
                         (1.0 + 2.5 * epsbar * epsbar);
    rep.claims.push_back(
        upper_claim("cor3.length_distortion.max", dist_max, bound, 1e-5, used));
    return rep;
}

VerificationReport check_cor4(int grid_n) {
    VerificationReport rep;
    rep.suite = "cor4";
    rep.params = YPieceParams{1.0, 1.0, 0.5};
    rep.seed = 0;

    const auto s_func = [](double t) {
        return (0.5 * kPi * t) / std::sin(0.5 * kPi * t);
    };
    double viol = -std::numeric_limits<double>::infinity();
    double diag_err = 0.0;
    long cnt = 0;
    for (int i = 1; i <= grid_n; ++i) {
        const double eps = 0.5 * i / static_cast<double>(grid_n);
        for (int j = 1; j <= grid_n; ++j) {
            const double epsbar = eps * j / static_cast<double>(grid_n);
            const double d = delta_cor4(eps, epsbar);
            const double up = (2.0 / kPi) * eps * s_func(epsbar / eps);
            const double lo = up - std::pow(eps, 4) / 12.0;
            viol = std::max({viol, d - up, lo - d});
            ++cnt;
        }
        diag_err = std::max(diag_err, std::abs(delta_cor4(eps, eps) - eps));
    }
    rep.claims.push_back(upper_claim("cor4.bracket.max_violation", viol, 0.0,
                                     1e-12, cnt));
    rep.claims.push_back(equality_claim("cor4.diagonal.identity", diag_err, 0.0,
                                        1e-12, grid_n));
    return rep;
}

std::vector<VerificationReport> run_full_suite(const YPieceParams& p,
                                               std::optional<double> epsbar,
                                               std::uint64_t seed,
                                               int n_dilatation) {
    std::vector<VerificationReport> out;
    out.push_back(check_theorem1(p, n_dilatation, seed));
    out.push_back(check_lemma1(p, 512, seed));
    out.push_back(check_section4(p, 512, seed));
    out.push_back(check_theorem5(p, 400, seed));
    out.push_back(check_boundary_coherence(p, 64, seed));
    out.push_back(check_seams(p, 128, seed));
    out.push_back(check_conformality(p, 100, seed));
    out.push_back(check_cor3(p, epsbar.value_or(p.eps), 300, seed));
    out.push_back(check_cor4());
    return out;
}

}  // namespace pantsqc
