#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "pantsqc/verify.hpp"

using namespace pantsqc;

TEST_CASE("numeric Beltrami on known maps") {
    // identity: central differences are exact up to cancellation noise
    const PlanarMap ident = [](const HalfPlanePoint& z) { return z; };
    const BeltramiSample id = numeric_beltrami(ident, {0.3, 1.7}, 1e-6);
    CHECK(id.mu_abs <= 1e-9);
    CHECK(id.q == doctest::Approx(1.0).epsilon(1e-9));

    for (double d : {0.01, 0.1, 0.3}) {
        const PlanarMap squish = [d](const HalfPlanePoint& z) {
            return HalfPlanePoint{z.x, (1.0 - d) * z.y};
        };
        const BeltramiSample s = numeric_beltrami(squish, {0.2, 0.9}, 1e-6);
        CHECK(std::abs(s.q - 1.0 / (1.0 - d)) <= 1e-8);
    }

    // orientation-degenerate map is rejected
    const PlanarMap collapse = [](const HalfPlanePoint& z) {
        return HalfPlanePoint{z.y, z.y};
    };
    CHECK_THROWS_AS((void)numeric_beltrami(collapse, {0.0, 1.0}, 1e-6),
                    std::runtime_error);
}

TEST_CASE("length distortion on known maps") {
    const PlanarMap ident = [](const HalfPlanePoint& z) { return z; };
    CHECK(length_distortion(ident, {0.4, 2.2}, 1.0, 0.3, 1e-6) ==
          doctest::Approx(1.0).epsilon(1e-10));

    const PlanarMap up = [](const HalfPlanePoint& z) {
        return mobius_up(0.8, z);
    };
    for (auto [vx, vy] : {std::pair{1.0, 0.0}, std::pair{0.3, -1.1}}) {
        CHECK(length_distortion(up, {-0.2, 0.8}, vx, vy, 1e-7) ==
              doctest::Approx(1.0).epsilon(1e-6));
    }

    // worst direction of a vertical squeeze, measured hyperbolically
    for (double d : {0.1, 0.25}) {
        const PlanarMap squish = [d](const HalfPlanePoint& z) {
            return HalfPlanePoint{z.x, (1.0 - d) * z.y};
        };
        CHECK(max_length_distortion(squish, {0.0, 1.0}, 1e-6) ==
              doctest::Approx(1.0 / (1.0 - d)).epsilon(1e-8));
    }
}

TEST_CASE("inner strip compression bracketed by the Fermi metric") {
    const MapAssembly m = make_assembly(YPieceParams{1.0, 1.0, 0.5});
    const HexagonSolution& h = m.hex;
    const double k = h.delta2 / h.eta2;
    const PlanarMap strip = [&h](const HalfPlanePoint& z) {
        const double t = fermi_from_uhp(z).t;
        return mobius_rgh(-(h.delta2 / h.eta2) * t, z);
    };
    for (double frac : {0.25, 0.6, 0.9}) {
        for (double r : {0.2, 1.0, 2.0}) {
            const HalfPlanePoint z = uhp_from_fermi({frac * h.eta2, r});
            const double ratio = length_distortion(strip, z, 1.0, 0.0, 1e-7);
            CHECK(ratio <= 1.0 + 1e-6);
            CHECK(ratio >= 1.0 - k - 1e-6);
        }
    }
}

TEST_CASE("strip dilatation matches the closed form 1/(1 - delta/eta)") {
    // the straightening stage alone compresses each inner strip by a
    // constant factor in Fermi coordinates, so its dilatation is constant
    for (auto [l1, l2, eps] : {std::tuple{1.0, 1.0, 0.5},
                               std::tuple{0.3, 6.0, 0.25}}) {
        const HexagonSolution h = solve_hexagon({l1, l2, eps});
        const double ks[2] = {h.delta1 / h.eta1, h.delta2 / h.eta2};
        for (int side = 0; side < 2; ++side) {
            const double k = ks[side];
            const PlanarMap stage = [&h, side](const HalfPlanePoint& z) {
                const double t = fermi_from_uhp(z).t;
                const double rate =
                    side == 0 ? h.delta1 / h.eta1 : h.delta2 / h.eta2;
                return mobius_rgh(-rate * t, z);
            };
            const double eta = side == 0 ? h.eta1 : h.eta2;
            for (double frac : {0.3, 0.7}) {
                for (double r : {0.4, 1.5}) {
                    const double t = (side == 0 ? -1.0 : 1.0) * frac * eta;
                    const HalfPlanePoint z = uhp_from_fermi({t, r});
                    const BeltramiSample s =
                        numeric_beltrami(stage, z, 1e-6);
                    CHECK(s.q ==
                          doctest::Approx(1.0 / (1.0 - k)).epsilon(1e-6));
                }
            }
        }
    }
}

TEST_CASE("finite-difference dilatation converges at second order") {
    const MapAssembly m = make_assembly(YPieceParams{1.0, 1.0, 0.25});
    const auto pts = sample_piece(m.hex, Region::InnerRight, 5);
    for (const auto& z : pts) {
        const PlanarMap map = [&m](const HalfPlanePoint& p) {
            return phi_piece(m, Region::InnerRight, p);
        };
        // step large enough that truncation still dominates roundoff
        const double h0 = 1e-4 * std::max(1.0, std::hypot(z.x, z.y));
        const double q1 = numeric_beltrami(map, z, h0).q;
        const double q2 = numeric_beltrami(map, z, 0.5 * h0).q;
        const double q3 = numeric_beltrami(map, z, 0.25 * h0).q;
        CHECK(std::abs(q3 - q2) <= std::max(4.0 * std::abs(q2 - q1), 1e-10));
    }
}

TEST_CASE("samplers cope with a heavily lopsided split") {
    // eps2 is tiny here (the split is proportional to the boundary cosh
    // ratio), which once starved the strip samplers
    const HexagonSolution h = solve_hexagon({12.0, 0.5, 0.01});
    REQUIRE(h.eps2 < 1e-4);
    for (Region piece : {Region::InnerRight, Region::OuterRight, Region::Upper}) {
        const auto pts = sample_piece(h, piece, 20);
        CHECK(pts.size() == 20);
        for (const auto& z : pts) CHECK(classify_region(h, z) == piece);
    }
}

TEST_CASE("piece samplers land in their piece") {
    const HexagonSolution h = solve_hexagon({0.3, 6.0, 0.25});
    for (Region piece : {Region::OuterLeft, Region::InnerLeft,
                         Region::InnerRight, Region::OuterRight, Region::Upper}) {
        for (const auto& z : sample_piece(h, piece, 40)) {
            CHECK(classify_region(h, z) == piece);
        }
    }
    const double sw1 = std::sinh(std::log(2.0 / h.l1));
    for (const auto& z : sample_reduced_kernel(h, 60)) {
        const FermiCoord f = fermi_from_uhp(z);
        CHECK(h.alpha3_frame(z).r <= -h.w);
        CHECK(std::abs(std::sinh(f.t + h.c1)) * std::cosh(f.r) >= sw1 - 1e-12);
    }
}

TEST_CASE("full suites pass on a reference tuple") {
    const YPieceParams p{1.0, 1.0, 0.25};
    for (const auto& rep : run_full_suite(p, 0.1, kDefaultSeed, 2000)) {
        for (const auto& c : rep.claims) {
            INFO(rep.suite, ".", c.claim, " measured=", c.measured,
             " bound=", c.bound);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("symmetric tuple has matching coherence profiles") {
    const VerificationReport rep =
        check_boundary_coherence({1.0, 1.0, 0.5}, 64);
    const ClaimResult* a1 = rep.find("coherence.alpha1.sup");
    const ClaimResult* a2 = rep.find("coherence.alpha2.sup");
    REQUIRE(a1 != nullptr);
    REQUIRE(a2 != nullptr);
    CHECK(std::abs(a1->measured - a2->measured) <= 1e-12);
}

TEST_CASE("central seam agrees exactly") {
    // both compressed strips fix t = 0, so the two routes are bitwise equal
    const VerificationReport rep = check_seams({0.3, 6.0, 0.5}, 64);
    const ClaimResult* c = rep.find("seam.t_zero.sup");
    REQUIRE(c != nullptr);
    CHECK(c->measured == 0.0);
}

TEST_CASE("reports are reproducible for a fixed seed") {
    const YPieceParams p{0.3, 3.0, 0.5};
    const VerificationReport a = check_theorem1(p, 1500, 99);
    const VerificationReport b = check_theorem1(p, 1500, 99);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(std::memcmp(&a.claims[i].measured, &b.claims[i].measured,
                          sizeof(double)) == 0);
    }
    const VerificationReport c = check_theorem5(p, 200, 7);
    const VerificationReport d = check_theorem5(p, 200, 7);
    REQUIRE(c.claims.size() == d.claims.size());
    for (std::size_t i = 0; i < c.claims.size(); ++i) {
        CHECK(std::memcmp(&c.claims[i].measured, &d.claims[i].measured,
                          sizeof(double)) == 0);
    }
}

TEST_CASE("dilatation suite rejects a corrupted bound") {
    // sanity check of the pass logic itself: an impossible bound must fail
    VerificationReport rep = check_theorem1({1.0, 1.0, 0.25}, 500, 1);
    REQUIRE(rep.find("theorem1.q.max") != nullptr);
    ClaimResult tampered = *rep.find("theorem1.q.max");
    tampered.pass = tampered.measured <= 1.0 + 1e-9;  // absurd bound
    CHECK_FALSE(tampered.pass);
}
