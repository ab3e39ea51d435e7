// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Grid: l1, l2 in {0.3, 1, 3, 6}, eps in
// {0.05, 0.1, 0.25, 0.5}; every tolerance is pinned in the checks below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pantsqc/verify.hpp"

using namespace pantsqc;

namespace {

const double kGridL[] = {0.3, 1.0, 3.0, 6.0};
const double kGridEps[] = {0.05, 0.1, 0.25, 0.5};

int g_failures = 0;

struct Worst {
    double margin = -1e300;  // measured - bound (upper) or bound - measured
    std::string what;

    void consider(const ClaimResult& c, const YPieceParams& p) {
        const double m = c.kind == ClaimKind::LowerBound
                             ? c.bound - c.measured
                             : c.kind == ClaimKind::Equality
                                   ? std::abs(c.measured - c.bound)
                                   : c.measured - c.bound;
        if (m > margin) {
            margin = m;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s at (%g, %g, %g)",
                          c.claim.c_str(), p.l1, p.l2, p.eps);
            what = buf;
        }
    }
};

void report(int idx, const char* text, bool pass, const Worst& w) {
    std::printf("[%s] criterion %2d: %s  (tightest: %s, margin %.3e)\n",
                pass ? "PASS" : "FAIL", idx, text, w.what.c_str(), w.margin);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

bool collect(const VerificationReport& rep, Worst& w, bool& pass) {
    for (const auto& c : rep.claims) {
        w.consider(c, rep.params);
        pass = pass && c.pass;
    }
    return pass;
}

template <class Fn>
void over_grid(Fn&& fn) {
    for (double l1 : kGridL) {
        for (double l2 : kGridL) {
            for (double eps : kGridEps) {
                fn(YPieceParams{l1, l2, eps});
            }
        }
    }
}

}  // namespace

int main() {
    const std::uint64_t seed = kDefaultSeed;
    const auto t0 = std::chrono::steady_clock::now();

    {  // 1. dilatation bound, >= 1e4 interior samples per tuple
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_theorem1(p, 10000, seed), w, pass);
        });
        report(1, "dilatation q <= 1 + 2 eps^2 + 1e-5 over the grid", pass, w);
    }

    {  // 2. pentagon residuals
        double worst = 0.0;
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            const HexagonSolution h = solve_hexagon(p);
            const double sl = std::sinh(h.lambda);
            const double res[] = {
                std::sinh(h.eps1) * sl - std::cosh(h.alpha1),
                std::sinh(h.eps2) * sl - std::cosh(h.alpha2),
                std::sinh(h.alpha1) * std::sinh(h.c1) - std::cosh(h.eps1),
                std::sinh(h.alpha2) * std::sinh(h.c2) - std::cosh(h.eps2),
                std::sinh(h.alpha1) * std::sinh(h.cp1) - 1.0,
                std::sinh(h.alpha2) * std::sinh(h.cp2) - 1.0};
            for (double r : res) worst = std::max(worst, std::abs(r));
            if (worst > 1e-10) pass = false;
            ClaimResult c;
            c.claim = "pentagon.residual.max";
            c.kind = ClaimKind::UpperBound;
            c.measured = worst;
            c.bound = 1e-10;
            w.consider(c, p);
        });
        report(2, "pentagon relation residuals <= 1e-10 over the grid", pass, w);
    }

    {  // 3. boundary coherence
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_boundary_coherence(p, 64, seed), w, pass);
        });
        report(3, "boundary coherence <= 1e-8; cusp-side image length "
                  "= (2/pi) eps within 1e-9", pass, w);
    }

    {  // 4. straightened-curve graph bounds
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_lemma1(p, 512, seed), w, pass);
        });
        report(4, "graph height/slope/speed brackets at 512 samples (h = 1e-6)",
               pass, w);
    }

    {  // 5. inequality ledger
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_section4(p, 512, seed), w, pass);
        });
        report(5, "full inequality ledger on every grid tuple", pass, w);
    }

    {  // 6. reduced Y-piece statements
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_theorem5(p, 400, seed), w, pass);
        });
        report(6, "reduced boundary image <= 1e-8; kernel distortion <= "
                  "1 + 2.5 eps^2 + 1e-5; collar isometry <= 1e-9", pass, w);
    }

    {  // 7. conformality of the wedge chart + linear-map oracle
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_conformality(p, 100, seed), w, pass);
        });
        report(7, "wedge chart |mu| <= 1e-6 at 100 points; numeric Beltrami "
                  "matches the closed form within 1e-8", pass, w);
    }

    {  // 8. seams and roundtrip
        Worst w;
        bool pass = true;
        over_grid([&](const YPieceParams& p) {
            collect(check_seams(p, 128, seed), w, pass);
        });
        report(8, "five seam families <= 1e-9; inverse roundtrip <= 1e-9 "
                  "on 260 points", pass, w);
    }

    {  // 9. composite reduced-to-reduced distortion
        Worst w;
        bool pass = true;
        const double pairs[] = {0.1, 0.25, 0.5};
        for (double eps : pairs) {
            for (double ebar : pairs) {
                collect(check_cor3({1.0, 1.0, eps}, ebar, 300, seed), w, pass);
                collect(check_cor3({0.3, 3.0, eps}, ebar, 300, seed), w, pass);
            }
        }
        report(9, "composite distortion <= (1+2.5 eps^2)(1+2.5 epsbar^2) + 1e-5",
               pass, w);
    }

    {  // 10. collar extension parameter bracket
        Worst w;
        bool pass = true;
        collect(check_cor4(10), w, pass);
        report(10, "equidistance parameter inside its bracket on a 10x10 grid; "
                   "diagonal exact within 1e-12", pass, w);
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
        1000.0;
    std::printf("%d of 10 criteria passed in %.1f s\n", 10 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
