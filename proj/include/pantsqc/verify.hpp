#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pantsqc/qcmap.hpp"

namespace pantsqc {

inline constexpr std::uint64_t kDefaultSeed = 20250808;

using PlanarMap = std::function<HalfPlanePoint(const HalfPlanePoint&)>;

/// Van der Corput radical inverse; halton(i, 2), halton(i, 3) give the
/// deterministic low-discrepancy pairs used by every sampler here.
double halton(std::uint64_t index, std::uint32_t base);

struct BeltramiSample {
    HalfPlanePoint z;
    double mu_abs = 0.0;
    double q = 1.0;
    double jac[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
};

/// Central-difference Jacobian of `map` at z with step h, Beltrami modulus
/// |mu| = |d/dzbar| / |d/dz| and dilatation q = (1+|mu|)/(1-|mu|).
/// Throws std::runtime_error when the sampled |mu| reaches 1.
BeltramiSample numeric_beltrami(const PlanarMap& map, const HalfPlanePoint& z,
                                double h);

/// Ratio of hyperbolic norms ||dF(v)|| / ||v|| for the direction (vx, vy).
double length_distortion(const PlanarMap& map, const HalfPlanePoint& z,
                         double vx, double vy, double h);

/// Worst-direction length distortion at z: the larger of the maximal
/// stretch and the reciprocal of the minimal stretch, hyperbolic norms.
double max_length_distortion(const PlanarMap& map, const HalfPlanePoint& z,
                             double h);

enum class ClaimKind { UpperBound, LowerBound, Equality };

struct ClaimResult {
    std::string claim;
    ClaimKind kind = ClaimKind::UpperBound;
    double measured = 0.0;  // extremum over the sample set
    double bound = 0.0;     // stated bound (or target value for Equality)
    double slack = 0.0;
    bool pass = false;
    long n_samples = 0;
};

struct VerificationReport {
    std::string suite;
    YPieceParams params;
    std::optional<double> epsbar;
    std::uint64_t seed = kDefaultSeed;
    std::vector<ClaimResult> claims;

    bool all_pass() const;
    const ClaimResult* find(const std::string& claim_id) const;
};

/// Deterministic interior samples of one piece of the hexagon, kept a
/// seam margin of >= 1e-4 (in Fermi coordinates, and in height for the
/// renormalization kink at y = a) away from every piece boundary, so
/// finite-difference probes never straddle a kink of the map.
std::vector<HalfPlanePoint> sample_piece(const HexagonSolution& hex,
                                         Region piece, int want);

/// Deterministic interior samples of the reduced kernel (hexagon minus
/// the reduced collars of all three boundaries), same margins.
std::vector<HalfPlanePoint> sample_reduced_kernel(const HexagonSolution& hex,
                                                  int want);

// --- claim suites ---------------------------------------------------------

/// Dilatation bound of the assembled embedding: per-piece sampled q with
/// the piece formula pinned under the finite differences.
VerificationReport check_theorem1(const YPieceParams& p, int n_samples = 10000,
                                  std::uint64_t seed = kDefaultSeed);

/// Straightened-curve graph bounds: height bracket, slope bound, abscissa
/// speed bracket; finite differences with h = 1e-6.
VerificationReport check_lemma1(const YPieceParams& p, int n = 512,
                                std::uint64_t seed = kDefaultSeed);

/// The full inequality ledger: height ratio, the sigma brackets, the
/// eta/delta estimates, curve slopes and heights, the abscissa-speed
/// bracket and the vertical correction factor bracket.
VerificationReport check_section4(const YPieceParams& p, int n = 256,
                                  std::uint64_t seed = kDefaultSeed);

/// Reduced Y-piece statements: boundary-curve image, interior length
/// distortion, isometry on the reduced collars of the long boundaries.
VerificationReport check_theorem5(const YPieceParams& p, int n = 400,
                                  std::uint64_t seed = kDefaultSeed);

/// Boundary coherence along both long boundaries plus the constant-speed
/// horocycle image of the short boundary.
VerificationReport check_boundary_coherence(const YPieceParams& p, int n = 64,
                                            std::uint64_t seed = kDefaultSeed);

/// Two-sided evaluation along the five seam families, plus the
/// phi / phi-inverse roundtrip.
VerificationReport check_seams(const YPieceParams& p, int n = 128,
                               std::uint64_t seed = kDefaultSeed);

/// Conformality of the wedge chart and the closed-form dilatation of
/// triangular linear maps (the oracle for the numeric Beltrami probe).
VerificationReport check_conformality(const YPieceParams& p, int n = 100,
                                      std::uint64_t seed = kDefaultSeed);

/// Composite reduced-to-reduced map: sampled length distortion against
/// the product bound.
VerificationReport check_cor3(const YPieceParams& p, double epsbar,
                              int n = 300, std::uint64_t seed = kDefaultSeed);

/// Collar-extension equidistance parameter: bracket on a grid with
/// epsbar <= eps, and the exact diagonal value.
VerificationReport check_cor4(int grid_n = 10);

/// Every suite for one parameter tuple (cor4 included once).
std::vector<VerificationReport> run_full_suite(const YPieceParams& p,
                                               std::optional<double> epsbar,
                                               std::uint64_t seed = kDefaultSeed,
                                               int n_dilatation = 10000);

}  // namespace pantsqc
