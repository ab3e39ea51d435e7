#pragma once

#include "json.hpp"
#include "pantsqc/pants.hpp"
#include "pantsqc/verify.hpp"

namespace pantsqc {

/// Flat JSON object for a solved hexagon, numeric keys named after the
/// solution fields, vertices as [x, y] pairs.
nlohmann::json hexagon_to_json(const HexagonSolution& hex);

/// One claim: {claim, params, bound, measured, slack, pass, n_samples, seed}.
nlohmann::json claim_to_json(const ClaimResult& c, const VerificationReport& rep);

/// One suite: {suite, params, seed, all_pass, claims: [...]}.
nlohmann::json report_to_json(const VerificationReport& rep);

/// Aggregate of several suites: {seed, all_pass, suites: [...]}.
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reps);

}  // namespace pantsqc
