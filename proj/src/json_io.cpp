#include "pantsqc/json_io.hpp"

namespace pantsqc {

namespace {

nlohmann::json point_json(const HalfPlanePoint& p) {
    return nlohmann::json::array({p.x, p.y});
}

nlohmann::json params_json(const VerificationReport& rep) {
    nlohmann::json j{{"l1", rep.params.l1},
                     {"l2", rep.params.l2},
                     {"eps", rep.params.eps}};
    if (rep.epsbar) j["epsbar"] = *rep.epsbar;
    return j;
}

}  // namespace

nlohmann::json hexagon_to_json(const HexagonSolution& hex) {
    nlohmann::json j;
    j["l1"] = hex.l1;
    j["l2"] = hex.l2;
    j["eps"] = hex.eps;
    j["alpha1"] = hex.alpha1;
    j["alpha2"] = hex.alpha2;
    j["alpha3"] = hex.alpha3;
    j["lambda"] = hex.lambda;
    j["eps1"] = hex.eps1;
    j["eps2"] = hex.eps2;
    j["c1"] = hex.c1;
    j["c2"] = hex.c2;
    j["cp1"] = hex.cp1;
    j["cp2"] = hex.cp2;
    j["delta1"] = hex.delta1;
    j["delta2"] = hex.delta2;
    j["eta1"] = hex.eta1;
    j["eta2"] = hex.eta2;
    j["w"] = hex.w;
    j["kappa"] = hex.kappa;
    j["a"] = hex.a;
    j["a1"] = hex.a1;
    j["a2"] = hex.a2;
    j["s1"] = hex.s1;
    j["s2"] = hex.s2;
    j["vertices"] = nlohmann::json{
        {"A1", point_json(hex.A1)},   {"A2", point_json(hex.A2)},
        {"Ap1", point_json(hex.Ap1)}, {"Ap2", point_json(hex.Ap2)},
        {"B1", point_json(hex.B1)},   {"B2", point_json(hex.B2)},
        {"Bp1", point_json(hex.Bp1)}, {"Bp2", point_json(hex.Bp2)},
        {"C1", point_json(hex.C1)},   {"C2", point_json(hex.C2)},
        {"Cp1", point_json(hex.Cp1)}, {"Cp2", point_json(hex.Cp2)},
        {"D0", point_json(hex.D0)},   {"D1", point_json(hex.D1)},
        {"D2", point_json(hex.D2)},   {"E0", point_json(hex.E0)},
        {"E1", point_json(hex.E1)},   {"E2", point_json(hex.E2)},
        {"H1", point_json(hex.H1)},   {"H2", point_json(hex.H2)}};
    return j;
}

nlohmann::json claim_to_json(const ClaimResult& c, const VerificationReport& rep) {
    return nlohmann::json{{"claim", c.claim},
                          {"params", params_json(rep)},
                          {"bound", c.bound},
                          {"measured", c.measured},
                          {"slack", c.slack},
                          {"pass", c.pass},
                          {"n_samples", c.n_samples},
                          {"seed", rep.seed}};
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : rep.claims) claims.push_back(claim_to_json(c, rep));
    return nlohmann::json{{"suite", rep.suite},
                          {"params", params_json(rep)},
                          {"seed", rep.seed},
                          {"all_pass", rep.all_pass()},
                          {"claims", claims}};
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reps) {
    bool all = true;
    nlohmann::json suites = nlohmann::json::array();
    std::uint64_t seed = reps.empty() ? 0 : reps.front().seed;
    for (const auto& r : reps) {
        all = all && r.all_pass();
        suites.push_back(report_to_json(r));
    }
    return nlohmann::json{{"seed", seed}, {"all_pass", all}, {"suites", suites}};
}

}  // namespace pantsqc
