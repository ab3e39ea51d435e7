#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pantsqc/halfplane.hpp"
#include "pantsqc/qcmap.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PANTSQC_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
        r.out.append(buf, n);
        if (n < sizeof buf) break;
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/pantsqc_test_") + name;
}

// Minimal structural validation against our draft-07 schema subset:
// type / required / properties / items / $ref into #/definitions.
bool validate_node(const json& schema, const json& root_schema,
                   const json& value);

bool type_matches(const std::string& type, const json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (type == "number") return v.is_number();
    return false;
}

const json& resolve_ref(const json& root, const std::string& ref) {
    // only handles "#/definitions/<name>"
    const std::string prefix = "#/definitions/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

bool validate_node(const json& schema, const json& root_schema,
                   const json& value) {
    if (schema.contains("$ref")) {
        return validate_node(
            resolve_ref(root_schema, schema["$ref"].get<std::string>()),
            root_schema, value);
    }
    if (schema.contains("type") &&
        !type_matches(schema["type"].get<std::string>(), value)) {
        return false;
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) return false;
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key) &&
                !validate_node(sub, root_schema, value.at(key))) {
                return false;
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        for (const auto& item : value) {
            if (!validate_node(schema["items"], root_schema, item)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("solve prints the hexagon as schema-valid JSON") {
    const RunResult r = run_cli("solve --l1 1 --l2 1 --eps 0.5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["eps1"].get<double>() == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(j["eps2"].get<double>() == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(j["lambda"].get<double>() ==
          doctest::Approx(2.8931743055498855).epsilon(1e-12));

    const json schema =
        json::parse(slurp(std::string(PANTSQC_SOURCE_DIR) +
                          "/schemas/hexagon.schema.json"));
    CHECK(validate_node(schema, schema, j));
}

TEST_CASE("solve rejects out-of-range parameters with exit 2") {
    const RunResult r = run_cli("solve --l1 1 --l2 1 --eps 0.6");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("eps out of range (0, 0.5]") != std::string::npos);

    CHECK(run_cli("solve --l1 0 --l2 1 --eps 0.25").exit_code == 2);
    CHECK(run_cli("solve --l1 1 --l2 1").exit_code == 2);  // missing --eps
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("map evaluates CSV rows and roundtrips through --inverse") {
    using namespace pantsqc;
    const MapAssembly m = make_assembly(YPieceParams{1.0, 1.0, 0.5});

    const std::string fwd_in = tmp_path("map_in.csv");
    {
        std::ofstream os(fwd_in);
        os.precision(17);
        os << "sheet,t,r\n";
        os << "front,0,0\n";                                  // D0
        os << "front,0," << m.hex.lambda << "\n";             // E0
        os << "back,0.2,0.31\n";
        os << "front,9,9\n";                                  // outside
    }
    const RunResult fwd = run_cli("map --l1 1 --l2 1 --eps 0.5 --input " + fwd_in);
    REQUIRE(fwd.exit_code == 0);

    std::istringstream lines(fwd.out);
    std::string header, row_d0, row_e0, row_back, row_bad;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "sheet,x,y,region,error");
    REQUIRE(std::getline(lines, row_d0));
    REQUIRE(std::getline(lines, row_e0));
    REQUIRE(std::getline(lines, row_back));
    REQUIRE(std::getline(lines, row_bad));

    // D0 is fixed
    {
        std::istringstream f(row_d0);
        std::string sheet, xs, ys, region, err;
        std::getline(f, sheet, ',');
        std::getline(f, xs, ',');
        std::getline(f, ys, ',');
        std::getline(f, region, ',');
        std::getline(f, err, ',');
        CHECK(sheet == "front");
        CHECK(std::abs(std::stod(xs)) <= 1e-12);
        CHECK(std::stod(ys) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(err.empty());
    }
    // E0 lands at the cusp-side height
    {
        std::istringstream f(row_e0);
        std::string sheet, xs, ys, region;
        std::getline(f, sheet, ',');
        std::getline(f, xs, ',');
        std::getline(f, ys, ',');
        std::getline(f, region, ',');
        CHECK(std::stod(ys) == doctest::Approx(m.cusp_height).epsilon(1e-12));
        CHECK(region == "upper");
    }
    CHECK(row_back.rfind("back,", 0) == 0);
    CHECK(row_bad.find("out-of-domain") != std::string::npos);

    // feed the mapped interior point back through the inverse
    {
        std::istringstream f(row_back);
        std::string sheet, xs, ys;
        std::getline(f, sheet, ',');
        std::getline(f, xs, ',');
        std::getline(f, ys, ',');
        const FermiCoord fc =
            fermi_from_uhp({std::stod(xs), std::stod(ys)});
        const std::string inv_in = tmp_path("map_inv.csv");
        {
            std::ofstream os(inv_in);
            os << "sheet,t,r\n";
            os.precision(17);
            os << "back," << fc.t << "," << fc.r << "\n";
        }
        const RunResult inv =
            run_cli("map --l1 1 --l2 1 --eps 0.5 --inverse --input " + inv_in);
        REQUIRE(inv.exit_code == 0);
        std::istringstream inv_lines(inv.out);
        std::string h2, row;
        REQUIRE(std::getline(inv_lines, h2));
        REQUIRE(std::getline(inv_lines, row));
        std::istringstream g(row);
        std::string sheet2, x2, y2;
        std::getline(g, sheet2, ',');
        std::getline(g, x2, ',');
        std::getline(g, y2, ',');
        const HalfPlanePoint orig = uhp_from_fermi({0.2, 0.31});
        CHECK(std::hypot(std::stod(x2) - orig.x, std::stod(y2) - orig.y) <= 1e-9);
    }
}

TEST_CASE("map rejects malformed CSV with exit 2") {
    const std::string bad1 = tmp_path("bad1.csv");
    {
        std::ofstream os(bad1);
        os << "t,r,sheet\nfront,0,0\n";
    }
    CHECK(run_cli("map --l1 1 --l2 1 --eps 0.5 --input " + bad1).exit_code == 2);

    const std::string bad2 = tmp_path("bad2.csv");
    {
        std::ofstream os(bad2);
        os << "sheet,t,r\nfront,zero,0\n";
    }
    CHECK(run_cli("map --l1 1 --l2 1 --eps 0.5 --input " + bad2).exit_code == 2);

    const std::string bad3 = tmp_path("bad3.csv");
    {
        std::ofstream os(bad3);
        os << "sheet,t,r\nsideways,0,0\n";
    }
    CHECK(run_cli("map --l1 1 --l2 1 --eps 0.5 --input " + bad3).exit_code == 2);
}

TEST_CASE("check passes, validates against the report schema, determinism") {
    const std::string out1 = tmp_path("check1.json");
    const std::string out2 = tmp_path("check2.json");
    const std::string args =
        "check --l1 1 --l2 1 --eps 0.25 --samples 2000 --seed 5 --out ";
    CHECK(run_cli(args + out1).exit_code == 0);
    CHECK(run_cli(args + out2).exit_code == 0);
    const std::string bytes1 = slurp(out1);
    CHECK(bytes1 == slurp(out2));

    const json j = json::parse(bytes1);
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["suites"].size() >= 8);
    const json schema = json::parse(
        slurp(std::string(PANTSQC_SOURCE_DIR) + "/schemas/report.schema.json"));
    CHECK(validate_node(schema, schema, j));
}

TEST_CASE("grid check covers the default parameter grid") {
    const std::string out = tmp_path("grid.json");
    const RunResult r =
        run_cli("check --grid --samples 64 --seed 3 --out " + out);
    CHECK(r.exit_code == 0);
    const json j = json::parse(slurp(out));
    CHECK(j["all_pass"].get<bool>());
    // 4 x 4 x 4 tuples, seven suites each, plus 18 composite runs and the
    // parameter-free bracket suite
    CHECK(j["suites"].size() == 64 * 7 + 18 + 1);
    int theorem1 = 0;
    for (const auto& s : j["suites"]) {
        if (s["suite"] == "theorem1") ++theorem1;
    }
    CHECK(theorem1 == 64);
}

TEST_CASE("corrupted bound hook forces exit 1") {
    const RunResult r =
        run_cli("check --l1 1 --l2 1 --eps 0.25 --samples 500 --out /dev/null");
    CHECK(r.exit_code == 0);

    // same run with the hidden hook set
    const std::string cmd =
        "PANTS_QC_CORRUPT_CLAIM=theorem1.q.max " + std::string(PANTSQC_CLI_PATH) +
        " check --l1 1 --l2 1 --eps 0.25 --samples 500 --out /dev/null 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[512];
    while (fread(buf, 1, sizeof buf, pipe) == sizeof buf) {}
    const int status = pclose(pipe);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 1);
}

TEST_CASE("seed env var overrides the flag") {
    const std::string a = tmp_path("seed_a.json");
    const std::string b = tmp_path("seed_b.json");
    const std::string base =
        " check --l1 1 --l2 1 --eps 0.25 --samples 600 --seed 1 --out ";
    // run with --seed 1 but env 77; then with --seed 77; outputs must agree
    {
        const std::string cmd = "PANTS_QC_SEED=77 " +
                                std::string(PANTSQC_CLI_PATH) + base + a +
                                " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[512];
        while (fread(buf, 1, sizeof buf, pipe) == sizeof buf) {}
        REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    }
    REQUIRE(run_cli("check --l1 1 --l2 1 --eps 0.25 --samples 600 --seed 77 --out " +
                    b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("figures are standalone SVG 1.1") {
    for (const std::string which : {"fermi", "uhp", "omega", "grid-image"}) {
        const std::string path = tmp_path("fig_" + which + ".svg");
        const RunResult r = run_cli("figure --l1 1 --l2 1 --eps 0.5 --which " +
                                    which + " --out " + path);
        REQUIRE(r.exit_code == 0);
        const std::string svg = slurp(path);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("version=\"1.1\"") != std::string::npos);
        CHECK(svg.find("<polyline") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
    // the half-plane figure labels the degenerate hexagon corner
    const std::string path = tmp_path("fig_uhp.svg");
    CHECK(slurp(path).find("A'1") != std::string::npos);

    CHECK(run_cli("figure --l1 1 --l2 1 --eps 0.5 --which uhp --out "
                  "/nonexistent_dir/f.svg").exit_code == 3);
    CHECK(run_cli("figure --l1 1 --l2 1 --eps 0.5 --which bogus").exit_code == 2);
}
