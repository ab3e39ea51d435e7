// Command line front end: solve hexagons, evaluate the embedding on point
// sets, run the verification suites, emit SVG figures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pantsqc/json_io.hpp"
#include "pantsqc/qcmap.hpp"
#include "pantsqc/svg.hpp"
#include "pantsqc/verify.hpp"

namespace {

using namespace pantsqc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    double l1 = 1.0, l2 = 1.0, eps = 0.25;
    std::optional<double> epsbar;
    bool grid = false;
    bool inverse = false;
    std::uint64_t seed = kDefaultSeed;
    int samples = 10000;
    int grid_n = 24;
    std::string which = "uhp";
    std::string input = "-";
    std::string output;
};

std::uint64_t effective_seed(const Options& opt) {
    // PANTS_QC_SEED overrides the configured seed
    if (const char* env = std::getenv("PANTS_QC_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return opt.seed;
}

int write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return std::cout.good() ? kExitOk : kExitIo;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    os << text;
    os.flush();
    return os.good() ? kExitOk : kExitIo;
}

int cmd_solve(const Options& opt) {
    const HexagonSolution hex = solve_hexagon({opt.l1, opt.l2, opt.eps});
    return write_text(opt.output, hexagon_to_json(hex).dump(2) + "\n");
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        while (used < s.size() && (s[used] == ' ' || s[used] == '\r')) ++used;
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

int cmd_map(const Options& opt) {
    const MapAssembly m = make_assembly(YPieceParams{opt.l1, opt.l2, opt.eps});

    std::ifstream file;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file.open(opt.input);
        if (!file) {
            std::cerr << "error: cannot open '" << opt.input << "'\n";
            return kExitIo;
        }
        in = &file;
    }

    std::string line;
    if (!std::getline(*in, line)) {
        std::cerr << "error: empty input, expected CSV header 'sheet,t,r'\n";
        return kExitUsage;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "sheet,t,r") {
        std::cerr << "error: malformed CSV, first line must be 'sheet,t,r'\n";
        return kExitUsage;
    }

    std::ostringstream out;
    out << "sheet,x,y,region,error\n";
    std::size_t lineno = 1;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string sheet_s, t_s, r_s, extra;
        std::istringstream row(line);
        if (!std::getline(row, sheet_s, ',') || !std::getline(row, t_s, ',') ||
            !std::getline(row, r_s, ',') || std::getline(row, extra, ',')) {
            std::cerr << "error: malformed CSV row " << lineno << "\n";
            return kExitUsage;
        }
        if (sheet_s != "front" && sheet_s != "back") {
            std::cerr << "error: row " << lineno
                      << ": sheet must be 'front' or 'back'\n";
            return kExitUsage;
        }
        double t = 0.0, r = 0.0;
        if (!parse_double(t_s, t) || !parse_double(r_s, r)) {
            std::cerr << "error: malformed number in CSV row " << lineno << "\n";
            return kExitUsage;
        }
        const Sheet sheet = sheet_s == "front" ? Sheet::Front : Sheet::Back;
        char buf[160];
        try {
            const HalfPlanePoint z = uhp_from_fermi({t, r});
            SurfacePoint res;
            Region region;
            if (opt.inverse) {
                res = phi_inverse(m, {sheet, z});
                region = classify_region(m.hex, res.z);
            } else {
                region = classify_region(m.hex, z);
                res = phi(m, {sheet, z});
            }
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%s,\n",
                          res.sheet == Sheet::Front ? "front" : "back",
                          res.z.x, res.z.y, region_name(region));
            out << buf;
        } catch (const std::exception&) {
            out << sheet_s << ",,,,out-of-domain\n";
        }
    }
    return write_text(opt.output, out.str());
}

void apply_corrupt_hook(std::vector<VerificationReport>& reps) {
    // test hook: force claims whose id contains the given substring to fail
    const char* pat = std::getenv("PANTS_QC_CORRUPT_CLAIM");
    if (!pat || !*pat) return;
    for (auto& r : reps) {
        for (auto& c : r.claims) {
            if (c.claim.find(pat) != std::string::npos) c.pass = false;
        }
    }
}

int cmd_check(const Options& opt) {
    const std::uint64_t seed = effective_seed(opt);
    std::vector<VerificationReport> reps;
    if (opt.grid) {
        const double ls[] = {0.3, 1.0, 3.0, 6.0};
        const double es[] = {0.05, 0.1, 0.25, 0.5};
        for (double l1 : ls) {
            for (double l2 : ls) {
                for (double eps : es) {
                    const YPieceParams p{l1, l2, eps};
                    reps.push_back(check_theorem1(p, opt.samples, seed));
                    reps.push_back(check_lemma1(p, 512, seed));
                    reps.push_back(check_section4(p, 512, seed));
                    reps.push_back(check_theorem5(p, 400, seed));
                    reps.push_back(check_boundary_coherence(p, 64, seed));
                    reps.push_back(check_seams(p, 128, seed));
                    reps.push_back(check_conformality(p, 100, seed));
                }
            }
        }
        const double pairs[] = {0.1, 0.25, 0.5};
        for (double eps : pairs) {
            for (double ebar : pairs) {
                reps.push_back(check_cor3({1.0, 1.0, eps}, ebar, 300, seed));
                reps.push_back(check_cor3({0.3, 3.0, eps}, ebar, 300, seed));
            }
        }
        reps.push_back(check_cor4());
    } else {
        reps = run_full_suite({opt.l1, opt.l2, opt.eps}, opt.epsbar, seed,
                              opt.samples);
    }
    apply_corrupt_hook(reps);
    const nlohmann::json j = reports_to_json(reps);
    const int io = write_text(opt.output, j.dump(2) + "\n");
    if (io != kExitOk) return io;
    return j["all_pass"].get<bool>() ? kExitOk : kExitVerifyFail;
}

int cmd_figure(const Options& opt) {
    const MapAssembly m = make_assembly(YPieceParams{opt.l1, opt.l2, opt.eps});
    std::ostringstream os;
    if (opt.which == "fermi") {
        write_figure_fermi(m, os);
    } else if (opt.which == "uhp") {
        write_figure_uhp(m, os);
    } else if (opt.which == "omega") {
        write_figure_omega(m, os);
    } else {
        write_figure_grid_image(m, opt.grid_n, os);
    }
    const std::string path = opt.output.empty() ? "figure.svg" : opt.output;
    return write_text(path, os.str());
}

void add_params(CLI::App* cmd, Options& opt, bool required) {
    auto* o1 = cmd->add_option("--l1", opt.l1, "first boundary length (> 0)");
    auto* o2 = cmd->add_option("--l2", opt.l2, "second boundary length (> 0)");
    auto* o3 = cmd->add_option("--eps", opt.eps,
                               "short boundary length, in (0, 0.5]");
    if (required) {
        o1->required();
        o2->required();
        o3->required();
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Quasiconformal embedding of a hyperbolic Y-piece with a "
                 "short boundary into a cusped one: solver, evaluator, "
                 "verifier, figures"};
    app.require_subcommand(1);

    CLI::App* solve = app.add_subcommand(
        "solve", "solve the hexagon and print it as JSON");
    add_params(solve, opt, true);
    solve->add_option("--out", opt.output, "output path (default stdout)");

    CLI::App* map = app.add_subcommand(
        "map", "map CSV points 'sheet,t,r' (Fermi coordinates of the seam "
               "geodesic) through the embedding");
    add_params(map, opt, true);
    map->add_flag("--inverse", opt.inverse, "apply the inverse map");
    map->add_option("--input", opt.input, "input CSV path or '-' (stdin)");
    map->add_option("--out", opt.output, "output path (default stdout)");

    CLI::App* check = app.add_subcommand(
        "check", "run the verification suites and print a JSON report");
    add_params(check, opt, false);
    check->add_option("--epsbar", opt.epsbar,
                      "second short boundary for the composite-map check");
    check->add_flag("--grid", opt.grid,
                    "run the default parameter grid l in {0.3,1,3,6}^2, "
                    "eps in {0.05,0.1,0.25,0.5}");
    check->add_option("--seed", opt.seed, "sampling seed");
    check->add_option("--samples", opt.samples,
                      "dilatation samples per tuple (>= 16)")
        ->check(CLI::Range(16, 100000000));
    check->add_option("--out", opt.output, "output path (default stdout)");

    CLI::App* figure = app.add_subcommand("figure", "emit an SVG figure");
    add_params(figure, opt, true);
    figure->add_option("--which", opt.which, "one of fermi|uhp|omega|grid-image")
        ->check(CLI::IsMember({"fermi", "uhp", "omega", "grid-image"}));
    figure->add_option("--grid-n", opt.grid_n, "grid lines for grid-image")
        ->check(CLI::Range(16, 512));
    figure->add_option("--out", opt.output, "output path (default figure.svg)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (map->parsed()) return cmd_map(opt);
        if (check->parsed()) return cmd_check(opt);
        return cmd_figure(opt);
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
