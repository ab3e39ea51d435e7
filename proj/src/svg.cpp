#include "pantsqc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pantsqc {

namespace {

struct XY {
    double x, y;
};

struct Polyline {
    std::vector<XY> pts;
    std::string style;
};

struct Label {
    XY at;
    std::string text;
    bool marker;
};

const char* kBoundary = "fill:none;stroke:#202020;stroke-width:1.6";
const char* kCurve = "fill:none;stroke:#1f6fb5;stroke-width:1.6";
const char* kGuide = "fill:none;stroke:#909090;stroke-width:1;stroke-dasharray:5,4";
const char* kGrid = "fill:none;stroke:#4a8fd0;stroke-width:0.7";
const char* kTarget = "fill:none;stroke:#b0541f;stroke-width:1.2;stroke-dasharray:7,3";

/// World-coordinate scene scaled into an 800x600 viewbox, y axis up.
class Scene {
  public:
    void add_polyline(std::vector<XY> pts, const char* style) {
        if (pts.size() < 2) return;
        for (const auto& p : pts) grow(p);
        lines_.push_back({std::move(pts), style});
    }

    void add_label(XY at, std::string text, bool marker = true) {
        grow(at);
        labels_.push_back({at, std::move(text), marker});
    }

    void write(std::ostream& os) const {
        const double width = 800.0, height = 600.0, margin = 45.0;
        const double dx = std::max(x1_ - x0_, 1e-12);
        const double dy = std::max(y1_ - y0_, 1e-12);
        const double s = std::min((width - 2 * margin) / dx,
                                  (height - 2 * margin) / dy);
        const double ox = 0.5 * (width - s * dx) - s * x0_;
        const double oy = 0.5 * (height - s * dy) + s * y1_;
        const auto px = [&](XY p) { return ox + s * p.x; };
        const auto py = [&](XY p) { return oy - s * p.y; };

        os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
              "width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
        os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
        for (const auto& pl : lines_) {
            os << "<polyline style=\"" << pl.style << "\" points=\"";
            for (const auto& p : pl.pts) {
                os << fmt(px(p)) << ',' << fmt(py(p)) << ' ';
            }
            os << "\"/>\n";
        }
        for (const auto& lb : labels_) {
            if (lb.marker) {
                os << "<circle cx=\"" << fmt(px(lb.at)) << "\" cy=\""
                   << fmt(py(lb.at)) << "\" r=\"2.6\" fill=\"#202020\"/>\n";
            }
            os << "<text x=\"" << fmt(px(lb.at) + 5.0) << "\" y=\""
               << fmt(py(lb.at) - 5.0)
               << "\" font-family=\"sans-serif\" font-size=\"13\">" << lb.text
               << "</text>\n";
        }
        os << "</svg>\n";
    }

  private:
    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    }
    void grow(XY p) {
        x0_ = std::min(x0_, p.x);
        x1_ = std::max(x1_, p.x);
        y0_ = std::min(y0_, p.y);
        y1_ = std::max(y1_, p.y);
    }

    std::vector<Polyline> lines_;
    std::vector<Label> labels_;
    double x0_ = std::numeric_limits<double>::infinity();
    double x1_ = -std::numeric_limits<double>::infinity();
    double y0_ = std::numeric_limits<double>::infinity();
    double y1_ = -std::numeric_limits<double>::infinity();
};

XY xy(const HalfPlanePoint& p) { return {p.x, p.y}; }
XY xy(const FermiCoord& c) { return {c.t, c.r}; }

std::vector<HalfPlanePoint> geodesic_arc(const HalfPlanePoint& a,
                                         const HalfPlanePoint& b, int n) {
    std::vector<HalfPlanePoint> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    if (std::abs(a.x - b.x) < 1e-12 * std::max(1.0, std::abs(a.x))) {
        const double la = std::log(a.y), lb = std::log(b.y);
        for (int i = 0; i <= n; ++i) {
            const double u = la + (lb - la) * i / static_cast<double>(n);
            out.push_back({a.x, std::exp(u)});
        }
        return out;
    }
    const double m = (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y) /
                     (2.0 * (a.x - b.x));
    const double ta = std::atan2(a.y, a.x - m);
    const double tb = std::atan2(b.y, b.x - m);
    const double radius = std::hypot(a.x - m, a.y);
    for (int i = 0; i <= n; ++i) {
        const double t = ta + (tb - ta) * i / static_cast<double>(n);
        out.push_back({m + radius * std::cos(t), radius * std::sin(t)});
    }
    return out;
}

std::vector<HalfPlanePoint> alpha3_arc(const HexagonSolution& hex, int n) {
    std::vector<HalfPlanePoint> out;
    for (int i = 0; i <= n; ++i) {
        const double u = -hex.eps1 + (hex.eps1 + hex.eps2) * i / static_cast<double>(n);
        const HalfPlanePoint g = base_geodesic(u);
        out.push_back({hex.exp_lambda * g.x, hex.exp_lambda * g.y});
    }
    return out;
}

std::vector<HalfPlanePoint> beta_arc(const HexagonSolution& hex, int n) {
    std::vector<HalfPlanePoint> out;
    for (int i = 0; i <= n; ++i) {
        out.push_back(beta_point(
            hex, hex.s1 + (hex.s2 - hex.s1) * i / static_cast<double>(n)));
    }
    return out;
}

template <class Map>
std::vector<XY> mapped(const std::vector<HalfPlanePoint>& pts, Map&& f) {
    std::vector<XY> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(f(p));
    return out;
}

void add_hexagon_labels(Scene& sc, const HexagonSolution& hex, bool fermi) {
    const auto at = [&](const HalfPlanePoint& p) {
        return fermi ? xy(fermi_from_uhp(p)) : xy(p);
    };
    sc.add_label(at(hex.C1), "C1");
    sc.add_label(at(hex.H1), "H1");
    sc.add_label(at(hex.D1), "D1");
    sc.add_label(at(hex.D0), "D0");
    sc.add_label(at(hex.D2), "D2");
    sc.add_label(at(hex.H2), "H2");
    sc.add_label(at(hex.C2), "C2");
    sc.add_label(at(hex.A1), "A1");
    sc.add_label(at(hex.A2), "A2");
    sc.add_label(at(hex.B1), "B1");
    sc.add_label(at(hex.B2), "B2");
    sc.add_label(at(hex.E1), "E1");
    sc.add_label(at(hex.E0), "E0");
    sc.add_label(at(hex.E2), "E2");
}

}  // namespace

void write_figure_fermi(const MapAssembly& m, std::ostream& os) {
    const HexagonSolution& hex = m.hex;
    Scene sc;
    const auto fm = [](const HalfPlanePoint& p) { return xy(fermi_from_uhp(p)); };

    sc.add_polyline({{-hex.c1, 0.0}, {hex.c2, 0.0}}, kBoundary);         // c
    sc.add_polyline({{-hex.c1, 0.0}, {-hex.c1, hex.alpha1}}, kBoundary); // alpha1
    sc.add_polyline({{hex.c2, 0.0}, {hex.c2, hex.alpha2}}, kBoundary);   // alpha2
    sc.add_polyline(mapped(geodesic_arc(hex.A1, hex.E1, 96), fm), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.A2, hex.E2, 96), fm), kBoundary);
    sc.add_polyline(mapped(alpha3_arc(hex, 96), fm), kBoundary);
    sc.add_polyline(mapped(beta_arc(hex, 128), fm), kCurve);
    sc.add_polyline({{0.0, 0.0}, {0.0, hex.lambda}}, kGuide);            // E0 D0
    add_hexagon_labels(sc, hex, true);
    sc.write(os);
}

void write_figure_uhp(const MapAssembly& m, std::ostream& os) {
    const HexagonSolution& hex = m.hex;
    Scene sc;
    const auto id = [](const HalfPlanePoint& p) { return xy(p); };

    sc.add_polyline(mapped(geodesic_arc(hex.C1, hex.C2, 96), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.C1, hex.A1, 48), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.C2, hex.A2, 48), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.A1, hex.E1, 96), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.A2, hex.E2, 96), id), kBoundary);
    sc.add_polyline(mapped(alpha3_arc(hex, 96), id), kBoundary);
    sc.add_polyline(mapped(beta_arc(hex, 128), id), kCurve);
    sc.add_polyline({{0.0, 1.0}, {0.0, hex.exp_lambda}}, kGuide);

    // degenerate target hexagon in the same chart
    sc.add_polyline(mapped(geodesic_arc(hex.Cp1, hex.Cp2, 96), id), kTarget);
    sc.add_polyline(mapped(geodesic_arc(hex.Cp1, hex.Ap1, 48), id), kTarget);
    sc.add_polyline(mapped(geodesic_arc(hex.Cp2, hex.Ap2, 48), id), kTarget);
    const double top = std::min(m.cusp_height, 1.15 * hex.exp_lambda);
    sc.add_polyline({{hex.a1, hex.Ap1.y}, {hex.a1, top}}, kTarget);
    sc.add_polyline({{hex.a2, hex.Ap2.y}, {hex.a2, top}}, kTarget);
    sc.add_polyline({{hex.a1, m.two_a}, {hex.a2, m.two_a}}, kGuide);
    add_hexagon_labels(sc, hex, false);
    sc.add_label(xy(hex.Ap1), "A'1");
    sc.add_label(xy(hex.Ap2), "A'2");
    sc.add_label(xy(hex.Bp1), "B'1");
    sc.add_label(xy(hex.Bp2), "B'2");
    sc.add_label({hex.a1, m.two_a}, "2ia", false);
    sc.write(os);
}

void write_figure_omega(const MapAssembly& m, std::ostream& os) {
    const HexagonSolution& hex = m.hex;
    Scene sc;
    const double r_out = std::exp(0.5 * hex.eps);
    const double phi0 = 0.5 * kPi - m.wedge_angle;
    const int n = 96;

    std::vector<XY> inner, outer, gamma;
    for (int i = 0; i <= n; ++i) {
        const double t = phi0 + (0.5 * kPi - phi0) * i / static_cast<double>(n);
        inner.push_back({std::cos(t), std::sin(t)});
        outer.push_back({r_out * std::cos(t), r_out * std::sin(t)});
    }
    for (int i = 0; i <= n; ++i) {
        const double t = kPi * i / static_cast<double>(n);
        gamma.push_back({std::cos(t), std::sin(t)});
    }
    sc.add_polyline(gamma, kGuide);  // the base geodesic |z| = 1
    sc.add_polyline(inner, kBoundary);
    sc.add_polyline(outer, kBoundary);
    sc.add_polyline({{0.0, 1.0}, {0.0, r_out}}, kBoundary);  // image of alpha3
    sc.add_polyline({{std::cos(phi0), std::sin(phi0)},
                     {r_out * std::cos(phi0), r_out * std::sin(phi0)}},
                    kCurve);  // image of the equidistant curve
    sc.add_polyline({{-1.1, 0.0}, {1.2 * r_out, 0.0}}, kGuide);

    sc.add_label({0.0, 1.0}, "i");
    sc.add_label({0.0, r_out}, "i e^(eps/2)");
    sc.add_label({std::cos(phi0), std::sin(phi0)}, "B^1");
    sc.add_label({r_out * std::cos(phi0), r_out * std::sin(phi0)}, "B^2");
    sc.add_label({0.45 * std::cos(0.5 * kPi - 0.5 * m.wedge_angle),
                  0.45 * std::sin(0.5 * kPi - 0.5 * m.wedge_angle)},
                 "W", false);
    sc.add_label({0.8, 0.75}, "Omega", false);
    sc.write(os);
}

void write_figure_grid_image(const MapAssembly& m, int grid_n, std::ostream& os) {
    const HexagonSolution& hex = m.hex;
    if (grid_n < 16) grid_n = 24;
    Scene sc;
    const auto id = [](const HalfPlanePoint& p) { return xy(p); };

    // target boundary
    sc.add_polyline(mapped(geodesic_arc(hex.Cp1, hex.Cp2, 96), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.Cp1, hex.Ap1, 48), id), kBoundary);
    sc.add_polyline(mapped(geodesic_arc(hex.Cp2, hex.Ap2, 48), id), kBoundary);
    sc.add_polyline({{hex.a1, hex.Ap1.y}, {hex.a1, m.cusp_height}}, kBoundary);
    sc.add_polyline({{hex.a2, hex.Ap2.y}, {hex.a2, m.cusp_height}}, kBoundary);
    sc.add_polyline({{hex.a1, m.cusp_height}, {hex.a2, m.cusp_height}}, kBoundary);
    sc.add_polyline({{hex.a1, m.two_a}, {hex.a2, m.two_a}}, kGuide);

    const double r_max = std::asinh(std::sinh(hex.lambda) * std::cosh(hex.alpha3));
    const int fine = 4 * grid_n;
    const auto flush_run = [&](std::vector<XY>& run) {
        if (run.size() >= 2) sc.add_polyline(run, kGrid);
        run.clear();
    };
    const auto push_sample = [&](std::vector<XY>& run, double t, double r) {
        HalfPlanePoint z;
        try {
            z = uhp_from_fermi({t, r});
        } catch (const std::range_error&) {
            flush_run(run);
            return;
        }
        if (!hexagon_contains(hex, z, 0.0)) {
            flush_run(run);
            return;
        }
        try {
            run.push_back(xy(phi_point(m, z)));
        } catch (const std::exception&) {
            flush_run(run);
        }
    };

    for (int i = 0; i <= grid_n; ++i) {
        const double t = -hex.c1 + (hex.c1 + hex.c2) * i / static_cast<double>(grid_n);
        std::vector<XY> run;
        for (int j = 0; j <= fine; ++j) {
            push_sample(run, t, r_max * j / static_cast<double>(fine));
        }
        flush_run(run);
    }
    for (int j = 0; j <= grid_n; ++j) {
        const double r = r_max * j / static_cast<double>(grid_n);
        std::vector<XY> run;
        for (int i = 0; i <= fine; ++i) {
            push_sample(run, -hex.c1 + (hex.c1 + hex.c2) * i / static_cast<double>(fine), r);
        }
        flush_run(run);
    }
    sc.write(os);
}

}  // namespace pantsqc
