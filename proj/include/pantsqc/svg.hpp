#pragma once

#include <iosfwd>

#include "pantsqc/qcmap.hpp"

namespace pantsqc {

/// Hexagon in Fermi coordinates of the base geodesic, labeled vertices,
/// the equidistant curve, the height perpendicular.
void write_figure_fermi(const MapAssembly& m, std::ostream& os);

/// Source and degenerate hexagons in the half-plane chart.
void write_figure_uhp(const MapAssembly& m, std::ostream& os);

/// The wedge between radii 1 and e^{eps/2} that the conformal chart
/// unrolls, with the image of the equidistant curve on the tilted ray.
void write_figure_omega(const MapAssembly& m, std::ostream& os);

/// Image of a Fermi coordinate grid of the source hexagon under the
/// embedding, drawn in the target chart.
void write_figure_grid_image(const MapAssembly& m, int grid_n, std::ostream& os);

}  // namespace pantsqc
