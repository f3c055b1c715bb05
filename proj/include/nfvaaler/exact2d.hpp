#ifndef NFV_EXACT2D_HPP
#define NFV_EXACT2D_HPP

#include <vector>

namespace nfv {

struct Disc {
    double cx = 0, cy = 0, r = 0;
};

// Deterministic sweep measure of a union of discs clipped to [0,W]x[0,H].
// Breakpoints are placed at every disc extreme, circle-circle intersection
// and circle-clipline crossing; between breakpoints the union's vertical
// extent is a fixed signed combination of arcs, integrated in closed form.
double disc_union_area(std::vector<Disc> a, double W, double H);

// Same sweep for the area of (union a) intersected with (union b).
double disc_union_intersection_area(std::vector<Disc> a, std::vector<Disc> b, double W, double H);

} // namespace nfv

#endif
