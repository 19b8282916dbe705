// Biparabolic (tensor degree-2) reconstruction of the primitive variables in
// each cell, interpolating the 8 boundary point values plus a center value
// recovered from the conserved cell average by inverting the 2-D Simpson
// rule.  The compact 9-coefficient layout (monomial x^a y^b at index a + 3b,
// coordinates relative to the cell center) is what the solver's inner loops
// consume; Poly2 conversion is provided for the general-purpose API.
#pragma once

#include <span>

#include "activeflux/euler.hpp"
#include "activeflux/grid.hpp"
#include "activeflux/poly2.hpp"

namespace activeflux {

struct CellRecon {
    // variable index: 0 = rho, 1 = u, 2 = v, 3 = p
    double c[4][9];
};

inline double eval9(const double* c, double x, double y) {
    const double r0 = (c[2] * x + c[1]) * x + c[0];
    const double r1 = (c[5] * x + c[4]) * x + c[3];
    const double r2 = (c[8] * x + c[7]) * x + c[6];
    return (r2 * y + r1) * y + r0;
}

// out(x, y) = c(x + tx, y + ty); rows are shifted in x, then columns in y.
inline void translate9(const double* c, double tx, double ty, double* out) {
    double s[9];
    for (int b = 0; b < 3; ++b) {
        const double c0 = c[3 * b], c1 = c[3 * b + 1], c2 = c[3 * b + 2];
        s[3 * b] = (c2 * tx + c1) * tx + c0;
        s[3 * b + 1] = 2.0 * c2 * tx + c1;
        s[3 * b + 2] = c2;
    }
    for (int a = 0; a < 3; ++a) {
        const double b0 = s[a], b1 = s[a + 3], b2 = s[a + 6];
        out[a] = (b2 * ty + b1) * ty + b0;
        out[a + 3] = 2.0 * b2 * ty + b1;
        out[a + 6] = b2;
    }
}

// Center value from the inverted tensor Simpson rule
//   q_c = (36 avg - sum corners - 4 sum edge midpoints) / 16.
// boundary order: corners SW, SE, NW, NE, then edges W, E, S, N.
ConsState cell_center_value(const ConsState& avg,
                            std::span<const ConsState, 8> boundary);

// Fits all four primitive variables of cell (ci, cj); gamma enters through
// the conserved-variable center inversion.  The center state may come out
// inadmissible for near-vacuum data; it is used as-is and the point limiter
// catches any non-finite or sub-threshold updates downstream.
void reconstruct_cell(const GridState& g, int ci, int cj, double gamma,
                      CellRecon& out);

Poly2 recon_poly(const CellRecon& r, int var);

} // namespace activeflux
