#ifndef ACTIVEFLUX_ACOUSTICS_HPP
#define ACTIVEFLUX_ACOUSTICS_HPP

/* Exact evolution operator for locally linearized acoustics,
 *
 *   d/dt v + c0 grad(p / (rho0 c0)) = 0,
 *   d/dt (p / (rho0 c0)) + c0 div v = 0,
 *
 * evaluated at a degree of freedom placed at the local origin.  Initial data
 * is polynomial per wedge; the response of each output variable to a unit
 * monomial x^a y^b in one input variable over one wedge is a single monomial
 * in tau = c0 t whose coefficient is assembled from the angular integrals
 * eta and mu.  Responses of adjacent wedges combine as the weighted sum
 * sum_i dphi_i/(2 pi) * response_i. */

#include <array>
#include <span>

#include "activeflux/poly2.hpp"
#include "activeflux/spherical_means.hpp"

namespace activeflux {

// Polynomial in tau = c0 t; degree a+b <= 4 for biparabolic data.
using TauPoly = std::array<double, 5>;

inline double tau_eval(const TauPoly& c, double tau) {
    return ((((c[4] * tau + c[3]) * tau + c[2]) * tau + c[1]) * tau + c[0]);
}

// Response of one wedge to unit monomial data, in the scaled variables
// (p_hat, u, v).  Summed over a full-circle partition with weights
// dphi/(2 pi), tau -> 0 recovers the initial point value.
struct AcousticResponse {
    TauPoly p{};
    TauPoly u{};
    TauPoly v{};
};

// Local-coordinate initial data of one wedge: the adjacent cell's primitive
// reconstruction recentered so the degree of freedom is the origin, with
// pressure already scaled to p_hat = p / (rho0 c0).
struct WedgeData {
    Wedge wedge;
    Poly2 p_hat;
    Poly2 u;
    Poly2 v;
};

// Initial data p0 = x^a y^b (p_hat units), v0 = 0.
AcousticResponse response_from_p_monomial(int a, int b, const Wedge& w);

// Initial data v0 = (x^a y^b, 0), p0 = 0.
AcousticResponse response_from_u_monomial(int a, int b, const Wedge& w);

// Initial data v0 = (0, x^a y^b), p0 = 0; the x<->y mirror image of
// response_from_u_monomial.
AcousticResponse response_from_v_monomial(int a, int b, const Wedge& w);

struct AcousticPointResult {
    double p;
    double u;
    double v;
    double rho_increment;  // (p_new - p_old) / c0^2, from d/dt(rho c0^2 - p) = 0
};

// Evolves one point value to time dt by summing all wedge responses and
// unscaling p = rho0 c0 p_hat.  Requires c0 dt small enough that the sonic
// cone stays inside the wedges' cells (CFL <= 0.5).  Non-finite data
// propagates into the result and is caught by the point limiter.
AcousticPointResult evolve_acoustic_point(std::span<const WedgeData> wedges,
                                          double rho0, double c0, double dt);

enum class DofKind { node, edge_x, edge_y };

// Startup-precomputed responses for the three dof geometries.  Nodes see
// four quadrant wedges, edge midpoints two half-planes; wedge order matches
// the adjacent-cell order used by the scheme:
//   node:   up-right, up-left, down-left, down-right
//   edge_x: right half-plane [-pi/2, pi/2), left half-plane [pi/2, 3pi/2)
//   edge_y: top half-plane [0, pi), bottom half-plane [pi, 2 pi)
// Coefficients are stored for tau = c0 t, so the tables are independent of
// c0 and of the grid spacing.
struct DofResponseTable {
    DofKind kind;
    int n_wedges;
    std::array<Wedge, 4> wedges;
    std::array<double, 4> weight;  // dphi/(2 pi), exact in floating point
    // [wedge][input var: 0 = p_hat, 1 = u, 2 = v][monomial a + 3b]
    AcousticResponse entry[4][3][9];
};

DofResponseTable precompute_dof_tables(DofKind kind);

} // namespace activeflux

#endif
