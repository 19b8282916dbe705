#include "activeflux/reconstruction.hpp"

namespace activeflux {

namespace {

// Quadratic through values (vm, v0, vp) at (-h, 0, h).
inline void fit3(double vm, double v0, double vp, double h, double* c) {
    c[0] = v0;
    c[1] = (vp - vm) / (2.0 * h);
    c[2] = (vp - 2.0 * v0 + vm) / (2.0 * h * h);
}

} // namespace

ConsState cell_center_value(const ConsState& avg,
                            std::span<const ConsState, 8> boundary) {
    ConsState corner_sum{}, edge_sum{};
    for (int k = 0; k < 4; ++k) corner_sum = corner_sum + boundary[k];
    for (int k = 4; k < 8; ++k) edge_sum = edge_sum + boundary[k];
    return (1.0 / 16.0) * (36.0 * avg - corner_sum - 4.0 * edge_sum);
}

void reconstruct_cell(const GridState& g, int ci, int cj, double gamma,
                      CellRecon& out) {
    const PrimState sw = g.node(ci, cj), se = g.node(ci + 1, cj);
    const PrimState nw = g.node(ci, cj + 1), ne = g.node(ci + 1, cj + 1);
    const PrimState w = g.edge_x(ci, cj), e = g.edge_x(ci + 1, cj);
    const PrimState s = g.edge_y(ci, cj), n = g.edge_y(ci, cj + 1);

    const ConsState boundary[8] = {
        prim_to_cons(sw, gamma), prim_to_cons(se, gamma),
        prim_to_cons(nw, gamma), prim_to_cons(ne, gamma),
        prim_to_cons(w, gamma),  prim_to_cons(e, gamma),
        prim_to_cons(s, gamma),  prim_to_cons(n, gamma)};
    const PrimState center = cons_to_prim(
        cell_center_value(g.avg(ci, cj), std::span<const ConsState, 8>(boundary)),
        gamma);

    // 3x3 value grid per variable, row index = y level (bottom, mid, top).
    const double hx = 0.5 * g.dx(), hy = 0.5 * g.dy();
    const PrimState* grid[3][3] = {
        {&sw, &s, &se}, {&w, &center, &e}, {&nw, &n, &ne}};
    for (int var = 0; var < 4; ++var) {
        auto comp = [var](const PrimState& q) {
            switch (var) {
                case 0: return q.rho;
                case 1: return q.u;
                case 2: return q.v;
                default: return q.p;
            }
        };
        double rows[3][3];
        for (int b = 0; b < 3; ++b)
            fit3(comp(*grid[b][0]), comp(*grid[b][1]), comp(*grid[b][2]), hx,
                 rows[b]);
        for (int a = 0; a < 3; ++a) {
            double cy[3];
            fit3(rows[0][a], rows[1][a], rows[2][a], hy, cy);
            out.c[var][a] = cy[0];
            out.c[var][a + 3] = cy[1];
            out.c[var][a + 6] = cy[2];
        }
    }
}

Poly2 recon_poly(const CellRecon& r, int var) {
    Poly2 p(2, 2);
    for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) p.set(a, b, r.c[var][a + 3 * b]);
    return p;
}

} // namespace activeflux
