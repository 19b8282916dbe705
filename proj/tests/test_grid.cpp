// Grid storage and boundary handling: dof coordinates, ghost refresh for
// both boundary kinds, and the deterministic conserved totals.
#include <doctest.h>

#include "activeflux/grid.hpp"

using namespace activeflux;

namespace {

PrimState tag(double v) { return {v, v + 1.0, v + 2.0, v + 3.0}; }

} // namespace

TEST_CASE("dof coordinates follow the uniform spacing") {
    const GridState g(8, 4, -1.0, 1.0, 0.0, 1.0, BoundaryKind::periodic);
    CHECK(g.dx() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.dy() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.node_x(0) == -1.0);
    CHECK(g.node_x(8) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.center_x(0) == doctest::Approx(-0.875).epsilon(1e-15));
    CHECK(g.center_y(3) == doctest::Approx(0.875).epsilon(1e-15));
}

TEST_CASE("periodic ghosts mirror the opposite side") {
    GridState g(4, 4, 0.0, 1.0, 0.0, 1.0, BoundaryKind::periodic);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            g.avg(i, j) = ConsState{double(10 * i + j), 0.0, 0.0, 1.0};
            g.node(i, j) = tag(10 * i + j);
            g.edge_x(i, j) = tag(100 + 10 * i + j);
            g.edge_y(i, j) = tag(200 + 10 * i + j);
        }
    g.apply_boundary();

    CHECK(g.avg(-1, 2).rho == g.avg(3, 2).rho);
    CHECK(g.avg(4, 1).rho == g.avg(0, 1).rho);
    CHECK(g.avg(-1, -1).rho == g.avg(3, 3).rho);
    // Seam dofs at i = nx and the ghost ring wrap to the owned interior.
    CHECK(g.node(4, 2).rho == g.node(0, 2).rho);
    CHECK(g.node(5, 2).rho == g.node(1, 2).rho);
    CHECK(g.node(-1, 0).rho == g.node(3, 0).rho);
    CHECK(g.edge_x(4, 1).rho == g.edge_x(0, 1).rho);
    CHECK(g.edge_x(2, -1).rho == g.edge_x(2, 3).rho);
    CHECK(g.edge_y(1, 4).rho == g.edge_y(1, 0).rho);
    CHECK(g.edge_y(-1, 2).rho == g.edge_y(3, 2).rho);
}

TEST_CASE("outflow ghosts copy the nearest owned dof") {
    GridState g(4, 4, 0.0, 1.0, 0.0, 1.0, BoundaryKind::outflow);
    for (int j = 0; j <= 4; ++j)
        for (int i = 0; i <= 4; ++i) g.node(i, j) = tag(10 * i + j);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            g.avg(i, j) = ConsState{double(10 * i + j), 0.0, 0.0, 1.0};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i <= 4; ++i) g.edge_x(i, j) = tag(100 + 10 * i + j);
    for (int j = 0; j <= 4; ++j)
        for (int i = 0; i < 4; ++i) g.edge_y(i, j) = tag(200 + 10 * i + j);
    g.apply_boundary();

    CHECK(g.avg(-1, 2).rho == g.avg(0, 2).rho);
    CHECK(g.avg(4, 2).rho == g.avg(3, 2).rho);
    CHECK(g.avg(-1, -1).rho == g.avg(0, 0).rho);
    CHECK(g.node(-1, 2).rho == g.node(0, 2).rho);
    CHECK(g.node(5, 2).rho == g.node(4, 2).rho);
    CHECK(g.edge_x(-1, 2).rho == g.edge_x(0, 2).rho);
    CHECK(g.edge_y(2, 5).rho == g.edge_y(2, 4).rho);
}

TEST_CASE("owned point ranges depend on the boundary kind") {
    const GridState p(6, 5, 0.0, 1.0, 0.0, 1.0, BoundaryKind::periodic);
    CHECK(p.node_imax() == 5);
    CHECK(p.node_jmax() == 4);
    const GridState o(6, 5, 0.0, 1.0, 0.0, 1.0, BoundaryKind::outflow);
    CHECK(o.node_imax() == 6);
    CHECK(o.node_jmax() == 5);
}

TEST_CASE("conserved totals sum the owned cells only") {
    GridState g(3, 2, 0.0, 3.0, 0.0, 2.0, BoundaryKind::periodic);
    double expect = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) {
            g.avg(i, j) = ConsState{1.0 + i + 10.0 * j, 0.5, -0.25, 2.0};
            expect += 1.0 + i + 10.0 * j;
        }
    g.apply_boundary();
    const ConsState t = g.conserved_totals();
    CHECK(t.rho == doctest::Approx(expect).epsilon(1e-15));
    CHECK(t.mx == doctest::Approx(6 * 0.5).epsilon(1e-15));
    CHECK(t.my == doctest::Approx(-6 * 0.25).epsilon(1e-15));
    CHECK(t.E == doctest::Approx(12.0).epsilon(1e-15));
}
