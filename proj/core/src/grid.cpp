#include "activeflux/grid.hpp"

#include <stdexcept>

namespace activeflux {

GridState::GridState(int nx, int ny, double xmin, double xmax, double ymin,
                     double ymax, BoundaryKind bc)
    : nx_(nx), ny_(ny), xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax),
      dx_((xmax - xmin) / nx), dy_((ymax - ymin) / ny), bc_(bc) {
    if (nx < 4 || ny < 4)
        throw std::invalid_argument("grid needs at least 4 cells per direction");
    if (!(xmax > xmin) || !(ymax > ymin))
        throw std::invalid_argument("empty domain");
    avg_.resize(std::size_t(nx + 2) * (ny + 2));
    node_.resize(std::size_t(nx + 3) * (ny + 3));
    ex_.resize(std::size_t(nx + 3) * (ny + 2));
    ey_.resize(std::size_t(nx + 2) * (ny + 3));
}

void GridState::apply_boundary() {
    const int nx = nx_, ny = ny_;
    if (bc_ == BoundaryKind::periodic) {
        // x-direction seams and ghosts over owned rows, then y-direction over
        // the full extended index range so the corners are also wrapped.
        for (int j = 0; j < ny; ++j) {
            avg(-1, j) = avg(nx - 1, j);
            avg(nx, j) = avg(0, j);
        }
        for (int i = -1; i <= nx; ++i) {
            avg(i, -1) = avg(i, ny - 1);
            avg(i, ny) = avg(i, 0);
        }
        for (int j = 0; j < ny; ++j) {
            node(nx, j) = node(0, j);
            node(-1, j) = node(nx - 1, j);
            node(nx + 1, j) = node(1, j);
        }
        for (int i = -1; i <= nx + 1; ++i) {
            node(i, ny) = node(i, 0);
            node(i, -1) = node(i, ny - 1);
            node(i, ny + 1) = node(i, 1);
        }
        for (int j = 0; j < ny; ++j) {
            edge_x(nx, j) = edge_x(0, j);
            edge_x(-1, j) = edge_x(nx - 1, j);
            edge_x(nx + 1, j) = edge_x(1, j);
        }
        for (int i = -1; i <= nx + 1; ++i) {
            edge_x(i, -1) = edge_x(i, ny - 1);
            edge_x(i, ny) = edge_x(i, 0);
        }
        for (int i = 0; i < nx; ++i) {
            edge_y(i, ny) = edge_y(i, 0);
            edge_y(i, -1) = edge_y(i, ny - 1);
            edge_y(i, ny + 1) = edge_y(i, 1);
        }
        for (int j = -1; j <= ny + 1; ++j) {
            edge_y(-1, j) = edge_y(nx - 1, j);
            edge_y(nx, j) = edge_y(0, j);
        }
    } else {
        for (int j = 0; j < ny; ++j) {
            avg(-1, j) = avg(0, j);
            avg(nx, j) = avg(nx - 1, j);
        }
        for (int i = -1; i <= nx; ++i) {
            avg(i, -1) = avg(i, 0);
            avg(i, ny) = avg(i, ny - 1);
        }
        for (int j = 0; j <= ny; ++j) {
            node(-1, j) = node(0, j);
            node(nx + 1, j) = node(nx, j);
        }
        for (int i = -1; i <= nx + 1; ++i) {
            node(i, -1) = node(i, 0);
            node(i, ny + 1) = node(i, ny);
        }
        for (int j = 0; j < ny; ++j) {
            edge_x(-1, j) = edge_x(0, j);
            edge_x(nx + 1, j) = edge_x(nx, j);
        }
        for (int i = -1; i <= nx + 1; ++i) {
            edge_x(i, -1) = edge_x(i, 0);
            edge_x(i, ny) = edge_x(i, ny - 1);
        }
        for (int j = 0; j <= ny; ++j) {
            edge_y(-1, j) = edge_y(0, j);
            edge_y(nx, j) = edge_y(nx - 1, j);
        }
        for (int i = -1; i <= nx; ++i) {
            edge_y(i, -1) = edge_y(i, 0);
            edge_y(i, ny + 1) = edge_y(i, ny);
        }
    }
}

ConsState GridState::conserved_totals() const {
    const double cell = dx_ * dy_;
    ConsState total{};
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i) {
            const ConsState& q = avg(i, j);
            total.rho += q.rho * cell;
            total.mx += q.mx * cell;
            total.my += q.my * cell;
            total.E += q.E * cell;
        }
    return total;
}

} // namespace activeflux
