// Cartesian grid carrying the three families of degrees of freedom: conserved
// cell averages, and primitive point values at nodes and edge midpoints.  All
// arrays carry one ghost ring so point updates near the boundary can sample
// neighbor reconstructions; apply_boundary refreshes the ring (and, for
// periodic domains, the duplicated seam dofs at i = nx / j = ny).
#pragma once

#include <cassert>
#include <vector>

#include "activeflux/euler.hpp"

namespace activeflux {

enum class BoundaryKind { periodic, outflow };

class GridState {
  public:
    GridState(int nx, int ny, double xmin, double xmax, double ymin,
              double ymax, BoundaryKind bc);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double xmin() const { return xmin_; }
    double ymin() const { return ymin_; }
    double xmax() const { return xmax_; }
    double ymax() const { return ymax_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    BoundaryKind boundary() const { return bc_; }

    double time = 0.0;

    // Index ranges including the ghost ring:
    //   avg:    i in [-1, nx],   j in [-1, ny]
    //   node:   i in [-1, nx+1], j in [-1, ny+1]
    //   edge_x: i in [-1, nx+1], j in [-1, ny]    (midpoints of vertical faces)
    //   edge_y: i in [-1, nx],   j in [-1, ny+1]  (midpoints of horizontal faces)
    ConsState& avg(int i, int j) { return avg_[avg_idx(i, j)]; }
    const ConsState& avg(int i, int j) const { return avg_[avg_idx(i, j)]; }
    PrimState& node(int i, int j) { return node_[node_idx(i, j)]; }
    const PrimState& node(int i, int j) const { return node_[node_idx(i, j)]; }
    PrimState& edge_x(int i, int j) { return ex_[ex_idx(i, j)]; }
    const PrimState& edge_x(int i, int j) const { return ex_[ex_idx(i, j)]; }
    PrimState& edge_y(int i, int j) { return ey_[ey_idx(i, j)]; }
    const PrimState& edge_y(int i, int j) const { return ey_[ey_idx(i, j)]; }

    double node_x(int i) const { return xmin_ + i * dx_; }
    double node_y(int j) const { return ymin_ + j * dy_; }
    double center_x(int i) const { return xmin_ + (i + 0.5) * dx_; }
    double center_y(int j) const { return ymin_ + (j + 0.5) * dy_; }

    // Flat index helpers shared with the solver's scratch arrays of the same
    // shape; the ghost ring is folded in by the +1 offsets.
    std::size_t avg_idx(int i, int j) const {
        assert(i >= -1 && i <= nx_ && j >= -1 && j <= ny_);
        return std::size_t(j + 1) * (nx_ + 2) + (i + 1);
    }
    std::size_t node_idx(int i, int j) const {
        assert(i >= -1 && i <= nx_ + 1 && j >= -1 && j <= ny_ + 1);
        return std::size_t(j + 1) * (nx_ + 3) + (i + 1);
    }
    std::size_t ex_idx(int i, int j) const {
        assert(i >= -1 && i <= nx_ + 1 && j >= -1 && j <= ny_);
        return std::size_t(j + 1) * (nx_ + 3) + (i + 1);
    }
    std::size_t ey_idx(int i, int j) const {
        assert(i >= -1 && i <= nx_ && j >= -1 && j <= ny_ + 1);
        return std::size_t(j + 1) * (nx_ + 2) + (i + 1);
    }
    std::size_t avg_count() const { return avg_.size(); }
    std::size_t node_count() const { return node_.size(); }
    std::size_t ex_count() const { return ex_.size(); }
    std::size_t ey_count() const { return ey_.size(); }

    // Owned (independently evolved) point-value index bounds, inclusive.
    // Periodic seams share the opposite side's dof; outflow boundaries carry
    // real dofs up to the domain edge.
    int node_imax() const { return bc_ == BoundaryKind::periodic ? nx_ - 1 : nx_; }
    int node_jmax() const { return bc_ == BoundaryKind::periodic ? ny_ - 1 : ny_; }

    // Refreshes ghost dofs (and periodic seams) from the owned interior.
    void apply_boundary();

    // Domain totals of the conserved quantities over owned cells, accumulated
    // in row-major order so the result is reproducible.
    ConsState conserved_totals() const;

  private:
    int nx_, ny_;
    double xmin_, xmax_, ymin_, ymax_, dx_, dy_;
    BoundaryKind bc_;
    std::vector<ConsState> avg_;
    std::vector<PrimState> node_, ex_, ey_;
};

} // namespace activeflux
