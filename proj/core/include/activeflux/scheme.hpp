// One full update of the hybrid dof set: biparabolic reconstructions at t^n,
// point values advanced by the additive acoustics/advection splitting (both
// the half and the full time level), a-posteriori LLF fallback for point
// values that left the admissible set, space-time Simpson fluxes blended
// against HLL fluxes, and the conservative average update.
#pragma once

#include <limits>
#include <vector>

#include "activeflux/acoustics.hpp"
#include "activeflux/advection.hpp"
#include "activeflux/grid.hpp"
#include "activeflux/reconstruction.hpp"

namespace activeflux {

struct SchemeParams {
    double gamma = 1.4;
    double cfl = 0.45;
    double eps = 1e-10;
    // One predictor iteration on the characteristic foot (third order) or
    // none (second order).
    bool two_stage_foot = true;
};

struct StepDiagnostics {
    double dt = 0.0;
    // Point dofs replaced by the LLF fallback, and how many of those still
    // needed a floor clip afterwards.
    int point_limiter_activations = 0;
    int point_clip_events = 0;
    // Faces whose flux was pulled toward HLL (theta < 1) and the smallest
    // theta of the step.
    int blended_faces = 0;
    double theta_min = 1.0;
    // An inadmissible HLL intermediate state was met; the step completes
    // with theta = 0 on that face but the run should be treated as failed.
    bool fatal = false;
};

class Solver {
  public:
    Solver(GridState initial, SchemeParams params);

    // cfl * min(dx, dy) / max over point values of (max(|u|, |v|) + c).
    double compute_dt() const;

    StepDiagnostics step(double dt_cap);
    StepDiagnostics step() {
        return step(std::numeric_limits<double>::infinity());
    }

    GridState& state() { return g_; }
    const GridState& state() const { return g_; }
    const SchemeParams& params() const { return p_; }

  private:
    // Weighted wedge response table flattened for the inner loop:
    // K[wedge][input variable][monomial][output variable], with the
    // per-monomial tau power in dpow and the wedge's cell placement in
    // ci_off/cj_off (cell index relative to the dof) and sx/sy (dof position
    // relative to the cell center, in half-cell units).
    struct FlatTable {
        int n_wedges = 0;
        double weight[4] = {};
        double K[4][3][9][3] = {};
        int ci_off[4] = {}, cj_off[4] = {};
        int sx[4] = {}, sy[4] = {};
    };

    static FlatTable build_flat(DofKind kind);

    const CellRecon& recon(int ci, int cj) const {
        return recon_[g_.avg_idx(ci, cj)];
    }
    Vec2 sample_velocity(double x, double y, Vec2 hint) const;
    PrimState sample_state(double x, double y, Vec2 hint) const;

    void update_point(const FlatTable& t, int i, int j, double x, double y,
                      const PrimState& q0, double dt, PrimState& out_half,
                      PrimState& out_full) const;

    void limit_points(double dt, StepDiagnostics& diag);
    void assemble_fluxes(StepDiagnostics& diag);
    void update_averages(double dt);
    void write_back_points();

    GridState g_;
    SchemeParams p_;
    CellLocator loc_;
    FlatTable tbl_node_, tbl_ex_, tbl_ey_;

    std::vector<CellRecon> recon_;
    std::vector<PrimState> node_half_, node_new_, ex_half_, ex_new_, ey_half_,
        ey_new_;
    std::vector<ConsState> flux_x_, flux_y_;
};

} // namespace activeflux
