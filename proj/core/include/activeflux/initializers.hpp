// Bundled test-case initial data: analytic primitive fields plus per-case
// domain, boundary, and final-time conventions.  Grids are filled by
// sampling the field at the point-value dofs and by 3x3 Gauss quadrature of
// the conserved variables for the cell averages, so initialization error
// stays below the scheme's own on convergence studies.
#pragma once

#include <functional>
#include <string>

#include "activeflux/config.hpp"
#include "activeflux/grid.hpp"

namespace activeflux {

using FieldFn = std::function<PrimState(double x, double y)>;

struct CaseSetup {
    std::string name;
    double xmin, xmax, ymin, ymax;
    double t_final;
    BoundaryKind boundary;
    FieldFn field;
    // Set when the exact solution at t_final is the initial field again
    // (periodic advection over whole periods); enables error measurement.
    bool exact_is_initial = false;
};

// Builds the setup for cfg's "case.name", reading case parameters and any
// domain/final-time overrides from cfg.  Throws on unknown case names.
CaseSetup make_case(const ConfigFile& cfg, double gamma);

// Point dofs sampled, averages Gauss-integrated, ghosts refreshed.
void fill_grid(GridState& g, const FieldFn& field, double gamma);

// The individual fields, exposed for direct use in tests.
FieldFn contact_wave_field();
FieldFn moving_vortex_field(double strength, double gamma);
FieldFn spherical_sod_field();
FieldFn quadrant_riemann_field(const PrimState& ne, const PrimState& nw,
                               const PrimState& sw, const PrimState& se,
                               double cx, double cy);
FieldFn gresho_field(double mach, double gamma, double cx, double cy);
FieldFn smooth_kh_field(double mach, double delta, double contrast,
                        double gamma);

} // namespace activeflux
