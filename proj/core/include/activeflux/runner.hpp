// Orchestration: typed run configuration on top of ConfigFile, the time loop
// with per-step admissibility and conservation tracking, error norms against
// a known exact solution, the refinement (EOC) driver, and the Mach sweep.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "activeflux/config.hpp"
#include "activeflux/grid.hpp"
#include "activeflux/initializers.hpp"
#include "activeflux/scheme.hpp"

namespace activeflux {

struct RunConfig {
    CaseSetup setup;
    int nx = 0, ny = 0;
    SchemeParams scheme;
    // Empty: no files are written.
    std::string out_dir;
    int log_every = 200;
    bool write_csv = true;
    bool write_pgm = true;
};

RunConfig load_run_config(const ConfigFile& cfg);

// Discrete error norms: averages in conserved variables weighted by cell
// area (so l1 approximates the integral of |error|), edge point values in
// primitive variables with the plain mean as l1.  Variable order follows the
// state layouts: rho, mx, my, E for averages; rho, u, v, p for edges.
struct ErrorNorms {
    double avg_l1[4] = {};
    double avg_linf[4] = {};
    double edge_l1[4] = {};
    double edge_linf[4] = {};
};

ErrorNorms compute_errors(const GridState& g, const FieldFn& exact,
                          double gamma);

struct RunResult {
    GridState final_state;
    long steps = 0;
    double wall_seconds = 0.0;
    int total_point_activations = 0;
    // 1-based step index of the last point-limiter activation, 0 if none.
    long last_activation_step = 0;
    int total_blended_faces = 0;
    double theta_min = 1.0;
    bool fatal = false;
    // rho >= eps and p >= eps held for every average and point value after
    // every step.
    bool admissible_throughout = true;
    // Largest relative drift of any conserved total between checkpoints 100
    // steps apart (plus the final partial window); meaningful on periodic
    // domains only.
    double drift_per_100_steps = 0.0;
    std::optional<ErrorNorms> errors;
};

RunResult run_case(const RunConfig& cfg);

struct ConvergenceRow {
    int n = 0;
    double seconds = 0.0;
    ErrorNorms err;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    // EOC between consecutive rows (grid ratio 2): one entry per pair, for
    // the density average l1 error.
    std::vector<double> density_eoc;
};

// log2(coarse / fine) for one error pair.
double eoc(double err_coarse, double err_fine);

ConvergenceReport run_convergence(const RunConfig& base,
                                  const std::vector<int>& grids);

struct MachRow {
    double mach = 0.0;
    double peak_speed_initial = 0.0;
    double peak_speed_final = 0.0;
    double retained_fraction = 0.0;
    long steps = 0;
    double seconds = 0.0;
};

// Reruns the Gresho case at each Mach number; peak speed is taken over all
// point values.
std::vector<MachRow> sweep_mach(const RunConfig& base,
                                const std::vector<double>& machs);

// Largest point-value speed, used for the Mach sweep diagnostics.
double peak_point_speed(const GridState& g);

} // namespace activeflux
