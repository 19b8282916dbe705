#include "activeflux/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "activeflux/io.hpp"

namespace activeflux {

namespace {

constexpr double gauss_x[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double gauss_w[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

bool prim_admissible(const PrimState& q, double eps) {
    return finite(q) && q.rho >= eps && q.p >= eps;
}

bool state_admissible(const GridState& g, double eps, double gamma) {
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            if (!prim_admissible(cons_to_prim(g.avg(i, j), gamma), eps))
                return false;
    const int imax = g.node_imax(), jmax = g.node_jmax();
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i)
            if (!prim_admissible(g.node(i, j), eps)) return false;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= imax; ++i)
            if (!prim_admissible(g.edge_x(i, j), eps)) return false;
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g.nx(); ++i)
            if (!prim_admissible(g.edge_y(i, j), eps)) return false;
    return true;
}

double max_component_drift(const ConsState& now, const ConsState& prev,
                           const ConsState& ref) {
    double worst = 0.0;
    const double n[4] = {now.rho, now.mx, now.my, now.E};
    const double p[4] = {prev.rho, prev.mx, prev.my, prev.E};
    const double r[4] = {ref.rho, ref.mx, ref.my, ref.E};
    for (int k = 0; k < 4; ++k) {
        const double denom = std::max(std::abs(r[k]), 1e-30);
        worst = std::max(worst, std::abs(n[k] - p[k]) / denom);
    }
    return worst;
}

std::string diag_line(long step, double t, const StepDiagnostics& d) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "step=%ld t=%.10g dt=%.10g activations=%d blended=%d "
                  "theta_min=%.6g%s",
                  step, t, d.dt, d.point_limiter_activations, d.blended_faces,
                  d.theta_min, d.fatal ? " FATAL" : "");
    return buf;
}

} // namespace

RunConfig load_run_config(const ConfigFile& cfg) {
    RunConfig rc;
    rc.scheme.gamma = cfg.get_double("scheme.gamma", 1.4);
    rc.scheme.cfl = cfg.get_double("scheme.cfl", 0.45);
    rc.scheme.eps = cfg.get_double("scheme.eps", 1e-10);
    const int order = cfg.get_int("scheme.advection_order", 3);
    if (order != 2 && order != 3)
        throw std::runtime_error("scheme.advection_order must be 2 or 3");
    rc.scheme.two_stage_foot = order == 3;
    rc.setup = make_case(cfg, rc.scheme.gamma);
    rc.nx = cfg.get_int("case.nx", 0);
    if (rc.nx <= 0) throw std::runtime_error("config key missing: case.nx");
    rc.ny = cfg.get_int("case.ny", rc.nx);
    rc.out_dir = cfg.get_string("output.dir", "");
    rc.log_every = cfg.get_int("output.log_every", 200);
    rc.write_csv = cfg.get_bool("output.csv", true);
    rc.write_pgm = cfg.get_bool("output.pgm", true);
    return rc;
}

ErrorNorms compute_errors(const GridState& g, const FieldFn& exact,
                          double gamma) {
    ErrorNorms e;
    const double cell = g.dx() * g.dy();
    const double hx = 0.5 * g.dx(), hy = 0.5 * g.dy();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            ConsState ref{};
            const double xc = g.center_x(i), yc = g.center_y(j);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    ref = ref + (0.25 * gauss_w[a] * gauss_w[b]) *
                                    prim_to_cons(exact(xc + hx * gauss_x[a],
                                                       yc + hy * gauss_x[b]),
                                                 gamma);
            const ConsState d = g.avg(i, j) - ref;
            const double comp[4] = {d.rho, d.mx, d.my, d.E};
            for (int k = 0; k < 4; ++k) {
                e.avg_l1[k] += std::abs(comp[k]) * cell;
                e.avg_linf[k] = std::max(e.avg_linf[k], std::abs(comp[k]));
            }
        }
    long edge_count = 0;
    auto edge_diff = [&](const PrimState& q, double x, double y) {
        const PrimState r = exact(x, y);
        const double comp[4] = {q.rho - r.rho, q.u - r.u, q.v - r.v,
                                q.p - r.p};
        for (int k = 0; k < 4; ++k) {
            e.edge_l1[k] += std::abs(comp[k]);
            e.edge_linf[k] = std::max(e.edge_linf[k], std::abs(comp[k]));
        }
        ++edge_count;
    };
    const int imax = g.node_imax(), jmax = g.node_jmax();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= imax; ++i)
            edge_diff(g.edge_x(i, j), g.node_x(i), g.center_y(j));
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g.nx(); ++i)
            edge_diff(g.edge_y(i, j), g.center_x(i), g.node_y(j));
    for (int k = 0; k < 4; ++k) e.edge_l1[k] /= double(edge_count);
    return e;
}

RunResult run_case(const RunConfig& cfg) {
    const CaseSetup& s = cfg.setup;
    const double gamma = cfg.scheme.gamma;
    GridState init(cfg.nx, cfg.ny, s.xmin, s.xmax, s.ymin, s.ymax,
                   s.boundary);
    fill_grid(init, s.field, gamma);
    Solver solver(std::move(init), cfg.scheme);

    if (!cfg.out_dir.empty())
        std::filesystem::create_directories(cfg.out_dir);
    RunLog log(cfg.out_dir.empty() ? "" : cfg.out_dir + "/run.log");
    log.line("case=" + s.name + " nx=" + std::to_string(cfg.nx) +
             " ny=" + std::to_string(cfg.ny));

    const ConsState totals0 = solver.state().conserved_totals();
    ConsState totals_prev = totals0;
    long steps = 0, last_activation = 0;
    int activations = 0, blended = 0;
    double theta_min = 1.0, drift = 0.0;
    bool fatal = false, admissible = true;

    const double t_final = s.t_final;
    const double t_tol = 1e-12 * std::max(1.0, t_final);
    const auto wall0 = std::chrono::steady_clock::now();
    while (solver.state().time < t_final - t_tol) {
        const double cap = t_final - solver.state().time;
        const StepDiagnostics d = solver.step(cap);
        ++steps;
        fatal = fatal || d.fatal;
        activations += d.point_limiter_activations;
        if (d.point_limiter_activations > 0) last_activation = steps;
        blended += d.blended_faces;
        theta_min = std::min(theta_min, d.theta_min);
        if (admissible &&
            !state_admissible(solver.state(), cfg.scheme.eps, gamma))
            admissible = false;
        if (steps % 100 == 0) {
            const ConsState now = solver.state().conserved_totals();
            drift = std::max(drift,
                             max_component_drift(now, totals_prev, totals0));
            totals_prev = now;
        }
        if (cfg.log_every > 0 && steps % cfg.log_every == 0)
            log.line(diag_line(steps, solver.state().time, d));
    }
    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      wall0)
            .count();
    {
        const ConsState now = solver.state().conserved_totals();
        drift =
            std::max(drift, max_component_drift(now, totals_prev, totals0));
    }

    std::optional<ErrorNorms> errors;
    if (s.exact_is_initial)
        errors = compute_errors(solver.state(), s.field, gamma);

    if (!cfg.out_dir.empty()) {
        if (cfg.write_csv)
            write_state_csv(solver.state(), cfg.out_dir + "/state.csv");
        if (cfg.write_pgm) {
            write_density_pgm(solver.state(), cfg.out_dir + "/density.pgm");
            write_speed_pgm(solver.state(), gamma,
                            cfg.out_dir + "/speed.pgm");
        }
        if (s.name == "sod")
            write_radial_csv(solver.state(), 0.0, 0.0, gamma,
                             cfg.out_dir + "/radial.csv");
        else if (s.name == "gresho")
            write_radial_csv(solver.state(), 0.5, 0.5, gamma,
                             cfg.out_dir + "/radial.csv");
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "done steps=%ld wall_s=%.3f activations=%d "
                      "last_activation_step=%ld blended=%d theta_min=%.6g "
                      "drift_per_100=%.3e admissible=%d fatal=%d",
                      steps, wall_seconds, activations, last_activation,
                      blended, theta_min, drift, int(admissible), int(fatal));
        log.line(buf);
    }

    return RunResult{std::move(solver.state()),
                     steps,
                     wall_seconds,
                     activations,
                     last_activation,
                     blended,
                     theta_min,
                     fatal,
                     admissible,
                     drift,
                     errors};
}

double eoc(double err_coarse, double err_fine) {
    return std::log2(err_coarse / err_fine);
}

ConvergenceReport run_convergence(const RunConfig& base,
                                  const std::vector<int>& grids) {
    if (!base.setup.exact_is_initial)
        throw std::runtime_error(
            "convergence study needs a case whose exact solution is the "
            "initial data (contact, vortex)");
    ConvergenceReport report;
    for (int n : grids) {
        RunConfig cfg = base;
        cfg.nx = cfg.ny = n;
        if (!base.out_dir.empty())
            cfg.out_dir = base.out_dir + "/n" + std::to_string(n);
        RunResult r = run_case(cfg);
        if (r.fatal)
            throw std::runtime_error("fatal limiter diagnostic on grid " +
                                     std::to_string(n));
        report.rows.push_back(ConvergenceRow{n, r.wall_seconds, *r.errors});
    }
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        report.density_eoc.push_back(eoc(report.rows[k - 1].err.avg_l1[0],
                                         report.rows[k].err.avg_l1[0]));
    return report;
}

double peak_point_speed(const GridState& g) {
    double peak = 0.0;
    auto absorb = [&](const PrimState& q) {
        peak = std::max(peak, std::hypot(q.u, q.v));
    };
    const int imax = g.node_imax(), jmax = g.node_jmax();
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i) absorb(g.node(i, j));
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= imax; ++i) absorb(g.edge_x(i, j));
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g.nx(); ++i) absorb(g.edge_y(i, j));
    return peak;
}

std::vector<MachRow> sweep_mach(const RunConfig& base,
                                const std::vector<double>& machs) {
    std::vector<MachRow> rows;
    for (double m : machs) {
        RunConfig cfg = base;
        cfg.setup.field = gresho_field(m, cfg.scheme.gamma, 0.5, 0.5);
        if (!base.out_dir.empty()) {
            char suffix[32];
            std::snprintf(suffix, sizeof suffix, "/mach%.0e", m);
            cfg.out_dir = base.out_dir + suffix;
        }
        GridState probe(cfg.nx, cfg.ny, cfg.setup.xmin, cfg.setup.xmax,
                        cfg.setup.ymin, cfg.setup.ymax, cfg.setup.boundary);
        fill_grid(probe, cfg.setup.field, cfg.scheme.gamma);
        const double peak0 = peak_point_speed(probe);

        RunResult r = run_case(cfg);
        const double peak1 = peak_point_speed(r.final_state);
        rows.push_back(MachRow{m, peak0, peak1, peak1 / peak0, r.steps,
                               r.wall_seconds});
    }
    return rows;
}

} // namespace activeflux
