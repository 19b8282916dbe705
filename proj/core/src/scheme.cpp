#include "activeflux/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "activeflux/limiting.hpp"

namespace activeflux {

namespace {

// tau power of the response to monomial x^a y^b at index m = a + 3b.
constexpr int dpow[9] = {0, 1, 2, 1, 2, 3, 2, 3, 4};

inline double eval_tau(const double* c, double t) {
    return (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0];
}

inline int clamp_int(int v, int lo, int hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

} // namespace

Solver::FlatTable Solver::build_flat(DofKind kind) {
    const DofResponseTable t = precompute_dof_tables(kind);
    FlatTable f{};
    f.n_wedges = t.n_wedges;
    for (int w = 0; w < t.n_wedges; ++w) {
        f.weight[w] = t.weight[w];
        for (int var = 0; var < 3; ++var)
            for (int m = 0; m < 9; ++m) {
                const AcousticResponse& r = t.entry[w][var][m];
                const int d = dpow[m];
                f.K[w][var][m][0] = t.weight[w] * r.p[d];
                f.K[w][var][m][1] = t.weight[w] * r.u[d];
                f.K[w][var][m][2] = t.weight[w] * r.v[d];
            }
    }
    switch (kind) {
        case DofKind::node: {
            // Quadrant order: NE, NW, SW, SE cell around the node.
            constexpr int ci[4] = {0, -1, -1, 0}, cj[4] = {0, 0, -1, -1};
            constexpr int sx[4] = {-1, 1, 1, -1}, sy[4] = {-1, -1, 1, 1};
            std::copy(ci, ci + 4, f.ci_off);
            std::copy(cj, cj + 4, f.cj_off);
            std::copy(sx, sx + 4, f.sx);
            std::copy(sy, sy + 4, f.sy);
            break;
        }
        case DofKind::edge_x: {
            // Right half-plane wedge first, then left.
            f.ci_off[0] = 0;
            f.ci_off[1] = -1;
            f.sx[0] = -1;
            f.sx[1] = 1;
            break;
        }
        case DofKind::edge_y: {
            // Upper half-plane wedge first, then lower.
            f.cj_off[0] = 0;
            f.cj_off[1] = -1;
            f.sy[0] = -1;
            f.sy[1] = 1;
            break;
        }
    }
    return f;
}

Solver::Solver(GridState initial, SchemeParams params)
    : g_(std::move(initial)), p_(params) {
    if (!(p_.cfl > 0.0) || p_.cfl > 0.5)
        throw std::invalid_argument("cfl must be in (0, 0.5]");
    if (!(p_.gamma > 1.0))
        throw std::invalid_argument("gamma must exceed 1");
    loc_ = CellLocator{g_.xmin(), g_.ymin(), g_.dx(), g_.dy()};
    tbl_node_ = build_flat(DofKind::node);
    tbl_ex_ = build_flat(DofKind::edge_x);
    tbl_ey_ = build_flat(DofKind::edge_y);
    recon_.resize(g_.avg_count());
    node_half_.resize(g_.node_count());
    node_new_.resize(g_.node_count());
    ex_half_.resize(g_.ex_count());
    ex_new_.resize(g_.ex_count());
    ey_half_.resize(g_.ey_count());
    ey_new_.resize(g_.ey_count());
    flux_x_.resize(std::size_t(g_.nx() + 1) * g_.ny());
    flux_y_.resize(std::size_t(g_.nx()) * (g_.ny() + 1));
    g_.apply_boundary();
}

double Solver::compute_dt() const {
    const int imax = g_.node_imax(), jmax = g_.node_jmax();
    double speed = 0.0;
    auto absorb = [&](const PrimState& q) {
        const double s =
            std::max(std::abs(q.u), std::abs(q.v)) + sound_speed(q, p_.gamma);
        speed = std::max(speed, s);
    };
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i) absorb(g_.node(i, j));
    for (int j = 0; j < g_.ny(); ++j)
        for (int i = 0; i <= imax; ++i) absorb(g_.edge_x(i, j));
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g_.nx(); ++i) absorb(g_.edge_y(i, j));
    return p_.cfl * std::min(g_.dx(), g_.dy()) / speed;
}

Vec2 Solver::sample_velocity(double x, double y, Vec2 hint) const {
    const int ci = clamp_int(loc_.locate_x(x, hint.x), -1, g_.nx());
    const int cj = clamp_int(loc_.locate_y(y, hint.y), -1, g_.ny());
    const CellRecon& r = recon(ci, cj);
    const double lx = x - g_.center_x(ci), ly = y - g_.center_y(cj);
    return {eval9(r.c[1], lx, ly), eval9(r.c[2], lx, ly)};
}

PrimState Solver::sample_state(double x, double y, Vec2 hint) const {
    const int ci = clamp_int(loc_.locate_x(x, hint.x), -1, g_.nx());
    const int cj = clamp_int(loc_.locate_y(y, hint.y), -1, g_.ny());
    const CellRecon& r = recon(ci, cj);
    const double lx = x - g_.center_x(ci), ly = y - g_.center_y(cj);
    return {eval9(r.c[0], lx, ly), eval9(r.c[1], lx, ly),
            eval9(r.c[2], lx, ly), eval9(r.c[3], lx, ly)};
}

void Solver::update_point(const FlatTable& t, int i, int j, double x, double y,
                          const PrimState& q0, double dt, PrimState& out_half,
                          PrimState& out_full) const {
    const double rho0 = q0.rho;
    const double c0 = sound_speed(q0, p_.gamma);
    const double rc = rho0 * c0;
    const double inv_rc = 1.0 / rc;
    const double hx = 0.5 * g_.dx(), hy = 0.5 * g_.dy();

    // Acoustic response accumulated as tau polynomials, kept in two blocks:
    // [0] sourced by the pressure data, [1] by the velocity data.  The
    // p <-> v unit coupling (rc and 1/rc) is applied at evaluation time, so
    // pressure sourced by pressure never round-trips through the scaling.
    double acc_p[2][5] = {}, acc_u[2][5] = {}, acc_v[2][5] = {};
    double p_at_dof = 0.0;
    for (int w = 0; w < t.n_wedges; ++w) {
        const CellRecon& r = recon(i + t.ci_off[w], j + t.cj_off[w]);
        const double tx = t.sx[w] * hx, ty = t.sy[w] * hy;
        double tp[9], tu[9], tv[9];
        translate9(r.c[3], tx, ty, tp);
        translate9(r.c[1], tx, ty, tu);
        translate9(r.c[2], tx, ty, tv);
        p_at_dof += t.weight[w] * tp[0];
        for (int m = 0; m < 9; ++m) {
            const int d = dpow[m];
            const double* kp = t.K[w][0][m];
            acc_p[0][d] += kp[0] * tp[m];
            acc_u[0][d] += kp[1] * tp[m];
            acc_v[0][d] += kp[2] * tp[m];
            const double* ku = t.K[w][1][m];
            acc_p[1][d] += ku[0] * tu[m];
            acc_u[1][d] += ku[1] * tu[m];
            acc_v[1][d] += ku[2] * tu[m];
            const double* kv = t.K[w][2][m];
            acc_p[1][d] += kv[0] * tv[m];
            acc_u[1][d] += kv[1] * tv[m];
            acc_v[1][d] += kv[2] * tv[m];
        }
    }

    const Vec2 v0{q0.u, q0.v};
    auto level = [&](double dtl, PrimState& out) {
        const double tau = c0 * dtl;
        const double p_ac = eval_tau(acc_p[0], tau) + rc * eval_tau(acc_p[1], tau);
        const double u_ac =
            inv_rc * eval_tau(acc_u[0], tau) + eval_tau(acc_u[1], tau);
        const double v_ac =
            inv_rc * eval_tau(acc_v[0], tau) + eval_tau(acc_v[1], tau);

        Vec2 v1 = v0;
        if (p_.two_stage_foot)
            v1 = sample_velocity(x - v0.x * dtl, y - v0.y * dtl, v0);
        const PrimState adv =
            sample_state(x - v1.x * dtl, y - v1.y * dtl, v1);

        out.rho = adv.rho + (p_ac - p_at_dof) / (c0 * c0);
        out.u = u_ac + adv.u - q0.u;
        out.v = v_ac + adv.v - q0.v;
        out.p = p_ac + adv.p - q0.p;
    };
    level(0.5 * dt, out_half);
    level(dt, out_full);
}

void Solver::limit_points(double dt, StepDiagnostics& diag) {
    const double gamma = p_.gamma, eps = p_.eps;
    const int imax = g_.node_imax(), jmax = g_.node_jmax();

    auto clip = [&](PrimState q) {
        if (!(q.rho >= eps) || !(q.p >= eps)) {
            q.rho = std::max(q.rho, eps);
            q.p = std::max(q.p, eps);
            ++diag.point_clip_events;
        }
        return q;
    };

    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i) {
            const std::size_t k = g_.node_idx(i, j);
            if (!point_needs_limiting(node_half_[k], eps) &&
                !point_needs_limiting(node_new_[k], eps))
                continue;
            ++diag.point_limiter_activations;
            const PrimState& q0 = g_.node(i, j);
            const double lambda = lambda_estimate(q0, gamma);
            const ConsState qc = prim_to_cons(q0, gamma);
            const ConsState ll = g_.avg(i - 1, j - 1), lr = g_.avg(i, j - 1);
            const ConsState ul = g_.avg(i - 1, j), ur = g_.avg(i, j);
            node_new_[k] = clip(cons_to_prim(
                llf_node_fallback(qc, ll, lr, ul, ur, lambda, dt, g_.dx(),
                                  g_.dy(), gamma),
                gamma));
            node_half_[k] = clip(cons_to_prim(
                llf_node_fallback(qc, ll, lr, ul, ur, lambda, 0.5 * dt,
                                  g_.dx(), g_.dy(), gamma),
                gamma));
        }
    for (int j = 0; j < g_.ny(); ++j)
        for (int i = 0; i <= imax; ++i) {
            const std::size_t k = g_.ex_idx(i, j);
            if (!point_needs_limiting(ex_half_[k], eps) &&
                !point_needs_limiting(ex_new_[k], eps))
                continue;
            ++diag.point_limiter_activations;
            const PrimState& q0 = g_.edge_x(i, j);
            const double lambda = lambda_estimate(q0, gamma);
            const ConsState qc = prim_to_cons(q0, gamma);
            const ConsState ql = g_.avg(i - 1, j), qr = g_.avg(i, j);
            ex_new_[k] = clip(cons_to_prim(
                llf_edge_fallback(qc, ql, qr, lambda, dt, g_.dx(), gamma, true),
                gamma));
            ex_half_[k] = clip(cons_to_prim(
                llf_edge_fallback(qc, ql, qr, lambda, 0.5 * dt, g_.dx(), gamma,
                                  true),
                gamma));
        }
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g_.nx(); ++i) {
            const std::size_t k = g_.ey_idx(i, j);
            if (!point_needs_limiting(ey_half_[k], eps) &&
                !point_needs_limiting(ey_new_[k], eps))
                continue;
            ++diag.point_limiter_activations;
            const PrimState& q0 = g_.edge_y(i, j);
            const double lambda = lambda_estimate(q0, gamma);
            const ConsState qc = prim_to_cons(q0, gamma);
            const ConsState qb = g_.avg(i, j - 1), qt = g_.avg(i, j);
            ey_new_[k] = clip(cons_to_prim(
                llf_edge_fallback(qc, qb, qt, lambda, dt, g_.dy(), gamma,
                                  false),
                gamma));
            ey_half_[k] = clip(cons_to_prim(
                llf_edge_fallback(qc, qb, qt, lambda, 0.5 * dt, g_.dy(), gamma,
                                  false),
                gamma));
        }
}

void Solver::assemble_fluxes(StepDiagnostics& diag) {
    const double gamma = p_.gamma, eps = p_.eps;
    const int nx = g_.nx(), ny = g_.ny();
    const bool periodic = g_.boundary() == BoundaryKind::periodic;

    // Periodic seams of the new point-value levels feed the rightmost /
    // topmost face quadratures through the node shared with the first cell.
    if (periodic) {
        for (int j = 0; j < ny; ++j) {
            node_half_[g_.node_idx(nx, j)] = node_half_[g_.node_idx(0, j)];
            node_new_[g_.node_idx(nx, j)] = node_new_[g_.node_idx(0, j)];
        }
        for (int i = 0; i <= nx; ++i) {
            node_half_[g_.node_idx(i, ny)] = node_half_[g_.node_idx(i, 0)];
            node_new_[g_.node_idx(i, ny)] = node_new_[g_.node_idx(i, 0)];
        }
    }

    constexpr double w3[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    auto blend = [&](const ConsState& f_high, const ConsState& ql,
                     const ConsState& qr, double lambda, bool x_dir) {
        const HLLFace hll = hll_state_and_flux(ql, qr, lambda, gamma, x_dir);
        bool fatal = false;
        const double theta =
            blend_theta(f_high, hll, lambda, eps, gamma, &fatal);
        if (fatal) diag.fatal = true;
        if (theta < 1.0) {
            ++diag.blended_faces;
            diag.theta_min = std::min(diag.theta_min, theta);
        }
        return hll.f + theta * (f_high - hll.f);
    };

    const int fx_imax = periodic ? nx - 1 : nx;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= fx_imax; ++i) {
            const std::size_t kb = g_.node_idx(i, j);
            const std::size_t km = g_.ex_idx(i, j);
            const std::size_t kt = g_.node_idx(i, j + 1);
            ConsState f_high{};
            const PrimState* levels[3][3] = {
                {&g_.node(i, j), &g_.edge_x(i, j), &g_.node(i, j + 1)},
                {&node_half_[kb], &ex_half_[km], &node_half_[kt]},
                {&node_new_[kb], &ex_new_[km], &node_new_[kt]}};
            for (int tl = 0; tl < 3; ++tl)
                for (int s = 0; s < 3; ++s)
                    f_high =
                        f_high + (w3[tl] * w3[s]) * flux_x(*levels[tl][s], gamma);
            const double lambda = lambda_estimate(g_.edge_x(i, j), gamma);
            flux_x_[std::size_t(j) * (nx + 1) + i] =
                blend(f_high, g_.avg(i - 1, j), g_.avg(i, j), lambda, true);
        }
    if (periodic)
        for (int j = 0; j < ny; ++j)
            flux_x_[std::size_t(j) * (nx + 1) + nx] =
                flux_x_[std::size_t(j) * (nx + 1)];

    const int fy_jmax = periodic ? ny - 1 : ny;
    for (int j = 0; j <= fy_jmax; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::size_t kl = g_.node_idx(i, j);
            const std::size_t km = g_.ey_idx(i, j);
            const std::size_t kr = g_.node_idx(i + 1, j);
            ConsState f_high{};
            const PrimState* levels[3][3] = {
                {&g_.node(i, j), &g_.edge_y(i, j), &g_.node(i + 1, j)},
                {&node_half_[kl], &ey_half_[km], &node_half_[kr]},
                {&node_new_[kl], &ey_new_[km], &node_new_[kr]}};
            for (int tl = 0; tl < 3; ++tl)
                for (int s = 0; s < 3; ++s)
                    f_high =
                        f_high + (w3[tl] * w3[s]) * flux_y(*levels[tl][s], gamma);
            const double lambda = lambda_estimate(g_.edge_y(i, j), gamma);
            flux_y_[std::size_t(j) * nx + i] =
                blend(f_high, g_.avg(i, j - 1), g_.avg(i, j), lambda, false);
        }
    if (periodic)
        for (int i = 0; i < nx; ++i)
            flux_y_[std::size_t(ny) * nx + i] = flux_y_[i];
}

void Solver::update_averages(double dt) {
    const int nx = g_.nx(), ny = g_.ny();
    const double cx = dt / g_.dx(), cy = dt / g_.dy();
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const ConsState& fxl = flux_x_[std::size_t(j) * (nx + 1) + i];
            const ConsState& fxr = flux_x_[std::size_t(j) * (nx + 1) + i + 1];
            const ConsState& fyb = flux_y_[std::size_t(j) * nx + i];
            const ConsState& fyt = flux_y_[std::size_t(j + 1) * nx + i];
            g_.avg(i, j) =
                g_.avg(i, j) - cx * (fxr - fxl) - cy * (fyt - fyb);
        }
}

void Solver::write_back_points() {
    const int imax = g_.node_imax(), jmax = g_.node_jmax();
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i)
            g_.node(i, j) = node_new_[g_.node_idx(i, j)];
    for (int j = 0; j < g_.ny(); ++j)
        for (int i = 0; i <= imax; ++i)
            g_.edge_x(i, j) = ex_new_[g_.ex_idx(i, j)];
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g_.nx(); ++i)
            g_.edge_y(i, j) = ey_new_[g_.ey_idx(i, j)];
}

StepDiagnostics Solver::step(double dt_cap) {
    StepDiagnostics diag;
    const double dt = std::min(compute_dt(), dt_cap);
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::runtime_error("nonpositive or non-finite time step");
    diag.dt = dt;

    for (int cj = -1; cj <= g_.ny(); ++cj)
        for (int ci = -1; ci <= g_.nx(); ++ci)
            reconstruct_cell(g_, ci, cj, p_.gamma,
                             recon_[g_.avg_idx(ci, cj)]);

    const int imax = g_.node_imax(), jmax = g_.node_jmax();
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i) {
            const std::size_t k = g_.node_idx(i, j);
            update_point(tbl_node_, i, j, g_.node_x(i), g_.node_y(j),
                         g_.node(i, j), dt, node_half_[k], node_new_[k]);
        }
    for (int j = 0; j < g_.ny(); ++j)
        for (int i = 0; i <= imax; ++i) {
            const std::size_t k = g_.ex_idx(i, j);
            update_point(tbl_ex_, i, j, g_.node_x(i), g_.center_y(j),
                         g_.edge_x(i, j), dt, ex_half_[k], ex_new_[k]);
        }
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g_.nx(); ++i) {
            const std::size_t k = g_.ey_idx(i, j);
            update_point(tbl_ey_, i, j, g_.center_x(i), g_.node_y(j),
                         g_.edge_y(i, j), dt, ey_half_[k], ey_new_[k]);
        }

    limit_points(dt, diag);
    assemble_fluxes(diag);
    update_averages(dt);
    write_back_points();
    g_.time += dt;
    g_.apply_boundary();
    return diag;
}

} // namespace activeflux
