#include "activeflux/limiting.hpp"

#include <algorithm>
#include <cmath>

namespace activeflux {

bool point_needs_limiting(const PrimState& q, double eps) {
    return !finite(q) || q.rho < eps || q.p < eps;
}

double lambda_estimate(const PrimState& q, double gamma) {
    return std::max(std::abs(q.u), std::abs(q.v)) + sound_speed(q, gamma);
}

namespace {

inline ConsState directional_flux(const ConsState& q, double gamma,
                                  bool x_dir) {
    return x_dir ? flux_x_cons(q, gamma) : flux_y_cons(q, gamma);
}

inline ConsState llf_increment(const ConsState& q, const ConsState& qL,
                               const ConsState& qR, double lambda, double dt,
                               double h, double gamma, bool x_dir) {
    const ConsState fL = directional_flux(qL, gamma, x_dir);
    const ConsState fR = directional_flux(qR, gamma, x_dir);
    const ConsState central = 0.5 * (fR - fL);
    const ConsState diffusive = (0.5 * lambda) * (qR - 2.0 * q + qL);
    return (-2.0 * dt / h) * (central - diffusive);
}

} // namespace

ConsState llf_edge_fallback(const ConsState& q, const ConsState& qL,
                            const ConsState& qR, double lambda, double dt,
                            double h, double gamma, bool x_dir) {
    return q + llf_increment(q, qL, qR, lambda, dt, h, gamma, x_dir);
}

ConsState llf_node_fallback(const ConsState& q, const ConsState& q_ll,
                            const ConsState& q_lr, const ConsState& q_ul,
                            const ConsState& q_ur, double lambda, double dt,
                            double dx, double dy, double gamma) {
    const ConsState left = 0.5 * (q_ll + q_ul);
    const ConsState right = 0.5 * (q_lr + q_ur);
    const ConsState bottom = 0.5 * (q_ll + q_lr);
    const ConsState top = 0.5 * (q_ul + q_ur);
    return q + llf_increment(q, left, right, lambda, dt, dx, gamma, true) +
           llf_increment(q, bottom, top, lambda, dt, dy, gamma, false);
}

HLLFace hll_state_and_flux(const ConsState& qL, const ConsState& qR,
                           double lambda, double gamma, bool x_dir) {
    const ConsState fL = directional_flux(qL, gamma, x_dir);
    const ConsState fR = directional_flux(qR, gamma, x_dir);
    HLLFace face;
    face.q = 0.5 * (qL + qR) - (1.0 / (2.0 * lambda)) * (fR - fL);
    face.f = 0.5 * (fL + fR) - (0.5 * lambda) * (qR - qL);
    return face;
}

double blend_theta(const ConsState& f_high, const HLLFace& hll, double lambda,
                   double eps, double gamma, bool* fatal) {
    if (!finite(f_high)) return 0.0;

    const ConsState df = f_high - hll.f;
    const ConsState& qh = hll.q;

    // Density: the clamp of theta df^rho against (rho_hll -+ eps) lambda,
    // i.e. both downstream states keep rho >= eps.
    double theta = 1.0;
    const double room = (qh.rho - eps) * lambda;
    if (room < 0.0) {
        *fatal = true;
        return 0.0;
    }
    if (df.rho > 0.0)
        theta = std::min(theta, room / df.rho);
    else if (df.rho < 0.0)
        theta = std::min(theta, room / -df.rho);

    // Pressure: sufficient linear bound theta (max(0,A) + |B|) <= C for the
    // positivity quadratic theta^2 A +- theta B < C of both new states.
    const double A =
        0.5 * (df.mx * df.mx + df.my * df.my) - df.E * df.rho;
    const double B = (-(qh.mx * df.mx + qh.my * df.my) + df.E * qh.rho +
                      df.rho * qh.E - df.rho * eps / (gamma - 1.0)) *
                     lambda;
    const double C = (-qh.rho * eps / (gamma - 1.0) -
                      0.5 * (qh.mx * qh.mx + qh.my * qh.my) + qh.E * qh.rho) *
                     lambda * lambda;
    if (!(C > 0.0)) {
        *fatal = true;
        return 0.0;
    }
    const double denom = std::max(0.0, A) + std::abs(B);
    if (denom > 0.0) theta = std::min(theta, C / denom);

    if (!std::isfinite(theta)) return 0.0;
    return std::clamp(theta, 0.0, 1.0);
}

} // namespace activeflux
