#ifndef ACTIVEFLUX_EULER_HPP
#define ACTIVEFLUX_EULER_HPP

/* Compressible Euler state vectors and flux functions.  Point values are
 * kept in primitive variables (rho, u, v, p), cell averages in conserved
 * ones (rho, mx, my, E).  Transformations must stay cheap and branch-free:
 * inadmissible inputs are allowed to produce NaN/Inf, which the a-posteriori
 * limiter detects downstream. */

#include <cmath>

namespace activeflux {

struct PrimState {
    double rho, u, v, p;
};

struct ConsState {
    double rho, mx, my, E;
};

inline ConsState operator+(ConsState a, ConsState b) {
    return {a.rho + b.rho, a.mx + b.mx, a.my + b.my, a.E + b.E};
}
inline ConsState operator-(ConsState a, ConsState b) {
    return {a.rho - b.rho, a.mx - b.mx, a.my - b.my, a.E - b.E};
}
inline ConsState operator*(double s, ConsState a) {
    return {s * a.rho, s * a.mx, s * a.my, s * a.E};
}

inline ConsState prim_to_cons(const PrimState& q, double gamma) {
    ConsState c;
    c.rho = q.rho;
    c.mx = q.rho * q.u;
    c.my = q.rho * q.v;
    c.E = q.p / (gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v);
    return c;
}

inline PrimState cons_to_prim(const ConsState& c, double gamma) {
    PrimState q;
    q.rho = c.rho;
    q.u = c.mx / c.rho;
    q.v = c.my / c.rho;
    q.p = (gamma - 1.0) * (c.E - 0.5 * (c.mx * c.mx + c.my * c.my) / c.rho);
    return q;
}

inline double sound_speed(const PrimState& q, double gamma) {
    return std::sqrt(gamma * q.p / q.rho);
}

// Flux of the conserved quantities evaluated from a primitive state.
inline ConsState flux_x(const PrimState& q, double gamma) {
    ConsState f;
    const double E = q.p / (gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v);
    f.rho = q.rho * q.u;
    f.mx = q.rho * q.u * q.u + q.p;
    f.my = q.rho * q.u * q.v;
    f.E = q.u * (E + q.p);
    return f;
}

inline ConsState flux_y(const PrimState& q, double gamma) {
    ConsState f;
    const double E = q.p / (gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v);
    f.rho = q.rho * q.v;
    f.mx = q.rho * q.u * q.v;
    f.my = q.rho * q.v * q.v + q.p;
    f.E = q.v * (E + q.p);
    return f;
}

inline ConsState flux_x_cons(const ConsState& c, double gamma) {
    return flux_x(cons_to_prim(c, gamma), gamma);
}
inline ConsState flux_y_cons(const ConsState& c, double gamma) {
    return flux_y(cons_to_prim(c, gamma), gamma);
}

inline bool finite(const PrimState& q) {
    return std::isfinite(q.rho) && std::isfinite(q.u) && std::isfinite(q.v) &&
           std::isfinite(q.p);
}
inline bool finite(const ConsState& c) {
    return std::isfinite(c.rho) && std::isfinite(c.mx) && std::isfinite(c.my) &&
           std::isfinite(c.E);
}

inline bool admissible(const PrimState& q, double eps) {
    return finite(q) && q.rho >= eps && q.p >= eps;
}

} // namespace activeflux

#endif
