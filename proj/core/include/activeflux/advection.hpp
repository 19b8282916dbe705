// Characteristic tracing for the advective \partial_t q + (v0 . grad) q = 0
// half of the split point update.  The foot of the characteristic through a
// dof is found by a fixed-point iteration on x_tilde = x - v0(x_tilde) dt;
// one iteration seeded with the dof's own velocity is third-order accurate
// in dt, zero iterations (using the dof velocity directly) second-order.
#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>

namespace activeflux {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Half-open cell membership: a coordinate exactly on a face belongs to the
// upwind cell, so the sampled reconstruction is the one the characteristic
// actually crossed.
struct CellLocator {
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 1.0;
    double dy = 1.0;

    int locate_x(double x, double vx) const {
        const double xi = (x - x0) / dx;
        int i = int(std::floor(xi));
        if (double(i) == xi && vx > 0.0) --i;
        return i;
    }
    int locate_y(double y, double vy) const {
        const double eta = (y - y0) / dy;
        int j = int(std::floor(eta));
        if (double(j) == eta && vy > 0.0) --j;
        return j;
    }
};

// vel(x, y, hint) must evaluate the initial velocity field at an arbitrary
// point, using hint to break ties when the point is exactly on a face.
// The first velocity evaluation is the dof's stored point value v_dof, not a
// reconstruction sample, so a dof sitting between cells needs no tie-break.
template <class VelFn>
Vec2 characteristic_foot(Vec2 dof, Vec2 v_dof, VelFn&& vel, double dt,
                         bool two_stage) {
    if (!two_stage)
        return {dof.x - v_dof.x * dt, dof.y - v_dof.y * dt};
    const Vec2 pred{dof.x - v_dof.x * dt, dof.y - v_dof.y * dt};
    const Vec2 v1 = vel(pred.x, pred.y, v_dof);
    return {dof.x - v1.x * dt, dof.y - v1.y * dt};
}

// sample(x, y, hint) must return the traced quantity of the initial data at
// the foot, evaluated in the reconstruction of the cell containing the foot.
template <class VelFn, class SampleFn>
auto evolve_advective_point(Vec2 dof, Vec2 v_dof, VelFn&& vel,
                            SampleFn&& sample, double dt, bool two_stage) {
    const Vec2 foot = characteristic_foot(dof, v_dof, vel, dt, two_stage);
    return sample(foot.x, foot.y, v_dof);
}

// Order probe on the velocity field u0(x) = x, v0 = 0, whose exact foot
// through (x, 0) is x/(1 + dt).  Returns the least-squares slope of
// log(error) against log(dt); the two-stage foot should give close to 3,
// the single-stage close to 2.
inline double local_error_order_probe(std::span<const double> dts,
                                      bool two_stage) {
    assert(dts.size() >= 2);
    const double x = 1.0;
    double sl = 0.0, se = 0.0, sll = 0.0, sle = 0.0;
    for (double dt : dts) {
        const auto vel = [](double fx, double, Vec2) { return Vec2{fx, 0.0}; };
        const Vec2 foot =
            characteristic_foot({x, 0.0}, {x, 0.0}, vel, dt, two_stage);
        const double err = std::abs(foot.x - x / (1.0 + dt));
        const double l = std::log(dt), e = std::log(err);
        sl += l;
        se += e;
        sll += l * l;
        sle += l * e;
    }
    const double n = double(dts.size());
    return (n * sle - sl * se) / (n * sll - sl * sl);
}

} // namespace activeflux
