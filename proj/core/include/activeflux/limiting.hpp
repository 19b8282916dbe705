// Bound preservation in two independent layers: an a-posteriori local
// Lax-Friedrichs fallback replacing point values whose update came out
// non-finite or below the density/pressure floor, and an a-priori convex
// blending of each high-order face flux toward an HLL-type flux chosen so
// the average update keeps density and pressure above the floor.
#pragma once

#include "activeflux/euler.hpp"

namespace activeflux {

bool point_needs_limiting(const PrimState& q, double eps);

// Signal speed for both fallback and blending, from the face's own point
// value at the old time level: max(|u|, |v|) + c.
double lambda_estimate(const PrimState& q, double gamma);

// One-dimensional LLF update on the dx/2-wide control volume around an edge
// midpoint, in conserved variables:
//   q_lim = q - (2 dt / h) [ (f(qR) - f(qL))/2 - (lambda/2)(qR - 2q + qL) ].
// x_dir selects f^x vs f^y; qL, qR are the two adjacent cell averages.
ConsState llf_edge_fallback(const ConsState& q, const ConsState& qL,
                            const ConsState& qR, double lambda, double dt,
                            double h, double gamma, bool x_dir);

// Node variant: the x and y operators are summed; the left/right (bottom/top)
// states are the pairwise means of the four cell averages around the node,
// standing in for the half-index averages the 1-D operators expect.
ConsState llf_node_fallback(const ConsState& q, const ConsState& q_ll,
                            const ConsState& q_lr, const ConsState& q_ul,
                            const ConsState& q_ur, double lambda, double dt,
                            double dx, double dy, double gamma);

struct HLLFace {
    ConsState q;
    ConsState f;
};

// Two-wave intermediate state and flux between the adjacent cell averages:
//   q_hll = (qL + qR)/2 - (f(qR) - f(qL)) / (2 lambda)
//   f_hll = (f(qL) + f(qR))/2 - lambda (qR - qL)/2.
HLLFace hll_state_and_flux(const ConsState& qL, const ConsState& qR,
                           double lambda, double gamma, bool x_dir);

// Largest theta in [0, 1] for which the states q_hll -+ theta (f_high -
// f_hll)/lambda keep rho >= eps and p >= eps: the density bound is a direct
// clamp of the mass-flux difference, the pressure bound the linear
// sufficient condition theta (max(0, A) + |B|) <= C from the positivity
// quadratic.  A NaN high-order flux forces theta = 0.  C <= 0 means the HLL
// state itself is inadmissible and is reported through *fatal.
double blend_theta(const ConsState& f_high, const HLLFace& hll, double lambda,
                   double eps, double gamma, bool* fatal);

} // namespace activeflux
