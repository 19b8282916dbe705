#ifndef ACTIVEFLUX_SPHERICAL_MEANS_HPP
#define ACTIVEFLUX_SPHERICAL_MEANS_HPP

/* Closed-form angular integrals underlying the acoustic evolution operator.
 *
 * eta(a) = int_0^pi sin^a(theta) dtheta,
 * mu(i,j,W) = int_{phi_min}^{phi_max} cos^i(phi) sin^j(phi) dphi,
 *
 * and the coefficients of wedge-restricted spherical means of monomial data,
 *   M^W[n_x^alpha n_y^beta x^a y^b](0, r)
 *     = r^{a+b} mu_{a+alpha, b+beta} eta_{a+alpha+b+beta+1} / (2 dphi).
 */

namespace activeflux {

// Angular sector [phi_min, phi_max) over which spherical means are restricted.
struct Wedge {
    double phi_min;
    double phi_max;

    double width() const { return phi_max - phi_min; }
};

Wedge full_circle();

// eta(0) = pi by the empty-product convention of the double factorial.
double eta(int a);

double mu(int i, int j, const Wedge& w);

// mu over the wedge [q0, q1) * pi/2 with the trigonometric factors evaluated
// exactly at quarter turns.  The per-dof wedges are all of this form, and the
// exact values make cross-wedge cancellations (uniform states, symmetric
// data) hold in floating point instead of only up to libm rounding.
double mu_quarter(int i, int j, long q0, long q1);

// F^{(a,b,alpha,beta)}_{k,l}: coefficient of x^k y^l r^{a-k+b-l} in the
// general-position spherical mean of n_x^alpha n_y^beta x^a y^b.
double monomial_mean_coeff(int a, int b, int alpha, int beta, int k, int l,
                           const Wedge& w);

// M^W[n_x^alpha n_y^beta x^a y^b] evaluated at x = y = 0 and radius r.
double spherical_mean_monomial(int alpha, int beta, int a, int b,
                               const Wedge& w, double r);

} // namespace activeflux

#endif
