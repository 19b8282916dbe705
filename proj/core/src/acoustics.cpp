#include "activeflux/acoustics.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace activeflux {

namespace {

constexpr double pi = std::numbers::pi;

struct ResponseCoeffs {
    double p, u, v;  // coefficient of tau^{a+b} per output variable
};

// The formulas below are the x = 0 specializations of the wedge-restricted
// solution of linear acoustics.  Each mean of monomial data times powers of
// the unit normal contributes mu_{a+alpha, b+beta} eta_{a+alpha+b+beta+1};
// the radial differentiations of r M and r^2 M turn into the integer
// prefactors.  MuFn lets the precomputed tables substitute the quarter-turn
// exact evaluation of mu.

template <class MuFn>
ResponseCoeffs p_data_coeffs(int a, int b, double dphi, MuFn&& mu_ij) {
    const int d = a + b;
    const double den = 2.0 * dphi;
    ResponseCoeffs r;
    // p = d/dr (r M[p0]),  v = -(1/r) d/dr (r^2 M[p0 n])
    // Dividing by 2 dphi last keeps the constant-data coefficient exactly 1.
    r.p = (d + 1) * mu_ij(a, b) * eta(d + 1) / den;
    r.u = -(d + 2) * mu_ij(a + 1, b) * eta(d + 2) / den;
    r.v = -(d + 2) * mu_ij(a, b + 1) * eta(d + 2) / den;
    return r;
}

template <class MuFn>
ResponseCoeffs u_data_coeffs(int a, int b, double dphi, MuFn&& mu_ij) {
    const int d = a + b;
    const double den = 2.0 * dphi;
    // The 1/d factor is the radial integral int_0^tau r^{d-1} dr / tau^d;
    // at d = 0 that contribution is dropped (continuous-data rule).
    const double fac = d > 0 ? 1.0 + 1.0 / double(d) : 1.0;
    ResponseCoeffs r;
    // p = -(1/r) d/dr (r^2 M[n.v0])
    r.p = -(d + 2) * mu_ij(a + 1, b) * eta(d + 2) / den;
    // v = 2/3 v0(0) + d/dr (r M[(v0.n) n]) - (M + int dr/r M)[v0 - 3 (v0.n) n]
    r.u = ((d + 1) * mu_ij(a + 2, b) * eta(d + 3) -
           (mu_ij(a, b) * eta(d + 1) - 3.0 * mu_ij(a + 2, b) * eta(d + 3)) * fac) /
              den +
          (d == 0 ? 2.0 / 3.0 : 0.0);
    r.v = ((d + 1) * mu_ij(a + 1, b + 1) * eta(d + 3) +
           3.0 * mu_ij(a + 1, b + 1) * eta(d + 3) * fac) /
          den;
    return r;
}

template <class MuFn>
ResponseCoeffs v_data_coeffs(int a, int b, double dphi, MuFn&& mu_ij) {
    const int d = a + b;
    const double den = 2.0 * dphi;
    const double fac = d > 0 ? 1.0 + 1.0 / double(d) : 1.0;
    ResponseCoeffs r;
    r.p = -(d + 2) * mu_ij(a, b + 1) * eta(d + 2) / den;
    r.u = ((d + 1) * mu_ij(a + 1, b + 1) * eta(d + 3) +
           3.0 * mu_ij(a + 1, b + 1) * eta(d + 3) * fac) /
          den;
    r.v = ((d + 1) * mu_ij(a, b + 2) * eta(d + 3) -
           (mu_ij(a, b) * eta(d + 1) - 3.0 * mu_ij(a, b + 2) * eta(d + 3)) * fac) /
              den +
          (d == 0 ? 2.0 / 3.0 : 0.0);
    return r;
}

AcousticResponse pack(const ResponseCoeffs& c, int d) {
    AcousticResponse r;
    r.p[d] = c.p;
    r.u[d] = c.u;
    r.v[d] = c.v;
    return r;
}

} // namespace

AcousticResponse response_from_p_monomial(int a, int b, const Wedge& w) {
    assert(a >= 0 && a <= 2 && b >= 0 && b <= 2);
    auto mu_ij = [&](int i, int j) { return mu(i, j, w); };
    return pack(p_data_coeffs(a, b, w.width(), mu_ij), a + b);
}

AcousticResponse response_from_u_monomial(int a, int b, const Wedge& w) {
    assert(a >= 0 && a <= 2 && b >= 0 && b <= 2);
    auto mu_ij = [&](int i, int j) { return mu(i, j, w); };
    return pack(u_data_coeffs(a, b, w.width(), mu_ij), a + b);
}

AcousticResponse response_from_v_monomial(int a, int b, const Wedge& w) {
    assert(a >= 0 && a <= 2 && b >= 0 && b <= 2);
    auto mu_ij = [&](int i, int j) { return mu(i, j, w); };
    return pack(v_data_coeffs(a, b, w.width(), mu_ij), a + b);
}

AcousticPointResult evolve_acoustic_point(std::span<const WedgeData> wedges,
                                          double rho0, double c0, double dt) {
    TauPoly acc_p{}, acc_u{}, acc_v{};
    double p_hat_old = 0.0;

    for (const WedgeData& wd : wedges) {
        assert(wd.p_hat.deg_x() <= 2 && wd.p_hat.deg_y() <= 2);
        const double weight = wd.wedge.width() / (2.0 * pi);
        p_hat_old += weight * wd.p_hat.coeff(0, 0);
        for (int b = 0; b <= 2; ++b) {
            for (int a = 0; a <= 2; ++a) {
                const struct {
                    double coeff;
                    AcousticResponse (*resp)(int, int, const Wedge&);
                } parts[3] = {
                    {wd.p_hat.coeff(a, b), &response_from_p_monomial},
                    {wd.u.coeff(a, b), &response_from_u_monomial},
                    {wd.v.coeff(a, b), &response_from_v_monomial},
                };
                for (const auto& part : parts) {
                    if (part.coeff == 0.0) continue;
                    const AcousticResponse r = part.resp(a, b, wd.wedge);
                    const double s = weight * part.coeff;
                    for (int k = 0; k < 5; ++k) {
                        acc_p[k] += s * r.p[k];
                        acc_u[k] += s * r.u[k];
                        acc_v[k] += s * r.v[k];
                    }
                }
            }
        }
    }

    const double tau = c0 * dt;
    AcousticPointResult out;
    const double p_hat_new = tau_eval(acc_p, tau);
    out.p = rho0 * c0 * p_hat_new;
    out.u = tau_eval(acc_u, tau);
    out.v = tau_eval(acc_v, tau);
    out.rho_increment = rho0 * (p_hat_new - p_hat_old) / c0;
    return out;
}

DofResponseTable precompute_dof_tables(DofKind kind) {
    struct QuarterWedge {
        long q0, q1;
    };
    std::array<QuarterWedge, 4> qw;
    int n = 0;
    switch (kind) {
        case DofKind::node:
            qw = {{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
            n = 4;
            break;
        case DofKind::edge_x:
            qw = {{{-1, 1}, {1, 3}, {0, 0}, {0, 0}}};
            n = 2;
            break;
        case DofKind::edge_y:
            qw = {{{0, 2}, {2, 4}, {0, 0}, {0, 0}}};
            n = 2;
            break;
    }

    DofResponseTable t;
    t.kind = kind;
    t.n_wedges = n;
    for (int w = 0; w < n; ++w) {
        const double dphi = double(qw[w].q1 - qw[w].q0) * (pi / 2.0);
        t.wedges[w] = Wedge{double(qw[w].q0) * (pi / 2.0),
                            double(qw[w].q1) * (pi / 2.0)};
        t.weight[w] = double(qw[w].q1 - qw[w].q0) / 4.0;
        auto mu_ij = [&](int i, int j) {
            return mu_quarter(i, j, qw[w].q0, qw[w].q1);
        };
        for (int b = 0; b <= 2; ++b) {
            for (int a = 0; a <= 2; ++a) {
                const int m = a + 3 * b;
                t.entry[w][0][m] = pack(p_data_coeffs(a, b, dphi, mu_ij), a + b);
                t.entry[w][1][m] = pack(u_data_coeffs(a, b, dphi, mu_ij), a + b);
                t.entry[w][2][m] = pack(v_data_coeffs(a, b, dphi, mu_ij), a + b);
            }
        }
    }
    return t;
}

} // namespace activeflux
