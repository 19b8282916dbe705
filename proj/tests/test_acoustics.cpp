// Oracles for the acoustic point evolution.  Globally polynomial data makes
// the acoustic system's Taylor series terminate, giving an exact reference
// the wedge-summed evolution must reproduce; per-wedge responses are rebuilt
// from numerically integrated spherical means; linear data has closed forms.
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "activeflux/acoustics.hpp"
#include "quadrature.hpp"

using namespace activeflux;

namespace {

constexpr double pi = 3.14159265358979323846;

Poly2 ddx(const Poly2& q) {
    if (q.deg_x() == 0) return Poly2(0, 0);
    Poly2 r(q.deg_x() - 1, q.deg_y());
    for (int b = 0; b <= q.deg_y(); ++b)
        for (int a = 1; a <= q.deg_x(); ++a)
            r.set(a - 1, b, a * q.coeff(a, b));
    return r;
}

Poly2 ddy(const Poly2& q) {
    if (q.deg_y() == 0) return Poly2(0, 0);
    Poly2 r(q.deg_x(), q.deg_y() - 1);
    for (int b = 1; b <= q.deg_y(); ++b)
        for (int a = 0; a <= q.deg_x(); ++a)
            r.set(a, b - 1, b * q.coeff(a, b));
    return r;
}

struct Field3 {
    Poly2 p;  // scaled pressure p_hat
    Poly2 u;
    Poly2 v;
};

// One application of the generator of
//   dt p_hat = -c (dx u + dy v),  dt u = -c dx p_hat,  dt v = -c dy p_hat.
Field3 apply_generator(const Field3& f, double c) {
    Field3 g{ddx(f.u).add(ddy(f.v)).scale(-c), ddx(f.p).scale(-c),
             ddy(f.p).scale(-c)};
    return g;
}

bool all_zero(const Field3& f) {
    auto z = [](const Poly2& q) {
        for (int b = 0; b <= q.deg_y(); ++b)
            for (int a = 0; a <= q.deg_x(); ++a)
                if (q.coeff(a, b) != 0.0) return false;
        return true;
    };
    return z(f.p) && z(f.u) && z(f.v);
}

// Exact solution at the origin by the terminating Taylor series.
std::array<double, 3> taylor_at_origin(Field3 f, double c, double t) {
    std::array<double, 3> out{0.0, 0.0, 0.0};
    double fact = 1.0, tk = 1.0;
    for (int k = 0; k <= 8; ++k) {
        const double w = tk / fact;
        out[0] += w * f.p.coeff(0, 0);
        out[1] += w * f.u.coeff(0, 0);
        out[2] += w * f.v.coeff(0, 0);
        if (all_zero(f)) break;
        f = apply_generator(f, c);
        fact *= double(k + 1);
        tk *= t;
    }
    return out;
}

Poly2 random_poly(std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Poly2 q(2, 2);
    for (int b = 0; b <= 2; ++b)
        for (int a = 0; a <= 2; ++a) q.set(a, b, coef(rng));
    return q;
}

// Wedge-restricted spherical mean coefficient by nested adaptive quadrature:
//   M^W[n_x^alpha n_y^beta x^a y^b](0, r) = r^{a+b} SMq(alpha, beta, a, b)
// with the mean normalized to the wedge's own solid angle 2 dphi.
double smq(int alpha, int beta, int a, int b, const Wedge& w) {
    auto ipow = [](double x, int n) {
        double r = 1.0;
        for (int k = 0; k < n; ++k) r *= x;
        return r;
    };
    const int ptheta = a + b + alpha + beta + 1;
    const double polar = testutil::integrate(
        [&](double theta) { return ipow(std::sin(theta), ptheta); }, 0.0, pi,
        1e-12);
    const double azimuthal = testutil::integrate(
        [&](double phi) {
            return ipow(std::cos(phi), a + alpha) *
                   ipow(std::sin(phi), b + beta);
        },
        w.phi_min, w.phi_max, 1e-12);
    return polar * azimuthal / (2.0 * w.width());
}

// Responses of one wedge to unit monomial data, assembled directly from the
// radial-profile solution formulas with the angular means from quadrature.
// d = a + b; every term carries tau^d, except the fixed 2/3 velocity share.
AcousticResponse oracle_from_p(int a, int b, const Wedge& w) {
    const int d = a + b;
    AcousticResponse r;
    r.p[d] += (d + 1) * smq(0, 0, a, b, w);
    r.u[d] += -(d + 2) * smq(1, 0, a, b, w);
    r.v[d] += -(d + 2) * smq(0, 1, a, b, w);
    return r;
}

AcousticResponse oracle_from_u(int a, int b, const Wedge& w) {
    const int d = a + b;
    AcousticResponse r;
    r.p[d] += -(d + 2) * smq(1, 0, a, b, w);
    const double m00 = smq(0, 0, a, b, w);
    const double m20 = smq(2, 0, a, b, w);
    const double m11 = smq(1, 1, a, b, w);
    if (a == 0 && b == 0) r.u[0] += 2.0 / 3.0;
    r.u[d] += (d + 1) * m20 - (m00 - 3.0 * m20);
    r.v[d] += (d + 1) * m11 + 3.0 * m11;
    if (d >= 1) {
        r.u[d] += -(m00 - 3.0 * m20) / d;
        r.v[d] += 3.0 * m11 / d;
    }
    return r;
}

AcousticResponse oracle_from_v(int a, int b, const Wedge& w) {
    const int d = a + b;
    AcousticResponse r;
    r.p[d] += -(d + 2) * smq(0, 1, a, b, w);
    const double m00 = smq(0, 0, a, b, w);
    const double m02 = smq(0, 2, a, b, w);
    const double m11 = smq(1, 1, a, b, w);
    if (a == 0 && b == 0) r.v[0] += 2.0 / 3.0;
    r.v[d] += (d + 1) * m02 - (m00 - 3.0 * m02);
    r.u[d] += (d + 1) * m11 + 3.0 * m11;
    if (d >= 1) {
        r.v[d] += -(m00 - 3.0 * m02) / d;
        r.u[d] += 3.0 * m11 / d;
    }
    return r;
}

void check_response(const AcousticResponse& got, const AcousticResponse& want,
                    double tol, int a, int b, const Wedge& w, const char* src) {
    for (int m = 0; m < 5; ++m) {
        CAPTURE(src);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(w.phi_min);
        CAPTURE(w.phi_max);
        CAPTURE(m);
        INFO("p: got=", got.p[m], " want=", want.p[m]);
        INFO("u: got=", got.u[m], " want=", want.u[m]);
        INFO("v: got=", got.v[m], " want=", want.v[m]);
        CHECK(std::abs(got.p[m] - want.p[m]) < tol);
        CHECK(std::abs(got.u[m] - want.u[m]) < tol);
        CHECK(std::abs(got.v[m] - want.v[m]) < tol);
    }
}

std::vector<WedgeData> same_data_partition(DofKind kind, const Poly2& ph,
                                           const Poly2& u, const Poly2& v) {
    const DofResponseTable t = precompute_dof_tables(kind);
    std::vector<WedgeData> out;
    for (int w = 0; w < t.n_wedges; ++w)
        out.push_back(WedgeData{t.wedges[w], ph, u, v});
    return out;
}

} // namespace

TEST_CASE("polynomial data evolves by the terminating Taylor series") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 6; ++trial) {
        const Field3 f{random_poly(rng), random_poly(rng), random_poly(rng)};
        const double rho0 = 0.4 + 0.2 * trial;
        const double c0 = 0.7 + 0.15 * trial;
        for (double tau : {0.02, 0.11, 0.29, 0.45}) {
            const double dt = tau / c0;
            const auto exact = taylor_at_origin(f, c0, dt);
            for (DofKind kind :
                 {DofKind::node, DofKind::edge_x, DofKind::edge_y}) {
                const auto wedges = same_data_partition(kind, f.p, f.u, f.v);
                const AcousticPointResult got =
                    evolve_acoustic_point(wedges, rho0, c0, dt);
                CAPTURE(trial);
                CAPTURE(tau);
                CAPTURE(int(kind));
                CHECK(std::abs(got.p - rho0 * c0 * exact[0]) < 1e-12);
                CHECK(std::abs(got.u - exact[1]) < 1e-12);
                CHECK(std::abs(got.v - exact[2]) < 1e-12);
                const double p0 = rho0 * c0 * f.p.coeff(0, 0);
                CHECK(std::abs(got.rho_increment -
                               (got.p - p0) / (c0 * c0)) < 1e-13);
            }
        }
    }
}

TEST_CASE("per-wedge monomial responses match the integral oracle") {
    std::vector<Wedge> wedges;
    for (DofKind kind : {DofKind::node, DofKind::edge_x, DofKind::edge_y}) {
        const DofResponseTable t = precompute_dof_tables(kind);
        for (int w = 0; w < t.n_wedges; ++w) wedges.push_back(t.wedges[w]);
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> lo(-2.0 * pi, 2.0 * pi);
    std::uniform_real_distribution<double> width(0.05, 2.0 * pi);
    for (int k = 0; k < 4; ++k) {
        const double a = lo(rng);
        wedges.push_back(Wedge{a, a + width(rng)});
    }
    for (const Wedge& w : wedges)
        for (int b = 0; b <= 2; ++b)
            for (int a = 0; a <= 2; ++a) {
                check_response(response_from_p_monomial(a, b, w),
                               oracle_from_p(a, b, w), 1e-8, a, b, w, "p");
                check_response(response_from_u_monomial(a, b, w),
                               oracle_from_u(a, b, w), 1e-8, a, b, w, "u");
                check_response(response_from_v_monomial(a, b, w),
                               oracle_from_v(a, b, w), 1e-8, a, b, w, "v");
            }
}

TEST_CASE("linear data is evolved exactly") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Poly2 ph(1, 1), u(1, 1), v(1, 1);
        for (Poly2* q : {&ph, &u, &v}) {
            q->set(0, 0, coef(rng));
            q->set(1, 0, coef(rng));
            q->set(0, 1, coef(rng));
        }
        const double rho0 = 1.2, c0 = 0.9;
        for (DofKind kind :
             {DofKind::node, DofKind::edge_x, DofKind::edge_y}) {
            const auto wedges = same_data_partition(kind, ph, u, v);
            for (double tau : {0.1, 0.45}) {
                const double dt = tau / c0;
                const AcousticPointResult got =
                    evolve_acoustic_point(wedges, rho0, c0, dt);
                const double div_v = u.coeff(1, 0) + v.coeff(0, 1);
                const double p_exact =
                    rho0 * c0 * (ph.coeff(0, 0) - tau * div_v);
                const double u_exact = u.coeff(0, 0) - tau * ph.coeff(1, 0);
                const double v_exact = v.coeff(0, 0) - tau * ph.coeff(0, 1);
                CHECK(std::abs(got.p - p_exact) < 1e-12);
                CHECK(std::abs(got.u - u_exact) < 1e-12);
                CHECK(std::abs(got.v - v_exact) < 1e-12);
            }
        }
    }
}

TEST_CASE("stationary linear data is a fixed point") {
    // gradient-free scaled pressure, divergence-free linear velocity
    Poly2 ph(0, 0), u(1, 1), v(1, 1);
    ph.set(0, 0, 0.73);
    u.set(0, 0, 0.31);
    u.set(1, 0, 0.5);
    u.set(0, 1, -0.2);
    v.set(0, 0, -0.11);
    v.set(1, 0, 0.4);
    v.set(0, 1, -0.5);  // cancels u_x
    const double rho0 = 1.0, c0 = 1.3;
    for (DofKind kind : {DofKind::node, DofKind::edge_x, DofKind::edge_y}) {
        const auto wedges = same_data_partition(kind, ph, u, v);
        const AcousticPointResult got =
            evolve_acoustic_point(wedges, rho0, c0, 0.45 / c0);
        CHECK(std::abs(got.p - rho0 * c0 * 0.73) < 1e-13);
        CHECK(std::abs(got.u - 0.31) < 1e-13);
        CHECK(std::abs(got.v - (-0.11)) < 1e-13);
        CHECK(std::abs(got.rho_increment) < 1e-13);
    }
}

TEST_CASE("precomputed dof tables store the unweighted wedge responses") {
    for (DofKind kind : {DofKind::node, DofKind::edge_x, DofKind::edge_y}) {
        const DofResponseTable t = precompute_dof_tables(kind);
        double wsum = 0.0;
        for (int w = 0; w < t.n_wedges; ++w) {
            wsum += t.weight[w];
            for (int m = 0; m < 9; ++m) {
                const int a = m % 3, b = m / 3;
                const AcousticResponse ref[3] = {
                    response_from_p_monomial(a, b, t.wedges[w]),
                    response_from_u_monomial(a, b, t.wedges[w]),
                    response_from_v_monomial(a, b, t.wedges[w])};
                for (int var = 0; var < 3; ++var)
                    for (int k = 0; k < 5; ++k) {
                        CHECK(t.entry[w][var][m].p[k] ==
                              doctest::Approx(ref[var].p[k]).epsilon(1e-14));
                        CHECK(t.entry[w][var][m].u[k] ==
                              doctest::Approx(ref[var].u[k]).epsilon(1e-14));
                        CHECK(t.entry[w][var][m].v[k] ==
                              doctest::Approx(ref[var].v[k]).epsilon(1e-14));
                    }
            }
        }
        CHECK(std::abs(wsum - 1.0) < 1e-15);
    }
}
