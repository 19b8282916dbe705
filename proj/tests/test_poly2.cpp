// Bivariate polynomial container: evaluation, arithmetic, and the Taylor
// shift used to recentre reconstructions on a degree-of-freedom location.
#include <doctest.h>

#include <random>

#include "activeflux/poly2.hpp"

using activeflux::Poly2;

namespace {

std::mt19937 rng(12345);

Poly2 random_poly(int degx, int degy) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    Poly2 p(degx, degy);
    for (int b = 0; b <= degy; ++b)
        for (int a = 0; a <= degx; ++a) p.set(a, b, coeff(rng));
    return p;
}

} // namespace

TEST_CASE("evaluation matches direct monomial sum") {
    std::uniform_real_distribution<double> pt(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly2 p = random_poly(3, 4);
        const double x = pt(rng), y = pt(rng);
        double direct = 0.0;
        for (int b = 0; b <= p.deg_y(); ++b)
            for (int a = 0; a <= p.deg_x(); ++a) {
                double term = p.coeff(a, b);
                for (int k = 0; k < a; ++k) term *= x;
                for (int k = 0; k < b; ++k) term *= y;
                direct += term;
            }
        CHECK(p.eval(x, y) == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("translate reproduces values at shifted arguments") {
    std::uniform_real_distribution<double> pt(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly2 p = random_poly(4, 3);
        const double tx = pt(rng), ty = pt(rng);
        const Poly2 q = p.translate(tx, ty);
        for (int s = 0; s < 5; ++s) {
            const double x = pt(rng), y = pt(rng);
            CHECK(q.eval(x, y) ==
                  doctest::Approx(p.eval(x + tx, y + ty)).epsilon(1e-12));
        }
    }
}

TEST_CASE("translate round trip returns the original coefficients") {
    for (int trial = 0; trial < 20; ++trial) {
        const Poly2 p = random_poly(4, 4);
        const Poly2 back = p.translate(0.7, -0.3).translate(-0.7, 0.3);
        for (int b = 0; b <= p.deg_y(); ++b)
            for (int a = 0; a <= p.deg_x(); ++a)
                CHECK(back.coeff(a, b) ==
                      doctest::Approx(p.coeff(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("product of polynomials evaluates to product of values") {
    std::uniform_real_distribution<double> pt(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly2 p = random_poly(2, 2);
        const Poly2 q = random_poly(2, 1);
        const Poly2 prod = p.mul(q);
        const double x = pt(rng), y = pt(rng);
        CHECK(prod.eval(x, y) ==
              doctest::Approx(p.eval(x, y) * q.eval(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("add and scale behave linearly") {
    const Poly2 p = random_poly(3, 3);
    const Poly2 q = random_poly(3, 3);
    const Poly2 sum = p.add(q.scale(2.0));
    CHECK(sum.eval(0.4, -0.9) ==
          doctest::Approx(p.eval(0.4, -0.9) + 2.0 * q.eval(0.4, -0.9))
              .epsilon(1e-13));
}
