#ifndef ACTIVEFLUX_POLY2_HPP
#define ACTIVEFLUX_POLY2_HPP

/* Dense bivariate polynomials with explicit per-direction degrees.
 * Coefficients are stored row-major in the monomial basis: the coefficient
 * of x^a y^b sits at index b*(degx+1) + a.  Storage is a fixed inline array
 * so that values can live on the stack inside hot loops. */

#include <array>
#include <cassert>
#include <cmath>

namespace activeflux {

class Poly2 {
public:
    // Degree 4 per direction covers every product formed in the solver
    // (two biparabolics); the extra headroom is for tests.
    static constexpr int max_deg = 8;

    Poly2() : degx_(0), degy_(0) { c_.fill(0.0); }

    Poly2(int degx, int degy) : degx_(degx), degy_(degy) {
        assert(degx >= 0 && degx <= max_deg && degy >= 0 && degy <= max_deg);
        c_.fill(0.0);
    }

    static Poly2 constant(double v) {
        Poly2 p;
        p.set(0, 0, v);
        return p;
    }

    // Monomial x^a y^b.
    static Poly2 monomial(int a, int b, double coeff = 1.0) {
        Poly2 p(a, b);
        p.set(a, b, coeff);
        return p;
    }

    int deg_x() const { return degx_; }
    int deg_y() const { return degy_; }

    double coeff(int a, int b) const {
        if (a > degx_ || b > degy_) return 0.0;
        return c_[idx(a, b)];
    }

    void set(int a, int b, double v) {
        assert(a <= degx_ && b <= degy_);
        c_[idx(a, b)] = v;
    }

    double eval(double x, double y) const {
        // Horner in x per row, then Horner in y over the row values.
        double acc = 0.0;
        for (int b = degy_; b >= 0; --b) {
            double row = 0.0;
            for (int a = degx_; a >= 0; --a)
                row = row * x + c_[idx(a, b)];
            acc = acc * y + row;
        }
        return acc;
    }

    Poly2 add(const Poly2& q) const {
        Poly2 r(degx_ > q.degx_ ? degx_ : q.degx_,
                degy_ > q.degy_ ? degy_ : q.degy_);
        for (int b = 0; b <= r.degy_; ++b)
            for (int a = 0; a <= r.degx_; ++a)
                r.set(a, b, coeff(a, b) + q.coeff(a, b));
        return r;
    }

    Poly2 scale(double s) const {
        Poly2 r(degx_, degy_);
        for (int b = 0; b <= degy_; ++b)
            for (int a = 0; a <= degx_; ++a)
                r.set(a, b, s * c_[idx(a, b)]);
        return r;
    }

    Poly2 mul(const Poly2& q) const {
        assert(degx_ + q.degx_ <= max_deg && degy_ + q.degy_ <= max_deg);
        Poly2 r(degx_ + q.degx_, degy_ + q.degy_);
        for (int b = 0; b <= degy_; ++b)
            for (int a = 0; a <= degx_; ++a) {
                const double ca = c_[idx(a, b)];
                if (ca == 0.0) continue;
                for (int qb = 0; qb <= q.degy_; ++qb)
                    for (int qa = 0; qa <= q.degx_; ++qa)
                        r.c_[r.idx(a + qa, b + qb)] += ca * q.c_[q.idx(qa, qb)];
            }
        return r;
    }

    // Returns q with q(x,y) = p(x+ax, y+ay) (Taylor shift per direction).
    Poly2 translate(double ax, double ay) const {
        Poly2 r = *this;
        for (int b = 0; b <= degy_; ++b)
            for (int i = 0; i < degx_; ++i)
                for (int a = degx_ - 1; a >= i; --a)
                    r.c_[idx(a, b)] += ax * r.c_[idx(a + 1, b)];
        for (int a = 0; a <= degx_; ++a)
            for (int i = 0; i < degy_; ++i)
                for (int b = degy_ - 1; b >= i; --b)
                    r.c_[idx(a, b)] += ay * r.c_[idx(a, b + 1)];
        return r;
    }

private:
    int idx(int a, int b) const { return b * (degx_ + 1) + a; }

    int degx_, degy_;
    std::array<double, (max_deg + 1) * (max_deg + 1)> c_;
};

} // namespace activeflux

#endif
