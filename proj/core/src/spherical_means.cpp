#include "activeflux/spherical_means.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace activeflux {

namespace {

constexpr double pi = std::numbers::pi;

constexpr int eta_cache_size = 32;

struct EtaTable {
    double v[eta_cache_size];
    EtaTable() {
        // eta_a = eta_{a-2} (a-1)/a reproduces the double-factorial values.
        v[0] = pi;
        v[1] = 2.0;
        for (int a = 2; a < eta_cache_size; ++a)
            v[a] = v[a - 2] * double(a - 1) / double(a);
    }
};

const EtaTable eta_table;

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * double(n - k + i) / double(i);
    return r;
}

// Shared four-case double sum for mu.  DSin(k)/DCos(k) must return
// sin(k phi)/cos(k phi) differenced between the wedge ends; k may be negative.
template <class DSin, class DCos>
double mu_sum(int i, int j, double dphi, DSin dsin, DCos dcos) {
    const double sign_j_half = (j / 2) % 2 == 0 ? 1.0 : -1.0;
    const double sign_j1_half = ((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    double sum = 0.0;
    for (int m = 0; m <= i; ++m) {
        for (int n = 0; n <= j; ++n) {
            const int k = i + j - 2 * m - 2 * n;
            double term;
            if (j % 2 == 0)
                term = k == 0 ? sign_j_half * dphi : sign_j_half * dsin(k) / k;
            else
                term = k == 0 ? 0.0 : sign_j1_half * dcos(k) / k;
            const double par = (n + j) % 2 == 0 ? 1.0 : -1.0;
            sum += binom(i, m) * binom(j, n) * par * term;
        }
    }
    return sum / double(1 << (i + j));
}

// sin/cos at integer multiples of pi/2, exactly.
double sin_quarter(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return 0.0;
        case 1: return 1.0;
        case 2: return 0.0;
        default: return -1.0;
    }
}

double cos_quarter(long k) { return sin_quarter(k + 1); }

} // namespace

Wedge full_circle() { return Wedge{0.0, 2.0 * pi}; }

double eta(int a) {
    if (a < 0) throw std::invalid_argument("eta: negative index");
    if (a < eta_cache_size) return eta_table.v[a];
    return eta(a - 2) * double(a - 1) / double(a);
}

double mu(int i, int j, const Wedge& w) {
    assert(i >= 0 && j >= 0);
    return mu_sum(
        i, j, w.width(),
        [&](int k) { return std::sin(k * w.phi_max) - std::sin(k * w.phi_min); },
        [&](int k) { return std::cos(k * w.phi_max) - std::cos(k * w.phi_min); });
}

double mu_quarter(int i, int j, long q0, long q1) {
    assert(i >= 0 && j >= 0 && q0 < q1);
    const double dphi = double(q1 - q0) * (pi / 2.0);
    return mu_sum(
        i, j, dphi,
        [&](int k) { return sin_quarter(k * q1) - sin_quarter(k * q0); },
        [&](int k) { return cos_quarter(k * q1) - cos_quarter(k * q0); });
}

double monomial_mean_coeff(int a, int b, int alpha, int beta, int k, int l,
                           const Wedge& w) {
    if (k < 0 || k > a || l < 0 || l > b)
        throw std::invalid_argument("monomial_mean_coeff: index out of range");
    return binom(a, k) * binom(b, l) * mu(a + alpha - k, b + beta - l, w) /
           (2.0 * w.width()) * eta(a + alpha - k + b + beta - l + 1);
}

double spherical_mean_monomial(int alpha, int beta, int a, int b,
                               const Wedge& w, double r) {
    assert(r >= 0.0);
    return std::pow(r, a + b) * mu(a + alpha, b + beta, w) /
           (2.0 * w.width()) * eta(a + alpha + b + beta + 1);
}

} // namespace activeflux
