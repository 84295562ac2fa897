#include "memsq/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace memsq {

Params::Params(double lambda_, double delta_) : lambda(lambda_), delta(delta_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("Params: lambda must be positive and finite");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("Params: delta must be non-negative and finite");
}

Domain Domain::slab(double half_width) {
    if (!(half_width > 0.0)) throw std::invalid_argument("Domain: half_width must be positive");
    return Domain{DomainKind::Slab, half_width, 1};
}

Domain Domain::disk(double radius, int dim) {
    if (!(radius > 0.0)) throw std::invalid_argument("Domain: radius must be positive");
    if (dim < 2) throw std::invalid_argument("Domain: disk dimension must be >= 2");
    return Domain{DomainKind::RadialDisk, radius, dim};
}

Grid build_grid(const Domain& domain, int n_interior) {
    if (n_interior < 4) throw std::invalid_argument("build_grid: n_interior must be >= 4");
    Grid g;
    g.domain = domain;
    g.n_interior = n_interior;
    const double extent = domain.extent();
    g.h = extent / (n_interior + 1);
    const double x0 = domain.kind == DomainKind::Slab ? -domain.size : 0.0;
    g.nodes.resize(n_interior + 2);
    for (int i = 0; i < n_interior + 2; ++i) g.nodes[i] = x0 + i * g.h;
    g.nodes.back() = x0 + extent;  // pin the far endpoint exactly
    return g;
}

// ---------------------------------------------------------------------------
// Bessel J0/J1
//
// Series: J_nu(x) = (x/2)^nu sum_k (-x^2/4)^k / (k! (k+nu)!), accumulated in
// long double so the alternating cancellation near x=12 stays below 1e-13.
// Asymptotic: J_nu(x) = sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
// chi = x - (nu/2 + 1/4) pi, with the Hankel coefficient recurrence
// a_m = a_{m-1} (4 nu^2 - (2m-1)^2)/(8 m); both sums truncated at their
// smallest term.
// ---------------------------------------------------------------------------

namespace {

double bessel_series(int nu, double x) {
    const long double xx = static_cast<long double>(x) * x / 4.0L;
    long double term = (nu == 0) ? 1.0L : static_cast<long double>(x) / 2.0L;
    long double acc = 0.0L;
    for (int k = 0;; ++k) {
        acc += term;
        term *= -xx / (static_cast<long double>(k + 1) * (k + 1 + nu));
        if (std::fabs(static_cast<double>(term)) < 1e-22 && k > 4) break;
        if (k > 100) break;
    }
    return static_cast<double>(acc);
}

double bessel_asymptotic(int nu, double x) {
    const long double xl = x;
    const long double mu = 4.0L * nu * nu;
    // Hankel coefficients a_m up to enough terms for x >= 12
    long double a[40];
    a[0] = 1.0L;
    for (int m = 1; m < 40; ++m)
        a[m] = a[m - 1] * (mu - (2.0L * m - 1) * (2.0L * m - 1)) / (8.0L * m);

    long double P = 1.0L, lastmag = -1.0L;
    for (int k = 1; 2 * k < 40; ++k) {
        long double t = a[2 * k] / std::pow(xl, 2.0L * k);
        if (k % 2 == 1) t = -t;
        if (lastmag >= 0.0L && std::fabs(static_cast<double>(t)) > lastmag) break;
        P += t;
        lastmag = std::fabs(static_cast<double>(t));
    }
    long double Q = 0.0L;
    lastmag = -1.0L;
    for (int k = 0; 2 * k + 1 < 40; ++k) {
        long double t = a[2 * k + 1] / std::pow(xl, 2.0L * k + 1);
        if (k % 2 == 1) t = -t;
        if (lastmag >= 0.0L && std::fabs(static_cast<double>(t)) > lastmag) break;
        Q += t;
        lastmag = std::fabs(static_cast<double>(t));
    }
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double chi = xl - (nu / 2.0L + 0.25L) * pi;
    const long double val =
        std::sqrt(2.0L / (pi * xl)) * (P * std::cos(chi) - Q * std::sin(chi));
    return static_cast<double>(val);
}

}  // namespace

double bessel_j(int order, double x) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("bessel_j: order must be 0 or 1");
    if (!(std::fabs(x) <= 50.0))
        throw std::invalid_argument("bessel_j: |x| must be <= 50");
    const double ax = std::fabs(x);
    double v = (ax <= 12.0) ? bessel_series(order, ax) : bessel_asymptotic(order, ax);
    if (order == 1 && x < 0.0) v = -v;  // J1 is odd, J0 even
    return v;
}

double bessel_j0_first_zero() {
    static const double z0 = [] {
        double lo = 2.0, hi = 3.0;
        // J0(2) > 0 > J0(3)
        while (hi - lo > 1e-13) {
            const double mid = 0.5 * (lo + hi);
            (bessel_j(0, mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return z0;
}

EigenPair eigenpair(const Domain& domain) {
    EigenPair e;
    if (domain.kind == DomainKind::Slab) {
        const double L = domain.size;  // half-width
        const double pi = M_PI;
        // -phi'' = mu phi on (-L, L); ground state normalized to unit integral
        e.mu0 = pi * pi / (4.0 * L * L);
        const double c = pi / (4.0 * L);  // makes int_{-L}^{L} phi0 = 1
        e.phi0_at = [L, c, pi](double x) { return c * std::sin(pi * (x + L) / (2.0 * L)); };
        return e;
    }
    if (domain.dim != 2)
        throw std::invalid_argument("eigenpair: only the 2D disk is supported");
    const double R = domain.size;
    const double z0 = bessel_j0_first_zero();
    e.mu0 = z0 * z0 / (R * R);
    // c J0(z0 r/R) with 2 pi int_0^R phi0 r dr = 1
    const double c = z0 / (2.0 * M_PI * R * R * bessel_j(1, z0));
    e.phi0_at = [R, z0, c](double r) { return c * bessel_j(0, z0 * r / R); };
    return e;
}

TorsionSolution torsion(const Domain& domain) {
    TorsionSolution t;
    t.lap_xi_sup = 1.0;
    if (domain.kind == DomainKind::Slab) {
        const double L = domain.size;
        t.xi_at = [L](double x) { return 0.5 * (L * L - x * x); };
        t.xi_sup = 0.5 * L * L;
    } else {
        const double R = domain.size;
        const int n = domain.dim;
        t.xi_at = [R, n](double r) { return (R * R - r * r) / (2.0 * n); };
        t.xi_sup = R * R / (2.0 * n);
    }
    return t;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("simpson: n must be even and >= 2");
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace memsq
