// Domain geometry, grids, eigenpairs, torsion function and Bessel evaluation
// shared by every other module.
#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace memsq {

struct Params {
    double lambda;  // applied voltage, dimensionless, > 0
    double delta;   // fringing coefficient, dimensionless, >= 0

    Params(double lambda_, double delta_);
};

enum class DomainKind { Slab, RadialDisk };

struct Domain {
    DomainKind kind;
    double size;  // slab half-width or disk radius
    int dim;      // slab forces 1; disk >= 2

    static Domain slab(double half_width = 0.5);
    static Domain disk(double radius = 1.0, int dim = 2);

    // length of the 1D coordinate range the grids discretize:
    // slab covers [-size, size], disk covers [0, size]
    double extent() const { return kind == DomainKind::Slab ? 2.0 * size : size; }
    // radius of the radial ODE integration range ([0, size] either way;
    // the slab is folded onto [0, half_width] by symmetry)
    double shoot_radius() const { return size; }
    const char* name() const { return kind == DomainKind::Slab ? "slab" : "disk"; }
};

struct Grid {
    Domain domain;
    int n_interior;             // N >= 4
    double h;                   // extent / (N+1)
    std::vector<double> nodes;  // N+2 coordinates including both endpoints
};

Grid build_grid(const Domain& domain, int n_interior);

// Nodal values of zeta (or u) at one time level.
struct Field {
    std::shared_ptr<const Grid> grid;
    std::vector<double> values;
    double time = 0.0;
};

// Principal Dirichlet eigenpair, eigenfunction normalized to unit integral.
struct EigenPair {
    double mu0;
    std::function<double(double)> phi0_at;
};

EigenPair eigenpair(const Domain& domain);

// xi solves -Lap(xi) = 1 with zero boundary data (closed form on both domains).
struct TorsionSolution {
    std::function<double(double)> xi_at;
    double xi_sup;
    double lap_xi_sup;  // = 1 here
};

TorsionSolution torsion(const Domain& domain);

// J0/J1 for |x| <= 50, absolute error <= 1e-10.
// Power series for |x| <= 12, Hankel asymptotic expansion beyond.
double bessel_j(int order, double x);

// First positive zero of J0, located by bisection on [2, 3] to 1e-13.
double bessel_j0_first_zero();

// Composite Simpson on n (even) panels; used for normalization checks.
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace memsq
