// The two changes of variable the solver lives on: the exponential transform
// v = int_0^u exp(lambda delta/(1-s)) ds and the cubic transform
// zeta = (1-u)^3/(3 lambda), plus the reaction density rho and its
// derivatives in the v variable.
#pragma once

#include "memsq/core.hpp"

namespace memsq {

struct TransformContext {
    Params params;
    double quadrature_tol = 1e-12;
    double root_tol = 1e-12;

    explicit TransformContext(const Params& p,
                              double quadrature_tol_ = 1e-12,
                              double root_tol_ = 1e-12);
};

// zeta = (1-u)^3/(3 lambda); strictly decreasing, maps u=1 to zeta=0
double cubic_of_u(double u, const Params& p);
// exact inverse, u = 1 - (3 lambda zeta)^{1/3}; rejects zeta > 1/(3 lambda)
double u_of_cubic(double zeta, const Params& p);

// v(u) by adaptive Simpson; rejects u > 1 - 1e-12 (exponent overflows)
double exp_transform(double u, const TransformContext& ctx);
// unique u in [0,1) with exp_transform(u) = v (bisection + Newton polish)
double u_of_exp(double v, const TransformContext& ctx);

// rho(v) = e^{ld/(1-u)}/(1-u)^2 with u = u_of_exp(v), and its v-derivatives
double rho(double v, const TransformContext& ctx);
double rho_prime(double v, const TransformContext& ctx);
double rho_second(double v, const TransformContext& ctx);

// closed form of int_{v0}^inf ds/rho(s) = (1/3)(1 - u_of_exp(v0))^3
double rho_tail_integral(double v0, const TransformContext& ctx);

}  // namespace memsq
