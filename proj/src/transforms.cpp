#include "memsq/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace memsq {

namespace {

constexpr double kOneMinusGuard = 1e-12;  // exp_transform rejects u > 1 - this

long double integrand(long double s, long double ld) {
    return std::exp(ld / (1.0L - s));
}

long double simpson_panel(long double fa, long double fm, long double fb, long double w) {
    return w * (fa + 4.0L * fm + fb) / 6.0L;
}

// adaptive Simpson with interval bisection; integrand is smooth and monotone
long double adaptive(long double a, long double b, long double fa, long double fm,
                     long double fb, long double whole, long double tol, int depth,
                     long double ld) {
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
    const long double flm = integrand(lm, ld), frm = integrand(rm, ld);
    const long double left = simpson_panel(fa, flm, fm, m - a);
    const long double right = simpson_panel(fm, frm, fb, b - m);
    const long double delta = left + right - whole;
    if (depth <= 0 || std::fabs(static_cast<double>(delta)) <= 15.0 * static_cast<double>(tol))
        return left + right + delta / 15.0L;
    return adaptive(a, m, fa, flm, fm, left, 0.5L * tol, depth - 1, ld) +
           adaptive(m, b, fm, frm, fb, right, 0.5L * tol, depth - 1, ld);
}

}  // namespace

TransformContext::TransformContext(const Params& p, double quadrature_tol_, double root_tol_)
    : params(p), quadrature_tol(quadrature_tol_), root_tol(root_tol_) {
    if (!(quadrature_tol > 0.0) || quadrature_tol > 1e-6)
        throw std::invalid_argument("TransformContext: quadrature_tol must be in (0, 1e-6]");
    if (!(root_tol > 0.0) || root_tol > 1e-6)
        throw std::invalid_argument("TransformContext: root_tol must be in (0, 1e-6]");
}

double cubic_of_u(double u, const Params& p) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("cubic_of_u: u must be in [0,1]");
    const double w = 1.0 - u;
    return w * w * w / (3.0 * p.lambda);
}

double u_of_cubic(double zeta, const Params& p) {
    if (!(zeta >= 0.0)) throw std::domain_error("u_of_cubic: zeta must be non-negative");
    const double top = 1.0 / (3.0 * p.lambda);
    if (zeta > top * (1.0 + 1e-14))
        throw std::domain_error("u_of_cubic: zeta exceeds 1/(3 lambda)");
    return 1.0 - std::cbrt(3.0 * p.lambda * zeta);
}

double exp_transform(double u, const TransformContext& ctx) {
    if (!(u >= 0.0)) throw std::domain_error("exp_transform: u must be >= 0");
    if (u > 1.0 - kOneMinusGuard)
        throw std::domain_error("exp_transform: u too close to 1, integral diverges");
    const double ld = ctx.params.lambda * ctx.params.delta;
    if (u == 0.0) return 0.0;
    if (ld == 0.0) return u;  // integrand is identically 1
    const long double a = 0.0L, b = u, ldl = ld;
    const long double fa = integrand(a, ldl), fb = integrand(b, ldl);
    const long double fm = integrand(0.5L * (a + b), ldl);
    const long double whole = simpson_panel(fa, fm, fb, b - a);
    const long double tol = std::max<long double>(
        static_cast<long double>(ctx.quadrature_tol) * std::fabs(static_cast<double>(whole)),
        1e-300L);
    return static_cast<double>(adaptive(a, b, fa, fm, fb, whole, tol, 48, ldl));
}

double u_of_exp(double v, const TransformContext& ctx) {
    if (!(v >= 0.0)) throw std::domain_error("u_of_exp: v must be >= 0");
    if (v == 0.0) return 0.0;
    const double ld = ctx.params.lambda * ctx.params.delta;
    const double u_max = 1.0 - kOneMinusGuard;
    if (ld == 0.0) return std::min(v, u_max);  // transform is the identity on [0,1)

    // bracket: v(u) is strictly increasing with v(u) >= u
    double lo = 0.0, hi = std::min(v, u_max);
    if (exp_transform(hi, ctx) < v) {
        while (exp_transform(hi, ctx) < v) {
            lo = hi;
            hi = 1.0 - 0.5 * (1.0 - hi);
            if (hi >= u_max) return u_max;
        }
    }
    for (int it = 0; it < 80 && hi - lo > 1e-6; ++it) {
        const double mid = 0.5 * (lo + hi);
        (exp_transform(mid, ctx) < v ? lo : hi) = mid;
    }
    // Newton polish; dv/du = exp(ld/(1-u)), safeguarded by the bracket
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 30; ++it) {
        const double fv = exp_transform(u, ctx) - v;
        (fv < 0.0 ? lo : hi) = u;
        const double dv = std::exp(ld / (1.0 - u));
        double next = u - fv / dv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - u) <= ctx.root_tol * std::max(1.0, std::fabs(u))) {
            u = next;
            break;
        }
        u = next;
    }
    return u;
}

double rho(double v, const TransformContext& ctx) {
    const double u = u_of_exp(v, ctx);
    const double ld = ctx.params.lambda * ctx.params.delta;
    const double w = 1.0 - u;
    return static_cast<double>(std::exp(static_cast<long double>(ld) / w) / (w * w));
}

double rho_prime(double v, const TransformContext& ctx) {
    const double u = u_of_exp(v, ctx);
    const double ld = ctx.params.lambda * ctx.params.delta;
    const double w = 1.0 - u;
    return (2.0 + ld / w) / (w * w * w);
}

double rho_second(double v, const TransformContext& ctx) {
    const double u = u_of_exp(v, ctx);
    const double ld = ctx.params.lambda * ctx.params.delta;
    const double w = 1.0 - u;
    return static_cast<double>(2.0L * std::exp(-static_cast<long double>(ld) / w) *
                               (3.0L + 2.0L * ld / w) / (static_cast<long double>(w) * w * w * w));
}

double rho_tail_integral(double v0, const TransformContext& ctx) {
    if (!(v0 > 0.0)) throw std::domain_error("rho_tail_integral: v0 must be positive");
    const double w = 1.0 - u_of_exp(v0, ctx);
    return w * w * w / 3.0;
}

}  // namespace memsq
