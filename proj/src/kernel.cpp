#include "hardy/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hardy {

namespace {

constexpr double kPhiQuadTol = 1e-13;

// prefactor omega_{d-2} * B((d-1)/2, 1/2) of the hypergeometric form; equals
// omega_{d-1}, the value of Phi at t = 0
double hyper_prefactor(const KernelSpec& spec)
{
    return unit_sphere_area(spec.d - 1) * beta(0.5 * (spec.d - 1), 0.5);
}

double phi_d1(const KernelSpec& spec, double t, double tc)
{
    const double e = 1.0 + spec.sp();
    return std::pow(tc, -e) + std::pow(1.0 + t, -e);
}

// omega_{d-2} int_{-1}^{1} (1-r^2)^{(d-3)/2} (1 - 2tr + t^2)^{-(d+sp)/2} dr.
// The quadratic is evaluated as (1-t)^2 + 2t(1-r) for r > 0 (and the mirrored
// form for r < 0), which is exact near the r = +-1 endpoints where the
// integrand peaks for t near 1.
double phi_direct_impl(const KernelSpec& spec, double t, double tc)
{
    const int d = spec.d;
    const double sp = spec.sp();
    const double epow = 0.5 * (d - 3);
    const double kpow = -0.5 * (d + sp);
    auto f = [&](double r, double cl, double cr) {
        const double one_minus_r2 = cl * cr;        // (1+r)(1-r)
        const double quad = (r >= 0.0) ? tc * tc + 2.0 * t * cr
                                       : (1.0 + t) * (1.0 + t) - 2.0 * t * cl;
        return std::pow(one_minus_r2, epow) * std::pow(quad, kpow);
    };
    SingularityHint hint{epow, epow};
    auto q = detail::tanh_sinh(f, -1.0, 1.0, hint, kPhiQuadTol);
    if (!q.converged)
        throw convergence_error("phi direct quadrature did not converge");
    return unit_sphere_area(d - 1) * q.value;   // omega_{d-2}; d >= 2 here
}

double phi_hyper_impl(const KernelSpec& spec, double t, double tc)
{
    const double sp = spec.sp();
    const double a = 0.5 * (spec.d + sp);
    const double b = 0.5 * (2.0 + sp);
    const double c = 0.5 * spec.d;
    const double w = tc * (1.0 + t);   // 1 - t^2 without cancellation
    return hyper_prefactor(spec) * gauss_2f1_complement(a, b, c, w);
}

} // namespace

void KernelSpec::check() const
{
    if (d < 1) throw std::domain_error("kernel: d must be >= 1");
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("kernel: s must be in (0,1)");
    if (!(p >= 1.0)) throw std::domain_error("kernel: p must be >= 1");
}

double phi(const KernelSpec& spec, double t, PhiMethod method)
{
    if (!(t >= 0.0) || t >= 1.0)
        throw std::domain_error("phi requires 0 <= t < 1");
    return phi_with_complement(spec, t, 1.0 - t, method);
}

double phi_with_complement(const KernelSpec& spec, double t, double tc, PhiMethod method)
{
    spec.check();
    if (!(tc > 0.0))
        throw std::domain_error("phi requires 0 <= t < 1");
    if (spec.d == 1)
        return phi_d1(spec, t, tc);
    switch (method) {
        case PhiMethod::Direct: return phi_direct_impl(spec, t, tc);
        case PhiMethod::Hypergeometric: return phi_hyper_impl(spec, t, tc);
        case PhiMethod::Auto:
            return t <= 0.9 ? phi_hyper_impl(spec, t, tc) : phi_direct_impl(spec, t, tc);
    }
    throw std::logic_error("unreachable");
}

double phi_extended(const KernelSpec& spec, double t)
{
    spec.check();
    if (!(t > 0.0))
        throw std::domain_error("phi_extended requires t > 0");
    if (t == 1.0)
        throw std::domain_error("phi_extended: pole at t = 1");
    if (t < 1.0)
        return phi(spec, t);
    return phi(spec, 1.0 / t) / std::pow(t, spec.d + spec.sp());
}

double phi_regular(const KernelSpec& spec, double t, double tc)
{
    spec.check();
    const double sp = spec.sp();
    if (spec.d == 1)
        return 1.0 + std::pow(tc / (1.0 + t), 1.0 + sp);
    // below this threshold Phi itself may overflow; use the exact limit form,
    // whose relative correction is O(1-t^2) < 1e-24
    if (tc < 1e-25)
        return edge_coefficient_analytic(spec) * std::pow((1.0 + t) * 0.5, -1.0 - sp);
    // hypergeometric route: cheap and accurate on all of [0,1)
    return phi_hyper_impl(spec, t, tc) * std::pow(tc, 1.0 + sp);
}

double phi_ext_regular(const KernelSpec& spec, double t, double m)
{
    if (t < 1.0)
        return phi_regular(spec, t, m);
    // Phi(t)*(t-1)^{1+sp} = phi_regular(1/t) * t^{1-d} for t > 1
    const double inv = 1.0 / t;
    return phi_regular(spec, inv, m / t) * std::pow(t, 1.0 - spec.d);
}

double phi_direct_any(const KernelSpec& spec, double t)
{
    spec.check();
    if (!(t >= 0.0) || t == 1.0)
        throw std::domain_error("phi_direct_any requires t >= 0, t != 1");
    if (spec.d == 1) {
        const double e = 1.0 + spec.sp();
        return std::pow(std::fabs(1.0 - t), -e) + std::pow(1.0 + t, -e);
    }
    return phi_direct_impl(spec, t, 1.0 - t);
}

double edge_coefficient(const KernelSpec& spec)
{
    spec.check();
    // g(eps) = Phi(1-eps) * eps^{1+sp} at eps = 2^{-k}, k = 4..15, accelerated
    // by a Richardson tableau in powers of eps
    constexpr int kLevels = 12;
    std::array<double, kLevels> row{};
    double eps = std::pow(2.0, -4);
    for (int k = 0; k < kLevels; ++k) {
        row[k] = phi_regular(spec, 1.0 - eps, eps);
        eps *= 0.5;
    }
    double best = row[kLevels - 1];
    double best_err = std::numeric_limits<double>::infinity();
    std::array<double, kLevels> cur = row;
    for (int j = 1; j < kLevels; ++j) {
        const double f = std::pow(2.0, j);
        for (int i = kLevels - 1; i >= j; --i)
            cur[i] = (f * cur[i] - cur[i - 1]) / (f - 1.0);
        const double err = std::fabs(cur[kLevels - 1] - cur[kLevels - 2]);
        if (err < best_err) {
            best_err = err;
            best = cur[kLevels - 1];
        }
    }
    if (!(best > 0.0) || !(best_err < 1e-4 * best))
        throw convergence_error("edge_coefficient extrapolation did not converge");
    return best;
}

double edge_coefficient_analytic(const KernelSpec& spec)
{
    spec.check();
    const double sp = spec.sp();
    if (spec.d == 1)
        return 1.0;
    const double a = 0.5 * (spec.d + sp);
    const double b = 0.5 * (2.0 + sp);
    const double c = 0.5 * spec.d;
    // Phi ~ pref * G(c)G(a+b-c)/(G(a)G(b)) * (1-t^2)^{-1-sp}
    const double lg = ln_gamma(c) + ln_gamma(a + b - c) - ln_gamma(a) - ln_gamma(b);
    return hyper_prefactor(spec) * std::exp(lg) * std::pow(2.0, -1.0 - sp);
}

} // namespace hardy
