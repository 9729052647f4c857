#pragma once
/** \file kernel.hpp
    The angular kernel Phi_{d,s,p}(t): the integral of |w - t*sigma|^{-d-sp}
    over the unit sphere. Evaluated by two independent routes (singular
    quadrature and a Gauss hypergeometric representation), extended past t=1
    by the symmetry Phi(1/t) = t^{d+sp} Phi(t), and exposed in an
    edge-regularized form Phi(t)*(1-t)^{1+sp} that stays finite at t=1.
*/
#include "hardy/numerics.hpp"

namespace hardy {

struct KernelSpec {
    int d = 1;
    double s = 0.5;
    double p = 2.0;

    double sp() const { return s * p; }
    void check() const;   // throws std::domain_error unless d>=1, 0<s<1, p>=1
};

enum class PhiMethod { Direct, Hypergeometric, Auto };

/// Phi_{d,s,p}(t) for 0 <= t < 1. Auto uses the hypergeometric route for
/// t <= 0.9 and the direct integral closer to 1; d=1 is closed-form.
double phi(const KernelSpec& spec, double t, PhiMethod method = PhiMethod::Auto);

/// Same, with the complement 1-t supplied exactly (needed when t is within
/// roundoff of 1).
double phi_with_complement(const KernelSpec& spec, double t, double one_minus_t,
                           PhiMethod method = PhiMethod::Auto);

/// Phi extended to all t > 0, t != 1, via Phi(t) = phi(1/t) / t^{d+sp}.
double phi_extended(const KernelSpec& spec, double t);

/// Edge-regularized kernel Phi(t) * (1-t)^{1+sp} on [0,1); finite up to t=1.
double phi_regular(const KernelSpec& spec, double t, double one_minus_t);

/// |1-t|^{1+sp}-regularized extension of phi_extended to (0,1) u (1,inf);
/// abs_one_minus_t is |1-t| computed without cancellation by the caller.
double phi_ext_regular(const KernelSpec& spec, double t, double abs_one_minus_t);

/// Direct singular-quadrature route without the t<1 restriction (t != 1);
/// used to validate the inversion symmetry against an independent value.
double phi_direct_any(const KernelSpec& spec, double t);

/// lim_{t->1^-} Phi(t) * (1-t)^{1+sp}, estimated by Richardson extrapolation
/// on t = 1 - 2^{-k}.
double edge_coefficient(const KernelSpec& spec);

/// The same limit from the Gamma-function form of the connection formula;
/// serves as the analytic cross-check for edge_coefficient.
double edge_coefficient_analytic(const KernelSpec& spec);

} // namespace hardy
