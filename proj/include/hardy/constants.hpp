#pragma once
/** \file constants.hpp
    Parameter validation and the sharp constants of the weighted fractional
    Hardy inequalities: the whole-space constant (kernel Phi) and the
    half-space constant (kernel (1-t)^{-1-sp} with a Gamma-function
    prefactor), plus the inversion duality map on the weight exponents and an
    independently coded p=q evaluation used as an oracle.
*/
#include "hardy/kernel.hpp"
#include "hardy/numerics.hpp"

#include <string>
#include <vector>

namespace hardy {

enum class Domain { WholeSpace, HalfSpace };

struct HardyParams {
    int d = 1;
    double s = 0.5;
    double p = 2.0;
    double q = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    Domain domain = Domain::WholeSpace;

    int d_eff() const { return domain == Domain::WholeSpace ? d : 1; }
    double sp() const { return s * p; }
    /// delta = (d_eff + alpha + q*beta/p - s*q)/q; its sign selects the
    /// admissible support class, delta = 0 is excluded.
    double delta() const { return (d_eff() + alpha + q * beta / p - s * q) / q; }
    double gamma() const { return q * delta(); }
    KernelSpec kernel() const { return KernelSpec{d, s, p}; }
};

enum class SupportClass { FullSpace, PuncturedAtOrigin, ClosedHalfSpace, OpenHalfSpace };

struct ConstraintViolation {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ValidationReport {
    bool valid = false;
    std::vector<ConstraintViolation> violations;
    std::vector<std::string> warnings;   // "sharpness_unproven" when p < q
    double delta = 0.0;
    SupportClass support_class = SupportClass::FullSpace;
};

/// Total function: checks every assumption with d_eff, reports delta and the
/// support class, never throws.
ValidationReport validate(const HardyParams& params);

const char* to_string(SupportClass c);
const char* to_string(Domain d);

/// Sharp constant of the Hardy inequality for valid parameters.
/// Whole space: ( int_0^1 t^{sp-1}(t^{-(p/q-1)d - p a/q} + t^{-b})
///                |1-t^delta|^p Phi_{d,s,p}(t) dt )^{q/p}.
/// Half space:  ( Pref(d,s,p) * int_0^1 t^{sp-1}(t^{-b} + t^{-p a/q - p/q + 1})
///                |1-t^delta|^p (1-t)^{-1-sp} dt )^{q/p}, delta with d_eff = 1.
QuadResult sharp_constant(const HardyParams& params, double tol = kDefaultQuadTol);

/// Pref(d,s,p) = pi^{(d-1)/2} Gamma((1+sp)/2) / Gamma((d+sp)/2); equals 1 at d=1.
double halfspace_prefactor(int d, double s, double p);

/// Inversion x -> x/|x|^2 on the whole space transports the weights to
/// alpha' = qd/p + sq - 2d - alpha, beta' = sp - d - beta and negates delta;
/// the sharp constant is invariant. Involution; whole space only.
HardyParams dual_params(const HardyParams& params);

/// Independently coded p=q constant (adaptive Gauss-Kronrod bisection rather
/// than the transformed rule); oracle for sharp_constant at p=q.
QuadResult pq_equal_constant(const HardyParams& params, double tol = kDefaultQuadTol);

} // namespace hardy
