#pragma once
/** \file numerics.hpp
    Special functions (log-gamma, beta, Gauss 2F1) and double-exponential
    quadrature for integrands with algebraic endpoint singularities.
    All routines are pure functions and safe for concurrent use.
*/
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hardy {

/// Result of a quadrature call. `converged` means the error estimate met the
/// effective tolerance max(tol, 1e-12*|value|); the best value is always returned.
struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = std::numeric_limits<double>::infinity();
    int nodes_used = 0;
    bool converged = false;
};

/// Declared endpoint behavior of an integrand on (a,b):
/// f ~ (t-a)^left_exponent near a and ~ (b-t)^right_exponent near b.
/// Both exponents must be > -1 (integrability).
struct SingularityHint {
    double left_exponent = 0.0;
    double right_exponent = 0.0;
};

class convergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class evaluation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kMaxQuadLevel = 10;   // per-level node count stays below 2^14

double ln_gamma(double x);                 // x > 0
double digamma(double x);                  // x > 0
double beta(double a, double b);           // a, b > 0
double unit_sphere_area(int d);            // |S^{d-1}|, d >= 1

/// Gauss hypergeometric function for 0 <= z < 1, c > 0. Near z = 1 a linear
/// transformation in w = 1-z is applied; the degenerate case c-a-b = -m
/// (m a positive integer) is handled by the logarithmic expansion.
double gauss_2f1(double a, double b, double c, double z);

/// Same function, but takes w = 1-z exactly; use when z is close to 1 and the
/// complement is known without cancellation.
double gauss_2f1_complement(double a, double b, double c, double w);

QuadResult integrate_01(const std::function<double(double)>& f,
                        SingularityHint hint, double tol = kDefaultQuadTol);

/// Integral over (0,inf): split at 1, the upper part mapped by t -> 1/t.
QuadResult integrate_0inf(const std::function<double(double)>& f,
                          double tol = kDefaultQuadTol);

namespace detail {

// Callbacks for the core rule receive (x, cl, cr) with cl = x-a and cr = b-x
// computed without cancellation, so integrands can resolve singular factors
// like (b-x)^e far below 1 ulp of x.
//
// In complement-blind mode (the std::function entry points, whose integrands
// see only x) nodes whose x rounds onto an endpoint are filled with the model
// c * dist^e from the declared hint exponent, the constant estimated at the
// innermost resolvable node. This keeps the trapezoid structure intact for
// endpoint singularities the rounded coordinate cannot express.

inline constexpr double kRelFloor = 1e-12;

struct TsAccum {
    double sum = 0.0;                 // weighted sum over resolved nodes
    double excl_left = 0.0;           // sum of w * dist^{e_left} over model nodes
    double excl_right = 0.0;
    int evals = 0;
    double min_cl = std::numeric_limits<double>::infinity();
    double min_cr = std::numeric_limits<double>::infinity();
    double f_at_min_cl = 0.0;         // |f| at the innermost resolved nodes
    double f_at_min_cr = 0.0;
    double min_cl_all = std::numeric_limits<double>::infinity();
    double min_cr_all = std::numeric_limits<double>::infinity();
};

template <class F>
void ts_add_node(F& f, double a, double span, double sig, double sigc,
                 double weight, const SingularityHint& hint, bool blind,
                 TsAccum& acc)
{
    const double cl = span * sig;
    const double cr = span * sigc;
    const double b_end = a + span;
    const double x = (sig <= 0.5) ? a + cl : b_end - cr;
    if (blind) {
        // the integrand sees only the rounded x; once a complement drops
        // toward 1 ulp of the endpoint the value it computes no longer
        // matches the node, so model such nodes by the declared power.
        // An endpoint at 0 never loses the complement to rounding.
        if (sig <= 0.5 && (x == a || cl < 1e-10 * std::fabs(a))) {
            acc.excl_left += weight * std::pow(cl, hint.left_exponent);
            acc.min_cl_all = std::min(acc.min_cl_all, cl);
            return;
        }
        if (sig > 0.5 && (x == b_end || cr < 1e-10 * std::fabs(b_end))) {
            acc.excl_right += weight * std::pow(cr, hint.right_exponent);
            acc.min_cr_all = std::min(acc.min_cr_all, cr);
            return;
        }
    }
    double v = f(x, cl, cr);
    ++acc.evals;
    if (!std::isfinite(v)) {
        if (std::isnan(v))
            throw evaluation_error("integrand returned NaN");
        // infinite value at a node essentially on an endpoint: the weight is
        // below any representable contribution, drop it
        if (sig < 1e-250 || sigc < 1e-250) {
            v = 0.0;
        } else {
            throw evaluation_error("integrand not finite at interior node");
        }
    }
    acc.sum += weight * v;
    // reference nodes for the power-model constants; in blind mode keep a
    // margin above the model cutoff so the rounded x still resolves the
    // complement to ~1e-8 relative
    const double ref_floor_l = blind ? 1e-8 * std::fabs(a) : 0.0;
    const double ref_floor_r = blind ? 1e-8 * std::fabs(b_end) : 0.0;
    if (cl < acc.min_cl && cl >= ref_floor_l) {
        acc.min_cl = cl;
        acc.f_at_min_cl = std::fabs(v);
    }
    if (cr < acc.min_cr && cr >= ref_floor_r) {
        acc.min_cr = cr;
        acc.f_at_min_cr = std::fabs(v);
    }
    acc.min_cl_all = std::min(acc.min_cl_all, cl);
    acc.min_cr_all = std::min(acc.min_cr_all, cr);
}

// One level of the tanh-sinh rule on (a, a+span) with step h. At level 0 all
// multiples of h are used, afterwards the odd ones only.
template <class F>
void ts_level(F& f, double a, double span, double h, bool odd_only,
              const SingularityHint& hint, bool blind, TsAccum& acc)
{
    const double pi = 3.14159265358979323846;
    const int k0 = odd_only ? 1 : 0;
    const int step = odd_only ? 2 : 1;
    for (int k = k0;; k += step) {
        const double u = k * h;
        const double x = pi * std::sinh(u);
        if (x > 700.0) break;                    // sigma_c would underflow
        const double em = std::exp(-x);
        const double sig = 1.0 / (1.0 + em);     // in [1/2, 1)
        const double sigc = em / (1.0 + em);     // 1 - sig, exact to rounding
        const double w = pi * std::cosh(u) * sig * sigc;
        ts_add_node(f, a, span, sig, sigc, w, hint, blind, acc);
        if (k > 0)
            ts_add_node(f, a, span, sigc, sig, w, hint, blind, acc);
    }
}

/// Double-exponential rule on the finite interval (a,b). F: (x, cl, cr) -> double.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, SingularityHint hint,
                     double tol = kDefaultQuadTol, int max_level = kMaxQuadLevel,
                     bool blind = false)
{
    if (!(hint.left_exponent > -1.0) || !(hint.right_exponent > -1.0))
        throw std::domain_error("singularity hint exponents must be > -1");
    if (!(b > a))
        throw std::domain_error("empty integration interval");

    const double span = b - a;
    const double eL = hint.left_exponent, eR = hint.right_exponent;
    TsAccum acc;

    double model_part = 0.0;
    auto assemble = [&](double h) {
        // model coefficients c = |f| * dist^{-e} at the innermost resolved node
        double cL = 0.0, cR = 0.0;
        if (std::isfinite(acc.min_cl) && acc.f_at_min_cl > 0.0)
            cL = acc.f_at_min_cl * std::pow(acc.min_cl, -eL);
        if (std::isfinite(acc.min_cr) && acc.f_at_min_cr > 0.0)
            cR = acc.f_at_min_cr * std::pow(acc.min_cr, -eR);
        model_part = (cL * acc.excl_left + cR * acc.excl_right) * h * span;
        return acc.sum * h * span + model_part;
    };
    auto tail_estimate = [&]() {
        // mass of the declared power behavior below the innermost node
        double t = 0.0;
        if (std::isfinite(acc.min_cl) && acc.f_at_min_cl > 0.0)
            t += acc.f_at_min_cl * std::pow(acc.min_cl, -eL) *
                 std::pow(acc.min_cl_all, 1.0 + eL) / (1.0 + eL);
        if (std::isfinite(acc.min_cr) && acc.f_at_min_cr > 0.0)
            t += acc.f_at_min_cr * std::pow(acc.min_cr, -eR) *
                 std::pow(acc.min_cr_all, 1.0 + eR) / (1.0 + eR);
        return t;
    };

    double h = 1.0;
    ts_level(f, a, span, h, false, hint, blind, acc);
    double prev = assemble(h);
    QuadResult res;
    res.value = prev;
    res.nodes_used = acc.evals;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        ts_level(f, a, span, h, true, hint, blind, acc);
        const double cur = assemble(h);
        const double diff = std::fabs(cur - prev);
        res.value = cur;
        res.nodes_used = acc.evals;
        res.abs_error_estimate =
            diff + tail_estimate() + 2e-8 * std::fabs(model_part);
        if (level >= 2 &&
            res.abs_error_estimate <= std::max(tol, kRelFloor * std::fabs(cur))) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

/// Same rule after the substitution x = e^v; for panels spanning many decades
/// (requires a > 0). Endpoint singularities keep their exponents under the map.
template <class F>
QuadResult tanh_sinh_log(F&& f, double a, double b, SingularityHint hint,
                         double tol = kDefaultQuadTol, int max_level = kMaxQuadLevel)
{
    const double la = std::log(a), lb = std::log(b);
    auto g = [&](double v, double cl, double cr) {
        const double x = std::exp(v);
        // complements in x-space, safe against rounding at either end
        const double dl = a * std::expm1(cl);
        const double dr = b * (-std::expm1(-cr));
        return f(x, dl, dr) * x;
    };
    return tanh_sinh(g, la, lb, hint, tol, max_level);
}

/// Map (a, inf) onto (0, 1/a... ) via x = a/u, u in (0,1); a > 0.
template <class F>
QuadResult tanh_sinh_upper(F&& f, double a, double tol = kDefaultQuadTol,
                           int max_level = kMaxQuadLevel)
{
    auto g = [&](double u, double, double) {
        const double x = a / u;
        return f(x) * x / u;            // dx = -a/u^2 du = -(x/u) du
    };
    return tanh_sinh(g, 0.0, 1.0, SingularityHint{}, tol, max_level);
}

inline QuadResult merge(const QuadResult& x, const QuadResult& y)
{
    QuadResult r;
    r.value = x.value + y.value;
    r.abs_error_estimate = x.abs_error_estimate + y.abs_error_estimate;
    r.nodes_used = x.nodes_used + y.nodes_used;
    r.converged = x.converged && y.converged;
    return r;
}

} // namespace detail
} // namespace hardy
