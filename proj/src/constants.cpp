#include "hardy/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hardy {

namespace {

// log|1 - e^y|, stable for y of any magnitude and sign (y != 0)
double log_abs_one_minus_exp(double y)
{
    if (y > 0.0)
        return y + std::log(-std::expm1(-y));
    return std::log(-std::expm1(y));
}

struct ConstantIntegrand {
    // integrand t^{sp-1} (t^{e1} + t^{e2}) |1 - t^delta|^p K(t) on (0,1),
    // where K is Phi (whole space) or (1-t)^{-1-sp} (half space)
    double sp, p, delta, w1, w2;
    bool whole;
    KernelSpec ks;

    double kernel_regular(double t, double tc) const
    {
        return whole ? phi_regular(ks, t, tc) : 1.0;
    }

    double operator()(double t, double cl, double cr) const
    {
        const double e1 = sp - 1.0 + w1;
        const double e2 = sp - 1.0 + w2;
        (void)cl;
        if (t < 1e-3) {
            const double lt = std::log(t);
            const double lnB = p * log_abs_one_minus_exp(delta * lt);
            const double weights =
                std::exp(e1 * lt + lnB) + std::exp(e2 * lt + lnB);
            const double tc = 1.0 - t;
            return weights * kernel_regular(t, tc) * std::pow(tc, -1.0 - sp);
        }
        // |1-t^delta|/(1-t) stays O(|delta|) as t -> 1
        const double dq = std::fabs(std::expm1(delta * std::log1p(-cr))) / cr;
        const double weights = std::pow(t, e1) + std::pow(t, e2);
        return weights * std::pow(dq, p) * std::pow(cr, p - 1.0 - sp) *
               kernel_regular(t, cr);
    }
};

void require_valid(const HardyParams& params, const char* who)
{
    auto rep = validate(params);
    if (!rep.valid) {
        std::string msg = std::string(who) + ": invalid parameters";
        for (const auto& v : rep.violations) msg += "; violated: " + v.label;
        throw std::invalid_argument(msg);
    }
}

// ---- adaptive Gauss-Kronrod (G7,K15) bisection, the independent route ----

struct Gk15 {
    double value = 0.0;
    double error = 0.0;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b)
{
    // nodes (abscissa, Gauss weight, Kronrod weight)
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0,               0.204432940075298},
        {0.586087235467691, 0.0,               0.169004726639267},
        {0.864864423359769, 0.0,               0.104790010322250},
        {0.991455371120813, 0.0,               0.022935322010529},
    };
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double g = nw[0][1] * f(mid);
    double k = nw[0][2] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nw[i][0];
        const double y = f(mid + dx) + f(mid - dx);
        g += nw[i][1] * y;
        k += nw[i][2] * y;
    }
    g *= half;
    k *= half;
    const double diff = std::fabs(g - k);
    return {k, 200.0 * diff * std::sqrt(200.0 * diff)};
}

QuadResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                       double tol)
{
    struct Seg { double a, b, value, error; };
    std::vector<Seg> segs;
    auto push = [&](double x, double y) {
        auto r = gk15(f, x, y);
        segs.push_back({x, y, r.value, r.error});
    };
    push(a, b);
    int evals = 15;
    const int max_segs = 8192;
    while (static_cast<int>(segs.size()) < max_segs) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        if (err <= std::max(tol, detail::kRelFloor * std::fabs(total)))
            return {total, err, evals, true};
        Seg s = segs[worst];
        segs.erase(segs.begin() + static_cast<long>(worst));
        const double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) {   // interval at rounding resolution
            segs.push_back(s);
            segs.back().error = 0.0;
            continue;
        }
        push(s.a, m);
        push(m, s.b);
        evals += 30;
    }
    double total = 0.0, err = 0.0;
    for (const auto& s : segs) { total += s.value; err += s.error; }
    return {total, err, evals, false};
}

} // namespace

const char* to_string(SupportClass c)
{
    switch (c) {
        case SupportClass::FullSpace: return "full_space";
        case SupportClass::PuncturedAtOrigin: return "punctured_at_origin";
        case SupportClass::ClosedHalfSpace: return "closed_half_space";
        case SupportClass::OpenHalfSpace: return "open_half_space";
    }
    return "?";
}

const char* to_string(Domain d)
{
    return d == Domain::WholeSpace ? "whole" : "half";
}

ValidationReport validate(const HardyParams& params)
{
    ValidationReport rep;
    auto fail = [&](std::string label, double lhs, double rhs) {
        rep.violations.push_back({std::move(label), lhs, rhs});
    };
    if (params.d < 1) fail("d >= 1", params.d, 1.0);
    if (!(params.s > 0.0 && params.s < 1.0)) fail("0 < s < 1", params.s, 0.0);
    if (!(params.p >= 1.0)) fail("p >= 1", params.p, 1.0);
    if (!(params.q >= 1.0)) fail("q >= 1", params.q, 1.0);
    if (!rep.violations.empty()) {
        rep.delta = 0.0;
        return rep;
    }

    const double de = params.d_eff();
    const double sq = params.s * params.q;
    const double sp = params.sp();
    const double mix = params.alpha + params.q * params.beta / params.p;
    const double a_upper = sq - (1.0 - params.q / params.p) * de;
    if (!(params.alpha < a_upper)) fail("alpha < sq-(1-q/p)d", params.alpha, a_upper);
    if (!(params.beta < sp)) fail("beta < sp", params.beta, sp);
    if (!(params.alpha > -de)) fail("alpha > -d", params.alpha, -de);
    if (!(params.beta > -de)) fail("beta > -d", params.beta, -de);
    if (!(mix > -de)) fail("alpha+q*beta/p > -d", mix, -de);

    rep.delta = params.delta();
    if (std::fabs(rep.delta) < 1e-12) fail("delta_zero", rep.delta, 0.0);

    if (params.domain == Domain::WholeSpace)
        rep.support_class = rep.delta < 0.0 ? SupportClass::PuncturedAtOrigin
                                            : SupportClass::FullSpace;
    else
        rep.support_class = rep.delta < 0.0 ? SupportClass::OpenHalfSpace
                                            : SupportClass::ClosedHalfSpace;

    if (params.p < params.q) rep.warnings.push_back("sharpness_unproven");
    rep.valid = rep.violations.empty();
    return rep;
}

QuadResult sharp_constant(const HardyParams& params, double tol)
{
    require_valid(params, "sharp_constant");
    const double sp = params.sp();
    const double p = params.p, q = params.q;
    const bool whole = params.domain == Domain::WholeSpace;

    ConstantIntegrand f;
    f.sp = sp;
    f.p = p;
    f.delta = params.delta();
    f.whole = whole;
    f.ks = params.kernel();
    if (whole) {
        f.w1 = -(p / q - 1.0) * params.d - p * params.alpha / q;
        f.w2 = -params.beta;
    } else {
        f.w1 = -params.beta;
        f.w2 = -p * params.alpha / q - p / q + 1.0;
    }

    SingularityHint hint;
    hint.left_exponent = sp - 1.0 + std::min(f.w1, f.w2) + std::min(p * f.delta, 0.0);
    hint.right_exponent = p - 1.0 - sp;

    auto inner = detail::tanh_sinh(f, 0.0, 1.0, hint, tol);

    const double pref = whole ? 1.0 : halfspace_prefactor(params.d, params.s, params.p);
    const double base = pref * inner.value;
    QuadResult out;
    out.value = std::pow(base, q / p);
    out.nodes_used = inner.nodes_used;
    out.converged = inner.converged;
    out.abs_error_estimate =
        base > 0.0 ? (q / p) * out.value / base * pref * inner.abs_error_estimate
                   : inner.abs_error_estimate;
    return out;
}

double halfspace_prefactor(int d, double s, double p)
{
    KernelSpec{d, s, p}.check();
    if (d == 1) return 1.0;
    const double sp = s * p;
    return std::exp(0.5 * (d - 1) * std::log(3.14159265358979323846) +
                    ln_gamma(0.5 * (1.0 + sp)) - ln_gamma(0.5 * (d + sp)));
}

HardyParams dual_params(const HardyParams& params)
{
    if (params.domain != Domain::WholeSpace)
        throw std::invalid_argument("dual_params: inversion duality applies to the whole space only");
    HardyParams out = params;
    out.alpha = params.q * params.d / params.p + params.s * params.q - 2.0 * params.d - params.alpha;
    out.beta = params.sp() - params.d - params.beta;
    return out;
}

QuadResult pq_equal_constant(const HardyParams& params, double tol)
{
    if (params.p != params.q)
        throw std::invalid_argument("pq_equal_constant requires p == q");
    require_valid(params, "pq_equal_constant");

    const double sp = params.sp();
    const double p = params.p;
    const double a = params.alpha, b = params.beta;
    const bool whole = params.domain == Domain::WholeSpace;
    const double dlt = (params.d_eff() + a + b - sp) / p;
    const KernelSpec ks = params.kernel();

    auto f = [&](double t) -> double {
        const double kern = whole ? phi(ks, t, PhiMethod::Hypergeometric)
                                  : std::pow(1.0 - t, -1.0 - sp);
        return std::pow(t, sp - 1.0) * (std::pow(t, -a) + std::pow(t, -b)) *
               std::pow(std::fabs(1.0 - std::pow(t, dlt)), p) * kern;
    };
    auto inner = adaptive_gk(f, 0.0, 1.0, tol);
    const double pref = whole ? 1.0 : halfspace_prefactor(params.d, params.s, params.p);
    QuadResult out;
    out.value = pref * inner.value;   // q/p = 1
    out.abs_error_estimate = pref * inner.abs_error_estimate;
    out.nodes_used = inner.nodes_used;
    out.converged = inner.converged;
    return out;
}

} // namespace hardy
