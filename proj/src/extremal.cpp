#include "hardy/extremal.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

ExtremalFamily make_un(const HardyParams& params, int n)
{
    const auto rep = validate(params);
    if (!rep.valid)
        throw std::invalid_argument("make_un: invalid parameters");
    const double dlt = params.delta();
    if (!(dlt > 0.0))
        throw std::invalid_argument(
            "make_un requires delta > 0; apply dual_params to the parameter set first");
    if (n < 2)
        throw std::domain_error("make_un requires n >= 2");

    const double nd = std::pow(double(n), dlt);
    const double nmd = 1.0 / nd;
    const double inv_n = 1.0 / double(n);

    ExtremalFamily fam;
    fam.delta = dlt;
    fam.n = n;
    fam.profile.evaluate = [dlt, n, nd, nmd, inv_n](double r) -> double {
        if (r <= inv_n) return nd - nmd;
        if (r <= double(n)) return std::pow(r, -dlt) - nmd;
        return 0.0;
    };
    fam.profile.support_radius = double(n);
    fam.profile.lipschitz_bound = dlt * std::pow(double(n), dlt + 1.0);
    fam.profile.vanishes_near_zero = false;
    fam.profile.breakpoints = {inv_n, double(n)};
    return fam;
}

double rhs_norm_closed_form(const HardyParams& params, int n)
{
    const auto rep = validate(params);
    if (!rep.valid)
        throw std::invalid_argument("rhs_norm_closed_form: invalid parameters");
    const double dlt = params.delta();
    if (!(dlt > 0.0))
        throw std::invalid_argument("rhs_norm_closed_form requires delta > 0");
    if (n < 2)
        throw std::domain_error("rhs_norm_closed_form requires n >= 2");

    const double q = params.q;
    const double area =
        params.domain == Domain::WholeSpace ? unit_sphere_area(params.d) : 1.0;
    const double head = (1.0 / (q * dlt)) * std::pow(1.0 - std::pow(double(n), -2.0 * dlt), q);

    const double lo = 1.0 / (double(n) * double(n));
    double tail;
    const int qi = static_cast<int>(std::lround(q));
    if (std::fabs(q - qi) < 1e-12 && qi >= 1 && qi <= 4) {
        // binomial expansion of (1 - t^d)^q / t: log term plus powers
        tail = -std::log(lo);   // j = 0 term, equals 2 ln n
        double binom = 1.0;
        for (int j = 1; j <= qi; ++j) {
            binom *= double(qi - j + 1) / double(j);
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            tail += sign * binom * (1.0 - std::pow(lo, j * dlt)) / (j * dlt);
        }
    } else {
        auto f = [&](double t, double, double) {
            return std::pow(1.0 - std::pow(t, dlt), q) / t;
        };
        auto r = detail::tanh_sinh_log(f, lo, 1.0, SingularityHint{0.0, q}, 1e-12);
        if (!r.converged)
            throw convergence_error("rhs_norm_closed_form tail quadrature failed");
        tail = r.value;
    }
    return area * (head + tail);
}

RatioSeries ratio_sequence(const HardyParams& params, const std::vector<int>& n_list,
                           double tol)
{
    const auto rep = validate(params);
    if (!rep.valid)
        throw std::invalid_argument("ratio_sequence: invalid parameters");
    if (n_list.size() < 3)
        throw std::invalid_argument("ratio_sequence needs at least 3 values of n to fit");

    HardyParams work = params;
    if (params.delta() < 0.0)
        work = dual_params(params);   // same constant and the same ratio limit

    RatioSeries out;
    out.constant = sharp_constant(work, 1e-10).value;

    std::vector<int> ns = n_list;
    std::sort(ns.begin(), ns.end());
    for (int n : ns) {
        auto fam = make_un(work, n);
        auto lhs = tl_seminorm(fam.profile, work, tol);
        auto rhs = lq_weighted_norm(fam.profile, work, std::min(tol, 1e-10));
        RatioEntry e;
        e.n = n;
        e.ratio = lhs.value / rhs.value;
        e.margin = e.ratio - out.constant;
        out.entries.push_back(e);
    }

    // least squares for ratio ~ c0 + c1/ln n
    double s11 = 0, s1x = 0, sxx = 0, s1y = 0, sxy = 0;
    for (const auto& e : out.entries) {
        const double x = 1.0 / std::log(double(e.n));
        s11 += 1.0;
        s1x += x;
        sxx += x * x;
        s1y += e.ratio;
        sxy += x * e.ratio;
    }
    const double det = s11 * sxx - s1x * s1x;
    out.c0 = (sxx * s1y - s1x * sxy) / det;
    out.c1 = (s11 * sxy - s1x * s1y) / det;
    out.limit_estimate = out.c0;
    return out;
}

} // namespace hardy
