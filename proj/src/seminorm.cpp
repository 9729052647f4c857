#include "hardy/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace hardy {

namespace {

constexpr int kInnerMaxLevel = 8;
constexpr int kOuterMaxLevel = 8;

std::vector<double> sorted_unique(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (!(x > 0.0) || !std::isfinite(x)) continue;
        if (out.empty() || x - out.back() > 1e-12 * std::max(1.0, x))
            out.push_back(x);
    }
    return out;
}

// inner kernel weight K(t) = t^{at} * R(t,|1-t|) * |1-t|^{-1-sp}; R is the
// edge-regularized angular kernel for the whole space and 1 on the half line
struct SeminormEval {
    const RadialProfile* u = nullptr;
    bool whole = true;
    double sp = 0, p = 2, q = 2, at = 0, gam = 0;
    KernelSpec ks;
    double support = 1;

    mutable double inner_rel_err = 0.0;
    mutable int inner_failures = 0;
    mutable long inner_nodes = 0;

    double kreg(double t, double m) const
    {
        return whole ? phi_ext_regular(ks, t, m) : 1.0;
    }

    double inner_piece(double r, double ur, double t, double m) const
    {
        const double du = std::fabs(ur - u->evaluate(r * t));
        if (du == 0.0) return 0.0;
        if (m > 0.3)
            return std::pow(du, p) * std::pow(t, at) * kreg(t, m) *
                   std::pow(m, -1.0 - sp);
        const double dq = du / m;
        return std::pow(dq, p) * std::pow(m, p - 1.0 - sp) * std::pow(t, at) *
               kreg(t, m);
    }

    // int_0^inf |u(r) - u(rt)|^p t^{at} Kernel(t) dt with panels at the
    // profile kinks and at the t = 1 pole
    double inner(double r) const
    {
        const double ur = u->evaluate(r);
        std::vector<double> bk;
        bk.push_back(1.0);
        bk.push_back(support / r);
        for (double b : u->breakpoints) bk.push_back(b / r);
        bk = sorted_unique(bk);
        const double tmax = std::max(1.0, support / r);

        const double inner_tol = 1e-12 * (1.0 + std::pow(std::fabs(ur), p));
        QuadResult total;
        total.converged = true;
        double lo = 0.0;
        for (double hi : bk) {
            if (hi > tmax + 1e-12) break;
            if (ur == 0.0 && lo >= support / r) { lo = hi; continue; }  // u(r)=u(rt)=0
            auto f = [&](double t, double cl, double cr) {
                const double m = (hi == 1.0) ? cr : (lo == 1.0 ? cl : std::fabs(1.0 - t));
                return inner_piece(r, ur, t, m);
            };
            SingularityHint hint;
            if (lo == 0.0) hint.left_exponent = at;
            if (hi == 1.0) hint.right_exponent = p - 1.0 - sp;
            if (lo == 1.0) hint.left_exponent = p - 1.0 - sp;
            QuadResult piece =
                (lo > 0.0 && hi / lo > 64.0)
                    ? detail::tanh_sinh_log(f, lo, hi, hint, inner_tol, kInnerMaxLevel)
                    : detail::tanh_sinh(f, lo, hi, hint, inner_tol, kInnerMaxLevel);
            total = detail::merge(total, piece);
            lo = hi;
        }
        if (ur != 0.0) {
            auto ftail = [&](double t) {
                return std::pow(ur > 0 ? ur : -ur, p) * std::pow(t, at) *
                       kreg(t, t - 1.0) * std::pow(t - 1.0, -1.0 - sp);
            };
            auto piece = detail::tanh_sinh_upper(ftail, tmax, inner_tol, kInnerMaxLevel);
            total = detail::merge(total, piece);
        }
        inner_nodes += total.nodes_used;
        if (!total.converged) ++inner_failures;
        if (total.value > 0.0)
            inner_rel_err = std::max(inner_rel_err,
                                     total.abs_error_estimate / total.value);
        return total.value;
    }

    double outer_integrand(double r) const
    {
        const double iv = inner(r);
        if (!(iv > 0.0)) return 0.0;
        return std::exp((gam - 1.0) * std::log(r) + (q / p) * std::log(iv));
    }
};

void check_admissible(const RadialProfile& profile, const HardyParams& params,
                      const ValidationReport& rep, const char* who)
{
    if (!rep.valid) {
        std::string msg = std::string(who) + ": invalid parameters";
        for (const auto& v : rep.violations) msg += "; violated: " + v.label;
        throw std::invalid_argument(msg);
    }
    if (params.domain == Domain::HalfSpace && params.d != 1)
        throw std::invalid_argument(
            std::string(who) +
            ": half-space seminorms are evaluated at d = 1 only; higher d is "
            "covered analytically by the prefactor identity");
    if (!profile.evaluate)
        throw std::invalid_argument(std::string(who) + ": profile has no evaluator");
    if (!(profile.support_radius > 0.0))
        throw std::invalid_argument(std::string(who) + ": support radius must be positive");
    const bool needs_vanishing =
        rep.support_class == SupportClass::PuncturedAtOrigin ||
        rep.support_class == SupportClass::OpenHalfSpace;
    if (needs_vanishing) {
        if (!profile.vanishes_near_zero)
            throw std::invalid_argument(
                std::string(who) +
                ": support class requires the profile to vanish near the origin");
        if (profile.breakpoints.empty())
            throw std::invalid_argument(
                std::string(who) +
                ": vanishing profiles must expose the vanishing radius as their "
                "first breakpoint");
    }
}

} // namespace

RadialProfile make_piecewise_linear(std::vector<std::pair<double, double>> knots)
{
    if (knots.size() < 2)
        throw std::invalid_argument("piecewise-linear profile needs at least 2 knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!(knots[i].first >= 0.0) || !std::isfinite(knots[i].second))
            throw std::invalid_argument("piecewise-linear profile: bad knot");
        if (i > 0 && !(knots[i].first > knots[i - 1].first))
            throw std::invalid_argument("piecewise-linear profile: radii must increase");
    }
    if (knots.back().second != 0.0)
        throw std::invalid_argument("piecewise-linear profile must end at zero");

    auto pts = std::make_shared<std::vector<std::pair<double, double>>>(std::move(knots));
    RadialProfile prof;
    prof.evaluate = [pts](double r) -> double {
        const auto& k = *pts;
        if (r <= k.front().first) return k.front().second;
        if (r >= k.back().first) return 0.0;
        auto it = std::upper_bound(k.begin(), k.end(), r,
                                   [](double v, const auto& kn) { return v < kn.first; });
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double w = (r - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
    };
    const auto& k = *pts;
    prof.support_radius = k.back().first;
    double lip = 0.0;
    for (std::size_t i = 1; i < k.size(); ++i)
        lip = std::max(lip, std::fabs(k[i].second - k[i - 1].second) /
                                (k[i].first - k[i - 1].first));
    prof.lipschitz_bound = lip;
    std::size_t fnz = k.size();
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i].second != 0.0) { fnz = i; break; }
    prof.vanishes_near_zero = (fnz == k.size()) || (fnz >= 1 && k[fnz - 1].first > 0.0);
    for (const auto& kn : k)
        if (kn.first > 0.0 && kn.first < prof.support_radius)
            prof.breakpoints.push_back(kn.first);
    if (prof.vanishes_near_zero && fnz < k.size() && fnz >= 1) {
        // make the vanishing radius the first breakpoint
        if (prof.breakpoints.empty() || prof.breakpoints.front() != k[fnz - 1].first)
            prof.breakpoints.insert(prof.breakpoints.begin(), k[fnz - 1].first);
    }
    prof.breakpoints = sorted_unique(prof.breakpoints);
    return prof;
}

RadialProfile make_hat(double center, double half_width)
{
    if (!(half_width > 0.0) || !(center - half_width >= 0.0))
        throw std::invalid_argument("hat profile requires center - half_width >= 0");
    std::vector<std::pair<double, double>> knots;
    if (center - half_width > 0.0)
        knots.push_back({center - half_width, 0.0});
    knots.push_back({center, 1.0});
    knots.push_back({center + half_width, 0.0});
    if (knots.front().first == 0.0 || knots.size() == 2)
        knots.insert(knots.begin(), {0.0, 0.0});
    return make_piecewise_linear(std::move(knots));
}

RadialProfile load_profile(std::istream& in)
{
    std::vector<std::pair<double, double>> knots;
    std::optional<double> support_directive;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const std::string comment = line.substr(hash + 1);
            const auto key = comment.find("support-radius:");
            if (key != std::string::npos) {
                std::istringstream is(comment.substr(key + 15));
                double r;
                if (!(is >> r) || !(r > 0.0))
                    throw std::runtime_error("profile parse error at line " +
                                             std::to_string(lineno) +
                                             ": bad support-radius directive");
                support_directive = r;
            }
            line.erase(hash);
        }
        std::istringstream is(line);
        double r, v;
        if (!(is >> r)) continue;   // blank / comment-only line
        if (!(is >> v))
            throw std::runtime_error("profile parse error at line " +
                                     std::to_string(lineno) +
                                     ": expected two columns (r, u)");
        std::string rest;
        if (is >> rest)
            throw std::runtime_error("profile parse error at line " +
                                     std::to_string(lineno) + ": trailing data '" +
                                     rest + "'");
        if (!knots.empty() && !(r > knots.back().first))
            throw std::runtime_error("profile parse error at line " +
                                     std::to_string(lineno) +
                                     ": radii must be strictly increasing");
        knots.push_back({r, v});
    }
    if (knots.size() < 2)
        throw std::runtime_error("profile parse error: fewer than 2 samples");
    if (knots.back().second != 0.0)
        throw std::runtime_error("profile parse error: last sample must be zero");
    auto prof = make_piecewise_linear(std::move(knots));
    if (support_directive) {
        if (*support_directive < prof.support_radius)
            throw std::runtime_error(
                "profile parse error: support-radius directive below last sample");
        prof.support_radius = *support_directive;
    }
    return prof;
}

RadialProfile load_profile_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open profile file: " + path);
    return load_profile(in);
}

QuadResult tl_seminorm(const RadialProfile& profile, const HardyParams& params,
                       double tol)
{
    const auto rep = validate(params);
    check_admissible(profile, params, rep, "tl_seminorm");

    SeminormEval ev;
    ev.u = &profile;
    ev.whole = params.domain == Domain::WholeSpace;
    ev.sp = params.sp();
    ev.p = params.p;
    ev.q = params.q;
    ev.at = ev.whole ? params.d - 1.0 + params.beta : params.beta;
    ev.gam = params.gamma();
    ev.ks = params.kernel();
    ev.support = profile.support_radius;

    std::vector<double> bk = profile.breakpoints;
    bk.push_back(profile.support_radius);
    bk = sorted_unique(bk);

    const double area = ev.whole ? unit_sphere_area(params.d) : 1.0;
    const double d_eff = params.d_eff();
    const double panel_tol = 0.5 * tol / static_cast<double>(bk.size() + 1);

    QuadResult total;
    total.converged = true;
    double lo = 0.0;
    for (double hi : bk) {
        auto f = [&](double r, double, double) { return ev.outer_integrand(r); };
        SingularityHint hint;
        if (lo == 0.0)
            hint.left_exponent = profile.vanishes_near_zero
                                     ? d_eff + params.alpha - 1.0
                                     : ev.gam - 1.0;
        QuadResult piece =
            (lo > 0.0 && hi / lo > 64.0)
                ? detail::tanh_sinh_log(f, lo, hi, hint, panel_tol, kOuterMaxLevel)
                : detail::tanh_sinh(f, lo, hi, hint, panel_tol, kOuterMaxLevel);
        total = detail::merge(total, piece);
        lo = hi;
    }
    {
        auto ftail = [&](double r) { return ev.outer_integrand(r); };
        auto piece = detail::tanh_sinh_upper(ftail, profile.support_radius, panel_tol,
                                             kOuterMaxLevel);
        total = detail::merge(total, piece);
    }

    QuadResult out;
    out.value = area * total.value;
    out.nodes_used = static_cast<int>(
        std::min<long>(ev.inner_nodes + total.nodes_used, INT32_MAX));
    out.abs_error_estimate = area * total.abs_error_estimate +
                             (ev.q / ev.p) * ev.inner_rel_err * std::fabs(out.value);
    out.converged = total.converged && ev.inner_failures == 0;
    return out;
}

QuadResult lq_weighted_norm(const RadialProfile& profile, const HardyParams& params,
                            double tol)
{
    const auto rep = validate(params);
    check_admissible(profile, params, rep, "lq_weighted_norm");

    const double gam = params.gamma();
    const double q = params.q;
    const double area =
        params.domain == Domain::WholeSpace ? unit_sphere_area(params.d) : 1.0;

    std::vector<double> bk = profile.breakpoints;
    bk.push_back(profile.support_radius);
    bk = sorted_unique(bk);

    auto f = [&](double r, double, double) {
        const double v = std::fabs(profile.evaluate(r));
        if (v == 0.0) return 0.0;
        return std::exp((gam - 1.0) * std::log(r) + q * std::log(v));
    };

    const double panel_tol = 0.5 * tol / static_cast<double>(bk.size());
    QuadResult total;
    total.converged = true;
    double lo = 0.0;
    if (profile.vanishes_near_zero)
        lo = bk.front();   // u == 0 on [0, first breakpoint]
    for (double hi : bk) {
        if (hi <= lo) continue;
        SingularityHint hint;
        if (lo == 0.0) hint.left_exponent = gam - 1.0;
        QuadResult piece =
            (lo > 0.0 && hi / lo > 64.0)
                ? detail::tanh_sinh_log(f, lo, hi, hint, panel_tol)
                : detail::tanh_sinh(f, lo, hi, hint, panel_tol);
        total = detail::merge(total, piece);
        lo = hi;
    }
    total.value *= area;
    total.abs_error_estimate *= area;
    return total;
}

QuadResult direct_seminorm_1d(const std::function<double(double)>& u,
                              double support_bound, const HardyParams& params,
                              int grid_size)
{
    const auto rep = validate(params);
    if (!rep.valid)
        throw std::invalid_argument("direct_seminorm_1d: invalid parameters");
    if (params.d != 1 || params.domain != Domain::WholeSpace)
        throw std::invalid_argument("direct_seminorm_1d oracle is defined for d=1 whole space");
    if (grid_size < 64)
        throw std::invalid_argument("direct_seminorm_1d: grid too small");

    const double B = support_bound;
    const double sp = params.sp();
    const double p = params.p, q = params.q;
    const double alpha = params.alpha, betaw = params.beta;

    const int bands = 48;
    const int tail_per_decade = 16;
    const double tail_factor = 1e5;

    auto midpoint_sum = [](const std::vector<double>& e, auto&& f) {
        double s = 0.0;
        for (std::size_t i = 1; i < e.size(); ++i) {
            const double w = e[i] - e[i - 1];
            if (w <= 0.0) continue;
            s += f(0.5 * (e[i] + e[i - 1])) * w;
        }
        return s;
    };

    // log-spaced midpoint cells on [B, tail_factor*B], one-sided
    std::vector<double> tail_edges;
    {
        const int n = static_cast<int>(tail_per_decade * std::log10(tail_factor));
        for (int i = 0; i <= n; ++i)
            tail_edges.push_back(B * std::pow(tail_factor, double(i) / n));
    }

    // one full evaluation at the given resolution knobs
    auto run = [&](int m_sub, int n_uniform) {
        // edges of graded midpoint cells on [lo,hi]: a uniform backbone plus
        // geometric refinement (ratio 2^{1/m_sub}) toward each singular point
        auto build_edges = [&](double lo, double hi, std::vector<double> sing) {
            std::vector<double> e;
            for (int j = 0; j <= n_uniform; ++j)
                e.push_back(lo + (hi - lo) * j / n_uniform);
            const double g = std::pow(2.0, 1.0 / m_sub);
            for (double s : sing) {
                double w = 0.25 * (hi - lo);
                for (int i = 0; i < bands * m_sub; ++i) {
                    if (s + w > lo && s + w < hi) e.push_back(s + w);
                    if (s - w > lo && s - w < hi) e.push_back(s - w);
                    w /= g;
                }
            }
            e.push_back(lo);
            e.push_back(hi);
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            return e;
        };

        auto inner = [&](double x) {
            auto fin = [&](double y) {
                const double du = std::fabs(u(x) - u(y));
                if (du == 0.0) return 0.0;
                return std::pow(du, p) * std::pow(std::fabs(x - y), -1.0 - sp) *
                       std::pow(std::fabs(y), betaw);
            };
            double s = 0.0;
            if (std::fabs(x) <= 2.0 * B) {
                s = midpoint_sum(build_edges(-B, B, {0.0, x}), fin);
                const double ux = std::fabs(u(x));
                if (ux > 0.0) {
                    auto ftail = [&](double y) {
                        return std::pow(ux, p) * std::pow(std::fabs(x - y), -1.0 - sp) *
                               std::pow(std::fabs(y), betaw);
                    };
                    s += midpoint_sum(tail_edges, ftail);
                    s += midpoint_sum(tail_edges, [&](double y) { return ftail(-y); });
                    // analytic remainder beyond the truncated tails, |x-y| ~ |y|
                    s += 2.0 * std::pow(ux, p) *
                         std::pow(tail_factor * B, betaw - sp) / (sp - betaw);
                }
            } else {
                s = midpoint_sum(build_edges(-B, B, {0.0}), fin);
            }
            return s;
        };

        auto fouter = [&](double x) {
            const double iv = inner(x);
            if (!(iv > 0.0)) return 0.0;
            return std::pow(iv, q / p) * std::pow(std::fabs(x), alpha);
        };

        double s = midpoint_sum(build_edges(-B, B, {0.0}), fouter);
        s += midpoint_sum(tail_edges, fouter);
        s += midpoint_sum(tail_edges, [&](double x) { return fouter(-x); });
        // analytic remainder of the outer tails: integrand ~ x^{alpha-(1+sp)q/p}
        const double eta = alpha - (1.0 + sp) * q / p;
        const double X = tail_factor * B;
        s += (fouter(X) + fouter(-X)) * X / (-eta - 1.0);
        return s;
    };

    const int m_sub = std::clamp(grid_size / 256, 2, 32);
    const int n_uniform = std::max(16, grid_size / 8);
    const double value = run(m_sub, n_uniform);
    const double coarse = run(std::max(2, m_sub / 2), std::max(16, n_uniform / 2));

    QuadResult out;
    out.value = value;
    out.abs_error_estimate = std::fabs(value - coarse);
    out.nodes_used = grid_size;
    out.converged = out.abs_error_estimate <=
                    std::max(2e-3 * std::fabs(value), 1e-12);
    return out;
}

HardyRatioResult hardy_ratio(const RadialProfile& profile, const HardyParams& params,
                             double tol)
{
    HardyRatioResult res;
    res.lhs_seminorm = tl_seminorm(profile, params, tol);
    res.rhs_norm = lq_weighted_norm(profile, params, std::min(tol, 1e-10));
    if (!(res.rhs_norm.value > 0.0))
        throw std::invalid_argument("hardy_ratio: profile has zero weighted norm");
    res.ratio = res.lhs_seminorm.value / res.rhs_norm.value;
    res.constant = sharp_constant(params, std::min(tol * 1e-2, 1e-10)).value;
    res.margin = res.ratio - res.constant;
    if (profile.lipschitz_bound)
        res.notes.push_back("lipschitz_profile_admitted_by_density");
    return res;
}

} // namespace hardy
