#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kSeriesBudget = 1 << 14;

bool is_nonpositive_integer(double x)
{
    return x <= 1e-12 && std::fabs(x - std::round(x)) < 1e-12;
}

// 1/Gamma(x), with the convention 1/Gamma(-k) = 0 at the poles.
double reciprocal_gamma(double x)
{
    if (is_nonpositive_integer(x)) return 0.0;
    const double g = std::tgamma(x);
    if (!std::isfinite(g)) return 0.0;   // overflow: Gamma huge, reciprocal ~ 0
    return 1.0 / g;
}

// Plain power series around z = 0; terminates for nonpositive-integer a or b.
double series_2f1(double a, double b, double c, double z)
{
    double sum = 1.0, term = 1.0;
    int quiet = 0;
    for (int k = 0; k < kSeriesBudget; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw convergence_error("2F1 series did not converge within the term budget");
}

// Two-term connection formula in w = 1-z for non-integer c-a-b.
double connection_2f1(double a, double b, double c, double w)
{
    const double d = c - a - b;
    const double coef1 = std::tgamma(c) * std::tgamma(d) *
                         reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    const double coef2 = std::tgamma(c) * std::tgamma(-d) *
                         reciprocal_gamma(a) * reciprocal_gamma(b);
    double t1 = 0.0, t2 = 0.0;
    if (coef1 != 0.0) t1 = coef1 * series_2f1(a, b, a + b - c + 1.0, w);
    if (coef2 != 0.0) t2 = coef2 * std::pow(w, d) * series_2f1(c - a, c - b, d + 1.0, w);
    return t1 + t2;
}

// Logarithmic expansion in w = 1-z for c = a+b-m, m a positive integer.
double log_case_2f1(double a, double b, int m, double w)
{
    const double c = a + b - m;
    // finite part: Gamma(m)Gamma(c)/(Gamma(a)Gamma(b)) w^{-m} sum_{n<m}
    double fin = 0.0;
    {
        double term = 1.0;
        for (int n = 0; n < m; ++n) {
            if (n > 0)
                term *= (a - m + n - 1.0) * (b - m + n - 1.0) / (n * (n - double(m))) * w;
            fin += term;
        }
        fin *= std::tgamma(double(m)) * std::tgamma(c) *
               reciprocal_gamma(a) * reciprocal_gamma(b) * std::pow(w, -double(m));
    }
    // log part; its coefficient vanishes when a-m or b-m hits a Gamma pole
    const double coef = (m % 2 == 0 ? 1.0 : -1.0) * std::tgamma(c) *
                        reciprocal_gamma(a - m) * reciprocal_gamma(b - m);
    double logpart = 0.0;
    if (coef != 0.0) {
        const double lw = std::log(w);
        double term = 1.0 / std::tgamma(double(m) + 1.0);   // n = 0: 1/(0! m!)
        double psi1 = -kEulerGamma;                          // psi(1)
        double psim = digamma(double(m) + 1.0);
        double psia = digamma(a);
        double psib = digamma(b);
        double sum = 0.0;
        int quiet = 0;
        for (int n = 0; n < kSeriesBudget; ++n) {
            const double piece = term * (lw - psi1 - psim + psia + psib);
            sum += piece;
            if (std::fabs(piece) <= 1e-17 * std::fabs(sum)) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            term *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0 + m)) * w;
            psi1 += 1.0 / (n + 1.0);
            psim += 1.0 / (n + 1.0 + m);
            psia += 1.0 / (a + n);
            psib += 1.0 / (b + n);
        }
        if (quiet < 2)
            throw convergence_error("2F1 logarithmic series did not converge");
        logpart = -coef * sum;
    }
    return fin + logpart;
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma requires x > 0");
    return std::lgamma(x);
}

double digamma(double x)
{
    if (x <= 0.0) {
        // reflection; poles at nonpositive integers
        if (std::fabs(x - std::round(x)) < 1e-13)
            throw std::domain_error("digamma pole at nonpositive integer");
        return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    // asymptotic series, Bernoulli coefficients B_{2k}/(2k)
    const double corr = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 -
                        r * (1.0 / 132 - r * (691.0 / 32760 - r / 12.0))))));
    return acc + std::log(x) - 0.5 / x - corr;
}

double beta(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta requires positive arguments");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double unit_sphere_area(int d)
{
    if (d < 1)
        throw std::domain_error("unit_sphere_area requires d >= 1");
    return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double gauss_2f1(double a, double b, double c, double z)
{
    if (!(z >= 0.0) || z >= 1.0)
        throw std::domain_error("gauss_2f1 requires 0 <= z < 1");
    return gauss_2f1_complement(a, b, c, 1.0 - z);
}

double gauss_2f1_complement(double a, double b, double c, double w)
{
    if (!(c > 0.0))
        throw std::domain_error("gauss_2f1 requires c > 0");
    if (!(w > 0.0) || w > 1.0)
        throw std::domain_error("gauss_2f1 requires 0 <= z < 1");
    if (w == 1.0) return 1.0;                              // z = 0
    if (a == 0.0 || b == 0.0) return 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return series_2f1(a, b, c, 1.0 - w);               // terminating polynomial
    if (b == c) return std::pow(w, -a);
    if (a == c) return std::pow(w, -b);
    if (w >= 0.5)
        return series_2f1(a, b, c, 1.0 - w);
    const double d = c - a - b;
    const double rd = std::round(d);
    if (std::fabs(d - rd) < 1e-12) {
        const int m = -static_cast<int>(rd);
        if (m >= 1)
            return log_case_2f1(a, b, m, w);
        // c-a-b a nonnegative integer near z=1: not needed by the kernel
        throw convergence_error(
            "gauss_2f1: c-a-b is a nonnegative integer and z is near 1");
    }
    return connection_2f1(a, b, c, w);
}

QuadResult integrate_01(const std::function<double(double)>& f,
                        SingularityHint hint, double tol)
{
    return detail::tanh_sinh([&](double x, double, double) { return f(x); },
                             0.0, 1.0, hint, tol, kMaxQuadLevel, /*blind=*/true);
}

QuadResult integrate_0inf(const std::function<double(double)>& f, double tol)
{
    auto lower = detail::tanh_sinh([&](double x, double, double) { return f(x); },
                                   0.0, 1.0, SingularityHint{}, 0.5 * tol,
                                   kMaxQuadLevel, /*blind=*/true);
    auto upper = detail::tanh_sinh_upper([&](double x) { return f(x); }, 1.0, 0.5 * tol);
    return detail::merge(lower, upper);
}

} // namespace hardy
