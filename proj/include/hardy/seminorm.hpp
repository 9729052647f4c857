#pragma once
/** \file seminorm.hpp
    Weighted Triebel-Lizorkin seminorms and weighted Lq norms for radial
    profiles (whole space) and one-dimensional boundary profiles (half space,
    d=1), a brute-force 2-D tensor oracle for d=1, and Hardy ratios.
*/
#include "hardy/constants.hpp"

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace hardy {

/// A one-dimensional profile r -> u(r), r >= 0, evaluated on demand.
/// evaluate(r) must vanish for r > support_radius. breakpoints list interior
/// kink radii; quadrature panels are aligned to them.
struct RadialProfile {
    std::function<double(double)> evaluate;
    double support_radius = 1.0;
    std::optional<double> lipschitz_bound;
    bool vanishes_near_zero = false;
    std::vector<double> breakpoints;
};

/// Piecewise-linear profile through (r, value) knots, constant before the
/// first knot and zero after the last (the last value must be 0).
RadialProfile make_piecewise_linear(std::vector<std::pair<double, double>> knots);

/// Hat profile max(0, 1 - |r - center|/half_width).
RadialProfile make_hat(double center, double half_width);

/// Parse the two-column text format (r u(r), '#' comments, optional
/// "# support-radius: R" directive). Throws std::runtime_error with the line
/// number on malformed input.
RadialProfile load_profile(std::istream& in);
RadialProfile load_profile_file(const std::string& path);

struct HardyRatioResult {
    QuadResult lhs_seminorm;
    QuadResult rhs_norm;
    double ratio = 0.0;
    double constant = 0.0;
    double margin = 0.0;   // ratio - constant; >= 0 up to tolerance by the inequality
    std::vector<std::string> notes;
};

/// Weighted Triebel-Lizorkin seminorm, radial reduction:
/// whole space : w_{d-1} int_0^inf r^{q delta - 1}
///               ( int_0^inf |u(r)-u(rt)|^p t^{d-1+beta} Phi(t) dt )^{q/p} dr
/// half space  : d = 1 only, kernel t^beta |1-t|^{-1-sp} and weight x^{gamma-1}.
QuadResult tl_seminorm(const RadialProfile& profile, const HardyParams& params,
                       double tol = 1e-8);

/// w_{d-1} int_0^inf r^{q delta - 1} |u(r)|^q dr (whole space; no area factor
/// on the half line).
QuadResult lq_weighted_norm(const RadialProfile& profile, const HardyParams& params,
                            double tol = kDefaultQuadTol);

/// Brute-force 2-D tensor oracle at d = 1 (whole space), no radial reduction:
/// int_R ( int_R |u(x)-u(y)|^p |x-y|^{-1-sp} |y|^beta dy )^{q/p} |x|^alpha dx
/// on a graded midpoint grid refined toward the diagonal and the origin.
/// Works for non-even u; the only evaluator for such test functions.
QuadResult direct_seminorm_1d(const std::function<double(double)>& u,
                              double support_bound, const HardyParams& params,
                              int grid_size);

/// Both sides of the Hardy inequality, the sharp constant and the margin.
HardyRatioResult hardy_ratio(const RadialProfile& profile, const HardyParams& params,
                             double tol = 1e-8);

} // namespace hardy
