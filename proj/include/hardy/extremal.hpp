#pragma once
/** \file extremal.hpp
    The extremal sequence u_n (truncated power profiles approximating
    r^{-delta}), the closed form of its weighted Lq norm, and the convergence
    study of the Hardy ratio toward the sharp constant.
*/
#include "hardy/seminorm.hpp"

namespace hardy {

struct ExtremalFamily {
    double delta = 0.0;
    int n = 2;
    RadialProfile profile;
};

struct RatioEntry {
    int n = 0;
    double ratio = 0.0;
    double margin = 0.0;
};

struct RatioSeries {
    std::vector<RatioEntry> entries;   // sorted by n
    double c0 = 0.0;                   // fitted model ratio(n) ~ c0 + c1/ln n
    double c1 = 0.0;
    double limit_estimate = 0.0;       // = c0
    double constant = 0.0;             // sharp constant of the (dualized) parameters
};

/// u_n(r) = n^d - n^{-d} on [0,1/n], r^{-d} - n^{-d} on (1/n,n], 0 beyond
/// (d = delta). Requires delta > 0; for delta < 0 apply dual_params first.
ExtremalFamily make_un(const HardyParams& params, int n);

/// area * [ (1/(q delta)) (1 - n^{-2 delta})^q + int_{1/n^2}^1 (1-t^delta)^q dt/t ];
/// the t-integral in closed form for integer q <= 4, by quadrature otherwise.
double rhs_norm_closed_form(const HardyParams& params, int n);

/// Hardy ratios of u_n over n_list with the 1/ln n fit. delta < 0 parameter
/// sets are mapped through dual_params (same constant, same limit).
RatioSeries ratio_sequence(const HardyParams& params, const std::vector<int>& n_list,
                           double tol = 1e-7);

} // namespace hardy
