#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sab/distribution.hpp"
#include "sab/entropy.hpp"
#include "sab/errors.hpp"
#include "sab/report.hpp"
#include "sab/root_find.hpp"

namespace sab {

// Deformation parameters of the generalized logarithm. kappa1 != kappa2 is
// required by the normalized form; (0, 0) is only the classical-limit target.
struct KappaPair {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
};

// Coefficient A(kappa1, kappa2) of the general two-term ansatz
// Lambda(x) = A * (x^k1 - x^k2).
using CoefficientA = std::function<double(double, double)>;

inline CoefficientA normalized_coefficient() {
    return [](double k1, double k2) { return 1.0 / (k1 - k2); };
}

inline void require_nondegenerate(const KappaPair& kp) {
    if (kp.kappa1 == kp.kappa2)
        throw NondegenerateParamError("kappa1 must differ from kappa2");
}

inline void require_positive_x(double x) {
    if (!(x > 0.0))
        throw DomainError("generalized logarithm: x must be positive, got " + std::to_string(x));
}

// Lambda(x) = (x^k1 - x^k2) / (k1 - k2). Lambda(1) = 0 and Lambda'(1) = 1
// hold exactly in floating point.
inline double lambda(double x, const KappaPair& kp) {
    require_positive_x(x);
    require_nondegenerate(kp);
    return (std::pow(x, kp.kappa1) - std::pow(x, kp.kappa2)) / (kp.kappa1 - kp.kappa2);
}

// General form A(k1,k2) * (x^k1 - x^k2); the normalization Lambda(1) = 0 is
// built into the two-term shape.
inline double lambda_general(double x, const KappaPair& kp, const CoefficientA& a) {
    require_positive_x(x);
    return a(kp.kappa1, kp.kappa2) * (std::pow(x, kp.kappa1) - std::pow(x, kp.kappa2));
}

inline double lambda_prime(double x, const KappaPair& kp) {
    require_positive_x(x);
    require_nondegenerate(kp);
    return (kp.kappa1 * std::pow(x, kp.kappa1 - 1.0) - kp.kappa2 * std::pow(x, kp.kappa2 - 1.0)) /
           (kp.kappa1 - kp.kappa2);
}

// Result of probing A(kappa)*(kappa1 - kappa2) along a path shrinking to (0,0).
struct CoefficientLimitReport {
    std::vector<double> values;   // A(k1,k2)*(k1-k2) per path point
    double tail_error = 0.0;      // |last value - 1|
    double tolerance = 0.0;
    bool pass = false;

    std::string to_json() const;
};

// Checks the classical-reduction condition lim A*(k1-k2) = 1 along the given
// path. The path must shrink to (0,0) with kappa1 != kappa2 at every point.
inline CoefficientLimitReport check_A_limit(const CoefficientA& a,
                                            const std::vector<KappaPair>& path,
                                            double tolerance = 1e-6) {
    if (path.empty()) throw DomainError("check_A_limit: path must be non-empty");
    CoefficientLimitReport rep;
    rep.tolerance = tolerance;
    rep.values.reserve(path.size());
    for (const auto& kp : path) {
        require_nondegenerate(kp);
        rep.values.push_back(a(kp.kappa1, kp.kappa2) * (kp.kappa1 - kp.kappa2));
    }
    rep.tail_error = std::fabs(rep.values.back() - 1.0);
    rep.pass = rep.tail_error <= tolerance;
    return rep;
}

// Default probe path: symmetric pairs (2^-j, -2^-j). The differences are
// exact powers of two, so A = 1/(k1-k2) reproduces 1.0 bit-exactly.
inline std::vector<KappaPair> default_kappa_path() {
    std::vector<KappaPair> path;
    for (int j = 3; j <= 30; ++j) {
        const double d = std::ldexp(1.0, -j);
        path.push_back({d, -d});
    }
    return path;
}

namespace detail {
// Validates that lambda is strictly increasing on (grid_lo, x_max] by the sign
// of its derivative on a logarithmic grid.
inline void require_lambda_monotone(const KappaPair& kp, double x_max,
                                    int grid_points = 256, double grid_lo = 1e-12) {
    const double lo = std::log(grid_lo), hi = std::log(x_max);
    for (int i = 0; i < grid_points; ++i) {
        const double x = std::exp(lo + (hi - lo) * i / (grid_points - 1));
        if (!(lambda_prime(x, kp) > 0.0))
            throw MonotonicityError("generalized exponential: lambda is not strictly increasing near x = " +
                                    std::to_string(x));
    }
}
} // namespace detail

// Generalized exponential E = Lambda^{-1} on (0, x_max], computed by bracketing
// bisection refined with safeguarded Newton steps. There is no closed form for
// generic (kappa1, kappa2); monotonicity is validated numerically first.
inline double gen_exp(double y, const KappaPair& kp, double x_max = 1.0) {
    require_nondegenerate(kp);
    if (!(x_max > 0.0)) throw DomainError("gen_exp: x_max must be positive");
    detail::require_lambda_monotone(kp, x_max);

    const double f_hi = lambda(x_max, kp);
    if (y > f_hi)
        throw RangeError("gen_exp: y above the attainable range on (0, x_max]");

    double lo = std::fmin(1.0, x_max);
    while (lambda(lo, kp) > y) {
        lo *= 0.125;
        if (lo < 1e-300)
            throw RangeError("gen_exp: y below the attainable range on (0, x_max]");
    }

    auto f = [&](double x) { return lambda(x, kp) - y; };
    auto fp = [&](double x) { return lambda_prime(x, kp); };
    // exp(y) is the classical inverse and a good starting point in general
    const double x0 = std::fmin(std::fmax(std::exp(y), lo), x_max);
    RootOptions opt;
    opt.target_tol = 1e-12;
    opt.rhs_scale = y;
    return bracketed_newton(f, fp, lo, x_max, x0, opt);
}

// Trace-form entropy from the generalized logarithm, S = -sum p_i Lambda(p_i),
// with zero entries contributing 0. Coincides with the two-parameter entropy
// under alpha = kappa1 + 1, beta = kappa2 + 1 and the canonical normalizer.
inline double deformed_entropy_from_log(const Distribution& dist, const KappaPair& kp) {
    require_nondegenerate(kp);
    std::vector<double> terms;
    terms.reserve(dist.size());
    for (double p : dist.probs())
        terms.push_back(p == 0.0 ? 0.0 : -p * lambda(p, kp));
    return detail::ordered_sum(terms);
}

inline std::string CoefficientLimitReport::to_json() const {
    std::string out = "{\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += fmt17(values[i]);
    }
    out += "],\"tail_error\":" + fmt17(tail_error);
    out += ",\"tolerance\":" + fmt17(tolerance);
    out += std::string(",\"pass\":") + (pass ? "true" : "false") + "}";
    return out;
}

} // namespace sab
