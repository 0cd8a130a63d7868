#pragma once

#include <cmath>
#include <functional>

#include "sab/errors.hpp"

namespace sab {

struct RootOptions {
    double target_tol = 1e-12;   // stop when |f(x)| <= target_tol * max(1, |rhs_scale|)
    double rhs_scale = 0.0;      // typically |y| for f(x) = g(x) - y
    int max_iter = 200;
};

// Finds x in [lo, hi] with f(x) ~ 0, given f(lo) and f(hi) of opposite (or zero)
// sign. Newton steps using fprime, safeguarded by the shrinking bracket; any
// step leaving the bracket (or not reducing |f|) falls back to bisection.
// The bracket orientation is detected from the endpoint signs.
inline double bracketed_newton(const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime,
                               double lo, double hi, double x0,
                               const RootOptions& opt = {}) {
    const double tol = opt.target_tol * std::fmax(1.0, std::fabs(opt.rhs_scale));
    double flo = f(lo);
    double fhi = f(hi);
    if (std::fabs(flo) <= tol) return lo;
    if (std::fabs(fhi) <= tol) return hi;
    if (flo * fhi > 0.0)
        throw RangeError("bracketed_newton: endpoints do not bracket a root");
    const double sign_lo = flo < 0.0 ? -1.0 : 1.0;

    double x = std::fmin(std::fmax(x0, lo), hi);
    double fx = f(x);
    for (int it = 0; it < opt.max_iter; ++it) {
        if (std::fabs(fx) <= tol) return x;
        if (fx * sign_lo > 0.0) lo = x; else hi = x;
        double xn;
        const double d = fprime(x);
        if (d != 0.0 && std::isfinite(d)) {
            xn = x - fx / d;
            if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        } else {
            xn = 0.5 * (lo + hi);
        }
        if (xn == x) xn = 0.5 * (lo + hi);
        double fxn = f(xn);
        // if Newton made things worse, bisect instead
        if (std::fabs(fxn) > std::fabs(fx) && xn != 0.5 * (lo + hi)) {
            xn = 0.5 * (lo + hi);
            fxn = f(xn);
        }
        if (xn == lo || xn == hi) { // bracket exhausted at double resolution
            x = xn;
            fx = fxn;
            break;
        }
        x = xn;
        fx = fxn;
    }
    if (std::fabs(fx) <= tol) return x;
    // bracket collapsed to adjacent doubles: accept the better endpoint
    if (std::fabs(hi - lo) <= 4.0 * std::fabs(lo) * 1e-16 + 1e-300) return x;
    throw NoConvergenceError("bracketed_newton: no convergence within iteration budget");
}

} // namespace sab
