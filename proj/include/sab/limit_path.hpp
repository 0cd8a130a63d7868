#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "sab/entropy.hpp"
#include "sab/errors.hpp"

namespace sab {

// A parameterized approach to (1,1): t in (0,1] -> (alpha(t), beta(t)), with
// decreasing sample points. All sampled pairs must lie in R_ab off-diagonal.
struct LimitPath {
    std::string name;
    std::function<ParamPair(double)> at;
    std::vector<double> ts; // decreasing

    void validate() const {
        if (ts.empty()) throw DomainError("limit path: needs sample points");
        for (std::size_t i = 1; i < ts.size(); ++i)
            if (!(ts[i] < ts[i - 1]))
                throw DomainError("limit path: sample points must decrease");
        for (double t : ts) {
            const ParamPair pr = at(t);
            if (!region_contains(pr))
                throw RegionError("limit path '" + name + "': point at t = " + std::to_string(t) +
                                  " leaves the region R_ab");
            if (pr.alpha == pr.beta)
                throw NondegenerateParamError("limit path '" + name + "': degenerate point at t = " +
                                              std::to_string(t));
        }
    }
};

inline std::vector<double> geometric_ladder(double first = 1e-1, double last = 1e-7,
                                            double factor = 0.1) {
    std::vector<double> ts;
    for (double t = first; t >= last * (1.0 - 1e-9); t *= factor) ts.push_back(t);
    return ts;
}

// (1 + t, 1 + m t) for m <= 0; these are the slope directions through (1,1)
// admissible on the alpha >= 1 side of the region.
inline LimitPath slope_path(double m, std::vector<double> ts = geometric_ladder()) {
    if (m > 0.0)
        throw RegionError("slope_path: slopes in (0, inf) leave R_ab on both sides of (1,1)");
    LimitPath p;
    p.name = "slope(" + std::to_string(m) + ")";
    p.at = [m](double t) { return ParamPair{1.0 + t, 1.0 + m * t}; };
    p.ts = std::move(ts);
    return p;
}

// Mirrored slope: (1 - t, 1 - m t), approaching from the alpha <= 1 side.
inline LimitPath mirrored_slope_path(double m, std::vector<double> ts = geometric_ladder()) {
    if (m > 0.0)
        throw RegionError("mirrored_slope_path: slopes in (0, inf) leave R_ab on both sides of (1,1)");
    LimitPath p;
    p.name = "slope-mirror(" + std::to_string(m) + ")";
    p.at = [m](double t) { return ParamPair{1.0 - t, 1.0 - m * t}; };
    p.ts = std::move(ts);
    return p;
}

// (1, 1 +/- t): alpha pinned at 1. Along these the Weierstrass-type
// normalizer's ratio C/(alpha-beta) is evaluated at its limiting argument.
inline LimitPath vertical_path(int side, std::vector<double> ts = geometric_ladder()) {
    LimitPath p;
    p.name = side >= 0 ? "vertical(+)" : "vertical(-)";
    const double s = side >= 0 ? 1.0 : -1.0;
    p.at = [s](double t) { return ParamPair{1.0, 1.0 + s * t}; };
    p.ts = std::move(ts);
    return p;
}

// Default slope family: m in {-2, -1, -1/2, 0}, approached from both region
// sides (the positive-slope directions leave R_ab entirely).
inline std::vector<LimitPath> default_slope_paths() {
    std::vector<LimitPath> paths;
    for (double m : {-2.0, -1.0, -0.5, 0.0}) {
        paths.push_back(slope_path(m));
        paths.push_back(mirrored_slope_path(m));
    }
    return paths;
}

inline std::vector<LimitPath> vertical_paths() {
    return {vertical_path(-1), vertical_path(+1)};
}

} // namespace sab
