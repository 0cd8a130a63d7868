#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "sab/distribution.hpp"
#include "sab/entropy.hpp"
#include "sab/errors.hpp"
#include "sab/limit_path.hpp"
#include "sab/report.hpp"
#include "sab/rng.hpp"

namespace sab {

// ---------------------------------------------------------------------------
// Default parameter grids
// ---------------------------------------------------------------------------

// Twelve pairs spread over both branches of R_ab (six plus their swaps).
inline std::vector<ParamPair> region_pair_grid() {
    std::vector<ParamPair> grid = {{2.0, 1.0},  {2.0, 0.5},  {2.0, 0.0},
                                   {1.5, 0.25}, {3.0, 0.7},  {1.1, 0.9}};
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) grid.push_back({grid[i].beta, grid[i].alpha});
    return grid;
}

// Mirror pairs (1+d, 1-d) and their swaps. On this family the antisymmetry
// C(beta,alpha) = -C(alpha,beta) holds exactly for every normalizer built
// from an even function of alpha-1 (the Weierstrass construction included).
inline std::vector<ParamPair> mirror_pair_grid() {
    std::vector<ParamPair> grid;
    for (double d : {0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 0.9, 1.0}) {
        grid.push_back({1.0 + d, 1.0 - d});
        grid.push_back({1.0 - d, 1.0 + d});
    }
    return grid;
}

namespace detail {
inline std::string pair_str(const ParamPair& pr) {
    return "(" + fmt17(pr.alpha) + "," + fmt17(pr.beta) + ")";
}
} // namespace detail

// ---------------------------------------------------------------------------
// [TGSK3] two-parameter generalized Shannon additivity
// ---------------------------------------------------------------------------

// Residual of
//   sum_ij s(p_ij) = sum_i p_i^a sum_j s(p(j|i)) + sum_i s(p_i) sum_j p(j|i)^b
// relative to max(1, |LHS|). Rows with zero marginal are skipped: their
// conditionals are undefined and all their cells contribute 0 to the LHS.
inline double shannon_additivity_residual(const JointDistribution& joint, const ParamPair& pr,
                                          const Normalizer& norm) {
    require_evaluable(pr);
    const double c = norm(pr.alpha, pr.beta);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < joint.rows(); ++i) {
        const double pi = joint.marginal(i);
        if (pi == 0.0) continue;
        double s_cond = 0.0, pow_cond = 0.0;
        for (std::size_t j = 0; j < joint.cols(i); ++j) {
            lhs += detail::summand_unchecked(joint.cell(i, j), pr.alpha, pr.beta, c);
            const double q = joint.cell(i, j) / pi;
            s_cond += detail::summand_unchecked(q, pr.alpha, pr.beta, c);
            pow_cond += pow0(q, pr.beta);
        }
        rhs += pow0(pi, pr.alpha) * s_cond +
               detail::summand_unchecked(pi, pr.alpha, pr.beta, c) * pow_cond;
    }
    return std::fabs(lhs - rhs) / std::fmax(1.0, std::fabs(lhs));
}

inline CheckReport check_shannon_additivity(const JointDistribution& joint, const ParamPair& pr,
                                            const Normalizer& norm, double tol = 1e-12) {
    CheckReport rep;
    rep.name = "shannon-additivity";
    const double res = shannon_additivity_residual(joint, pr, norm);
    rep.record(1, res, res <= tol, "pair=" + detail::pair_str(pr));
    return rep;
}

// Battery over seeded random joints crossed with a parameter grid.
inline CheckReport additivity_battery(const Normalizer& norm, const std::vector<ParamPair>& grid,
                                      std::size_t joints, std::uint64_t seed,
                                      std::size_t max_rows = 6, std::size_t max_cols = 6,
                                      double tol = 1e-12) {
    CheckReport rep;
    rep.name = "shannon-additivity";
    Rng rng(seed);
    std::size_t trial = 0;
    for (std::size_t jn = 0; jn < joints; ++jn) {
        JointDistribution joint(rng.joint(max_rows, max_cols));
        for (const auto& pr : grid) {
            const double res = shannon_additivity_residual(joint, pr, norm);
            rep.record(++trial, res, res <= tol,
                       "joint#" + std::to_string(jn) + " pair=" + detail::pair_str(pr));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// [TGSK2] maximality at the uniform distribution
// ---------------------------------------------------------------------------

inline CheckReport check_maximality(const ParamPair& pr, const Normalizer& norm, std::size_t n,
                                    std::size_t trials, std::uint64_t seed, double tol = 1e-12) {
    if (n < 2) throw DomainError("check_maximality: n must be at least 2");
    require_evaluable(pr);
    CheckReport rep;
    rep.name = "maximality";
    const double s_uniform = entropy(Distribution::uniform(n), pr, norm);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Distribution d = Distribution::renormalized(rng.simplex(n));
        const double s = entropy(d, pr, norm);
        const double excess = s - s_uniform;
        rep.record(t + 1, std::fmax(excess, 0.0), excess <= tol,
                   "sample#" + std::to_string(t) + " n=" + std::to_string(n) +
                       " pair=" + detail::pair_str(pr));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// [TGSK4] expandability
// ---------------------------------------------------------------------------

inline CheckReport check_expandability(const Distribution& dist, const ParamPair& pr,
                                       const Normalizer& norm) {
    CheckReport rep;
    rep.name = "expandability";
    const double res = std::fabs(entropy(dist.expanded(), pr, norm) - entropy(dist, pr, norm));
    rep.record(1, res, res == 0.0, "pair=" + detail::pair_str(pr));
    return rep;
}

inline CheckReport expandability_battery(const Normalizer& norm, const std::vector<ParamPair>& grid,
                                         std::size_t dists, std::uint64_t seed,
                                         std::size_t max_n = 10) {
    CheckReport rep;
    rep.name = "expandability";
    Rng rng(seed);
    std::size_t trial = 0;
    for (std::size_t dn = 0; dn < dists; ++dn) {
        Distribution d = Distribution::renormalized(rng.simplex(rng.integer(1, max_n)));
        for (const auto& pr : grid) {
            const double res =
                std::fabs(entropy(d.expanded(), pr, norm) - entropy(d, pr, norm));
            rep.record(++trial, res, res == 0.0,
                       "dist#" + std::to_string(dn) + " pair=" + detail::pair_str(pr));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// [TGSK1] continuity probe in (alpha, beta)
// ---------------------------------------------------------------------------

// Samples `samples` evenly spaced directions at the given radius and at half of
// it, keeping points inside R_ab off the diagonal. The modulus is measured
// against the center when the center itself is evaluable, otherwise as the
// oscillation among the sampled values (the useful mode at (1,1)). Pass iff
// the modulus shrinks by more than a relative margin when the radius is
// halved; a modulus identically zero passes. Evidence, not proof.
inline CheckReport check_continuity_probe(const Distribution& dist, const Normalizer& norm,
                                          const ParamPair& center, double radius,
                                          std::size_t samples = 64) {
    if (!(radius > 0.0)) throw DomainError("continuity probe: radius must be positive");
    CheckReport rep;
    rep.name = "continuity-probe";

    const bool center_evaluable = region_contains(center) && center.alpha != center.beta;
    const double s_center = center_evaluable ? entropy(dist, center, norm) : 0.0;

    auto modulus = [&](double r) {
        double worst = 0.0, lo = 0.0, hi = 0.0;
        bool any = false;
        for (std::size_t j = 0; j < samples; ++j) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
            const ParamPair pr{center.alpha + r * std::cos(th), center.beta + r * std::sin(th)};
            if (!region_contains(pr) || pr.alpha == pr.beta) continue;
            const double s = entropy(dist, pr, norm);
            if (center_evaluable) {
                worst = std::fmax(worst, std::fabs(s - s_center));
            } else if (!any) {
                lo = hi = s;
                any = true;
            } else {
                lo = std::fmin(lo, s);
                hi = std::fmax(hi, s);
            }
        }
        return center_evaluable ? worst : (any ? hi - lo : 0.0);
    };

    const double m_full = modulus(radius);
    const double m_half = modulus(radius * 0.5);
    const bool shrinks = (m_half < m_full * (1.0 - 1e-6)) || (m_half == 0.0 && m_full == 0.0);
    rep.record(2 * samples, m_full == 0.0 ? 0.0 : m_half / m_full, shrinks,
               "center=" + detail::pair_str(center) + " radius=" + fmt17(radius) +
                   " modulus=" + fmt17(m_full) + " half=" + fmt17(m_half));
    return rep;
}

// ---------------------------------------------------------------------------
// Shannon limit along a path to (1,1)
// ---------------------------------------------------------------------------

// Evaluates S_{alpha(t),beta(t)} along the path and compares with the Shannon
// entropy -k sum p ln p. Pass iff the error sequence is eventually
// non-increasing (at least over the final step) and the last error <= tol.
inline CheckReport check_shannon_limit(const Distribution& dist, const Normalizer& norm,
                                       const LimitPath& path, double k, double tol = 1e-6) {
    path.validate();
    CheckReport rep;
    rep.name = "shannon-limit";
    const double target = shannon_entropy(dist, k);
    std::vector<double> errs;
    errs.reserve(path.ts.size());
    for (double t : path.ts)
        errs.push_back(std::fabs(entropy(dist, path.at(t), norm) - target));
    bool tail_decreasing = true; // from some index onward, incl. the final step
    std::size_t from = errs.size() - 1;
    while (from > 0 && errs[from] <= errs[from - 1] + 1e-15) --from;
    tail_decreasing = errs.size() == 1 || from <= errs.size() - 2;
    const double final_err = errs.back();
    rep.record(errs.size(), final_err, tail_decreasing && final_err <= tol,
               "path=" + path.name + " final_error=" + fmt17(final_err) +
                   (tail_decreasing ? "" : " (errors not eventually decreasing)"));
    return rep;
}

// ---------------------------------------------------------------------------
// Normalizer properties I, II, III' (III/IV probed informationally elsewhere)
// ---------------------------------------------------------------------------

// Grid part: (I) sign(C) = sign(beta-alpha) and C(beta,alpha) = -C(alpha,beta);
// (II) C != 0 off-diagonal. Path part: (III') along every supplied path,
// C/(alpha-beta) converges to -1/k within tol, and the per-path limits agree
// within tol across paths.
inline CheckReport check_normalizer_properties(const Normalizer& norm,
                                               const std::vector<ParamPair>& grid,
                                               const std::vector<LimitPath>& paths,
                                               double tol = 1e-6) {
    CheckReport rep;
    rep.name = "normalizer-properties";
    std::size_t trial = 0;

    for (const auto& pr : grid) {
        if (!region_contains(pr))
            throw RegionError("normalizer properties: grid pair outside R_ab");
        const double c = norm(pr.alpha, pr.beta);
        const double c_swapped = norm(pr.beta, pr.alpha);
        const double want_sign = pr.beta > pr.alpha ? 1.0 : (pr.beta < pr.alpha ? -1.0 : 0.0);
        const double got_sign = c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0);
        rep.record(++trial, 0.0, got_sign == want_sign,
                   "I(sign) pair=" + detail::pair_str(pr) + " C=" + fmt17(c));
        const double anti = std::fabs(c_swapped + c) / std::fmax(1.0, std::fabs(c));
        rep.record(++trial, anti, anti <= 1e-12,
                   "I(antisymmetry) pair=" + detail::pair_str(pr));
        if (pr.alpha != pr.beta)
            rep.record(++trial, 0.0, c != 0.0, "II(nonzero) pair=" + detail::pair_str(pr));
    }

    std::vector<double> limits;
    for (const auto& path : paths) {
        path.validate();
        const ParamPair last = path.at(path.ts.back());
        const double est = norm(last.alpha, last.beta) / (last.alpha - last.beta);
        limits.push_back(est);
        const double err = std::fabs(est - (-1.0 / norm.k));
        rep.record(++trial, err, err <= tol,
                   "III'(limit) path=" + path.name + " estimate=" + fmt17(est));
    }
    if (!limits.empty()) {
        const auto [lo, hi] = std::minmax_element(limits.begin(), limits.end());
        const double spread = *hi - *lo;
        rep.record(++trial, spread, spread <= tol, "III'(path-agreement) spread=" + fmt17(spread));
    }
    return rep;
}

// Informational probe of the original differentiability-based properties III
// and IV: finite-difference d C/d alpha (and d C/d beta) near alpha = 1 across
// step scales, reported as data. Always verdict pass; the III' check above is
// the normative one.
inline CheckReport derivative_probe_report(const Normalizer& norm, double beta_offset = 1e-3,
                                           double h = 1e-6) {
    CheckReport rep;
    rep.name = "properties-III-IV-informational";
    std::size_t trial = 0;
    for (double y : {-beta_offset, beta_offset}) {
        const double b = 1.0 + y;
        const double da = (norm(1.0 + h, b) - norm(1.0 - h, b)) / (2.0 * h);
        rep.record(++trial, std::fabs(da + 1.0 / norm.k), true,
                   "dC/dalpha at alpha=1, beta=" + fmt17(b) + ": " + fmt17(da) +
                       " (IV target " + fmt17(-1.0 / norm.k) + ")");
        const double a = 1.0 + y;
        const double db = (norm(a, 1.0 + h) - norm(a, 1.0 - h)) / (2.0 * h);
        rep.record(++trial, std::fabs(db - 1.0 / norm.k), true,
                   "dC/dbeta at beta=1, alpha=" + fmt17(a) + ": " + fmt17(db) +
                       " (IV target " + fmt17(1.0 / norm.k) + ")");
    }
    return rep;
}

} // namespace sab
