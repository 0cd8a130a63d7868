#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sab/distribution.hpp"
#include "sab/errors.hpp"

namespace sab {

// An (alpha, beta) parameter pair. Any reals are constructible; membership in
// the admissible region is a separate query.
struct ParamPair {
    double alpha = 1.0;
    double beta = 1.0;
};

// R_ab = R_a u R_b with
//   R_a = { alpha >= 1, 0 <= beta <= 1 } \ {(1,0)}
//   R_b = { 0 <= alpha <= 1, beta >= 1 } \ {(0,1)}
// (1,1) is a member; evaluation of the entropy additionally needs alpha != beta.
inline bool region_contains(const ParamPair& pr) {
    const double a = pr.alpha, b = pr.beta;
    const bool in_ra = a >= 1.0 && b >= 0.0 && b <= 1.0 && !(a == 1.0 && b == 0.0);
    const bool in_rb = a >= 0.0 && a <= 1.0 && b >= 1.0 && !(a == 0.0 && b == 1.0);
    return in_ra || in_rb;
}

// p^x with the convention 0^x := 0 for all x >= 0 (including x = 0), which
// makes expandability hold identically and keeps zero cells inert everywhere.
inline double pow0(double p, double x) {
    return p == 0.0 ? 0.0 : std::pow(p, x);
}

enum class NormProperty { I, II, III, IV, IIIPrime };

inline const char* to_string(NormProperty p) {
    switch (p) {
        case NormProperty::I: return "I";
        case NormProperty::II: return "II";
        case NormProperty::III: return "III";
        case NormProperty::IV: return "IV";
        case NormProperty::IIIPrime: return "III'";
    }
    return "?";
}

// A normalizer C_{alpha,beta} together with its constant k and the property
// set its constructor claims. Claims are never trusted: the verifier module
// tests them.
struct Normalizer {
    std::string name;
    std::function<double(double, double)> c;
    double k = 1.0;
    std::set<NormProperty> claimed_properties;

    double operator()(double alpha, double beta) const { return c(alpha, beta); }
};

inline void require_evaluable(const ParamPair& pr) {
    if (!region_contains(pr))
        throw RegionError("parameter pair (" + std::to_string(pr.alpha) + ", " +
                          std::to_string(pr.beta) + ") is outside the region R_ab");
    if (pr.alpha == pr.beta)
        throw NondegenerateParamError("alpha must differ from beta (normalizer vanishes on the diagonal)");
}

// One trace-form term (p^alpha - p^beta) / C(alpha, beta).
inline double summand(double p, const ParamPair& pr, const Normalizer& norm) {
    require_evaluable(pr);
    if (p == 0.0) return 0.0;
    return (pow0(p, pr.alpha) - pow0(p, pr.beta)) / norm(pr.alpha, pr.beta);
}

namespace detail {
// Unchecked summand for hot loops; preconditions validated once by the caller.
inline double summand_unchecked(double p, double alpha, double beta, double c) {
    if (p == 0.0) return 0.0;
    return (std::pow(p, alpha) - std::pow(p, beta)) / c;
}

// Accumulates in ascending order so any permutation of the inputs produces a
// bit-identical sum (and trailing zeros are exact no-ops).
inline double ordered_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double total = 0.0;
    for (double t : terms) total += t;
    return total;
}
} // namespace detail

// S_{alpha,beta}(p) = sum_i (p_i^alpha - p_i^beta) / C(alpha, beta).
inline double entropy(const Distribution& dist, const ParamPair& pr, const Normalizer& norm) {
    require_evaluable(pr);
    const double c = norm(pr.alpha, pr.beta);
    std::vector<double> terms;
    terms.reserve(dist.size());
    for (double p : dist.probs())
        terms.push_back(detail::summand_unchecked(p, pr.alpha, pr.beta, c));
    return detail::ordered_sum(terms);
}

// Shannon entropy -k sum p ln p with 0 ln 0 := 0.
inline double shannon_entropy(const Distribution& dist, double k) {
    if (!(k > 0.0)) throw DomainError("shannon_entropy: k must be positive");
    std::vector<double> terms;
    terms.reserve(dist.size());
    for (double p : dist.probs())
        terms.push_back(p == 0.0 ? 0.0 : -k * p * std::log(p));
    return detail::ordered_sum(terms);
}

// The canonical normalizer C(alpha, beta) = (beta - alpha) / k.
inline Normalizer canonical_normalizer(double k) {
    if (!(k > 0.0)) throw DomainError("canonical_normalizer: k must be positive");
    Normalizer n;
    n.name = "canonical";
    n.k = k;
    n.c = [k](double alpha, double beta) { return (beta - alpha) / k; };
    n.claimed_properties = {NormProperty::I, NormProperty::II, NormProperty::III,
                            NormProperty::IV, NormProperty::IIIPrime};
    return n;
}

// Closed form of the entropy at the uniform point, (n^{1-a} - n^{1-b}) / C.
inline double uniform_entropy_closed_form(std::size_t n, const ParamPair& pr,
                                          const Normalizer& norm) {
    require_evaluable(pr);
    const double nn = static_cast<double>(n);
    return (std::pow(nn, 1.0 - pr.alpha) - std::pow(nn, 1.0 - pr.beta)) /
           norm(pr.alpha, pr.beta);
}

} // namespace sab
