#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sab/errors.hpp"

namespace sab {

inline constexpr double kSimplexTol = 1e-12;

// A point of the probability simplex: entries >= 0 summing to 1 within 1e-12.
// Inputs are never silently renormalized; use Distribution::renormalized for that.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.empty())
            throw DomainError("distribution: needs at least one entry");
        double sum = 0.0;
        for (double p : probs_) {
            if (!(p >= 0.0) || !std::isfinite(p))
                throw DomainError("distribution: entries must be finite and >= 0, got " +
                                  std::to_string(p));
            sum += p;
        }
        if (std::fabs(sum - 1.0) > kSimplexTol)
            throw DomainError("distribution: entries must sum to 1 within 1e-12, got sum " +
                              std::to_string(sum));
    }

    static Distribution renormalized(std::vector<double> probs) {
        double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
        if (!(sum > 0.0))
            throw DomainError("distribution: cannot renormalize, sum is not positive");
        for (auto& p : probs) p /= sum;
        return Distribution(std::move(probs));
    }

    static Distribution uniform(std::size_t n) {
        return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    // Same distribution with a trailing zero appended ([TGSK4] helper).
    Distribution expanded() const {
        std::vector<double> p = probs_;
        p.push_back(0.0);
        return Distribution(std::move(p));
    }

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

// Matrix p_ij >= 0 with total mass 1; marginals p_i and conditionals p(j|i)
// are derived. Conditionals are defined only on rows with positive marginal.
class JointDistribution {
public:
    explicit JointDistribution(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
        if (rows_.empty())
            throw DomainError("joint: needs at least one row");
        double total = 0.0;
        marginals_.reserve(rows_.size());
        for (const auto& row : rows_) {
            if (row.empty())
                throw DomainError("joint: rows must be non-empty");
            double rs = 0.0;
            for (double p : row) {
                if (!(p >= 0.0) || !std::isfinite(p))
                    throw DomainError("joint: cells must be finite and >= 0");
                rs += p;
            }
            marginals_.push_back(rs);
            total += rs;
        }
        if (std::fabs(total - 1.0) > kSimplexTol)
            throw DomainError("joint: cells must sum to 1 within 1e-12");
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols(std::size_t i) const { return rows_[i].size(); }
    double cell(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    double marginal(std::size_t i) const { return marginals_[i]; }

    double conditional(std::size_t i, std::size_t j) const {
        if (!(marginals_[i] > 0.0))
            throw DomainError("joint: conditional p(j|i) undefined on zero-marginal row");
        return rows_[i][j] / marginals_[i];
    }

    Distribution marginal_distribution() const {
        return Distribution::renormalized(marginals_);
    }

private:
    std::vector<std::vector<double>> rows_;
    std::vector<double> marginals_;
};

} // namespace sab
