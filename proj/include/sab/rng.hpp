#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sab {

// Deterministic random source. The mt19937_64 stream is fixed by the standard;
// the uniform/exponential mappings are hand-rolled so results do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // strictly inside (0,1)
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double exponential() { return -std::log(uniform01()); }

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) { // inclusive bounds
        return lo + eng_() % (hi - lo + 1);
    }

    // Uniform sample from the simplex via normalized exponential spacings.
    std::vector<double> simplex(std::size_t n) {
        std::vector<double> e(n);
        double total = 0.0;
        for (auto& v : e) {
            v = exponential();
            total += v;
        }
        for (auto& v : e) v /= total;
        return e;
    }

    // Random joint distribution: up to max_rows rows of up to max_cols positive
    // cells, globally normalized to 1.
    std::vector<std::vector<double>> joint(std::size_t max_rows, std::size_t max_cols) {
        std::size_t n = integer(1, max_rows);
        std::vector<std::vector<double>> rows(n);
        double total = 0.0;
        for (auto& row : rows) {
            row.resize(integer(1, max_cols));
            for (auto& v : row) {
                v = exponential();
                total += v;
            }
        }
        for (auto& row : rows)
            for (auto& v : row) v /= total;
        return rows;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace sab
