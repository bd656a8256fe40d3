#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qscgrn {

// Seeded random source built on mt19937_64 with explicit value transforms.
// std::uniform_real_distribution and friends are not pinned by the standard,
// so all draws are derived from raw 64-bit words to keep streams identical
// across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Box-Muller; consumes exactly two words per call (plus redraws of the
    // zero word, probability 2^-53).
    double normal(double mean, double sd) {
        double u1 = uniform01();
        while (u1 == 0.0) {
            u1 = uniform01();
        }
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * radius * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t word() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

// Inclusive prefix sums of a probability vector, for categorical sampling.
inline std::vector<double> cumulative_distribution(const std::vector<double>& p) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    if (!cdf.empty()) {
        cdf.back() = std::max(cdf.back(), 1.0);
    }
    return cdf;
}

inline std::uint64_t sample_categorical(const std::vector<double>& cdf, double u) {
    if (cdf.empty()) {
        throw std::invalid_argument("sample_categorical: empty distribution");
    }
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    return std::min<std::uint64_t>(idx, cdf.size() - 1);
}

} // namespace qscgrn
