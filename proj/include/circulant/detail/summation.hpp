#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace circulant::detail {

// Neumaier's variant of Kahan summation: tracks a running compensation that
// also survives the case |term| > |sum|.
struct NeumaierSum {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double term) {
        const long double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }

    long double value() const { return sum + comp; }
};

// sin^2(pi k / n) evaluated after folding k mod n into [0, n/2], so congruent
// and reflected arguments give bit-identical results.
inline long double folded_sin_sq(std::int64_t k, int n) {
    std::int64_t r = k % n;
    if (r < 0) r += n;
    r = std::min(r, static_cast<std::int64_t>(n) - r);
    const long double x =
        std::sin(std::numbers::pi_v<long double> * static_cast<long double>(r) /
                 static_cast<long double>(n));
    return x * x;
}

} // namespace circulant::detail
