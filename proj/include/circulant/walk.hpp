#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "numbers.hpp"
#include "rng.hpp"
#include "spectral.hpp"

namespace circulant {

// Defensive bound on a single walk; a simple random walk on a connected
// graph hits its target with probability 1, so reaching the cap signals a
// broken setup rather than bad luck and is reported as an error.
inline constexpr std::int64_t kWalkStepCap = 1'000'000'000;

namespace detail {

// Steps until a walk starting at vertex 0 first reaches `target`, stepping
// uniformly over the offset list. The cap is a parameter so tests can
// exercise the error path cheaply.
inline std::int64_t walk_steps(const std::vector<int>& offsets, int n, int target,
                               SplitMix64& rng, std::int64_t cap) {
    const auto m = static_cast<std::uint64_t>(offsets.size());
    int pos = 0;
    std::int64_t steps = 0;
    while (pos != target) {
        if (steps >= cap) {
            throw StepCapError("walk exceeded " + std::to_string(cap) +
                               " steps without hitting target " + std::to_string(target));
        }
        pos = (pos + offsets[static_cast<std::size_t>(rng.next_below(m))]) % n;
        ++steps;
    }
    return steps;
}

} // namespace detail

// First-passage time H_{0,l} on C_N(1,2), exact: |E| R(l) with |E| = 2N.
inline BigRational fpt_closed(int n, int l) {
    detail::require_c12(n);
    if (l < 1 || l >= n) {
        throw DomainError("walk target l = " + std::to_string(l) + " outside [1, " +
                          std::to_string(n - 1) + "]");
    }
    return BigRational(2 * n) * c12_resistance(n, l);
}

// First-passage time on any connected circulant graph: |E| R(l) with the
// true (antipodal-aware) edge count and the spectral resistance.
inline double fpt_general(const CirculantSpec& spec, int l) {
    if (l < 1 || l >= spec.n()) {
        throw DomainError("walk target l = " + std::to_string(l) + " outside [1, " +
                          std::to_string(spec.n() - 1) + "]");
    }
    return static_cast<double>(spec.edge_count()) * resistance_spectral(spec, l);
}

// Mean first-passage time of C_N(1,2), exact: (d/N) R(G) with d = 4.
inline BigRational mfpt_closed(int n) {
    detail::require_c12(n);
    return BigRational(4, n) * c12_kirchhoff(n);
}

// Spectral route to the same quantity, valid for any connected circulant:
// the eigentime identity d * sum 1/lambda_n.
inline double mfpt_spectral(const CirculantSpec& spec) { return eigentime_mfpt(spec); }

// Commute time 2|E| R(l); equal to 2 H_{0,l} by vertex transitivity.
inline BigRational commute_closed(int n, int l) {
    return BigRational(2) * fpt_closed(n, l);
}

inline double commute(const CirculantSpec& spec, int l) {
    return 2.0 * fpt_general(spec, l);
}

// Monte Carlo estimate of a first-passage time.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample std / sqrt(trials); 0 when trials == 1
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

inline McEstimate simulate_fpt(const CirculantSpec& spec, int l, std::int64_t trials,
                               std::uint64_t seed) {
    if (!spec.connected()) {
        throw DisconnectedError("random walk cannot reach every vertex: graph is disconnected");
    }
    if (l < 1 || l >= spec.n()) {
        throw DomainError("walk target l = " + std::to_string(l) + " outside [1, " +
                          std::to_string(spec.n() - 1) + "]");
    }
    if (trials < 1) throw DomainError("trials must be >= 1, got " + std::to_string(trials));

    const std::vector<int> offsets = spec.neighbor_offsets();
    // Integer aggregation keeps the result independent of summation order
    // (and therefore of any parallel partitioning of the trial range).
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
        const std::int64_t steps = detail::walk_steps(offsets, spec.n(), l, rng, kWalkStepCap);
        const auto s = static_cast<unsigned __int128>(steps);
        sum += s;
        sum_sq += s * s;
    }

    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    const long double mean = static_cast<long double>(sum) / static_cast<long double>(trials);
    est.mean = static_cast<double>(mean);
    if (trials > 1) {
        long double centered =
            static_cast<long double>(sum_sq) - mean * mean * static_cast<long double>(trials);
        if (centered < 0.0L) centered = 0.0L; // guard fp dust when all samples coincide
        const long double variance = centered / static_cast<long double>(trials - 1);
        est.std_error = static_cast<double>(std::sqrt(variance / static_cast<long double>(trials)));
    }
    return est;
}

} // namespace circulant
