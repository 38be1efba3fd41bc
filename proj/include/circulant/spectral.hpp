#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "detail/summation.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "numbers.hpp"

namespace circulant {

// Two-point resistance with the per-mode summands retained for diagnostics:
// value = (1/N) sum_{n=1}^{N-1} 4 sin^2(n l pi / N) / lambda_n.
struct SpectralResistance {
    double value = 0.0;
    std::vector<double> terms; // summand for n = 1..N-1, in order
};

inline SpectralResistance resistance_spectral_terms(const CirculantSpec& spec, int l) {
    const int n = spec.n();
    if (l < 0 || l >= n) {
        throw DomainError("offset l = " + std::to_string(l) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    const EigenvalueTable table = eigenvalues(spec);
    if (!table.connected()) {
        throw DisconnectedError("zero eigenvalue at nonzero mode: graph is disconnected");
    }

    SpectralResistance out;
    out.terms.resize(static_cast<std::size_t>(n - 1));
    // Modes k and N-k carry identical summands; evaluate each pair once and
    // feed the doubled value to a compensated accumulator.
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double num = 4.0L * detail::folded_sin_sq(static_cast<std::int64_t>(k) * l, n);
        const long double term = num / static_cast<long double>(table[static_cast<std::size_t>(k)]);
        const auto t = static_cast<double>(term);
        out.terms[static_cast<std::size_t>(k - 1)] = t;
        if (2 * k == n) {
            acc.add(term);
        } else {
            out.terms[static_cast<std::size_t>(n - k - 1)] = t;
            acc.add(2.0L * term);
        }
    }
    out.value = static_cast<double>(acc.value() / static_cast<long double>(n));
    return out;
}

inline double resistance_spectral(const CirculantSpec& spec, int l) {
    const int n = spec.n();
    if (l < 0 || l >= n) {
        throw DomainError("offset l = " + std::to_string(l) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    const EigenvalueTable table = eigenvalues(spec);
    if (!table.connected()) {
        throw DisconnectedError("zero eigenvalue at nonzero mode: graph is disconnected");
    }
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double num = 4.0L * detail::folded_sin_sq(static_cast<std::int64_t>(k) * l, n);
        const long double term = num / static_cast<long double>(table[static_cast<std::size_t>(k)]);
        acc.add(2 * k == n ? term : 2.0L * term);
    }
    return static_cast<double>(acc.value() / static_cast<long double>(n));
}

// Kirchhoff index (total effective resistance) as N times the sum of
// reciprocal nonzero Laplacian eigenvalues.
inline double kirchhoff_spectral(const CirculantSpec& spec) {
    const EigenvalueTable table = eigenvalues(spec);
    if (!table.connected()) {
        throw DisconnectedError("zero eigenvalue at nonzero mode: graph is disconnected");
    }
    const int n = spec.n();
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double term = 1.0L / static_cast<long double>(table[static_cast<std::size_t>(k)]);
        acc.add(2 * k == n ? term : 2.0L * term);
    }
    return static_cast<double>(static_cast<long double>(n) * acc.value());
}

// Eigentime identity: the mean first-passage time of the simple random walk
// equals d * sum_{n>=1} 1/lambda_n for a d-regular graph.
inline double eigentime_mfpt(const CirculantSpec& spec) {
    const EigenvalueTable table = eigenvalues(spec);
    if (!table.connected()) {
        throw DisconnectedError("zero eigenvalue at nonzero mode: graph is disconnected");
    }
    const int n = spec.n();
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double term = 1.0L / static_cast<long double>(table[static_cast<std::size_t>(k)]);
        acc.add(2 * k == n ? term : 2.0L * term);
    }
    return static_cast<double>(static_cast<long double>(spec.degree()) * acc.value());
}

// Power sum of sines over the regular angle grid,
//   S(N, J) = sum_{n=1}^{N-1} sin^{2J}(n pi / N),
// in closed form: the classical central-binomial term plus wraparound
// corrections that switch on once J reaches a multiple of N:
//   S = N/2^{2J} C(2J, J) + N/2^{2J-1} sum_{p=1}^{floor(J/N)} (-1)^{pN} C(2J, J - pN).
// The (-1)^{pN} factor only bites for odd N; it is kept verbatim for both
// parities. J = 0 is rejected: the closed form would give N where the direct
// sum gives N-1.
inline BigRational trig_power_sum_exact(int big_n, int power_j) {
    if (big_n < 2) {
        throw TooSmallError("trig power sum needs N >= 2, got N = " + std::to_string(big_n));
    }
    if (power_j < 1) {
        throw BadPowerError("trig power sum needs J >= 1, got J = " + std::to_string(power_j));
    }
    BigInt numerator = BigInt(big_n) * binomial(2L * power_j, power_j);
    for (int p = 1; p * big_n <= power_j; ++p) {
        BigInt corr = BigInt(2) * big_n * binomial(2L * power_j, power_j - static_cast<long>(p) * big_n);
        if ((static_cast<std::int64_t>(p) * big_n) % 2 != 0) corr = -corr;
        numerator += corr;
    }
    return BigRational(numerator, BigInt(1) << (2 * power_j));
}

inline double trig_power_sum(int big_n, int power_j) {
    return to_double(trig_power_sum_exact(big_n, power_j));
}

} // namespace circulant
