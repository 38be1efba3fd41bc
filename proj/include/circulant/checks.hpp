#pragma once

#include <cmath>
#include <string>

#include "closed_form.hpp"
#include "detail/summation.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "walk.hpp"

namespace circulant {

// Composite consistency checks over whole graphs. Exact checks compare
// rationals; numeric checks carry their tolerance in the result.

// R(l) = R(N-l) on C_N(1,2), all offsets, exact.
inline CheckResult check_c12_symmetry(int n) {
    const ResistanceProfile profile = c12_profile(n);
    bool ok = true;
    for (int l = 1; l < n && ok; ++l) ok = profile.at(l) == profile.at(n - l);
    return make_check_exact("c12-symmetry-exact", ok);
}

// R(l+1) = l(1 - l/N) + 2R(1) - 3R(l) - R(l-1) on C_N(1,2), exact,
// with R(0) = 0.
inline CheckResult check_c12_recursion(int n) {
    const ResistanceProfile profile = c12_profile(n);
    bool ok = true;
    for (int l = 1; l + 1 < n && ok; ++l) {
        const BigRational prev = l == 1 ? BigRational(0) : profile.at(l - 1);
        const BigRational expected = BigRational(BigInt(l) * (n - l), BigInt(n)) +
                                     BigRational(2) * profile.at(1) -
                                     BigRational(3) * profile.at(l) - prev;
        ok = profile.at(l + 1) == expected;
    }
    return make_check_exact("c12-recursion-exact", ok);
}

// R(v) = R(N-v) on C_N(2) for odd N, exact.
inline CheckResult check_c2_symmetry(int n) {
    if (n % 2 == 0) throw DomainError("C_N(2) symmetry check needs odd N");
    bool ok = true;
    for (int v = 1; v < n && ok; ++v) {
        ok = *c2_resistance(n, v).value == *c2_resistance(n, n - v).value;
    }
    return make_check_exact("c2-symmetry-exact", ok);
}

// R(l+1) = l(1 - l/N) + (1/2)(N - 1/N) - 2R(l) - R(l-1) on C_N(2), odd N,
// exact, with R(0) = 0.
inline CheckResult check_c2_recursion(int n) {
    if (n % 2 == 0) throw DomainError("C_N(2) recursion check needs odd N");
    detail::require_c12(n);
    const BigRational affine(BigInt(n) * n - 1, BigInt(2) * n); // (1/2)(N - 1/N)
    bool ok = true;
    for (int l = 1; l + 1 < n && ok; ++l) {
        const BigRational prev = l == 1 ? BigRational(0) : *c2_resistance(n, l - 1).value;
        const BigRational expected = BigRational(BigInt(l) * (n - l), BigInt(n)) + affine -
                                     BigRational(2) * *c2_resistance(n, l).value - prev;
        ok = *c2_resistance(n, l + 1).value == expected;
    }
    return make_check_exact("c2-recursion-exact", ok);
}

// Foster's first identity specialized through the two adjacency offsets of
// C_N(1,2): N R(1) + N R(2) = N - 1 exactly.
inline CheckResult check_foster_exact(int n) {
    const BigRational sum =
        BigRational(n) * c12_resistance(n, 1) + BigRational(n) * c12_resistance(n, 2);
    return make_check_exact("foster-exact", sum == BigRational(n - 1));
}

// Linear relation among the first three hitting times on C_N(1,2):
// 3 H_{0,1} - H_{0,2} - H_{0,3} = 4 exactly.
inline CheckResult check_hitting_relation(int n) {
    if (n < 7) {
        throw DomainError("hitting relation needs N >= 7, got N = " + std::to_string(n));
    }
    const BigRational lhs = BigRational(3) * fpt_closed(n, 1) - fpt_closed(n, 2) - fpt_closed(n, 3);
    return make_check_exact("hitting-relation-exact", lhs == BigRational(4));
}

// The parity closed form of the Kirchhoff index against the profile sum
// (N/2) sum_l R(l), exact.
inline CheckResult check_kirchhoff_profile_sum(int n) {
    const BigRational via_profile = BigRational(n, 2) * c12_profile(n).sum();
    return make_check_exact("kirchhoff-profile-sum-exact", c12_kirchhoff(n) == via_profile);
}

// MFPT equals the mean of the N-1 first-passage times, exact.
inline CheckResult check_mfpt_mean_fpt(int n) {
    BigRational total(0);
    for (int l = 1; l < n; ++l) total += fpt_closed(n, l);
    return make_check_exact("mfpt-mean-fpt-exact", mfpt_closed(n) == total / n);
}

// MFPT closed form against the eigentime reciprocal-eigenvalue sum.
inline CheckResult check_mfpt_eigentime(int n) {
    const CirculantSpec spec(n, {1, 2});
    return make_check_relative("mfpt-eigentime", to_double(mfpt_closed(n)),
                               eigentime_mfpt(spec), 1e-9);
}

// Closed-form trig power sum against direct summation, worst offender over
// J = 1..max_j reported.
inline CheckResult check_trig_power_sum(int n, int max_j) {
    if (max_j < 1) throw BadPowerError("trig power sum check needs max J >= 1");
    double worst = -1.0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    for (int j = 1; j <= max_j; ++j) {
        detail::NeumaierSum acc;
        for (int k = 1; 2 * k <= n; ++k) {
            const long double term =
                std::pow(detail::folded_sin_sq(k, n), static_cast<long double>(j));
            acc.add(2 * k == n ? term : 2.0L * term);
        }
        const double direct = static_cast<double>(acc.value());
        const double closed = trig_power_sum(n, j);
        const double diff = std::abs(closed - direct);
        const double residual = direct == 0.0 ? diff : diff / std::abs(direct);
        if (residual > worst) {
            worst = residual;
            worst_lhs = closed;
            worst_rhs = direct;
        }
    }
    return make_check_relative("schwatt-sum", worst_lhs, worst_rhs, 1e-9);
}

} // namespace circulant
