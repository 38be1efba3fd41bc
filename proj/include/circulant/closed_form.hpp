#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detail/summation.hpp"
#include "errors.hpp"
#include "fibonacci.hpp"
#include "numbers.hpp"
#include "report.hpp"

namespace circulant {

// Effective resistance between vertices l apart on the N-cycle:
// R(l) = l(1 - l/N) = l(N-l)/N.
inline BigRational cycle_resistance(int n, int l) {
    if (n < 3) throw TooSmallError("cycle needs N >= 3, got N = " + std::to_string(n));
    if (l < 0 || l >= n) {
        throw DomainError("offset l = " + std::to_string(l) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    return BigRational(BigInt(l) * (n - l), BigInt(n));
}

// L_N / (5 F_N): the exact rational value of (1/sqrt5)(1 +- beta^N)/(1 -+ beta^N)
// with beta = (3 - sqrt5)/2, for the respective parity of N. This single
// factor carries all the irrational-looking structure of the closed forms.
inline BigRational lucas_over_5fib(int n) {
    if (n < 1) throw DomainError("lucas_over_5fib needs N >= 1, got N = " + std::to_string(n));
    const FibPair p = fib_pair(n);
    return BigRational(2 * p.fk1 - p.fk, 5 * p.fk);
}

namespace detail {

inline void require_c12(int n) {
    if (n < 5) {
        throw UnsupportedNError("jumps {1,2} need N >= 5 for distinct jump classes, got N = " +
                                std::to_string(n));
    }
}

} // namespace detail

// Exact two-point resistance of C_N(1,2), unified over both parities of N:
//   R(l) = l(N-l)/(5N) + (-1)^{l+1} F_l^2 L_N/(5 F_N) + (-1)^l F_{2l}/5.
inline BigRational c12_resistance(int n, int l) {
    detail::require_c12(n);
    if (l < 0 || l >= n) {
        throw DomainError("offset l = " + std::to_string(l) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    if (l == 0) return BigRational(0);
    const FibPair p = fib_pair(l);
    const BigInt fl_sq = p.fk * p.fk;
    const BigInt f2l = p.fk * (2 * p.fk1 - p.fk);
    BigRational r(BigInt(l) * (n - l), BigInt(5) * n);
    if (l % 2 == 0) {
        r -= BigRational(fl_sq) * lucas_over_5fib(n);
        r += BigRational(f2l, 5);
    } else {
        r += BigRational(fl_sq) * lucas_over_5fib(n);
        r -= BigRational(f2l, 5);
    }
    return r;
}

// All two-point resistances of one graph, indexed by vertex offset l = 1..N-1.
struct ResistanceProfile {
    int n = 0;
    std::vector<BigRational> values; // values[l-1] is R(l)

    const BigRational& at(int l) const {
        if (l < 1 || l >= n) {
            throw DomainError("profile offset l = " + std::to_string(l) + " outside [1, " +
                              std::to_string(n - 1) + "]");
        }
        return values[static_cast<std::size_t>(l - 1)];
    }

    BigRational sum() const {
        BigRational s(0);
        for (const BigRational& v : values) s += v;
        return s;
    }
};

inline ResistanceProfile c12_profile(int n) {
    detail::require_c12(n);
    const BigRational lf = lucas_over_5fib(n);
    ResistanceProfile profile;
    profile.n = n;
    profile.values.reserve(static_cast<std::size_t>(n - 1));
    // Walk the Fibonacci pair incrementally instead of re-running fast
    // doubling for every offset.
    BigInt fl = 1, fl1 = 1; // F_l, F_{l+1} starting at l = 1
    for (int l = 1; l < n; ++l) {
        const BigInt fl_sq = fl * fl;
        const BigInt f2l = fl * (2 * fl1 - fl);
        BigRational r(BigInt(l) * (n - l), BigInt(5) * n);
        if (l % 2 == 0) {
            r -= BigRational(fl_sq) * lf;
            r += BigRational(f2l, 5);
        } else {
            r += BigRational(fl_sq) * lf;
            r -= BigRational(f2l, 5);
        }
        profile.values.push_back(std::move(r));
        const BigInt next = fl + fl1;
        fl = fl1;
        fl1 = next;
    }
    return profile;
}

// Kirchhoff index (total effective resistance) of C_N(1,2), exact:
//   N even: (N^3-N)/60 + (N/10)(F_{2N-1}+2N-1) L_N/(5F_N) + (N/10)(F_{N-1}^2 - F_N^2 - 1)
//   N odd:  (N^3-N)/60 - (N/10)(F_{2N-1}-2N+1) L_N/(5F_N) + (N/10)(F_N^2 - F_{N-1}^2 - 1)
// Either way it equals (N/2) * sum_l R(l).
inline BigRational c12_kirchhoff(int n) {
    detail::require_c12(n);
    const FibPair p = fib_pair(n);           // F_N, F_{N+1}
    const BigInt fn1 = p.fk1 - p.fk;         // F_{N-1}
    const BigInt f2n1 = p.fk * p.fk + fn1 * fn1; // F_{2N-1} = F_N^2 + F_{N-1}^2
    const BigRational lf = lucas_over_5fib(n);
    const BigRational n_over_10(BigInt(n), BigInt(10));
    BigRational total(BigInt(n) * n * n - n, BigInt(60));
    if (n % 2 == 0) {
        total += n_over_10 * BigRational(f2n1 + 2 * n - 1) * lf;
        total += n_over_10 * BigRational(fn1 * fn1 - p.fk * p.fk - 1);
    } else {
        total -= n_over_10 * BigRational(f2n1 - 2 * n + 1) * lf;
        total += n_over_10 * BigRational(p.fk * p.fk - fn1 * fn1 - 1);
    }
    return total;
}

// Two-point resistance of C_N(2): C_N(1,2) with the first-neighbor edges
// removed. For even N the graph splits into two disjoint N/2-cycles, so
// odd offsets are unreachable (infinite resistance) -- a legitimate answer,
// distinct from an error.
struct C2Resistance {
    std::optional<BigRational> value; // empty means unreachable

    bool unreachable() const { return !value.has_value(); }

    static C2Resistance reachable(BigRational v) {
        C2Resistance r;
        r.value = std::move(v);
        return r;
    }
    static C2Resistance make_unreachable() { return C2Resistance{}; }
};

// Offset v is the original vertex offset on 0..N-1 (not the distance along
// the surviving half-cycle).
inline C2Resistance c2_resistance(int n, int v) {
    detail::require_c12(n);
    if (v < 0 || v >= n) {
        throw DomainError("offset v = " + std::to_string(v) + " outside [0, " +
                          std::to_string(n - 1) + "]");
    }
    if (n % 2 == 0) {
        if (v % 2 != 0) return C2Resistance::make_unreachable();
        // Distance v/2 apart on an N/2-cycle: (v/2)(1 - v/N) = v(N-v)/(2N).
        return C2Resistance::reachable(BigRational(BigInt(v) * (n - v), BigInt(2) * n));
    }
    if (v % 2 == 0) {
        // (v/2)(1 - v/(2N)) = v(2N-v)/(4N)
        return C2Resistance::reachable(BigRational(BigInt(v) * (2 * n - v), BigInt(4) * n));
    }
    // (1/4)(N - v^2/N) = (N^2 - v^2)/(4N)
    return C2Resistance::reachable(
        BigRational(BigInt(n) * n - BigInt(v) * v, BigInt(4) * n));
}

// --- identity checks -------------------------------------------------------
//
// Each check is usable on its own (the trig identities hold from N = 2); the
// suite below composes them for the C_N(1,2) range N >= 5.

// Bisected-Fibonacci symmetry identity behind R(l) = R(N-l):
//   (F_{2(N-l)} - (-1)^N F_{2l}) / 5 = (F_{N-l}^2 - (-1)^N F_l^2) L_N/(5 F_N)
// checked as an exact rational equality for every l in 1..N-1.
inline CheckResult check_fib_symmetry(int n) {
    detail::require_c12(n);
    const BigRational lf = lucas_over_5fib(n);
    const bool even = n % 2 == 0;
    bool all_equal = true;
    for (int l = 1; l < n; ++l) {
        const FibPair a = fib_pair(l);
        const FibPair b = fib_pair(n - l);
        const BigInt f2l = a.fk * (2 * a.fk1 - a.fk);
        const BigInt f2nl = b.fk * (2 * b.fk1 - b.fk);
        const BigRational lhs = even ? BigRational(f2nl - f2l, 5) : BigRational(f2nl + f2l, 5);
        const BigInt sq_l = a.fk * a.fk;
        const BigInt sq_nl = b.fk * b.fk;
        const BigRational rhs =
            (even ? BigRational(sq_nl - sq_l) : BigRational(sq_nl + sq_l)) * lf;
        if (lhs != rhs) {
            all_equal = false;
            break;
        }
    }
    return make_check_exact("fib-symmetry-exact", all_equal);
}

// sum_{n=1}^{N-1} 1/sin^2(n pi / N) = (N^2 - 1)/3.
inline CheckResult check_inverse_sin_sum(int n) {
    if (n < 2) throw TooSmallError("identity needs N >= 2, got N = " + std::to_string(n));
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double term = 1.0L / detail::folded_sin_sq(k, n);
        acc.add(2 * k == n ? term : 2.0L * term);
    }
    const double lhs = static_cast<double>(acc.value());
    const double rhs = (static_cast<double>(n) * n - 1.0) / 3.0;
    return make_check_relative("inverse-sin-sum", lhs, rhs, 1e-9);
}

// sum_{n=1}^{N-1} 1/(1 + 4 cos^2(n pi / N)) equals, exactly,
//   N even:  (1/2)(F_{2N-1}+2N-1) L_N/(5F_N) + (1/2)(F_{N-1}^2 - F_N^2 - 1)
//   N odd:  -(1/2)(F_{2N-1}-2N+1) L_N/(5F_N) + (1/2)(F_N^2 - F_{N-1}^2 - 1)
inline CheckResult check_inverse_cos_sum(int n) {
    if (n < 2) throw TooSmallError("identity needs N >= 2, got N = " + std::to_string(n));
    detail::NeumaierSum acc;
    for (int k = 1; 2 * k <= n; ++k) {
        const long double cos_sq = 1.0L - detail::folded_sin_sq(k, n);
        const long double term = 1.0L / (1.0L + 4.0L * cos_sq);
        acc.add(2 * k == n ? term : 2.0L * term);
    }
    const double lhs = static_cast<double>(acc.value());

    const FibPair p = fib_pair(n);
    const BigInt fn1 = p.fk1 - p.fk;
    const BigInt f2n1 = p.fk * p.fk + fn1 * fn1;
    const BigRational lf = lucas_over_5fib(n);
    const BigRational half(BigInt(1), BigInt(2));
    BigRational rhs(0);
    if (n % 2 == 0) {
        rhs += half * BigRational(f2n1 + 2 * n - 1) * lf;
        rhs += half * BigRational(fn1 * fn1 - p.fk * p.fk - 1);
    } else {
        rhs -= half * BigRational(f2n1 - 2 * n + 1) * lf;
        rhs += half * BigRational(p.fk * p.fk - fn1 * fn1 - 1);
    }
    return make_check_relative("inverse-cos-sum", lhs, to_double(rhs), 1e-9);
}

// The three identity checks for one graph size. Failures are recorded in the
// report, never thrown.
inline VerificationReport identity_suite(int n) {
    detail::require_c12(n);
    VerificationReport report;
    report.add(check_fib_symmetry(n));
    report.add(check_inverse_sin_sum(n));
    report.add(check_inverse_cos_sum(n));
    return report;
}

} // namespace circulant
