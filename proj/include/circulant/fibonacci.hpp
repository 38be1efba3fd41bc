#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "numbers.hpp"

namespace circulant {

// Consecutive Fibonacci numbers (F_k, F_{k+1}).
struct FibPair {
    BigInt fk;
    BigInt fk1;
};

// Fast doubling: O(log k) big-integer multiplications, via
//   F_{2m}   = F_m (2 F_{m+1} - F_m)
//   F_{2m+1} = F_m^2 + F_{m+1}^2
// walking the bits of k from the top.
inline FibPair fib_pair(std::int64_t k) {
    if (k < 0) throw DomainError("fib: negative index rejected");
    BigInt a = 0; // F_0
    BigInt b = 1; // F_1
    if (k == 0) return {a, b};
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(k));
    for (int i = top; i >= 0; --i) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((k >> i) & 1) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {a, b};
}

// F_0 = 0, F_1 = 1, F_{k+1} = F_k + F_{k-1}.
inline BigInt fib(std::int64_t k) {
    return fib_pair(k).fk;
}

// L_k = F_{k-1} + F_{k+1} = 2 F_{k+1} - F_k, with L_0 = 2, L_1 = 1.
inline BigInt lucas(std::int64_t k) {
    FibPair p = fib_pair(k);
    return 2 * p.fk1 - p.fk;
}

} // namespace circulant
