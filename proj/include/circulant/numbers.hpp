#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace circulant {

// Arbitrary-precision signed integer. Exact at every magnitude this library
// produces (Fibonacci numbers up to index ~10^4 and their squares).
using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction of BigInts. The backing type keeps gcd(num, den) = 1 and
// den > 0 after every operation; equality is value equality.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) {
    return v.str();
}

// "p/q" with q > 0 and gcd(p, q) = 1; plain "p" when q = 1.
inline std::string to_string(const BigRational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Strict decimal parse: optional sign, then digits only.
inline BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw DomainError("parse_bigint: no digits in \"" + std::string(text) + "\"");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw DomainError("parse_bigint: invalid digit in \"" + std::string(text) + "\"");
        }
    }
    return BigInt(std::string(text));
}

// Accepts "p" or "p/q" (decimal). The result is stored reduced.
inline BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_bigint(text));
    }
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw DomainError("parse_rational: zero denominator");
    return BigRational(num, den);
}

// Round to double through one scaled integer division, so the result does not
// depend on num or den individually fitting in a double (Fibonacci-sized
// numerators and denominators routinely exceed 10^300).
inline double to_double(const BigRational& r) {
    using boost::multiprecision::msb;
    BigInt num = numerator(r);
    if (num == 0) return 0.0;
    const bool neg = num < 0;
    if (neg) num = -num;
    const BigInt& den = denominator(r);
    const long e = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
    const long s = 96 - e; // quotient ends up with ~96 significant bits
    BigInt q = s >= 0 ? BigInt((num << s) / den) : BigInt(num / (den << -s));
    const double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-s));
    return neg ? -d : d;
}

// Exact binomial coefficient; every intermediate division is exact.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

} // namespace circulant
