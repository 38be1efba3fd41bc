#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace circulant {

// Circulant graph C_n(s_1, ..., s_p): vertices 0..n-1, vertex i adjacent to
// i +- s_m (mod n) for every jump s_m. Jumps live in [1, n/2]; the antipodal
// jump n/2 (n even) links each vertex to a single opposite vertex, so it
// contributes one edge per vertex pair instead of two.
class CirculantSpec {
public:
    CirculantSpec(int n, std::vector<int> jumps) : n_(n), jumps_(std::move(jumps)) {
        if (n_ < 3) throw TooSmallError("circulant graph needs n >= 3, got n = " + std::to_string(n_));
        if (jumps_.empty()) throw InvalidJumpError("jump set must be nonempty");
        std::sort(jumps_.begin(), jumps_.end());
        for (std::size_t i = 0; i < jumps_.size(); ++i) {
            if (jumps_[i] < 1 || 2 * jumps_[i] > n_) {
                throw InvalidJumpError("jump " + std::to_string(jumps_[i]) +
                                       " outside [1, " + std::to_string(n_ / 2) + "]");
            }
            if (i > 0 && jumps_[i] == jumps_[i - 1]) {
                throw InvalidJumpError("duplicate jump " + std::to_string(jumps_[i]));
            }
        }
    }

    int n() const { return n_; }
    const std::vector<int>& jumps() const { return jumps_; }

    bool has_antipodal() const { return n_ % 2 == 0 && 2 * jumps_.back() == n_; }

    // Every vertex has 2p neighbors, one fewer when the antipodal jump is present.
    int degree() const {
        return 2 * static_cast<int>(jumps_.size()) - (has_antipodal() ? 1 : 0);
    }

    std::int64_t edge_count() const {
        return static_cast<std::int64_t>(n_) * static_cast<std::int64_t>(jumps_.size()) -
               (has_antipodal() ? n_ / 2 : 0);
    }

    // Connected iff gcd(n, s_1, ..., s_p) = 1.
    bool connected() const {
        int g = n_;
        for (int s : jumps_) g = std::gcd(g, s);
        return g == 1;
    }

    // Distinct positive vertex deltas: {s, n-s} per jump, collapsing to {n/2}
    // for the antipodal jump. Size equals degree().
    std::vector<int> neighbor_offsets() const {
        std::vector<int> offs;
        offs.reserve(static_cast<std::size_t>(degree()));
        for (int s : jumps_) {
            offs.push_back(s);
            if (2 * s != n_) offs.push_back(n_ - s);
        }
        return offs;
    }

private:
    int n_;
    std::vector<int> jumps_;
};

// Validating factory; jumps may arrive in any order and come back sorted.
inline CirculantSpec build_circulant(int n, std::vector<int> jumps) {
    return CirculantSpec(n, std::move(jumps));
}

// Number of connected components by breadth-first search.
inline int component_count(const CirculantSpec& spec) {
    const int n = spec.n();
    const std::vector<int> offs = spec.neighbor_offsets();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        queue.assign(1, start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (int d : offs) {
                const int w = (v + d) % n;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return components;
}

// Laplacian spectrum of a circulant graph, sorted by mode index k:
//   lambda_k = sum over jumps s of 4 sin^2(pi k s / n),
// except that the antipodal jump contributes 1 - cos(pi k), i.e. half the
// generic term, matching its single edge. lambda_0 = 0 exactly, and the
// table is symmetric: lambda_k = lambda_{n-k}.
class EigenvalueTable {
public:
    EigenvalueTable(std::vector<double> values, int zero_count)
        : values_(std::move(values)), zero_count_(zero_count) {}

    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }
    int size() const { return static_cast<int>(values_.size()); }

    // Zero eigenvalues (after snapping) = connected components.
    int zero_multiplicity() const { return zero_count_; }
    bool connected() const { return zero_count_ == 1; }

    double sum() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s;
    }

private:
    std::vector<double> values_;
    int zero_count_;
};

inline EigenvalueTable eigenvalues(const CirculantSpec& spec) {
    const int n = spec.n();
    const double p = static_cast<double>(spec.jumps().size());
    // Snap threshold for zero modes; exact zeros also fall out of the
    // residue reduction below, but disconnected spectra earn fp dust.
    const double snap = 1e-12 * 4.0 * p;
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double lam = 0.0;
        for (int s : spec.jumps()) {
            if (2 * s == n) {
                lam += (k % 2 == 0) ? 0.0 : 2.0; // 1 - cos(pi k), exactly
                continue;
            }
            // sin^2(pi k s / n) has period n in (k s); folding the residue to
            // [0, n/2] keeps the argument small and makes lambda_k and
            // lambda_{n-k} evaluate bit-identically.
            std::int64_t r = (static_cast<std::int64_t>(k) * s) % n;
            r = std::min(r, n - r);
            const double x = std::sin(M_PI * static_cast<double>(r) / static_cast<double>(n));
            lam += 4.0 * x * x;
        }
        values[static_cast<std::size_t>(k)] = std::abs(lam) < snap ? 0.0 : lam;
    }
    int zeros = 0;
    for (double v : values) {
        if (v == 0.0) ++zeros;
    }
    return EigenvalueTable(std::move(values), zeros);
}

// Dense L = D - A with integer entries: degree on the diagonal, -1 per edge.
class DenseLaplacian {
public:
    DenseLaplacian(int order, std::vector<std::int32_t> entries)
        : order_(order), entries_(std::move(entries)) {}

    int order() const { return order_; }
    std::int32_t at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                        static_cast<std::size_t>(j)];
    }

private:
    int order_;
    std::vector<std::int32_t> entries_;
};

inline constexpr int kDenseOrderCap = 10'000;

inline DenseLaplacian dense_laplacian(const CirculantSpec& spec) {
    const int n = spec.n();
    if (n > kDenseOrderCap) {
        throw TooLargeError("dense Laplacian capped at n <= " + std::to_string(kDenseOrderCap) +
                            ", got n = " + std::to_string(n));
    }
    std::vector<std::int32_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    const auto offs = spec.neighbor_offsets();
    const auto deg = static_cast<std::int32_t>(spec.degree());
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = deg;
        for (int d : offs) {
            const int j = (i + d) % n;
            m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = -1;
        }
    }
    return DenseLaplacian(n, std::move(m));
}

} // namespace circulant
