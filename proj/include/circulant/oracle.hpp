#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "spectral.hpp"

namespace circulant {

namespace detail {

// Connected components of the graph underlying a Laplacian, read off the
// off-diagonal sparsity pattern. Equals the Laplacian's zero-eigenvalue
// multiplicity, without needing an eigendecomposition.
inline int laplacian_component_count(const DenseLaplacian& lap) {
    const int n = lap.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        stack.assign(1, start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (w != v && lap.at(v, w) != 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

inline double relative_residual(double lhs, double rhs) {
    const double diff = std::abs(lhs - rhs);
    return rhs == 0.0 ? diff : diff / std::abs(rhs);
}

inline std::string jumps_tag(const std::vector<int>& jumps) {
    std::string tag = "{";
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (i > 0) tag += ",";
        tag += std::to_string(jumps[i]);
    }
    tag += "}";
    return tag;
}

} // namespace detail

// Ground-truth two-point resistance by direct linear solve: ground the last
// vertex (delete its row and column), factor once, then read the potential
// difference for a unit current injected at i and extracted at j.
class GroundedSolver {
public:
    explicit GroundedSolver(const DenseLaplacian& lap) : n_(lap.order()) {
        if (n_ < 2) throw DomainError("resistance needs at least two vertices");
        if (detail::laplacian_component_count(lap) != 1) {
            throw DisconnectedError("Laplacian has a zero eigenvalue at a nonzero mode: "
                                    "graph is disconnected");
        }
        Eigen::MatrixXd grounded(n_ - 1, n_ - 1);
        for (int i = 0; i + 1 < n_; ++i) {
            for (int j = 0; j + 1 < n_; ++j) {
                grounded(i, j) = static_cast<double>(lap.at(i, j));
            }
        }
        ldlt_.compute(grounded);
        if (ldlt_.info() != Eigen::Success) {
            throw SingularError("LDLT factorization of the grounded Laplacian failed");
        }
    }

    int order() const { return n_; }

    double resistance(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) {
            throw DomainError("vertex index outside [0, " + std::to_string(n_ - 1) + "]");
        }
        if (i == j) throw DomainError("two-point resistance needs distinct vertices");
        const int ground = n_ - 1;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_ - 1);
        if (i != ground) rhs(i) += 1.0;
        if (j != ground) rhs(j) -= 1.0;
        const Eigen::VectorXd x = ldlt_.solve(rhs);
        const double xi = i == ground ? 0.0 : x(i);
        const double xj = j == ground ? 0.0 : x(j);
        const double r = xi - xj;
        if (!std::isfinite(r)) {
            throw SingularError("grounded solve produced a non-finite potential");
        }
        return r;
    }

private:
    int n_;
    Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

inline double resistance_solve(const DenseLaplacian& lap, int i, int j) {
    return GroundedSolver(lap).resistance(i, j);
}

// Foster's first identity: the effective resistances over the edges of a
// connected graph sum to N-1. Audited with solve-based resistances, every
// edge visited exactly once.
inline VerificationReport foster_audit(const CirculantSpec& spec) {
    if (!spec.connected()) {
        throw DisconnectedError("Foster audit requires a connected graph");
    }
    const GroundedSolver solver(dense_laplacian(spec));
    const int n = spec.n();
    detail::NeumaierSum acc;
    for (int s : spec.jumps()) {
        const bool antipodal = 2 * s == n;
        const int last = antipodal ? n / 2 : n;
        for (int i = 0; i < last; ++i) {
            acc.add(solver.resistance(i, (i + s) % n));
        }
    }
    VerificationReport report;
    report.add_absolute("foster-audit n=" + std::to_string(n) +
                            " jumps=" + detail::jumps_tag(spec.jumps()),
                        static_cast<double>(acc.value()), static_cast<double>(n - 1),
                        1e-8 * n);
    return report;
}

// Kirchhoff index from pairwise solves: sum of resistance over all vertex
// pairs i < j.
inline double kirchhoff_solve(const CirculantSpec& spec) {
    if (!spec.connected()) {
        throw DisconnectedError("Kirchhoff index diverges on a disconnected graph");
    }
    const GroundedSolver solver(dense_laplacian(spec));
    const int n = spec.n();
    detail::NeumaierSum acc;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc.add(solver.resistance(i, j));
        }
    }
    return static_cast<double>(acc.value());
}

namespace detail {

// Record the worst relative disagreement over all offsets as a single check,
// keeping the offending pair's values for the report.
inline CheckResult worst_over_offsets(std::string name, const std::vector<double>& lhs,
                                      const std::vector<double>& rhs, double tolerance) {
    double worst = -1.0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const double r = relative_residual(lhs[i], rhs[i]);
        if (r > worst) {
            worst = r;
            worst_lhs = lhs[i];
            worst_rhs = rhs[i];
        }
    }
    return make_check_relative(std::move(name), worst_lhs, worst_rhs, tolerance);
}

} // namespace detail

// Cross-validate every available resistance route over a range of graphs:
// closed form (where one exists), spectral summation, and linear solve.
// Disconnected graphs must be flagged as such by every route; for C_N(2)
// with even N the unreachable/reachable split is checked against the
// surviving half-cycle.
inline VerificationReport equivalence_sweep(int n_lo, int n_hi,
                                            const std::vector<std::vector<int>>& jump_sets) {
    VerificationReport report;
    constexpr double kTol = 1e-9;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const std::vector<int>& jumps : jump_sets) {
            if (n < 3 || jumps.empty()) continue;
            bool representable = true;
            for (int s : jumps) {
                if (s < 1 || 2 * s > n) representable = false;
            }
            if (!representable) continue; // this size cannot host these jumps

            const CirculantSpec spec(n, jumps);
            const std::string tag =
                " n=" + std::to_string(n) + " jumps=" + detail::jumps_tag(jumps);

            if (!spec.connected()) {
                bool spectral_detects = false;
                try {
                    resistance_spectral(spec, 1);
                } catch (const DisconnectedError&) {
                    spectral_detects = true;
                }
                bool solve_detects = false;
                try {
                    GroundedSolver probe(dense_laplacian(spec));
                } catch (const DisconnectedError&) {
                    solve_detects = true;
                }
                report.add_exact("disconnected-detected" + tag,
                                 spectral_detects && solve_detects && component_count(spec) > 1);

                // C_N(2), N even: two parity cycles. Odd offsets unreachable,
                // even offsets equal to the N/2-cycle resistance at half the
                // offset, solved on the component itself.
                if (jumps == std::vector<int>{2} && n % 2 == 0 && n >= 6) {
                    bool parity_ok = true;
                    std::vector<double> closed_vals;
                    std::vector<double> solve_vals;
                    const CirculantSpec half(n / 2, {1});
                    const GroundedSolver half_solver(dense_laplacian(half));
                    for (int v = 1; v < n; ++v) {
                        const C2Resistance r = c2_resistance(n, v);
                        if (v % 2 != 0) {
                            if (!r.unreachable()) parity_ok = false;
                            continue;
                        }
                        if (r.unreachable()) {
                            parity_ok = false;
                            continue;
                        }
                        closed_vals.push_back(to_double(*r.value));
                        solve_vals.push_back(half_solver.resistance(0, v / 2));
                    }
                    report.add_exact("c2-parity-split" + tag, parity_ok);
                    report.add(detail::worst_over_offsets("c2-vs-half-cycle-solve" + tag,
                                                          closed_vals, solve_vals, kTol));
                }
                continue;
            }

            const GroundedSolver solver(dense_laplacian(spec));
            std::vector<double> spectral_vals;
            std::vector<double> solve_vals;
            spectral_vals.reserve(static_cast<std::size_t>(n - 1));
            solve_vals.reserve(static_cast<std::size_t>(n - 1));
            for (int l = 1; l < n; ++l) {
                spectral_vals.push_back(resistance_spectral(spec, l));
                solve_vals.push_back(solver.resistance(0, l));
            }

            std::vector<double> closed_vals;
            if (jumps == std::vector<int>{1, 2} && n >= 5) {
                const ResistanceProfile profile = c12_profile(n);
                for (int l = 1; l < n; ++l) closed_vals.push_back(to_double(profile.at(l)));
            } else if (jumps == std::vector<int>{1}) {
                for (int l = 1; l < n; ++l) closed_vals.push_back(to_double(cycle_resistance(n, l)));
            } else if (jumps == std::vector<int>{2} && n % 2 != 0 && n >= 5) {
                for (int v = 1; v < n; ++v) closed_vals.push_back(to_double(*c2_resistance(n, v).value));
            }

            if (!closed_vals.empty()) {
                report.add(detail::worst_over_offsets("closed-vs-spectral" + tag, closed_vals,
                                                      spectral_vals, kTol));
                report.add(detail::worst_over_offsets("closed-vs-solve" + tag, closed_vals,
                                                      solve_vals, kTol));
            }
            report.add(detail::worst_over_offsets("spectral-vs-solve" + tag, spectral_vals,
                                                  solve_vals, kTol));
        }
    }
    return report;
}

} // namespace circulant
